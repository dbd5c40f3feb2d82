// Copyright 2026 The periodrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "periodrec/kangaroo.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "periodrec/lcp_index.hpp"

namespace periodrec {

ApmOutcome last_row_thresholded(std::string_view s, std::string_view p_word, int k,
                                std::vector<FrontierRow>* frontier_trace) {
  if (p_word.empty()) throw std::invalid_argument("periodrec: empty period word");
  if (k < 0) throw std::invalid_argument("periodrec: negative threshold");
  const LcpIndex index(s, p_word);
  const std::size_t n = s.size();
  const std::size_t p = p_word.size();

  ApmOutcome out;
  out.k = k;
  out.per_column.assign(p, std::nullopt);
  if (frontier_trace) frontier_trace->clear();

  std::vector<std::size_t> prev(p, 0);
  std::vector<std::size_t> cur(p, 0);
  for (int d = 0; d <= k; ++d) {
    for (std::size_t j = 0; j < p; ++j) {
      std::size_t i = 0;
      if (d > 0) {
        const std::size_t from_left = prev[(j + p - 1) % p];
        const std::size_t from_right = prev[(j + 1) % p] + 1;
        i = std::min(n, std::max({prev[j] + 1, from_left, from_right}));
      }
      const std::size_t reach = i + index.lcp_text_vs_periodic(i, (i + j) % p);
      ++out.lcp_queries;
      if (d > 0 && reach < prev[j]) throw std::logic_error("periodrec: frontier not monotone");
      cur[j] = reach;
      if (reach == n) {
        auto& slot = out.per_column[(j + n) % p];
        if (!slot) slot = d;
      }
    }
    if (frontier_trace) frontier_trace->push_back(FrontierRow{d, cur});
    std::swap(prev, cur);
  }
  return out;
}

ApmOutcome rotation_distances(std::string_view s, std::string_view p_word, int k) {
  if (p_word.empty()) throw std::invalid_argument("periodrec: empty period word");
  const std::string s_rev(s.rbegin(), s.rend());
  const std::string p_rev(p_word.rbegin(), p_word.rend());
  const ApmOutcome reversed = last_row_thresholded(s_rev, p_rev, k);

  const std::size_t p = p_word.size();
  ApmOutcome out;
  out.k = k;
  out.lcp_queries = reversed.lcp_queries;
  out.per_column.resize(p);
  for (std::size_t j = 0; j < p; ++j) out.per_column[j] = reversed.per_column[(p - j) % p];
  return out;
}

}  // namespace periodrec
