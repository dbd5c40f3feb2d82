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

#include "periodrec/wrap_table.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace periodrec {

WrapTable full_table(std::string_view s, std::string_view p_word) {
  if (p_word.empty()) throw std::invalid_argument("periodrec: empty period word");
  const std::size_t n = s.size();
  const std::size_t p = p_word.size();
  if ((n + 1) > std::numeric_limits<std::uint32_t>::max() / p)
    throw std::invalid_argument("periodrec: table too large");

  WrapTable table;
  table.rows = n + 1;
  table.cols = p;
  table.cells.assign(table.rows * p, std::numeric_limits<std::int32_t>::max());
  std::int32_t* dist = table.cells.data();

  std::deque<std::pair<std::uint32_t, std::int32_t>> queue;
  for (std::size_t j = 0; j < p; ++j) {
    dist[j] = 0;
    queue.emplace_back(static_cast<std::uint32_t>(j), 0);
  }
  while (!queue.empty()) {
    const auto [v, d] = queue.front();
    queue.pop_front();
    if (d != dist[v]) continue;  // superseded entry
    const std::size_t i = v / p;
    const std::size_t j = v % p;
    auto relax = [&](std::uint32_t u, std::int32_t nd) {
      if (nd < dist[u]) {
        dist[u] = nd;
        if (nd == d)
          queue.emplace_front(u, nd);
        else
          queue.emplace_back(u, nd);
      }
    };
    const auto right = static_cast<std::uint32_t>(i * p + (j + 1) % p);
    relax(right, d + 1);  // skip one period character
    if (i < n) {
      relax(v + static_cast<std::uint32_t>(p), d + 1);  // skip one text character
      const std::int32_t sub =
          static_cast<unsigned char>(s[i]) != static_cast<unsigned char>(p_word[j]) ? 1 : 0;
      relax(right + static_cast<std::uint32_t>(p), d + sub);  // match or substitute
    }
  }
  return table;
}

std::int32_t min_distance_any_rotation(const WrapTable& table) {
  const std::int32_t* last = table.cells.data() + (table.rows - 1) * table.cols;
  return *std::min_element(last, last + table.cols);
}

std::int32_t definition_check(std::string_view s, std::string_view p_word, std::size_t i,
                              std::size_t j) {
  if (p_word.empty()) throw std::invalid_argument("periodrec: empty period word");
  if (i > s.size() || j >= p_word.size())
    throw std::invalid_argument("periodrec: cell out of range");
  const std::size_t p = p_word.size();
  const std::size_t win_len = 2 * i;

  std::string window(win_len, '\0');
  std::vector<std::int32_t> row(win_len + 1);
  std::int32_t best = std::numeric_limits<std::int32_t>::max();
  for (std::size_t start = 0; start < p; ++start) {
    for (std::size_t x = 0; x < win_len; ++x) window[x] = p_word[(start + x) % p];
    // row[b] = ed(S[0..a-1], window[0..b-1]) after pass a
    for (std::size_t b = 0; b <= win_len; ++b) row[b] = static_cast<std::int32_t>(b);
    for (std::size_t a = 1; a <= i; ++a) {
      std::int32_t diag = row[0];
      row[0] = static_cast<std::int32_t>(a);
      for (std::size_t b = 1; b <= win_len; ++b) {
        const std::int32_t keep = row[b];
        const std::int32_t sub = s[a - 1] != window[b - 1] ? 1 : 0;
        row[b] = std::min({keep + 1, row[b - 1] + 1, diag + sub});
        diag = keep;
      }
    }
    // windows ending on column j-1 have length L == j - start (mod p)
    for (std::size_t len = (j + p - start) % p; len <= win_len; len += p)
      best = std::min(best, row[len]);
  }
  return best;
}

}  // namespace periodrec
