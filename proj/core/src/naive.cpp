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

#include "periodrec/naive.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "periodrec/recovery.hpp"

namespace periodrec {

int edit_distance(std::string_view a, std::string_view b) {
  std::vector<int> row(b.size() + 1);
  std::iota(row.begin(), row.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const int keep = row[j];
      const int sub = a[i - 1] != b[j - 1] ? 1 : 0;
      row[j] = std::min({keep + 1, row[j - 1] + 1, diag + sub});
      diag = keep;
    }
  }
  return row.back();
}

int ed_to_prefix(std::string_view s, std::string_view u) {
  if (u.empty()) throw std::invalid_argument("periodrec: empty period word");
  const std::size_t cap = 2 * s.size();
  std::string extended(cap, '\0');
  for (std::size_t x = 0; x < cap; ++x) extended[x] = u[x % u.size()];

  std::vector<int> row(cap + 1);
  std::iota(row.begin(), row.end(), 0);
  for (std::size_t i = 1; i <= s.size(); ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= cap; ++j) {
      const int keep = row[j];
      const int sub = s[i - 1] != extended[j - 1] ? 1 : 0;
      row[j] = std::min({keep + 1, row[j - 1] + 1, diag + sub});
      diag = keep;
    }
  }
  // every row entry is the distance to one prefix of u^inf
  return *std::min_element(row.begin(), row.end());
}

std::vector<std::pair<std::string, int>> brute_apr(std::string_view s,
                                                   const RecoveryParams& params) {
  if (s.empty()) throw std::invalid_argument("periodrec: empty input word");
  const std::size_t n = s.size();

  std::set<std::string> subwords;
  for (std::size_t start = 0; start < n; ++start)
    for (std::size_t len = 1; start + len <= n; ++len)
      subwords.emplace(s.substr(start, len));

  std::vector<std::pair<std::string, int>> hits;
  for (const std::string& word : subwords) {
    const std::uint64_t threshold = tau(n, word.size(), params);
    if (threshold == 0 || !primitive(word)) continue;
    const int distance = ed_to_prefix(s, word);
    if (static_cast<std::uint64_t>(distance) < threshold) hits.emplace_back(word, distance);
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return hits;
}

}  // namespace periodrec
