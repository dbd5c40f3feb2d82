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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace periodrec {

// Reachability frontier at one distance level: entries[j] is the deepest row
// i with T[i, (j + i) mod p] <= d.
struct FrontierRow {
  int d = 0;
  std::vector<std::size_t> entries;
};

// Thresholded last row of the wrap-around table. per_column[j] carries
// T[n, j] when it is at most k; a column above the threshold stays empty and
// is never encoded as k+1. rotation_distances reuses the struct with the
// rotation start as the index instead of the end column.
struct ApmOutcome {
  int k = 0;
  std::vector<std::optional<std::int32_t>> per_column;
  std::size_t lcp_queries = 0;  // always exactly (k+1) * p
};

// Computes every value T[n, j] not exceeding k in O(n + kp) after the index
// build. Level d is derived from level d-1 alone: each column takes one
// 1-weight step, i = min(n, max(D[d-1,j]+1, D[d-1,j-1], D[d-1,j+1]+1)), then
// jumps over the free matches with a single lcp query. A column of the last
// row is recorded the first time a frontier reaches row n. The optional
// trace records every frontier row for inspection.
ApmOutcome last_row_thresholded(std::string_view s, std::string_view p_word, int k,
                                std::vector<FrontierRow>* frontier_trace = nullptr);

// ED(S, U^inf) for every cyclic shift U of P, or empty where the distance
// exceeds k. Runs the frontier on the reversed words and reads the rotation
// starting at j from column (p - j) mod p of the reversed table.
ApmOutcome rotation_distances(std::string_view s, std::string_view p_word, int k);

}  // namespace periodrec
