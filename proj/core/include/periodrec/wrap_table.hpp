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
#include <string_view>
#include <vector>

namespace periodrec {

// Dense wrap-around DP table. Cell (i, j) holds the minimum edit distance
// between S[0..i-1] and some subword of P^inf ending on the (j-1)-th
// character of the period (indices in the period are mod p).
struct WrapTable {
  std::size_t rows = 0;             // n + 1
  std::size_t cols = 0;             // p
  std::vector<std::int32_t> cells;  // row-major

  std::int32_t at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
};

// Evaluates the whole table as a multi-source 0/1 shortest path over the
// grid graph: from (i, j) an arc of weight 1 to (i+1, j), an arc of weight
// [S[i] != P[j]] to (i+1, j+1 mod p), and an arc of weight 1 to
// (i, j+1 mod p). All of row 0 is a source at distance 0; zero-weight arcs
// are relaxed at the front of the deque.
WrapTable full_table(std::string_view s, std::string_view p_word);

// min over j of T[n, j]: the minimum ED(S, U^inf) over cyclic shifts U of P.
std::int32_t min_distance_any_rotation(const WrapTable& table);

// Brute-force evaluation of the defining minimum for a single cell: every
// window of P^inf with end column j-1 (mod p) and length at most 2i is
// scored with the classic DP. Longer windows cannot win, since the empty
// window already costs i and length L > 2i forces distance above i.
std::int32_t definition_check(std::string_view s, std::string_view p_word, std::size_t i,
                              std::size_t j);

}  // namespace periodrec
