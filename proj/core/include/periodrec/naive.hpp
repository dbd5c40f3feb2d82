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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace periodrec {

struct RecoveryParams;

// Ground-truth brute-force computations. Deliberately plain: these back the
// test suites, not the fast paths.

// Classic Levenshtein distance, two-row DP.
int edit_distance(std::string_view a, std::string_view b);

// ED(s, u^inf): minimum edit distance between s and a prefix of u^inf.
// Prefixes longer than 2|s| cannot win, because the empty prefix already
// costs |s| and any longer prefix forces a distance above |s|; the scan
// stops there.
int ed_to_prefix(std::string_view s, std::string_view u);

// Exhaustive approximate-period enumeration over the distinct subwords of s
// (every approximate word-period occurs as a subword of s). Each primitive
// subword with a feasible threshold is scored with ed_to_prefix and kept
// when the distance lies strictly below tau. Sorted by (length, word).
std::vector<std::pair<std::string, int>> brute_apr(std::string_view s,
                                                   const RecoveryParams& params);

}  // namespace periodrec
