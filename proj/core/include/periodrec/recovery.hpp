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
#include <string>
#include <string_view>
#include <vector>

namespace periodrec {

// Rational strictness parameter epsilon = num/den > 0, giving the threshold
// factor 3.75 + epsilon = factor_num / factor_den. All threshold arithmetic
// stays in exact integers; no floating point anywhere.
struct RecoveryParams {
  std::uint64_t epsilon_num = 1;
  std::uint64_t epsilon_den = 20;

  std::uint64_t factor_num() const { return 15 * epsilon_den + 4 * epsilon_num; }
  std::uint64_t factor_den() const { return 4 * epsilon_den; }
};

// Validates 1 <= num, den <= 10^12 (keeps every later product within range).
RecoveryParams make_params(std::uint64_t epsilon_num, std::uint64_t epsilon_den);

// Parses "NUM/DEN".
RecoveryParams parse_epsilon(std::string_view text);

// tau_p = floor(n / ((3.75 + eps) * p)), evaluated exactly as
// floor(n * factor_den / (factor_num * p)).
std::uint64_t tau(std::size_t n, std::size_t p, const RecoveryParams& params);

// Whether word is not a proper power Q^k with k >= 2. The smallest period
// q = |word| - border(|word|) divides |word| exactly for powers.
bool primitive(std::string_view word);

// Start offset of the lexicographically least rotation, smallest offset
// among equal rotations. Bytes compare unsigned.
std::size_t canonical_rotation(std::string_view word);

// word[offset..] + word[..offset).
std::string rotate(std::string_view word, std::size_t offset);

struct RotationClass {
  std::string canonical;
  std::size_t block = 0;         // index of the generating block
  std::size_t block_offset = 0;  // canonical's rotation offset inside that block's word
};

// Pigeonhole candidate generator for period length p. The text is cut into
// tau_p disjoint blocks of length floor(n / tau_p) (> p each); the length-p
// prefix of every block is a candidate rotation source. Any alignment
// witnessing a distance below tau_p has fewer than tau_p edits, so it leaves
// at least one block untouched; that block then matches a subword of P^inf
// exactly and its length-p prefix is a cyclic shift of P. Candidates are
// filtered to primitive words and deduplicated by canonical rotation.
std::vector<RotationClass> candidate_rotation_classes(std::string_view s, std::size_t p,
                                                      const RecoveryParams& params);

struct PeriodReport {
  std::string word;
  std::size_t p = 0;
  std::int32_t distance = 0;  // ED(s, word^inf), strictly below tau
  std::uint64_t tau = 0;
  std::size_t block = 0;      // provenance: generating block index
  std::size_t rotation = 0;   // provenance: rotation offset inside that block's word
};

// Full approximate period recovery: every primitive word whose periodic
// extension lies strictly below tau_p edits from s, sorted by (p, word).
// jobs > 1 verifies candidate classes in parallel; the report is
// byte-identical regardless of the job count.
std::vector<PeriodReport> recover(std::string_view s, const RecoveryParams& params,
                                  unsigned jobs = 1);

}  // namespace periodrec
