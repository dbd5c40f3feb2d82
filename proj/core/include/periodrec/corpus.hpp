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

namespace periodrec {

// Deterministic 64-bit generator (splitmix64): the state advances by the
// increment 0x9E3779B97F4A7C15 and the output applies the 30/27/31
// xor-multiply mix with 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB. The
// stream is identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Draw from [0, bound), bound >= 1. Plain modulo: the bias is irrelevant
  // at these bound sizes and the stream stays trivially reproducible.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

struct GenSpec {
  std::size_t p = 1;           // period length
  std::size_t n = 1;           // output length, n >= p
  std::size_t edits = 0;       // operations injected by make_corpus
  unsigned alphabet_size = 2;  // 1..256; at least 2 once p > 1
  std::uint64_t seed = 0;
};

// Length-n prefix of P^inf for a seeded random primitive word P of length
// spec.p. Symbol v maps to the byte value 'A' + v (mod 256).
std::string gen_periodic(const GenSpec& spec);

// Applies `edits` random operations (insert, delete, substitute) in
// sequence. Positions are uniform; inserted and substituted symbols are
// uniform over all 256 byte values. An operation other than insert drawn on
// an empty string is re-drawn.
std::string inject_edits(std::string_view s, std::size_t edits, std::uint64_t seed);

struct Corpus {
  std::string period_word;
  std::string text;  // gen_periodic output with spec.edits injected (seed+1 stream)
};

Corpus make_corpus(const GenSpec& spec);

}  // namespace periodrec
