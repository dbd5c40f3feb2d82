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

#include "periodrec/rmq.hpp"

namespace periodrec {

// The composite word S · # · P^r, with r the smallest positive integer such
// that r*p >= n+p. The separator at index n is not a reserved byte value:
// symbol_at() maps that position to a unique minimal symbol, so byte inputs
// keep all 256 code points.
struct CompositeText {
  std::string body;              // S, a placeholder '#' byte, then P^r
  std::size_t n = 0;             // |S|
  std::size_t p = 0;             // |P|
  std::size_t r = 0;
  std::size_t sentinel_pos = 0;  // always n

  std::size_t size() const { return body.size(); }

  // Symbol order used for all suffix comparisons; the separator sorts below
  // every byte.
  int symbol_at(std::size_t pos) const {
    return pos == sentinel_pos ? 0 : static_cast<unsigned char>(body[pos]) + 1;
  }
};

CompositeText make_composite(std::string_view s, std::string_view p_word);

// Suffix-array index over the composite word. After construction, lcp
// queries between suffixes of S and suffixes of P^inf take O(1).
class LcpIndex {
 public:
  LcpIndex(std::string_view s, std::string_view p_word);

  const CompositeText& text() const { return text_; }
  const std::vector<std::uint32_t>& suffix_order() const { return suffix_order_; }
  const std::vector<std::uint32_t>& rank() const { return rank_; }
  const std::vector<std::uint32_t>& adjacent_lcp() const { return adjacent_lcp_; }
  const MinSparseTable& range_min() const { return range_min_; }

  // lcp of body[a..] and body[b..]; a == b yields |body| - a.
  std::size_t lcp_suffixes(std::size_t a, std::size_t b) const;

  // min(n - i, lcp(S[i..], P^inf[j..])). Only values up to n - i are ever
  // consumed, and r*p >= n+p keeps the P^r part long enough for that range.
  std::size_t lcp_text_vs_periodic(std::size_t i, std::size_t j) const;

 private:
  CompositeText text_;
  std::vector<std::uint32_t> suffix_order_;  // suffix starts in sorted order
  std::vector<std::uint32_t> rank_;          // inverse of suffix_order
  std::vector<std::uint32_t> adjacent_lcp_;  // entry t: lcp of sorted suffixes t, t+1
  MinSparseTable range_min_;
};

}  // namespace periodrec
