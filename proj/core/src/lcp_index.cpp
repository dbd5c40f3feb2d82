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

#include "periodrec/lcp_index.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace periodrec {

CompositeText make_composite(std::string_view s, std::string_view p_word) {
  if (p_word.empty()) throw std::invalid_argument("periodrec: empty period word");
  CompositeText text;
  text.n = s.size();
  text.p = p_word.size();
  text.r = (text.n + 2 * text.p - 1) / text.p;  // smallest positive r with r*p >= n+p
  text.sentinel_pos = text.n;
  text.body.reserve(text.n + 1 + text.r * text.p);
  text.body.append(s);
  text.body.push_back('#');  // placeholder byte; comparisons go through symbol_at
  for (std::size_t q = 0; q < text.r; ++q) text.body.append(p_word);
  return text;
}

namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

// SA-IS induced suffix sort over an integer alphabet, linear in n. Requires
// s[n-1] == 0 as a unique minimal terminator; symbols lie in [0, sigma).
void sais(const std::uint32_t* s, std::uint32_t* sa, std::size_t n, std::size_t sigma) {
  if (n == 0) return;
  if (n == 1) {
    sa[0] = 0;
    return;
  }

  std::vector<std::uint8_t> is_s(n);
  is_s[n - 1] = 1;
  for (std::size_t i = n - 1; i-- > 0;)
    is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);
  auto is_lms = [&](std::size_t i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

  std::vector<std::uint32_t> bucket(sigma + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++bucket[s[i] + 1];
  for (std::size_t c = 0; c < sigma; ++c) bucket[c + 1] += bucket[c];

  std::vector<std::uint32_t> frontier(sigma);
  auto seed_lms_tails = [&](auto&& positions) {
    std::fill(sa, sa + n, kEmpty);
    std::copy(bucket.begin() + 1, bucket.end(), frontier.begin());
    positions();  // callback fills sa via place(), right to left
  };
  auto place_at_tail = [&](std::uint32_t pos) { sa[--frontier[s[pos]]] = pos; };

  auto induce = [&] {
    // L-pass, left to right from bucket heads
    std::copy(bucket.begin(), bucket.end() - 1, frontier.begin());
    for (std::size_t q = 0; q < n; ++q) {
      const std::uint32_t v = sa[q];
      if (v == kEmpty || v == 0) continue;
      const std::uint32_t j = v - 1;
      if (!is_s[j]) sa[frontier[s[j]]++] = j;
    }
    // S-pass, right to left from bucket tails
    std::copy(bucket.begin() + 1, bucket.end(), frontier.begin());
    for (std::size_t q = n; q-- > 0;) {
      const std::uint32_t v = sa[q];
      if (v == kEmpty || v == 0) continue;
      const std::uint32_t j = v - 1;
      if (is_s[j]) sa[--frontier[s[j]]] = j;
    }
  };

  // round 1: seed the LMS positions in any order, induce once; the LMS
  // suffixes then appear ordered by their LMS substrings
  seed_lms_tails([&] {
    for (std::size_t i = n; i-- > 0;)
      if (is_lms(i)) place_at_tail(static_cast<std::uint32_t>(i));
  });
  induce();

  // name the LMS substrings in sorted order
  std::vector<std::uint32_t> lms_pos;  // text order
  for (std::size_t i = 0; i < n; ++i)
    if (is_lms(i)) lms_pos.push_back(static_cast<std::uint32_t>(i));
  const std::size_t num_lms = lms_pos.size();

  auto lms_substrings_equal = [&](std::size_t a, std::size_t b) {
    if (s[a] != s[b]) return false;
    for (std::size_t x = a + 1, y = b + 1;; ++x, ++y) {
      if (s[x] != s[y]) return false;
      const bool xe = is_lms(x);
      if (xe != is_lms(y)) return false;
      if (xe) return true;
    }
  };

  std::vector<std::uint32_t> name(n, kEmpty);
  std::uint32_t names = 0;
  std::size_t prev = kEmpty;
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint32_t v = sa[q];
    if (v == kEmpty || !is_lms(v)) continue;
    if (prev != kEmpty && !lms_substrings_equal(prev, v)) ++names;
    name[v] = names;
    prev = v;
  }

  // reduced problem: LMS substring names in text order; its suffix order is
  // the order of the LMS suffixes
  std::vector<std::uint32_t> reduced(num_lms), reduced_sa(num_lms);
  for (std::size_t t = 0; t < num_lms; ++t) reduced[t] = name[lms_pos[t]];
  if (names + 1 < num_lms) {
    sais(reduced.data(), reduced_sa.data(), num_lms, names + 1);
  } else {
    for (std::size_t t = 0; t < num_lms; ++t) reduced_sa[reduced[t]] = static_cast<std::uint32_t>(t);
  }

  // round 2: seed the LMS suffixes in their final order, induce again
  seed_lms_tails([&] {
    for (std::size_t t = num_lms; t-- > 0;) place_at_tail(lms_pos[reduced_sa[t]]);
  });
  induce();
}

// Suffix order of the composite word. The separator maps through symbol_at
// already; a terminal 0 below every symbol is appended for the induced sort
// and its suffix dropped from the result.
std::vector<std::uint32_t> sort_suffixes(const CompositeText& text) {
  const std::size_t m = text.size();
  if (m > std::numeric_limits<std::uint32_t>::max() / 2)
    throw std::invalid_argument("periodrec: input too large to index");
  std::vector<std::uint32_t> symbols(m + 1);
  for (std::size_t i = 0; i < m; ++i)
    symbols[i] = static_cast<std::uint32_t>(text.symbol_at(i)) + 1;  // keep 0 for the terminator
  symbols[m] = 0;

  std::vector<std::uint32_t> sa(m + 1);
  sais(symbols.data(), sa.data(), m + 1, 258);  // symbols lie in [0, 258)
  return {sa.begin() + 1, sa.end()};  // drop the terminator's suffix
}

}  // namespace

LcpIndex::LcpIndex(std::string_view s, std::string_view p_word)
    : text_(make_composite(s, p_word)) {
  const std::size_t m = text_.size();
  suffix_order_ = sort_suffixes(text_);
  rank_.resize(m);
  for (std::size_t q = 0; q < m; ++q) rank_[suffix_order_[q]] = static_cast<std::uint32_t>(q);

  // Kasai pass for the lcps of sorted neighbours; m >= 2 always (p >= 1,
  // r >= 1, plus the separator).
  adjacent_lcp_.assign(m - 1, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t q = rank_[i];
    if (q == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = suffix_order_[q - 1];
    while (i + h < m && j + h < m && text_.symbol_at(i + h) == text_.symbol_at(j + h)) ++h;
    adjacent_lcp_[q - 1] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  range_min_ = MinSparseTable(adjacent_lcp_);
}

std::size_t LcpIndex::lcp_suffixes(std::size_t a, std::size_t b) const {
  const std::size_t m = text_.size();
  if (a > m || b > m) throw std::invalid_argument("periodrec: suffix position out of range");
  if (a == b) return m - a;
  if (a == m || b == m) return 0;
  std::size_t qa = rank_[a];
  std::size_t qb = rank_[b];
  if (qa > qb) std::swap(qa, qb);
  return range_min_.min_in(qa, qb - 1);
}

std::size_t LcpIndex::lcp_text_vs_periodic(std::size_t i, std::size_t j) const {
  if (i > text_.n || j >= text_.p) throw std::invalid_argument("periodrec: lcp query out of range");
  if (i == text_.n) return 0;
  return std::min(text_.n - i, lcp_suffixes(i, text_.n + 1 + j));
}

}  // namespace periodrec
