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

#include "periodrec/corpus.hpp"

#include <stdexcept>

#include "periodrec/recovery.hpp"

namespace periodrec {

namespace {

void validate(const GenSpec& spec) {
  if (spec.p == 0) throw std::invalid_argument("periodrec: period length must be positive");
  if (spec.n < spec.p) throw std::invalid_argument("periodrec: output shorter than the period");
  if (spec.alphabet_size < 1 || spec.alphabet_size > 256)
    throw std::invalid_argument("periodrec: alphabet size out of range");
  if (spec.alphabet_size < 2 && spec.p > 1)
    throw std::invalid_argument("periodrec: no primitive word of this length over one symbol");
}

std::string draw_primitive_word(const GenSpec& spec, SplitMix64& rng) {
  std::string word(spec.p, '\0');
  // a non-primitive draw has probability <= 2/sigma^(p/2); re-draw until hit
  for (;;) {
    for (char& c : word)
      c = static_cast<char>(static_cast<unsigned char>('A' + rng.next_below(spec.alphabet_size)));
    if (primitive(word)) return word;
  }
}

}  // namespace

std::string gen_periodic(const GenSpec& spec) {
  validate(spec);
  SplitMix64 rng(spec.seed);
  const std::string word = draw_primitive_word(spec, rng);
  std::string out(spec.n, '\0');
  for (std::size_t i = 0; i < spec.n; ++i) out[i] = word[i % spec.p];
  return out;
}

std::string inject_edits(std::string_view s, std::size_t edits, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::string out(s);
  for (std::size_t e = 0; e < edits; ++e) {
    auto op = rng.next_below(3);
    while (out.empty() && op != 0) op = rng.next_below(3);  // only insert applies
    if (op == 0) {
      const auto pos = static_cast<std::ptrdiff_t>(rng.next_below(out.size() + 1));
      out.insert(out.begin() + pos, static_cast<char>(rng.next_below(256)));
    } else if (op == 1) {
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(rng.next_below(out.size())));
    } else {
      out[rng.next_below(out.size())] = static_cast<char>(rng.next_below(256));
    }
  }
  return out;
}

Corpus make_corpus(const GenSpec& spec) {
  validate(spec);
  SplitMix64 rng(spec.seed);
  Corpus corpus;
  corpus.period_word = draw_primitive_word(spec, rng);
  corpus.text.resize(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) corpus.text[i] = corpus.period_word[i % spec.p];
  corpus.text = inject_edits(corpus.text, spec.edits, spec.seed + 1);
  return corpus;
}

}  // namespace periodrec
