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

#include "periodrec/recovery.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "periodrec/kangaroo.hpp"

namespace periodrec {

RecoveryParams make_params(std::uint64_t epsilon_num, std::uint64_t epsilon_den) {
  constexpr std::uint64_t kLimit = 1'000'000'000'000ull;
  if (epsilon_num < 1 || epsilon_den < 1 || epsilon_num > kLimit || epsilon_den > kLimit)
    throw std::invalid_argument("periodrec: epsilon must be a positive rational within 1e12");
  return RecoveryParams{epsilon_num, epsilon_den};
}

RecoveryParams parse_epsilon(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("periodrec: epsilon must be written as NUM/DEN");
  std::uint64_t num = 0;
  std::uint64_t den = 0;
  const auto [np, nec] = std::from_chars(text.data(), text.data() + slash, num);
  const auto [dp, dec] = std::from_chars(text.data() + slash + 1, text.data() + text.size(), den);
  if (nec != std::errc{} || dec != std::errc{} || np != text.data() + slash ||
      dp != text.data() + text.size())
    throw std::invalid_argument("periodrec: epsilon must be written as NUM/DEN");
  return make_params(num, den);
}

std::uint64_t tau(std::size_t n, std::size_t p, const RecoveryParams& params) {
  if (p == 0) throw std::invalid_argument("periodrec: zero period length");
  if (params.factor_num() == 0 || params.factor_den() == 0)
    throw std::invalid_argument("periodrec: malformed epsilon");
  const auto num = static_cast<unsigned __int128>(n) * params.factor_den();
  const auto den = static_cast<unsigned __int128>(params.factor_num()) * p;
  return static_cast<std::uint64_t>(num / den);
}

bool primitive(std::string_view word) {
  if (word.empty()) throw std::invalid_argument("periodrec: empty word");
  const std::size_t p = word.size();
  std::vector<std::size_t> border(p, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < p; ++i) {
    while (k > 0 && word[i] != word[k]) k = border[k - 1];
    if (word[i] == word[k]) ++k;
    border[i] = k;
  }
  const std::size_t q = p - border[p - 1];
  return q == p || p % q != 0;
}

std::size_t canonical_rotation(std::string_view word) {
  if (word.empty()) throw std::invalid_argument("periodrec: empty word");
  const std::size_t p = word.size();
  auto at = [&](std::size_t x) { return static_cast<unsigned char>(word[x % p]); };
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < p && j < p && k < p) {
    const unsigned char a = at(i + k);
    const unsigned char b = at(j + k);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i = i + k + 1;
      if (i == j) ++i;
    } else {
      j = j + k + 1;
      if (j == i) ++j;
    }
    k = 0;
  }
  return std::min(i, j);
}

std::string rotate(std::string_view word, std::size_t offset) {
  std::string out;
  out.reserve(word.size());
  out.append(word.substr(offset));
  out.append(word.substr(0, offset));
  return out;
}

std::vector<RotationClass> candidate_rotation_classes(std::string_view s, std::size_t p,
                                                      const RecoveryParams& params) {
  const std::size_t n = s.size();
  const std::uint64_t threshold = tau(n, p, params);
  if (threshold == 0)
    throw std::invalid_argument("periodrec: threshold is zero for this period length");
  const auto blocks = static_cast<std::size_t>(threshold);
  const std::size_t block_len = n / blocks;  // >= floor((3.75+eps) * p) > p

  std::map<std::string, RotationClass> classes;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::string_view word = s.substr(b * block_len, p);
    if (!primitive(word)) continue;
    const std::size_t offset = canonical_rotation(word);
    std::string canonical = rotate(word, offset);
    if (!classes.contains(canonical)) {
      RotationClass cls{canonical, b, offset};
      classes.emplace(std::move(canonical), std::move(cls));
    }
  }

  std::vector<RotationClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

namespace {

struct VerifyTask {
  std::size_t p = 0;
  std::uint64_t threshold = 0;
  RotationClass cls;
};

std::vector<PeriodReport> verify_class(std::string_view s, const VerifyTask& task) {
  const int k = static_cast<int>(task.threshold) - 1;  // strict: distance < tau
  const ApmOutcome out = rotation_distances(s, task.cls.canonical, k);
  std::vector<PeriodReport> hits;
  for (std::size_t j = 0; j < task.p; ++j) {
    if (!out.per_column[j]) continue;
    PeriodReport report;
    report.word = rotate(task.cls.canonical, j);
    report.p = task.p;
    report.distance = *out.per_column[j];
    report.tau = task.threshold;
    report.block = task.cls.block;
    report.rotation = (task.cls.block_offset + j) % task.p;
    hits.push_back(std::move(report));
  }
  return hits;
}

}  // namespace

std::vector<PeriodReport> recover(std::string_view s, const RecoveryParams& params,
                                  unsigned jobs) {
  if (s.empty()) throw std::invalid_argument("periodrec: empty input word");
  const std::size_t n = s.size();

  std::vector<VerifyTask> tasks;
  for (std::size_t p = 1; p <= n; ++p) {
    const std::uint64_t threshold = tau(n, p, params);
    if (threshold == 0) break;  // tau never increases with p
    for (RotationClass& cls : candidate_rotation_classes(s, p, params))
      tasks.push_back(VerifyTask{p, threshold, std::move(cls)});
  }

  std::vector<std::vector<PeriodReport>> results(tasks.size());
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) results[t] = verify_class(s, tasks[t]);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    const auto workers = static_cast<unsigned>(
        std::min<std::size_t>(jobs, tasks.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t t = cursor.fetch_add(1); t < tasks.size(); t = cursor.fetch_add(1))
            results[t] = verify_class(s, tasks[t]);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failed.load()) std::rethrow_exception(failure);
  }

  std::vector<PeriodReport> report;
  for (auto& part : results)
    for (auto& hit : part) report.push_back(std::move(hit));
  std::sort(report.begin(), report.end(), [](const PeriodReport& a, const PeriodReport& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.word < b.word;
  });
  report.erase(std::unique(report.begin(), report.end(),
                           [](const PeriodReport& a, const PeriodReport& b) {
                             return a.word == b.word;
                           }),
               report.end());
  return report;
}

}  // namespace periodrec
