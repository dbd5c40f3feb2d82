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

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "periodrec/corpus.hpp"
#include "periodrec/kangaroo.hpp"
#include "periodrec/naive.hpp"
#include "periodrec/recovery.hpp"
#include "periodrec/wrap_table.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::invalid_argument("write to " + path + " failed");
}

// Bytes become the code points U+0000..U+00FF, encoded as UTF-8. Keeps JSON
// valid for arbitrary binary words and is reversible on the consumer side.
std::string latin1_to_utf8(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size());
  for (const char c : bytes) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 0x80) {
      out.push_back(static_cast<char>(b));
    } else {
      out.push_back(static_cast<char>(0xC0 | (b >> 6)));
      out.push_back(static_cast<char>(0x80 | (b & 0x3F)));
    }
  }
  return out;
}

// TSV word column: printable ASCII except backslash stays literal, the rest
// becomes \t, \n, \r, \\ or \xHH.
std::string escape_tsv(std::string_view bytes) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  out.reserve(bytes.size());
  for (const char c : bytes) {
    const auto b = static_cast<unsigned char>(c);
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default:
        if (b >= 0x20 && b < 0x7F) {
          out.push_back(c);
        } else {
          out += "\\x";
          out.push_back(hex[b >> 4]);
          out.push_back(hex[b & 0xF]);
        }
    }
  }
  return out;
}

struct ReportRow {
  std::string word;
  std::size_t p;
  std::int64_t distance;
  std::uint64_t tau;
};

void print_report(const std::vector<ReportRow>& rows, std::size_t n,
                  const periodrec::RecoveryParams& params, const std::string& format) {
  if (format == "tsv") {
    for (const auto& row : rows)
      std::cout << escape_tsv(row.word) << '\t' << row.p << '\t' << row.distance << '\t'
                << row.tau << '\n';
    return;
  }
  nlohmann::json doc;
  doc["n"] = n;
  doc["epsilon"] =
      std::to_string(params.epsilon_num) + "/" + std::to_string(params.epsilon_den);
  doc["periods"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json item;
    item["word"] = latin1_to_utf8(row.word);
    item["p"] = row.p;
    item["distance"] = row.distance;
    item["tau"] = row.tau;
    doc["periods"].push_back(std::move(item));
  }
  std::cout << doc.dump(2) << '\n';
}

unsigned default_jobs() {
  if (const char* env = std::getenv("PERIODREC_JOBS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<unsigned>(parsed);
  }
  return 1;
}

int run_recover(const std::string& input, const std::string& epsilon, const std::string& format,
                unsigned jobs) {
  const std::string text = read_file(input);
  const periodrec::RecoveryParams params = periodrec::parse_epsilon(epsilon);
  const auto reports = periodrec::recover(text, params, jobs);
  std::vector<ReportRow> rows;
  rows.reserve(reports.size());
  for (const auto& r : reports) rows.push_back(ReportRow{r.word, r.p, r.distance, r.tau});
  print_report(rows, text.size(), params, format);
  return 0;
}

int run_apm(const std::string& text_path, const std::string& pattern_path, int k,
            const std::string& engine, bool per_rotation) {
  const std::string text = read_file(text_path);
  const std::string pattern = read_file(pattern_path);
  const std::size_t p = pattern.size();

  std::vector<std::optional<std::int32_t>> values;
  if (engine == "kangaroo") {
    const periodrec::ApmOutcome out =
        per_rotation ? periodrec::rotation_distances(text, pattern, k)
                     : periodrec::last_row_thresholded(text, pattern, k);
    values = out.per_column;
  } else {
    if (pattern.empty()) throw std::invalid_argument("periodrec: empty period word");
    if (k < 0) throw std::invalid_argument("periodrec: negative threshold");
    values.resize(p);
    if (per_rotation) {
      const std::string text_rev(text.rbegin(), text.rend());
      const std::string pattern_rev(pattern.rbegin(), pattern.rend());
      const periodrec::WrapTable table = periodrec::full_table(text_rev, pattern_rev);
      for (std::size_t j = 0; j < p; ++j) {
        const std::int32_t v = table.at(text.size(), (p - j) % p);
        if (v <= k) values[j] = v;
      }
    } else {
      const periodrec::WrapTable table = periodrec::full_table(text, pattern);
      for (std::size_t j = 0; j < p; ++j) {
        const std::int32_t v = table.at(text.size(), j);
        if (v <= k) values[j] = v;
      }
    }
  }

  for (std::size_t j = 0; j < p; ++j) {
    std::cout << j << '\t';
    if (values[j])
      std::cout << *values[j];
    else
      std::cout << '*';  // distance exceeds k
    std::cout << '\n';
  }
  return 0;
}

int run_oracle_ed(const std::string& a_path, const std::string& b_path) {
  std::cout << periodrec::edit_distance(read_file(a_path), read_file(b_path)) << '\n';
  return 0;
}

int run_oracle_apr(const std::string& input, const std::string& epsilon,
                   const std::string& format) {
  const std::string text = read_file(input);
  const periodrec::RecoveryParams params = periodrec::parse_epsilon(epsilon);
  std::vector<ReportRow> rows;
  for (const auto& [word, distance] : periodrec::brute_apr(text, params))
    rows.push_back(
        ReportRow{word, word.size(), distance, periodrec::tau(text.size(), word.size(), params)});
  print_report(rows, text.size(), params, format);
  return 0;
}

int run_gen(const periodrec::GenSpec& spec, const std::string& out_path) {
  write_file(out_path, periodrec::make_corpus(spec).text);
  return 0;
}

std::uint64_t median_of(std::vector<std::uint64_t> samples) {
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

int run_bench(std::size_t p, int k, const std::vector<std::size_t>& sizes,
              const std::string& engine, std::uint64_t seed, std::size_t edits, unsigned runs,
              unsigned sigma) {
  using clock = std::chrono::steady_clock;
#if defined(__GLIBC__)
  // arena-only large allocations keep repeated runs comparable across sizes
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
#endif
  for (const std::size_t n : sizes) {
    const periodrec::Corpus corpus =
        periodrec::make_corpus(periodrec::GenSpec{p, n, edits, sigma, seed});
    const bool kangaroo = engine == "kangaroo" || engine == "both";
    const bool full = engine == "full" || engine == "both";
    if (kangaroo) {
      std::vector<std::uint64_t> samples;
      for (unsigned rep = 0; rep <= runs; ++rep) {
        const auto start = clock::now();
        const auto out = periodrec::last_row_thresholded(corpus.text, corpus.period_word, k);
        const auto stop = clock::now();
        if (out.per_column.size() != p) return 1;  // keeps the call observable
        if (rep == 0) continue;                    // warm-up
        samples.push_back(static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
      }
      std::cout << "kangaroo\t" << n << '\t' << p << '\t' << k << '\t' << median_of(samples)
                << '\n';
    }
    if (full) {
      std::vector<std::uint64_t> samples;
      for (unsigned rep = 0; rep <= runs; ++rep) {
        const auto start = clock::now();
        const auto table = periodrec::full_table(corpus.text, corpus.period_word);
        const auto stop = clock::now();
        if (table.cols != p) return 1;
        if (rep == 0) continue;
        samples.push_back(static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
      }
      std::cout << "full\t" << n << '\t' << p << '\t' << k << '\t' << median_of(samples) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximate period recovery over edit distance"};
  app.require_subcommand(1);

  // recover
  auto* recover_cmd = app.add_subcommand("recover", "recover approximate periods of a byte file");
  std::string recover_input;
  std::string recover_epsilon = "1/20";
  std::string recover_format = "json";
  unsigned jobs = default_jobs();
  recover_cmd->add_option("--input", recover_input, "input file (raw bytes)")->required();
  recover_cmd->add_option("--epsilon", recover_epsilon, "strictness as NUM/DEN (default 1/20)");
  recover_cmd->add_option("--format", recover_format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  recover_cmd->add_option("--jobs", jobs, "parallel verification workers (default $PERIODREC_JOBS or 1)")
      ->check(CLI::Range(1u, 1024u));

  // apm
  auto* apm_cmd = app.add_subcommand("apm", "distances to a periodic extension, per column or rotation");
  std::string apm_text;
  std::string apm_pattern;
  int apm_k = 0;
  std::string apm_engine = "kangaroo";
  bool per_rotation = false;
  apm_cmd->add_option("--text", apm_text, "text file (raw bytes)")->required();
  apm_cmd->add_option("--pattern", apm_pattern, "period word file (raw bytes)")->required();
  apm_cmd->add_option("--k", apm_k, "distance threshold")->required();
  apm_cmd->add_option("--engine", apm_engine, "computation engine")
      ->check(CLI::IsMember({"kangaroo", "full"}));
  apm_cmd->add_flag("--per-rotation", per_rotation,
                    "report ED(text, U^inf) per rotation start instead of table columns");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference computations");
  oracle_cmd->require_subcommand(1);
  auto* ed_cmd = oracle_cmd->add_subcommand("ed", "edit distance of two byte files");
  std::string ed_a;
  std::string ed_b;
  ed_cmd->add_option("--a", ed_a, "first file")->required();
  ed_cmd->add_option("--b", ed_b, "second file")->required();
  auto* apr_cmd = oracle_cmd->add_subcommand("apr", "exhaustive period enumeration");
  std::string apr_input;
  std::string apr_epsilon = "1/20";
  std::string apr_format = "json";
  apr_cmd->add_option("--input", apr_input, "input file (raw bytes)")->required();
  apr_cmd->add_option("--epsilon", apr_epsilon, "strictness as NUM/DEN (default 1/20)");
  apr_cmd->add_option("--format", apr_format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "write a seeded periodic corpus with injected edits");
  periodrec::GenSpec spec;
  std::string gen_out;
  gen_cmd->add_option("--p", spec.p, "period length")->required();
  gen_cmd->add_option("--n", spec.n, "output length")->required();
  gen_cmd->add_option("--edits", spec.edits, "number of injected edit operations");
  gen_cmd->add_option("--sigma", spec.alphabet_size, "alphabet size (1..256)");
  gen_cmd->add_option("--seed", spec.seed, "generator seed");
  gen_cmd->add_option("--out", gen_out, "output file")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "engine timings as TSV (engine, n, p, k, ns)");
  std::size_t bench_p = 64;
  int bench_k = 8;
  std::vector<std::size_t> bench_sizes;
  std::string bench_engine = "both";
  std::uint64_t bench_seed = 42;
  std::size_t bench_edits = 8;
  unsigned bench_runs = 3;
  unsigned bench_sigma = 4;
  bench_cmd->add_option("--p", bench_p, "period length");
  bench_cmd->add_option("--k", bench_k, "distance threshold");
  bench_cmd->add_option("--sizes", bench_sizes, "comma-separated text lengths")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--engine", bench_engine, "engine selection")
      ->check(CLI::IsMember({"kangaroo", "full", "both"}));
  bench_cmd->add_option("--seed", bench_seed, "corpus seed");
  bench_cmd->add_option("--edits", bench_edits, "injected edits per corpus");
  bench_cmd->add_option("--runs", bench_runs, "samples per point, median reported")
      ->check(CLI::Range(3u, 1000u));
  bench_cmd->add_option("--sigma", bench_sigma, "corpus alphabet size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;
  }

  try {
    if (recover_cmd->parsed())
      return run_recover(recover_input, recover_epsilon, recover_format, jobs);
    if (apm_cmd->parsed()) return run_apm(apm_text, apm_pattern, apm_k, apm_engine, per_rotation);
    if (oracle_cmd->parsed()) {
      if (ed_cmd->parsed()) return run_oracle_ed(ed_a, ed_b);
      return run_oracle_apr(apr_input, apr_epsilon, apr_format);
    }
    if (gen_cmd->parsed()) return run_gen(spec, gen_out);
    if (bench_cmd->parsed())
      return run_bench(bench_p, bench_k, bench_sizes, bench_engine, bench_seed, bench_edits,
                       bench_runs, bench_sigma);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
