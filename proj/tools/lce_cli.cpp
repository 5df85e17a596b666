// lce: build, query, benchmark and inspect LCE indexes.
//
// Positions are 1-based everywhere. Exit codes: 0 ok, 1 mismatch,
// 2 usage or parameter error, 3 I/O or format error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "lce/corpus.hpp"
#include "lce/kernels.hpp"
#include "lce/lce_index.hpp"
#include "lce/lz77.hpp"
#include "lce/oracle.hpp"

namespace {

using lce::pos_t;
using Clock = std::chrono::steady_clock;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr const char* kCsvHeader =
    "corpus,n,sigma,z,t,t_prime,build_ms,index_bytes,queries,mean_query_ns,p99_query_ns,oracle_mean_ns,mismatches";

int exit_code_for(lce::ErrorCode code) {
  switch (code) {
    case lce::ErrorCode::io_error:
    case lce::ErrorCode::format_error: return kExitIo;
    default: return kExitUsage;
  }
}

void init_logging() {
  auto logger = spdlog::stderr_color_mt("lce");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("LCE_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::uint8_t> read_input(const std::string& path) {
  std::vector<std::uint8_t> bytes;
  if (path == "-") {
    bytes.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return bytes;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lce::LceError(lce::ErrorCode::io_error, "cannot open " + path);
  bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return bytes;
}

lce::Sentinel parse_sentinel(const std::string& arg) {
  if (arg.empty() || arg == "auto") return lce::Sentinel::automatic();
  if (arg.size() == 1) return lce::Sentinel::explicit_symbol(static_cast<std::uint8_t>(arg[0]));
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(arg, &used, 0);
  } catch (const std::exception&) {
  }
  if (used != arg.size() || value < 0 || value > 255) {
    throw lce::LceError(lce::ErrorCode::param_out_of_range, "sentinel must be 'auto', one character or a byte value");
  }
  return lce::Sentinel::explicit_symbol(static_cast<std::uint8_t>(value));
}

lce::LevelAncestorKind parse_la(const std::string& name) {
  if (name == "ladder") return lce::LevelAncestorKind::ladder;
  return lce::LevelAncestorKind::binary_lifting;
}

struct TextOptions {
  std::string input;
  std::string sentinel = "auto";

  lce::Text load() const { return lce::Text::load(read_input(input), parse_sentinel(sentinel)); }
};

struct IndexOptions {
  pos_t t = 0;
  pos_t t_prime = 0;
  bool auto_tune = false;
  unsigned budget = 64;
  bool packed = false;
  unsigned word_size = 0;
  std::string la = "binary";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--t", t, "block length t (>= 1)");
    cmd->add_option("--t-prime", t_prime, "trade-off parameter t' in [1, t] (default t)");
    cmd->add_flag("--auto-tune", auto_tune, "choose t by comparing measured structure sizes");
    cmd->add_option("--budget", budget, "probe budget for --auto-tune");
    cmd->add_flag("--packed", packed, "also build the bit-packed variant");
    cmd->add_option("--word-size", word_size, "bit window of the packed variant (1..64, default min(64, n*b))");
    cmd->add_option("--la", la, "level ancestor structure")->check(CLI::IsMember({"binary", "ladder"}));
  }

  pos_t resolve_t(const lce::Text& text) const {
    if (auto_tune) {
      const auto tuned = lce::tune_tau(text, budget);
      spdlog::info("auto-tune picked t = {} after {} probes", tuned.t_star, tuned.probes.size());
      return tuned.t_star;
    }
    if (t == 0) throw lce::LceError(lce::ErrorCode::param_out_of_range, "--t must be >= 1 (or use --auto-tune)");
    return t;
  }

  lce::BuildOptions build_options() const {
    lce::BuildOptions opts;
    opts.t_prime = t_prime;
    opts.packed = packed;
    opts.word_size = word_size;
    opts.la = parse_la(la);
    return opts;
  }
};

void print_stats(std::ostream& out, const lce::LceIndex& ix, bool as_json) {
  const auto& s = ix.stats();
  if (as_json) {
    nlohmann::json j = {{"n", s.n},
                        {"t", s.t},
                        {"t_prime", s.t_prime},
                        {"tst_nodes", s.tst_nodes},
                        {"tst_leaves", s.tst_leaves},
                        {"tst_ref_len", s.tst_ref_len},
                        {"nav_nodes", s.nav_nodes},
                        {"sampled_count", s.sampled_count},
                        {"code_len", s.code_len},
                        {"cover_size", s.cover_size},
                        {"prefix_entries", s.prefix_entries},
                        {"estimated_words", s.estimated_words},
                        {"index_bytes", ix.index_bytes()},
                        {"packed", ix.has_packed()}};
    j["z"] = s.z ? nlohmann::json(*s.z) : nlohmann::json(nullptr);
    out << j.dump(2) << "\n";
    return;
  }
  out << "n: " << s.n << "\n"
      << "t: " << s.t << "\n"
      << "t_prime: " << s.t_prime << "\n"
      << "tst_nodes: " << s.tst_nodes << "\n"
      << "tst_leaves: " << s.tst_leaves << "\n"
      << "tst_ref_len: " << s.tst_ref_len << "\n"
      << "nav_nodes: " << s.nav_nodes << "\n"
      << "sampled_count: " << s.sampled_count << "\n"
      << "code_len: " << s.code_len << "\n"
      << "cover_size: " << s.cover_size << "\n"
      << "prefix_entries: " << s.prefix_entries << "\n"
      << "estimated_words: " << s.estimated_words << "\n";
  if (s.z) out << "z: " << *s.z << "\n";
  out << "index_bytes: " << ix.index_bytes() << "\n";
  if (ix.has_packed()) out << "packed: b=" << ix.packed().text().b() << " word_size=" << ix.packed().text().word_size() << "\n";
}

std::vector<std::pair<pos_t, pos_t>> random_pairs(pos_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<pos_t, pos_t>> pairs(count);
  for (auto& [i, j] : pairs) {
    i = static_cast<pos_t>(rng() % n) + 1;
    j = static_cast<pos_t>(rng() % n) + 1;
  }
  return pairs;
}

// ---------------------------------------------------------------- commands

int cmd_build(const TextOptions& in, const IndexOptions& io, const std::string& out_path, bool with_z, bool json) {
  const auto text = in.load();
  const pos_t t = io.resolve_t(text);
  auto opts = io.build_options();
  opts.compute_z = with_z;
  const auto start = Clock::now();
  const auto ix = lce::LceIndex::build(text, t, opts);
  spdlog::info("built index over n = {} in {:.1f} ms", text.n(), ms_since(start));
  if (!out_path.empty()) ix.save_file(out_path);
  print_stats(std::cout, ix, json);
  return 0;
}

int cmd_query(const std::string& index_path, const std::vector<pos_t>& pair_args, const std::string& pairs_file,
              std::size_t random_count, std::uint64_t seed, bool use_packed) {
  const auto ix = lce::LceIndex::load_file(index_path);
  if (use_packed && !ix.has_packed()) {
    throw lce::LceError(lce::ErrorCode::param_out_of_range, "index has no packed section; rebuild with --packed");
  }
  std::vector<std::pair<pos_t, pos_t>> pairs;
  for (std::size_t k = 0; k + 1 < pair_args.size(); k += 2) pairs.emplace_back(pair_args[k], pair_args[k + 1]);
  if (!pairs_file.empty()) {
    std::ifstream f(pairs_file);
    if (!f) throw lce::LceError(lce::ErrorCode::io_error, "cannot open " + pairs_file);
    std::string line;
    while (std::getline(f, line)) {
      std::istringstream ls(line);
      long long i = 0, j = 0;
      if (!(ls >> i >> j)) continue;
      auto clamp = [](long long v) { return v < 1 || v > lce::kNone ? lce::kNone : static_cast<pos_t>(v); };
      pairs.emplace_back(clamp(i), clamp(j));
    }
  }
  if (random_count > 0) {
    const auto extra = random_pairs(ix.n(), random_count, seed);
    pairs.insert(pairs.end(), extra.begin(), extra.end());
  }
  bool failed = false;
  std::string buffer;
  for (auto [i, j] : pairs) {
    try {
      const pos_t l = use_packed ? ix.lce_packed(i, j) : ix.lce(i, j);
      buffer += std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(l) + "\n";
    } catch (const lce::LceError& e) {
      if (e.code() != lce::ErrorCode::out_of_range) throw;
      buffer += std::to_string(i) + " " + std::to_string(j) + " out_of_range\n";
      failed = true;
    }
  }
  std::cout << buffer;
  return failed ? kExitUsage : 0;
}

struct BenchArgs {
  TextOptions text;
  IndexOptions index;
  std::string index_path;
  std::string corpus_id;
  std::size_t queries = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string csv;
};

int cmd_bench(const BenchArgs& a) {
  const auto text = a.text.load();
  const pos_t n = text.n();

  double build_ms = 0;
  lce::LceIndex ix;
  if (!a.index_path.empty()) {
    const auto start = Clock::now();
    ix = lce::LceIndex::load_file(a.index_path);
    build_ms = ms_since(start);
    if (ix.n() != n) throw lce::LceError(lce::ErrorCode::format_error, "index was built over a different text length");
  } else {
    const pos_t t = a.index.resolve_t(text);
    const auto start = Clock::now();
    ix = lce::LceIndex::build(text, t, a.index.build_options());
    build_ms = ms_since(start);
  }
  const lce::IsaOracle oracle(text);
  const auto z = lce::lz77_factorize(text).z();
  const auto pairs = random_pairs(n, a.queries, a.seed);
  const std::size_t q = pairs.size();

  // Oracle answers and timing.
  std::vector<pos_t> expected(q);
  auto start = Clock::now();
  for (std::size_t k = 0; k < q; ++k) expected[k] = oracle.lce(pairs[k].first, pairs[k].second);
  const double oracle_ns = q ? std::chrono::duration<double, std::nano>(Clock::now() - start).count() / q : 0;

  // Index answers; each thread takes a contiguous slice and times every query.
  std::vector<pos_t> got(q);
  std::vector<double> per_query(q);
  const unsigned m = std::max(1u, a.threads);
  auto worker = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      const auto s = Clock::now();
      got[k] = ix.lce(pairs[k].first, pairs[k].second);
      per_query[k] = std::chrono::duration<double, std::nano>(Clock::now() - s).count();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < m; ++w) pool.emplace_back(worker, q * w / m, q * (w + 1) / m);
  for (auto& th : pool) th.join();

  std::size_t mismatches = 0;
  for (std::size_t k = 0; k < q; ++k) {
    if (got[k] != expected[k]) {
      if (mismatches < 5) {
        spdlog::error("mismatch at ({}, {}): index {} oracle {}", pairs[k].first, pairs[k].second, got[k], expected[k]);
      }
      ++mismatches;
    }
  }
  double mean = 0, p99 = 0;
  if (q) {
    mean = std::accumulate(per_query.begin(), per_query.end(), 0.0) / q;
    std::vector<double> sorted = per_query;
    const std::size_t at = std::min(q - 1, static_cast<std::size_t>(std::ceil(0.99 * q)) - 1);
    std::nth_element(sorted.begin(), sorted.begin() + at, sorted.end());
    p99 = sorted[at];
  }

  std::ostringstream row;
  row.setf(std::ios::fixed);
  row.precision(1);
  row << (a.corpus_id.empty() ? a.text.input : a.corpus_id) << ',' << n << ',' << text.sigma() << ',' << z << ','
      << ix.t() << ',' << ix.t_prime() << ',' << build_ms << ',' << ix.index_bytes() << ',' << q << ',' << mean << ','
      << p99 << ',' << oracle_ns << ',' << mismatches << '\n';
  if (a.csv.empty() || a.csv == "-") {
    std::cout << kCsvHeader << '\n' << row.str();
  } else {
    const bool fresh = !std::filesystem::exists(a.csv) || std::filesystem::file_size(a.csv) == 0;
    std::ofstream out(a.csv, std::ios::app);
    if (!out) throw lce::LceError(lce::ErrorCode::io_error, "cannot open " + a.csv);
    if (fresh) out << kCsvHeader << '\n';
    out << row.str();
  }
  return mismatches == 0 ? 0 : kExitMismatch;
}

int cmd_tune(const TextOptions& in, unsigned budget) {
  const auto text = in.load();
  const auto r = lce::tune_tau(text, budget);
  std::cout << "t,tst_leaves,cover_term,total\n";
  for (const auto& p : r.probes) std::cout << p.t << ',' << p.tst_leaves << ',' << p.cover_term << ',' << p.total() << '\n';
  std::cout << "t* = " << r.t_star << '\n';
  return 0;
}

int cmd_stats(const std::string& index_path, bool json) {
  print_stats(std::cout, lce::LceIndex::load_file(index_path), json);
  return 0;
}

int cmd_lz77(const TextOptions& in, bool list) {
  const auto text = in.load();
  const auto f = lce::lz77_factorize(text);
  std::cout << "z: " << f.z() << '\n';
  if (list) {
    for (const auto& fac : f.factors) {
      if (fac.start == text.n()) break;  // the sentinel literal is not counted
      const auto bytes = text.substring(fac.start, fac.start + fac.len - 1);
      std::cout << fac.start << ' ' << fac.len << ' ' << fac.src << ' '
                << std::string(bytes.begin(), bytes.end()) << '\n';
    }
  }
  return 0;
}

int cmd_gen(const std::string& kind, std::size_t n, unsigned sigma, std::uint64_t seed, const std::string& out_path) {
  std::string s;
  if (kind == "fibonacci") s = lce::corpus::fibonacci(n);
  else if (kind == "thue-morse") s = lce::corpus::thue_morse(n);
  else s = lce::corpus::random_text(n, sigma, seed);
  if (out_path.empty() || out_path == "-") {
    std::cout << s;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw lce::LceError(lce::ErrorCode::io_error, "cannot open " + out_path);
  out << s;
  return 0;
}

// Exhaustive agreement with the naive scan on a fixed set of small strings.
int cmd_selftest() {
  std::vector<std::string> suite = lce::corpus::all_binary(8);
  for (const char* s : {"abababcabababcabababcd", "baabbaabbaaabbaabba"}) suite.emplace_back(s);
  suite.push_back(lce::corpus::fibonacci(233));
  suite.push_back(lce::corpus::thue_morse(233));
  for (unsigned sigma : {2u, 4u, 26u}) suite.push_back(lce::corpus::random_text(150, sigma, sigma));

  std::size_t checked = 0, bad = 0;
  for (const auto& s : suite) {
    const auto text = lce::Text::load(s);
    const pos_t n = text.n();
    const auto root = static_cast<pos_t>(std::sqrt(static_cast<double>(n)));
    for (pos_t t : {pos_t{1}, pos_t{2}, pos_t{3}, pos_t{5}, pos_t{8}, root}) {
      if (t < 1 || t > n) continue;
      for (pos_t tp : {pos_t{1}, t}) {
        lce::BuildOptions opts;
        opts.t_prime = tp;
        opts.packed = text.sigma() <= 4;
        const auto ix = lce::LceIndex::deserialize(lce::LceIndex::build(text, t, opts).serialize());
        for (pos_t i = 1; i <= n; ++i) {
          for (pos_t j = 1; j <= n; ++j) {
            const pos_t want = lce::naive_lce(text, i, j);
            ++checked;
            if (ix.lce(i, j) != want || (opts.packed && ix.lce_packed(i, j) != want)) ++bad;
          }
        }
      }
    }
  }
  std::cout << "selftest: " << suite.size() << " strings, " << checked << " queries, " << bad << " mismatches ("
            << lce::kernels::to_string(lce::kernels::active_isa()) << " kernels)\n";
  return bad == 0 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  init_logging();
  CLI::App app{"Longest common extension index"};
  app.require_subcommand(1);

  TextOptions text_opts;
  auto add_text = [&](CLI::App* cmd) {
    cmd->add_option("input", text_opts.input, "input file ('-' for stdin)")->required();
    cmd->add_option("--sentinel", text_opts.sentinel, "terminal symbol: auto, one character, or a byte value");
  };

  IndexOptions index_opts;
  std::string out_path, index_path;
  bool with_z = false, json = false;
  auto* build = app.add_subcommand("build", "build an index and print its statistics");
  add_text(build);
  index_opts.add_to(build);
  build->add_option("-o,--output", out_path, "index file to write");
  build->add_flag("--z", with_z, "also compute the LZ77 factor count");
  build->add_flag("--json", json, "statistics as JSON");

  std::vector<pos_t> pair_args;
  std::string pairs_file;
  std::size_t random_count = 0;
  std::uint64_t seed = 1;
  bool use_packed = false;
  auto* query = app.add_subcommand("query", "answer LCE queries, one 'i j lce' line each");
  query->add_option("index", index_path, "index file")->required();
  query->add_option("--pair", pair_args, "query pair i j (repeatable)")->expected(2)->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  query->add_option("--pairs-file", pairs_file, "file with one 'i j' pair per line");
  query->add_option("--random", random_count, "number of random pairs");
  query->add_option("--seed", seed, "seed for --random");
  query->add_flag("--packed", use_packed, "answer with the bit-packed variant");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time random queries against the ISA oracle, emit CSV");
  bench->add_option("input", bench_args.text.input, "text file")->required();
  bench->add_option("--sentinel", bench_args.text.sentinel, "terminal symbol");
  bench_args.index.add_to(bench);
  bench->add_option("--index", bench_args.index_path, "load this index instead of building one");
  bench->add_option("--corpus", bench_args.corpus_id, "corpus id for the CSV row");
  bench->add_option("--queries", bench_args.queries, "number of random queries");
  bench->add_option("--seed", bench_args.seed, "query seed");
  bench->add_option("--threads", bench_args.threads, "reader threads");
  bench->add_option("--csv", bench_args.csv, "append the row to this CSV file");

  unsigned budget = 64;
  auto* tune = app.add_subcommand("tune", "report the block length search");
  add_text(tune);
  tune->add_option("--budget", budget, "maximum probes");

  auto* stats = app.add_subcommand("stats", "print the statistics of an index file");
  stats->add_option("index", index_path, "index file")->required();
  stats->add_flag("--json", json, "statistics as JSON");

  bool list_factors = false;
  auto* lz = app.add_subcommand("lz77", "LZ77 factor count of a text");
  add_text(lz);
  lz->add_flag("--factors", list_factors, "list factors as 'start len src text'");

  std::string gen_kind = "fibonacci";
  std::size_t gen_n = 1000;
  unsigned gen_sigma = 4;
  auto* gen = app.add_subcommand("gen", "write a synthetic corpus");
  gen->add_option("kind", gen_kind, "fibonacci, thue-morse or random")
      ->check(CLI::IsMember({"fibonacci", "thue-morse", "random"}));
  gen->add_option("--n", gen_n, "length");
  gen->add_option("--sigma", gen_sigma, "alphabet size for random (1..64)")->check(CLI::Range(1, 64));
  gen->add_option("--seed", seed, "seed for random");
  gen->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* selftest = app.add_subcommand("selftest", "check the index against the naive scan on built-in strings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) return cmd_build(text_opts, index_opts, out_path, with_z, json);
    if (*query) return cmd_query(index_path, pair_args, pairs_file, random_count, seed, use_packed);
    if (*bench) return cmd_bench(bench_args);
    if (*tune) return cmd_tune(text_opts, budget);
    if (*stats) return cmd_stats(index_path, json);
    if (*lz) return cmd_lz77(text_opts, list_factors);
    if (*gen) return cmd_gen(gen_kind, gen_n, gen_sigma, seed, out_path);
    if (*selftest) return cmd_selftest();
  } catch (const lce::LceError& e) {
    spdlog::error("{}: {}", lce::to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitIo;
  }
  return kExitUsage;
}
