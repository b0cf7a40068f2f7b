// Command-line frontend: psi / classify / classify-all / oracle-check /
// bench / gen / prune over the edge-list tree format.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error,
// 3 argument error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dissoc/classifier.hpp"
#include "dissoc/oracle.hpp"
#include "dissoc/pruning.hpp"
#include "dissoc/tree.hpp"

using nlohmann::json;

namespace {

int log_level() {
  static int level = [] {
    const char* env = std::getenv("DISSOC_LOG");
    if (env == nullptr) return 0;
    std::string s(env);
    if (s == "debug") return 2;
    if (s == "info") return 1;
    return 0;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[info] " << msg << '\n';
}

void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "[debug] " << msg << '\n';
}

dissoc::Tree read_tree(const std::string& path) {
  dissoc::Tree tree = [&] {
    if (path == "-") return dissoc::parse_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return dissoc::parse_edge_list(in);
  }();
  log_info("parsed tree: n=" + std::to_string(tree.order()) +
           " m=" + std::to_string(tree.order() - 1));
  return tree;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json envelope(const char* command, long long n, long long m, double ms,
              json payload) {
  return json{{"command", command},
              {"n", n},
              {"m", m},
              {"duration_ms", ms},
              {"payload", std::move(payload)}};
}

void emit(const json& report) { std::cout << report.dump() << '\n'; }

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---- psi ----

int run_psi(const std::string& input, bool as_json) {
  dissoc::Tree tree = read_tree(input);
  auto t0 = Clock::now();
  long long psi = dissoc::dissociation_number(tree);
  double ms = ms_since(t0);
  if (as_json) {
    emit(envelope("psi", tree.order(), tree.order() - 1, ms,
                  json{{"psi", psi}}));
  } else {
    std::cout << psi << '\n';
  }
  return 0;
}

// ---- classify ----

int run_classify(const std::string& input, int vertex, bool as_json) {
  dissoc::Tree tree = read_tree(input);
  auto t0 = Clock::now();
  dissoc::VertexClass cls = dissoc::classify_vertex(tree, vertex);
  double ms = ms_since(t0);
  if (as_json) {
    long long psi = dissoc::dissociation_number(tree);
    emit(envelope("classify", tree.order(), tree.order() - 1, ms,
                  json{{"vertex", vertex},
                       {"class", dissoc::to_string(cls)},
                       {"psi", psi}}));
  } else {
    std::cout << dissoc::to_string(cls) << '\n';
  }
  return 0;
}

// ---- classify-all ----

int run_classify_all(const std::string& input, int threads, bool as_json) {
  dissoc::Tree tree = read_tree(input);
  auto t0 = Clock::now();
  std::vector<dissoc::VertexClass> classes =
      dissoc::classify_all(tree, resolve_threads(threads));
  double ms = ms_since(t0);
  if (as_json) {
    json rows = json::array();
    for (int v = 0; v < tree.order(); ++v) {
      rows.push_back(
          json{{"vertex", v}, {"class", dissoc::to_string(classes[v])}});
    }
    emit(envelope("classify-all", tree.order(), tree.order() - 1, ms,
                  std::move(rows)));
  } else {
    for (int v = 0; v < tree.order(); ++v) {
      std::cout << v << '\t' << dissoc::to_string(classes[v]) << '\n';
    }
  }
  return 0;
}

// ---- oracle-check ----

struct CheckStats {
  long long trees = 0;
  long long vertices = 0;
  long long mismatches = 0;

  void operator+=(const CheckStats& other) {
    trees += other.trees;
    vertices += other.vertices;
    mismatches += other.mismatches;
  }
};

struct Mismatch {
  std::string phase;
  std::uint64_t index;
  int vertex;
  dissoc::VertexClass fast;
  dissoc::VertexClass dp;
  std::optional<dissoc::VertexClass> enumerated;
  std::string tree_text;
};

// Checks one tree; the enumeration oracle runs only when requested (and is
// computed once for all vertices). Keeps the lowest-keyed mismatch.
void check_one_tree(const dissoc::Tree& tree, bool with_enum,
                    const std::string& phase, std::uint64_t index,
                    CheckStats& stats, std::optional<Mismatch>& first) {
  std::vector<dissoc::VertexClass> enumerated;
  if (with_enum) enumerated = dissoc::oracle_classify_all(tree);
  stats.trees += 1;
  for (int v = 0; v < tree.order(); ++v) {
    stats.vertices += 1;
    dissoc::VertexClass fast = dissoc::classify_vertex(tree, v);
    dissoc::VertexClass dp = dissoc::oracle_classify_via_dp(tree, v);
    bool bad = fast != dp || (with_enum && enumerated[v] != fast);
    if (!bad) continue;
    stats.mismatches += 1;
    if (!first) {
      Mismatch m{phase, index, v, fast, dp, std::nullopt,
                 dissoc::serialize_edge_list(tree)};
      if (with_enum) m.enumerated = enumerated[v];
      first = std::move(m);
    }
  }
}

void merge_first(std::optional<Mismatch>& into, std::optional<Mismatch>& from) {
  if (!from) return;
  if (!into || from->index < into->index ||
      (from->index == into->index && from->vertex < into->vertex)) {
    into = std::move(from);
  }
}

void print_mismatch(const Mismatch& m) {
  std::cout << "mismatch (" << m.phase << " #" << m.index << "): vertex "
            << m.vertex << " classify=" << dissoc::to_string(m.fast)
            << " dp=" << dissoc::to_string(m.dp);
  if (m.enumerated) {
    std::cout << " enumeration=" << dissoc::to_string(*m.enumerated);
  }
  std::cout << "\noffending tree:\n" << m.tree_text;
}

int run_oracle_check(int n_max, long long samples, std::uint64_t seed,
                     int threads, bool as_json) {
  if (n_max < 3) {
    throw std::invalid_argument("oracle-check: n_max must be at least 3");
  }
  if (samples < 0) {
    throw std::invalid_argument("oracle-check: samples must be >= 0");
  }
  int workers = resolve_threads(threads);
  auto t0 = Clock::now();

  json per_n = json::array();
  CheckStats total;
  std::optional<Mismatch> first;
  std::vector<std::string> lines;

  // Exhaustive phase: every labeled tree for each small n.
  for (int n = 3; n <= std::min(n_max, 8); ++n) {
    std::uint64_t count = dissoc::labeled_tree_count(n);
    std::vector<CheckStats> stats(workers);
    std::vector<std::optional<Mismatch>> firsts(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = count * w / workers;
      std::uint64_t hi = count * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi, n] {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          dissoc::Tree tree = dissoc::labeled_tree_from_index(n, idx);
          check_one_tree(tree, true, "exhaustive n=" + std::to_string(n), idx,
                         stats[w], firsts[w]);
        }
      });
    }
    for (auto& t : pool) t.join();
    CheckStats merged;
    std::optional<Mismatch> n_first;
    for (int w = 0; w < workers; ++w) {
      merged += stats[w];
      merge_first(n_first, firsts[w]);
    }
    if (!first) merge_first(first, n_first);
    total += merged;
    lines.push_back("n=" + std::to_string(n) +
                    " trees=" + std::to_string(merged.trees) +
                    " vertices=" + std::to_string(merged.vertices) +
                    " mismatches=" + std::to_string(merged.mismatches));
    per_n.push_back(json{{"n", n},
                         {"trees", merged.trees},
                         {"vertices", merged.vertices},
                         {"mismatches", merged.mismatches}});
  }

  // Random phase: sample parameters drawn up front so results do not
  // depend on the worker count.
  json random_report = nullptr;
  if (samples > 0) {
    std::mt19937_64 eng(seed);
    std::vector<std::pair<int, std::uint64_t>> draws(samples);
    for (auto& [n, s] : draws) {
      n = 3 + static_cast<int>(eng() % static_cast<std::uint64_t>(n_max - 2));
      s = eng();
    }
    std::vector<CheckStats> stats(workers);
    std::vector<std::optional<Mismatch>> firsts(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = static_cast<std::uint64_t>(samples) * w / workers;
      std::uint64_t hi = static_cast<std::uint64_t>(samples) * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        for (std::uint64_t i = lo; i < hi; ++i) {
          auto [n, s] = draws[i];
          dissoc::Tree tree = dissoc::random_tree(n, s);
          check_one_tree(tree, n <= 24, "random", i, stats[w], firsts[w]);
        }
      });
    }
    for (auto& t : pool) t.join();
    CheckStats merged;
    std::optional<Mismatch> r_first;
    for (int w = 0; w < workers; ++w) {
      merged += stats[w];
      merge_first(r_first, firsts[w]);
    }
    if (!first) merge_first(first, r_first);
    total += merged;
    lines.push_back("random trees=" + std::to_string(merged.trees) +
                    " vertices=" + std::to_string(merged.vertices) +
                    " mismatches=" + std::to_string(merged.mismatches));
    random_report = json{{"trees", merged.trees},
                         {"vertices", merged.vertices},
                         {"mismatches", merged.mismatches}};
  }

  lines.push_back("total trees=" + std::to_string(total.trees) +
                  " vertices=" + std::to_string(total.vertices) +
                  " mismatches=" + std::to_string(total.mismatches));
  double ms = ms_since(t0);

  if (as_json) {
    json first_json = nullptr;
    if (first) {
      first_json = json{{"phase", first->phase},
                        {"index", first->index},
                        {"vertex", first->vertex},
                        {"classify", dissoc::to_string(first->fast)},
                        {"dp", dissoc::to_string(first->dp)},
                        {"tree", first->tree_text}};
      if (first->enumerated) {
        first_json["enumeration"] = dissoc::to_string(*first->enumerated);
      }
    }
    emit(envelope("oracle-check", 0, 0, ms,
                  json{{"per_n", std::move(per_n)},
                       {"random", std::move(random_report)},
                       {"total",
                        json{{"trees", total.trees},
                             {"vertices", total.vertices},
                             {"mismatches", total.mismatches}}},
                       {"first_mismatch", std::move(first_json)}}));
  } else {
    for (const auto& line : lines) std::cout << line << '\n';
    if (first) print_mismatch(*first);
  }
  return total.mismatches == 0 ? 0 : 1;
}

// ---- bench ----

double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  return xs[xs.size() / 2];
}

int run_bench(const std::vector<long long>& sizes, std::uint64_t seed,
              const std::string& mode, bool as_json) {
  constexpr int kReps = 5;
  auto t0 = Clock::now();
  json rows = json::array();
  std::ostringstream text;
  for (long long n : sizes) {
    if (n < 1) throw std::invalid_argument("bench: sizes must be >= 1");
    dissoc::Tree tree = dissoc::random_tree(static_cast<int>(n), seed);
    double single = -1.0, all = -1.0;
    if (mode != "all") {
      std::vector<double> reps;
      for (int r = 0; r < kReps; ++r) {
        auto s = Clock::now();
        dissoc::classify_vertex(tree, 0);
        reps.push_back(ms_since(s));
        log_debug("bench n=" + std::to_string(n) + " single rep " +
                  std::to_string(reps.back()) + " ms");
      }
      single = median_of(reps);
    }
    if (mode != "single") {
      std::vector<double> reps;
      for (int r = 0; r < kReps; ++r) {
        auto s = Clock::now();
        dissoc::classify_all(tree, 1);
        reps.push_back(ms_since(s));
        log_debug("bench n=" + std::to_string(n) + " all rep " +
                  std::to_string(reps.back()) + " ms");
      }
      all = median_of(reps);
    }
    char buf[128];
    auto cell = [&](double v) {
      if (v < 0) return std::string("-");
      std::snprintf(buf, sizeof buf, "%.3f", v);
      return std::string(buf);
    };
    text << n << '\t' << cell(single) << '\t' << cell(all) << '\n';
    json row{{"n", n}};
    row["single_ms"] = single < 0 ? json(nullptr) : json(single);
    row["all_ms"] = all < 0 ? json(nullptr) : json(all);
    rows.push_back(std::move(row));
  }
  if (as_json) {
    emit(envelope("bench", 0, 0, ms_since(t0), std::move(rows)));
  } else {
    std::cout << text.str();
  }
  return 0;
}

// ---- gen ----

int run_gen(long long n, std::uint64_t seed, bool as_json) {
  if (n < 1) throw std::invalid_argument("gen: n must be >= 1");
  auto t0 = Clock::now();
  dissoc::Tree tree = dissoc::random_tree(static_cast<int>(n), seed);
  double ms = ms_since(t0);
  if (as_json) {
    json edges = json::array();
    for (auto [u, v] : tree.edges()) edges.push_back(json::array({u, v}));
    emit(envelope("gen", tree.order(), tree.order() - 1, ms,
                  json{{"n", tree.order()}, {"edges", std::move(edges)}}));
  } else {
    std::cout << dissoc::serialize_edge_list(tree);
  }
  return 0;
}

// ---- prune ----

int run_prune(const std::string& input, int vertex, bool as_json) {
  dissoc::Tree tree = read_tree(input);
  auto t0 = Clock::now();
  dissoc::RootedTree rooted = dissoc::root_at(tree, vertex);
  dissoc::PrunedTree state = dissoc::prune(rooted);
  dissoc::MaterializedPruning result = dissoc::materialize(state);
  double ms = ms_since(t0);
  if (as_json) {
    json edges = json::array();
    for (auto [u, v] : result.tree.edges()) {
      edges.push_back(json::array({u, v}));
    }
    emit(envelope("prune", tree.order(), tree.order() - 1, ms,
                  json{{"n", result.tree.order()},
                       {"root", result.root},
                       {"original_label", result.original_label},
                       {"edges", std::move(edges)}}));
  } else {
    std::cout << "# root " << result.root << '\n';
    std::cout << "# original";
    for (int orig : result.original_label) std::cout << ' ' << orig;
    std::cout << '\n' << dissoc::serialize_edge_list(result.tree);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum dissociation set toolkit for trees"};
  app.require_subcommand(1);

  std::string psi_input = "-";
  bool psi_json = false;
  auto* cmd_psi = app.add_subcommand("psi", "Dissociation number of a tree");
  cmd_psi->add_option("input", psi_input, "edge-list file, or - for stdin");
  cmd_psi->add_flag("--json", psi_json, "JSON report instead of plain text");

  std::string cls_input = "-";
  int cls_vertex = 0;
  bool cls_json = false;
  auto* cmd_classify = app.add_subcommand(
      "classify", "Class of one vertex: ALL, SOME, or NONE");
  cmd_classify->add_option("input", cls_input, "edge-list file, or - for stdin");
  cmd_classify->add_option("--vertex", cls_vertex, "vertex label")->required();
  cmd_classify->add_flag("--json", cls_json, "JSON report");

  std::string all_input = "-";
  int all_threads = 0;
  bool all_json = false;
  auto* cmd_all =
      app.add_subcommand("classify-all", "Classes of every vertex (TSV)");
  cmd_all->add_option("input", all_input, "edge-list file, or - for stdin");
  cmd_all->add_option("--threads", all_threads,
                      "worker count; 0 = available parallelism");
  cmd_all->add_flag("--json", all_json, "JSON report");

  int oc_nmax = 8;
  long long oc_samples = 0;
  std::uint64_t oc_seed = 1;
  int oc_threads = 0;
  bool oc_json = false;
  auto* cmd_oc = app.add_subcommand(
      "oracle-check",
      "Cross-check the classifier against brute-force oracles");
  cmd_oc->add_option("n_max", oc_nmax, "largest tree order to draw")
      ->required();
  cmd_oc->add_option("--samples", oc_samples, "random trees to draw");
  cmd_oc->add_option("--seed", oc_seed, "random seed");
  cmd_oc->add_option("--threads", oc_threads,
                     "worker count; 0 = available parallelism");
  cmd_oc->add_flag("--json", oc_json, "JSON report");

  std::vector<long long> bench_sizes;
  std::uint64_t bench_seed = 1;
  std::string bench_mode = "both";
  bool bench_json = false;
  auto* cmd_bench = app.add_subcommand(
      "bench", "Time classify / classify-all on random trees");
  cmd_bench->add_option("--sizes", bench_sizes, "tree orders to benchmark")
      ->required()
      ->delimiter(',');
  cmd_bench->add_option("--seed", bench_seed, "random seed");
  cmd_bench->add_option("--mode", bench_mode, "single | all | both")
      ->check(CLI::IsMember({"single", "all", "both"}));
  cmd_bench->add_flag("--json", bench_json, "JSON report");

  long long gen_n = 0;
  std::uint64_t gen_seed = 1;
  bool gen_json = false;
  auto* cmd_gen =
      app.add_subcommand("gen", "Uniformly random labeled tree, edge list");
  cmd_gen->add_option("n", gen_n, "vertex count")->required();
  cmd_gen->add_option("--seed", gen_seed, "random seed");
  cmd_gen->add_flag("--json", gen_json, "JSON report");

  std::string prune_input = "-";
  int prune_vertex = 0;
  bool prune_json = false;
  auto* cmd_prune = app.add_subcommand(
      "prune", "Pruned tree for a root vertex, as a commented edge list");
  cmd_prune->add_option("input", prune_input, "edge-list file, or - for stdin");
  cmd_prune->add_option("--vertex", prune_vertex, "root vertex")->required();
  cmd_prune->add_flag("--json", prune_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (cmd_psi->parsed()) return run_psi(psi_input, psi_json);
    if (cmd_classify->parsed())
      return run_classify(cls_input, cls_vertex, cls_json);
    if (cmd_all->parsed())
      return run_classify_all(all_input, all_threads, all_json);
    if (cmd_oc->parsed())
      return run_oracle_check(oc_nmax, oc_samples, oc_seed, oc_threads,
                              oc_json);
    if (cmd_bench->parsed())
      return run_bench(bench_sizes, bench_seed, bench_mode, bench_json);
    if (cmd_gen->parsed()) return run_gen(gen_n, gen_seed, gen_json);
    if (cmd_prune->parsed())
      return run_prune(prune_input, prune_vertex, prune_json);
  } catch (const dissoc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 3;
}
