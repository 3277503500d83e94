// locount: exact two-sided subgraph counting in degenerate hosts.
//
// Exit codes:
//   0  success
//   2  usage error (bad flags)
//   65 graph/pattern file syntax error
//   66 cannot open an input file
//   67 pattern validation failure (sides malformed)
//   68 verification mismatch (verify subcommand)
//   70 internal error

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "locount/counting.hpp"
#include "locount/gen.hpp"
#include "locount/io.hpp"
#include "locount/oracle.hpp"
#include "locount/report.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSyntax = 65;
constexpr int kExitNoFile = 66;
constexpr int kExitValidation = 67;
constexpr int kExitMismatch = 68;
constexpr int kExitInternal = 70;

int default_threads() {
  if (const char* env = std::getenv("LOCOUNT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

locount::Mode parse_mode(const std::string& mode) {
  if (mode == "strong") return locount::Mode::Strong;
  if (mode == "weak") return locount::Mode::Weak;
  throw CLI::ValidationError("--mode", "must be strong or weak");
}

struct CountArgs {
  std::string graph_file, pattern_file, mode = "weak", dedup = "hash";
  int threads = default_threads();
  int d_override = -1;
  bool ordered_selection_weight = false;
  bool table = false;
};

int run_count(const CountArgs& a) {
  locount::Graph g = locount::load_graph(a.graph_file);
  locount::Pattern p = locount::load_pattern(a.pattern_file);
  if (a.d_override >= 0) {
    int actual = locount::degeneracy(g);
    if (a.d_override < actual) {
      std::cerr << "error: --d " << a.d_override << " is below the host degeneracy "
                << actual << "\n";
      return kExitUsage;
    }
  }
  locount::CountOptions opts;
  opts.mode = parse_mode(a.mode);
  opts.threads = a.threads;
  opts.ordered_selection_weight = a.ordered_selection_weight;
  opts.dedup = a.dedup == "canonical" ? locount::DedupMode::Canonical
                                      : locount::DedupMode::Hash;
  auto result = locount::count_pattern(g, p, opts);
  auto rep = locount::make_report(result, opts.mode, opts.threads);
  if (a.table)
    std::cout << locount::report_table(rep);
  else
    std::cout << locount::report_to_json(rep).dump(2) << "\n";
  return 0;
}

int run_classify(const std::string& pattern_file, int d, bool table) {
  locount::Pattern p = locount::load_pattern(pattern_file);
  auto loc = locount::min_locatable_c(p, d);
  nlohmann::json j;
  if (loc.status == locount::LocStatus::NotDDegenerate) {
    j["status"] = "NotDDegenerate";
  } else {
    j["status"] = "Locatable";
    j["c"] = loc.c;
    nlohmann::json order = nlohmann::json::array();
    for (int v : loc.witness_order) order.push_back(p.graph.label(v));
    j["witness_order"] = order;
    nlohmann::json cover = nlohmann::json::array();
    for (int v : loc.witness_cover) cover.push_back(p.graph.label(v));
    j["witness_cover"] = cover;
    if (loc.c == 1) j["structural_c1"] = locount::check_1d_structure(p, d);
  }
  if (table) {
    std::cout << "status          " << j["status"].get<std::string>() << "\n";
    if (j.contains("c")) std::cout << "c               " << loc.c << "\n";
    if (j.contains("structural_c1"))
      std::cout << "structural c=1  " << (j["structural_c1"].get<bool>() ? "true" : "false")
                << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

struct VerifyArgs {
  uint64_t seed = 1;
  int cases = 300;
  int max_host = 12;
  int max_pattern_s = 2;
  int max_pattern_t = 4;
  bool ordered_selection_weight = false;
};

int run_verify(const VerifyArgs& a) {
  std::mt19937_64 rng(a.seed);
  int mismatches = 0;
  for (int i = 0; i < a.cases; ++i) {
    locount::GenSpec gs;
    gs.n = 5 + static_cast<int>(rng() % (a.max_host - 4));
    gs.d = 1 + static_cast<int>(rng() % 4);
    gs.edge_keep = 0.5 + 0.5 * (rng() % 100) / 100.0;
    gs.seed = rng();
    locount::PatternGenSpec ps;
    ps.s = 1 + static_cast<int>(rng() % a.max_pattern_s);
    ps.t = ps.s + 1 + static_cast<int>(rng() % std::max(1, a.max_pattern_t - ps.s));
    ps.p_edge = 0.4 + 0.6 * (rng() % 100) / 100.0;
    ps.seed = rng();

    locount::Graph g = locount::gen_random_degenerate(gs);
    locount::Pattern p;
    try {
      p = locount::gen_random_pattern(ps);
    } catch (const std::runtime_error&) {
      continue;
    }

    for (auto mode : {locount::Mode::Strong, locount::Mode::Weak}) {
      locount::CountOptions opts;
      opts.mode = mode;
      opts.ordered_selection_weight = a.ordered_selection_weight;
      auto fast = locount::count_pattern(g, p, opts);
      locount::BigCount slow = mode == locount::Mode::Strong
                                   ? locount::oracle_count_strong(g, p)
                                   : locount::oracle_count_weak(g, p);
      if (fast.embeddings != slow) {
        ++mismatches;
        std::cout << "MISMATCH case " << i
                  << (mode == locount::Mode::Strong ? " strong" : " weak")
                  << ": engine=" << fast.embeddings << " oracle=" << slow << "\n";
        std::cout << "reproducer: host{n=" << gs.n << ",d=" << gs.d
                  << ",keep=" << gs.edge_keep << ",seed=" << gs.seed << "} pattern{s="
                  << ps.s << ",t=" << ps.t << ",p=" << ps.p_edge << ",seed=" << ps.seed
                  << "}\n";
      }
    }
  }
  std::cout << (mismatches ? "FAIL " : "PASS ") << a.cases << " cases, "
            << mismatches << " mismatches\n";
  return mismatches ? kExitMismatch : 0;
}

int run_bench(const std::string& pattern_file, const std::vector<int>& sizes, int d,
              uint64_t seed, int threads) {
  locount::Pattern p = locount::load_pattern(pattern_file);
  std::cout << "n\tordering_ms\tr_ms\treps_ms\tlocate_count_ms\tcopies\n";
  for (int n : sizes) {
    locount::GenSpec gs;
    gs.n = n;
    gs.d = d;
    gs.seed = seed;
    locount::Graph g = locount::gen_random_degenerate(gs);
    locount::CountOptions opts;
    opts.mode = locount::Mode::Weak;
    opts.threads = threads;
    auto r = locount::count_pattern(g, p, opts);
    std::cout << n << "\t" << r.times.ordering << "\t" << r.times.dict_r << "\t"
              << r.times.reps << "\t" << r.times.locate_count << "\t" << r.copies
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact two-sided subgraph counting in degenerate hosts"};
  app.require_subcommand(1);

  CountArgs ca;
  auto* count = app.add_subcommand("count", "count pattern occurrences in a host");
  count->add_option("--graph", ca.graph_file, "host edge-list file")->required();
  count->add_option("--pattern", ca.pattern_file, "pattern file")->required();
  count->add_option("--mode", ca.mode, "strong|weak")
      ->check(CLI::IsMember({"strong", "weak"}));
  count->add_option("--threads", ca.threads, "worker count");
  count->add_option("--d", ca.d_override, "degeneracy override (>= computed)");
  count->add_flag("--ordered-selection-weight", ca.ordered_selection_weight,
                  "use the uncorrected weak assignment weight");
  count->add_option("--dedup", ca.dedup, "hash|canonical")
      ->check(CLI::IsMember({"hash", "canonical"}));
  count->add_flag("--table", ca.table, "human-readable output");

  std::string cl_pattern;
  int cl_d = 1;
  bool cl_table = false;
  auto* classify = app.add_subcommand("classify", "locatability of a pattern");
  classify->add_option("--pattern", cl_pattern, "pattern file")->required();
  classify->add_option("--d", cl_d, "host degeneracy bound")->required();
  classify->add_flag("--table", cl_table, "human-readable output");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "engine vs oracle on random cases");
  verify->add_option("--seed", va.seed);
  verify->add_option("--cases", va.cases);
  verify->add_option("--max-host", va.max_host, "max host vertices");
  verify->add_option("--max-s", va.max_pattern_s);
  verify->add_option("--max-t", va.max_pattern_t);
  verify->add_flag("--ordered-selection-weight", va.ordered_selection_weight);

  std::string be_pattern;
  std::vector<int> be_sizes{10000, 20000, 40000};
  int be_d = 3;
  uint64_t be_seed = 1;
  int be_threads = default_threads();
  auto* bench = app.add_subcommand("bench", "time the pipeline on generated hosts");
  bench->add_option("--pattern", be_pattern, "pattern file")->required();
  bench->add_option("--sizes", be_sizes, "host sizes");
  bench->add_option("--d", be_d, "generator degeneracy");
  bench->add_option("--seed", be_seed);
  bench->add_option("--threads", be_threads);

  auto* gen = app.add_subcommand("gen", "generate hosts, patterns, instances");
  locount::GenSpec gen_host;
  auto* gh = gen->add_subcommand("host", "random d-degenerate host");
  gh->add_option("--n", gen_host.n);
  gh->add_option("--d", gen_host.d);
  gh->add_option("--edge-keep", gen_host.edge_keep);
  gh->add_option("--seed", gen_host.seed);
  locount::PatternGenSpec gen_pat;
  auto* gp = gen->add_subcommand("pattern", "random two-sided pattern");
  gp->add_option("--s", gen_pat.s);
  gp->add_option("--t", gen_pat.t);
  gp->add_option("--p-edge", gen_pat.p_edge);
  gp->add_option("--seed", gen_pat.seed);
  std::string red_input, red_host_out, red_pattern_out;
  int red_k = 3, red_d = 5;
  auto* gr = gen->add_subcommand("reduction", "clique-counting instance pair");
  gr->add_option("--input", red_input, "edge-list of the graph to count cliques in")
      ->required();
  gr->add_option("--k", red_k, "clique size");
  gr->add_option("--d", red_d, "target degeneracy (>= 5)");
  gr->add_option("--host-out", red_host_out, "host output file")->required();
  gr->add_option("--pattern-out", red_pattern_out, "pattern output file")->required();
  gen->require_subcommand(1);

  std::string or_graph, or_pattern, or_mode = "weak";
  int or_cliques = 0;
  auto* oracle = app.add_subcommand("oracle", "brute-force reference counts");
  oracle->add_option("--graph", or_graph, "host edge-list file")->required();
  oracle->add_option("--pattern", or_pattern, "pattern file");
  oracle->add_option("--mode", or_mode, "strong|weak")
      ->check(CLI::IsMember({"strong", "weak"}));
  oracle->add_option("--cliques", or_cliques, "count k-cliques instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(ca);
    if (classify->parsed()) return run_classify(cl_pattern, cl_d, cl_table);
    if (verify->parsed()) return run_verify(va);
    if (bench->parsed()) return run_bench(be_pattern, be_sizes, be_d, be_seed, be_threads);
    if (gen->parsed()) {
      if (gh->parsed()) {
        std::cout << locount::serialize_graph(locount::gen_random_degenerate(gen_host));
        return 0;
      }
      if (gp->parsed()) {
        std::cout << locount::serialize_pattern(locount::gen_random_pattern(gen_pat));
        return 0;
      }
      if (gr->parsed()) {
        locount::Graph input = locount::load_graph(red_input);
        auto inst = locount::gen_reduction_instance(input, red_k, red_d);
        std::ofstream hout(red_host_out);
        hout << locount::serialize_graph(inst.host);
        std::ofstream pout(red_pattern_out);
        pout << locount::serialize_pattern(inst.pattern);
        if (!hout || !pout) {
          std::cerr << "error: cannot write output files\n";
          return kExitNoFile;
        }
        return 0;
      }
    }
    if (oracle->parsed()) {
      locount::Graph g = locount::load_graph(or_graph);
      if (or_cliques > 0) {
        std::cout << locount::oracle_count_cliques(g, or_cliques) << "\n";
        return 0;
      }
      if (or_pattern.empty()) {
        std::cerr << "error: oracle needs --pattern or --cliques\n";
        return kExitUsage;
      }
      locount::Pattern p = locount::load_pattern(or_pattern);
      bool strong = or_mode == "strong";
      locount::BigCount emb = strong ? locount::oracle_count_strong(g, p)
                                     : locount::oracle_count_weak(g, p);
      // strong occurrences carry the role split, so the acting group is the
      // S-preserving one; see CountResult::aut_total
      locount::BigCount aut_h = strong ? locount::aut_S(p) : locount::aut(p);
      nlohmann::json j;
      j["mode"] = or_mode;
      j["embeddings"] = emb.str();
      j["aut"] = aut_h.str();
      j["copies"] = locount::BigCount(emb / aut_h).str();
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const locount::ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kExitSyntax;
  } catch (const locount::PatternValidationError& e) {
    std::cerr << "invalid pattern: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();
    if (msg.rfind("cannot open", 0) == 0) {
      std::cerr << "error: " << msg << "\n";
      return kExitNoFile;
    }
    std::cerr << "error: " << msg << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
