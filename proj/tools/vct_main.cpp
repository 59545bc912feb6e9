#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vct/approx.hpp"
#include "vct/bench.hpp"
#include "vct/generators.hpp"
#include "vct/oracles.hpp"
#include "vct/terminal_reduction.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInvariant = 3;

struct Options {
  bool json = false;
  int threads = 1;
};

vct::VertexSet read_terminal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vct::parse_error("cannot open " + path);
  std::vector<int> ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    try {
      ids.push_back(std::stoi(line.substr(start)));
    } catch (const std::exception&) {
      throw vct::parse_error("expected a vertex id", line_no);
    }
  }
  return vct::normalized(std::move(ids));
}

// Emitted separators re-verify before printing; a failure here is exit 3.
void verify_emitted(const vct::Graph& g, const vct::VertexSet& sep) {
  if (!vct::is_separator(g, sep))
    throw vct::invariant_error("result failed separator re-validation");
}

void emit(const Options& opts, json machine, const std::string& human) {
  if (opts.json) {
    machine["exit"] = 0;
    std::cout << machine.dump() << '\n';
  } else {
    std::cout << human << '\n';
  }
}

json ledger_json(const vct::LedgerSnapshot& s) {
  return json{{"calls", s.calls},
              {"instance_nodes", s.instance_nodes},
              {"instance_edges", s.instance_edges}};
}

std::string join_ids(const vct::VertexSet& ids) {
  std::ostringstream out;
  for (size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
  return out.str();
}

vct::Ratio ratio_flag(double value) {
  return vct::Ratio{static_cast<long long>(value * 1e9 + 0.5), 1000000000LL};
}

int cmd_kappa(const Options& opts, const std::string& graph_path, bool exact) {
  vct::Graph g = vct::load_graph_file(graph_path);
  json out{{"command", "kappa"}, {"graph", graph_path}};
  if (exact) {
    auto res = vct::brute_force_kappa(g);
    out["kappa"] = res.kappa;
    std::ostringstream human;
    human << "kappa = " << res.kappa;
    if (res.cut) {
      verify_emitted(g, res.cut->sep);
      out["separator"] = res.cut->sep;
      human << "  separator: [" << join_ids(res.cut->sep) << "]";
    }
    emit(opts, out, human.str());
    return kExitOk;
  }
  vct::FlowLedger ledger;
  auto [kappa, cut] = vct::kappa_baseline_allpairs_cut(g, &ledger);
  out["kappa"] = kappa;
  out["ledger"] = ledger_json(ledger.snapshot());
  std::ostringstream human;
  human << "kappa = " << kappa;
  if (cut) {
    verify_emitted(g, *cut);
    out["separator"] = *cut;
    human << "  separator: [" << join_ids(*cut) << "]";
  } else {
    human << "  (complete graph)";
  }
  emit(opts, out, human.str());
  return kExitOk;
}

int cmd_check_k(const Options& opts, const std::string& graph_path, int k, double phi,
                double phibar, const std::string& finder) {
  vct::Graph g = vct::load_graph_file(graph_path);
  vct::ReduceConfig cfg;
  cfg.threads = opts.threads;
  auto owned = vct::make_finder(finder);
  cfg.finder = owned.get();
  if (phi > 0) cfg.phi = ratio_flag(phi);
  if (phibar > 0) cfg.phibar = ratio_flag(phibar);
  auto res = vct::check_k_connectivity(g, k, cfg);
  json out{{"command", "check-k"},
           {"graph", graph_path},
           {"k", k},
           {"rounds", res.rounds},
           {"ledger", ledger_json(res.ledger)}};
  std::ostringstream human;
  if (res.k_connected) {
    out["outcome"] = "k-connected";
    human << "k-connected (k = " << k << ")";
  } else {
    verify_emitted(g, res.separator);
    out["outcome"] = "separator";
    out["separator"] = res.separator;
    human << "separator of size " << res.separator.size() << ": [" << join_ids(res.separator)
          << "]";
    if (res.separator.empty()) human << " (graph is disconnected, kappa = 0)";
  }
  auto snap = res.ledger;
  human << "\nflow calls: " << snap.calls << ", total instance edges: " << snap.instance_edges
        << ", total instance nodes: " << snap.instance_nodes;
  emit(opts, out, human.str());
  return kExitOk;
}

int cmd_approx(const Options& opts, const std::string& graph_path, double eps) {
  vct::Graph g = vct::load_graph_file(graph_path);
  auto res = vct::approx_vertex_mincut(g, eps, nullptr, opts.threads);
  json out{{"command", "approx"}, {"graph", graph_path}, {"eps", eps}};
  std::ostringstream human;
  if (res.complete_graph) {
    out["outcome"] = "complete";
    out["kappa"] = res.kappa_complete;
    human << "complete graph, kappa = " << res.kappa_complete;
  } else {
    verify_emitted(g, res.separator);
    out["outcome"] = "separator";
    out["separator"] = res.separator;
    out["via_min_degree"] = res.via_min_degree;
    out["flow_calls"] = res.flow_calls;
    human << "separator of size " << res.separator.size() << ": [" << join_ids(res.separator)
          << "]\nflow calls: " << res.flow_calls;
  }
  emit(opts, out, human.str());
  return kExitOk;
}

int cmd_reduce(const Options& opts, const std::string& graph_path,
               const std::string& terminal_path, int k, double phi, double phibar,
               const std::string& finder) {
  vct::Graph g = vct::load_graph_file(graph_path);
  vct::VertexSet terminals = read_terminal_file(terminal_path);
  for (int t : terminals)
    if (t < 0 || t >= g.n())
      throw std::invalid_argument("terminal " + std::to_string(t) + " out of range");
  vct::ReduceConfig cfg;
  cfg.threads = opts.threads;
  auto owned = vct::make_finder(finder);
  cfg.finder = owned.get();
  if (phi > 0) cfg.phi = ratio_flag(phi);
  if (phibar > 0) cfg.phibar = ratio_flag(phibar);
  vct::FlowLedger ledger;
  cfg.ledger = &ledger;
  auto res = vct::reduce_terminal_slow(g, terminals, k, cfg);
  json out{{"command", "reduce"},
           {"graph", graph_path},
           {"k", k},
           {"ledger", ledger_json(ledger.snapshot())}};
  std::ostringstream human;
  if (res.kind == vct::ReductionOutcome::Kind::Separator) {
    verify_emitted(g, res.separator);
    out["outcome"] = "separator";
    out["separator"] = res.separator;
    human << "separator of size " << res.separator.size() << ": [" << join_ids(res.separator)
          << "]";
  } else {
    out["outcome"] = "new-terminals";
    out["new_terminals"] = res.new_terminals;
    out["halving_fallback"] = res.halving_fallback;
    human << "new terminal set of size " << res.new_terminals.size() << ": ["
          << join_ids(res.new_terminals) << "]";
    if (res.new_terminals.empty()) human << " (no Steiner cut below k)";
    if (res.halving_fallback) human << " [halving fallback fired]";
  }
  emit(opts, out, human.str());
  return kExitOk;
}

int cmd_bench(const Options& opts, const std::string& config_path, const std::string& jsonl_path,
              const std::string& csv_path) {
  std::ifstream in(config_path);
  if (!in) throw vct::parse_error("cannot open " + config_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  vct::BenchConfig config = vct::parse_bench_config(buffer.str());
  if (opts.threads > 1) config.threads = opts.threads;
  auto records = vct::run_benchmark(config);
  if (!jsonl_path.empty()) {
    std::ofstream out(jsonl_path);
    if (!out) throw vct::parse_error("cannot write " + jsonl_path);
    out << vct::to_json_lines(records);
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw vct::parse_error("cannot write " + csv_path);
    out << vct::to_csv(records);
  }
  if (jsonl_path.empty() && csv_path.empty()) std::cout << vct::to_json_lines(records);
  if (opts.json && !(jsonl_path.empty() && csv_path.empty()))
    std::cout << json{{"command", "bench"}, {"records", records.size()}}.dump() << '\n';
  else if (!jsonl_path.empty() || !csv_path.empty())
    std::cout << records.size() << " records written\n";
  return kExitOk;
}

int cmd_gen(const std::string& type, const std::string& out_path, int n, double p, int left,
            int sep, int clique, int bridge, int side, int half_degree, std::uint64_t seed) {
  vct::Graph g = [&] {
    if (type == "path") return vct::path_graph(n);
    if (type == "cycle") return vct::cycle_graph(n);
    if (type == "complete") return vct::complete_graph(n);
    if (type == "star") return vct::star_graph(n - 1);
    if (type == "bowtie") return vct::bowtie_graph();
    if (type == "petersen") return vct::petersen_graph();
    if (type == "gnp") return vct::gnp_connected(n, p, seed);
    if (type == "planted") return vct::planted_cut_instance(n, left, sep, p, seed).graph;
    if (type == "barbell") return vct::barbell_graph(clique, bridge);
    if (type == "circulant-barbell") return vct::circulant_barbell(side, half_degree, bridge);
    throw std::invalid_argument("unknown generator type \"" + type + "\"");
  }();
  std::ofstream out(out_path);
  if (!out) throw vct::parse_error("cannot write " + out_path);
  out << vct::serialize_edge_list(g);
  std::cout << "wrote " << out_path << " (n=" << g.n() << ", m=" << g.m() << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex connectivity toolkit"};
  app.require_subcommand(1);
  Options opts;
  app.add_flag("--json", opts.json, "machine-readable JSON output");
  app.add_option("--threads", opts.threads, "parallelism cap")->default_val(1);

  auto* kappa = app.add_subcommand("kappa", "exact vertex connectivity via an oracle");
  std::string kappa_graph;
  bool kappa_exact = false, kappa_allpairs = false;
  kappa->add_option("graph", kappa_graph, "graph file")->required();
  kappa->add_flag("--exact", kappa_exact, "subset-enumeration oracle (small n only)");
  kappa->add_flag("--allpairs", kappa_allpairs, "all-pairs max-flow oracle (default)");

  auto* check = app.add_subcommand("check-k", "k-vertex-connectivity check");
  std::string check_graph, check_finder = "heuristic";
  int check_k = 1;
  double check_phi = 0, check_phibar = 0;
  check->add_option("graph", check_graph)->required();
  check->add_option("k", check_k)->required()->check(CLI::PositiveNumber);
  check->add_option("--phi", check_phi, "terminal expansion parameter");
  check->add_option("--phibar", check_phibar, "sparse-cut threshold (> phi)");
  check->add_option("--finder", check_finder, "sparse cut finder: brute|heuristic|none");

  auto* approx = app.add_subcommand("approx", "(1+eps)-approximate minimum vertex cut");
  std::string approx_graph;
  double approx_eps = 0.5;
  approx->add_option("graph", approx_graph)->required();
  approx->add_option("eps", approx_eps)->required()->check(CLI::Range(1e-9, 1.0));

  auto* reduce = app.add_subcommand("reduce", "one terminal-reduction round");
  std::string reduce_graph, reduce_terms, reduce_finder = "heuristic";
  int reduce_k = 1;
  double reduce_phi = 0, reduce_phibar = 0;
  reduce->add_option("graph", reduce_graph)->required();
  reduce->add_option("terminals", reduce_terms, "file with one vertex id per line")->required();
  reduce->add_option("k", reduce_k)->required()->check(CLI::PositiveNumber);
  reduce->add_option("--phi", reduce_phi);
  reduce->add_option("--phibar", reduce_phibar);
  reduce->add_option("--finder", reduce_finder);

  auto* bench = app.add_subcommand("bench", "run a benchmark suite from a JSON config");
  std::string bench_config, bench_jsonl, bench_csv;
  bench->add_option("config", bench_config)->required();
  bench->add_option("--jsonl", bench_jsonl, "write JSON-lines records here");
  bench->add_option("--csv", bench_csv, "write CSV records here");

  auto* gen = app.add_subcommand("gen", "write a generated graph to a file");
  std::string gen_type, gen_out;
  int gen_n = 10, gen_left = 2, gen_sep = 3, gen_clique = 20, gen_bridge = 3, gen_side = 50,
      gen_half_degree = 6;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  gen->add_option("--type", gen_type)->required();
  gen->add_option("--out", gen_out)->required();
  gen->add_option("--n", gen_n);
  gen->add_option("--p", gen_p);
  gen->add_option("--left", gen_left);
  gen->add_option("--sep", gen_sep);
  gen->add_option("--clique", gen_clique);
  gen->add_option("--bridge", gen_bridge);
  gen->add_option("--side", gen_side);
  gen->add_option("--half-degree", gen_half_degree);
  gen->add_option("--seed", gen_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (kappa->parsed()) {
      if (kappa_exact && kappa_allpairs)
        throw std::invalid_argument("--exact and --allpairs are mutually exclusive");
      return cmd_kappa(opts, kappa_graph, kappa_exact);
    }
    if (check->parsed())
      return cmd_check_k(opts, check_graph, check_k, check_phi, check_phibar, check_finder);
    if (approx->parsed()) return cmd_approx(opts, approx_graph, approx_eps);
    if (reduce->parsed())
      return cmd_reduce(opts, reduce_graph, reduce_terms, reduce_k, reduce_phi, reduce_phibar,
                        reduce_finder);
    if (bench->parsed()) return cmd_bench(opts, bench_config, bench_jsonl, bench_csv);
    if (gen->parsed())
      return cmd_gen(gen_type, gen_out, gen_n, gen_p, gen_left, gen_sep, gen_clique, gen_bridge,
                     gen_side, gen_half_degree, gen_seed);
  } catch (const vct::invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const vct::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
