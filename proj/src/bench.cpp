#include "vct/bench.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "vct/approx.hpp"
#include "vct/generators.hpp"
#include "vct/oracles.hpp"
#include "vct/parallel.hpp"
#include "vct/terminal_reduction.hpp"

namespace vct {

namespace {

using nlohmann::json;

std::string describe(const BenchInstanceSpec& s) {
  std::ostringstream out;
  out.precision(3);
  if (s.generator == "gnp") {
    out << "gnp(n=" << s.n << ",p=" << s.p << ")";
  } else if (s.generator == "planted") {
    out << "planted(n=" << s.n << ",l=" << s.left << ",s=" << s.sep << ",p=" << s.p << ")";
  } else if (s.generator == "barbell") {
    out << "barbell(c=" << s.clique << ",b=" << s.bridge << ")";
  } else if (s.generator == "circulant") {
    out << "circulant(n=" << s.n << ",d=" << 2 * s.offsets.size() << ")";
  } else {
    out << "circulant-barbell(side=" << s.side << ",hd=" << s.half_degree << ",b=" << s.bridge
        << ")";
  }
  return out.str();
}

}  // namespace

Graph build_bench_instance(const BenchInstanceSpec& spec, std::uint64_t seed) {
  if (spec.generator == "gnp") return gnp_connected(spec.n, spec.p, seed);
  if (spec.generator == "planted")
    return planted_cut_instance(spec.n, spec.left, spec.sep, spec.p, seed).graph;
  if (spec.generator == "barbell") return barbell_graph(spec.clique, spec.bridge);
  if (spec.generator == "circulant") return make_circulant(spec.n, spec.offsets);
  if (spec.generator == "circulant-barbell")
    return circulant_barbell(spec.side, spec.half_degree, spec.bridge);
  throw std::invalid_argument("unknown generator \"" + spec.generator + "\"");
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& config) {
  // Validate algorithm names before interleaving any work.
  for (const auto& algo : config.algorithms) {
    if (algo.name != "check-k" && algo.name != "approx" && algo.name != "kappa-allpairs" &&
        algo.name != "kappa-brute")
      throw std::invalid_argument("unknown algorithm \"" + algo.name + "\"");
    if (algo.name == "check-k") make_finder(algo.finder);  // throws on bad names
  }

  struct Job {
    const BenchInstanceSpec* spec;
    std::uint64_t seed;
    const BenchAlgoSpec* algo;
  };
  std::vector<Job> jobs;
  for (const auto& spec : config.instances)
    for (std::uint64_t seed : spec.seeds)
      for (const auto& algo : config.algorithms) jobs.push_back({&spec, seed, &algo});

  std::vector<BenchRecord> records(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), config.threads, [&](int idx) {
    const Job& job = jobs[idx];
    Graph g = build_bench_instance(*job.spec, job.seed);
    BenchRecord rec;
    rec.instance = describe(*job.spec);
    rec.algo = job.algo->name;
    rec.n = g.n();
    rec.m = g.m();
    rec.seed = job.seed;
    FlowLedger ledger;
    auto started = std::chrono::steady_clock::now();
    if (job.algo->name == "check-k") {
      rec.param = "k=" + std::to_string(job.algo->k);
      ReduceConfig cfg;
      cfg.ledger = &ledger;
      auto owned = make_finder(job.algo->finder);
      cfg.finder = owned.get();
      if (job.algo->phi > 0) cfg.phi = Ratio{static_cast<long long>(job.algo->phi * 1e9), 1000000000LL};
      if (job.algo->phibar > 0)
        cfg.phibar = Ratio{static_cast<long long>(job.algo->phibar * 1e9), 1000000000LL};
      auto res = check_k_connectivity(g, job.algo->k, cfg);
      rec.result_size = res.k_connected ? -1 : static_cast<long long>(res.separator.size());
    } else if (job.algo->name == "approx") {
      std::ostringstream p;
      p << "eps=" << job.algo->eps;
      rec.param = p.str();
      auto res = approx_vertex_mincut(g, job.algo->eps, &ledger);
      rec.result_size = res.complete_graph ? res.kappa_complete
                                           : static_cast<long long>(res.separator.size());
    } else if (job.algo->name == "kappa-allpairs") {
      rec.result_size = kappa_baseline_allpairs(g, &ledger);
    } else {
      rec.result_size = brute_force_kappa(g).kappa;
    }
    auto stopped = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration<double, std::milli>(stopped - started).count();
    auto snap = ledger.snapshot();
    rec.flow_calls = snap.calls;
    rec.instance_edges = snap.instance_edges;
    records[idx] = std::move(rec);
  });
  return records;
}

BenchConfig parse_bench_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bench config: ") + e.what());
  }
  BenchConfig config;
  try {
    config.threads = doc.value("threads", 1);
    for (const auto& inst : doc.value("instances", json::array())) {
      BenchInstanceSpec spec;
      spec.generator = inst.at("generator").get<std::string>();
      spec.n = inst.value("n", 0);
      spec.p = inst.value("p", 0.5);
      spec.left = inst.value("left", 2);
      spec.sep = inst.value("sep", 3);
      spec.clique = inst.value("clique", 20);
      spec.bridge = inst.value("bridge", 3);
      spec.side = inst.value("side", 50);
      spec.half_degree = inst.value("half_degree", 6);
      if (inst.contains("offsets")) spec.offsets = inst["offsets"].get<std::vector<int>>();
      if (inst.contains("seeds")) spec.seeds = inst["seeds"].get<std::vector<std::uint64_t>>();
      config.instances.push_back(std::move(spec));
    }
    for (const auto& alg : doc.value("algorithms", json::array())) {
      BenchAlgoSpec spec;
      spec.name = alg.at("name").get<std::string>();
      spec.k = alg.value("k", 3);
      spec.eps = alg.value("eps", 0.5);
      spec.finder = alg.value("finder", "heuristic");
      spec.phi = alg.value("phi", 0.0);
      spec.phibar = alg.value("phibar", 0.0);
      config.algorithms.push_back(std::move(spec));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bench config: ") + e.what());
  }
  return config;
}

std::string to_json_lines(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) {
    json line{{"schema", r.schema},       {"instance", r.instance},
              {"algo", r.algo},           {"n", r.n},
              {"m", r.m},                 {"param", r.param},
              {"seed", r.seed},           {"result_size", r.result_size},
              {"flow_calls", r.flow_calls}, {"instance_edges", r.instance_edges},
              {"wall_ms", r.wall_ms}};
    out << line.dump() << '\n';
  }
  return out.str();
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "instance,algo,n,m,param,result_size,flow_calls,instance_edges,wall_ms\n";
  for (const auto& r : records) {
    out << r.instance << ',' << r.algo << ',' << r.n << ',' << r.m << ',' << r.param << ','
        << r.result_size << ',' << r.flow_calls << ',' << r.instance_edges << ',' << r.wall_ms
        << '\n';
  }
  return out.str();
}

}  // namespace vct
