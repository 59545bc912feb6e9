#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vct/graph.hpp"

namespace vct {

struct BenchRecord {
  int schema = 1;
  std::string instance;  // generator descriptor, e.g. "gnp(n=30,p=0.30)"
  std::string algo;
  int n = 0;
  long long m = 0;
  std::string param;  // "k=4", "eps=0.5", or ""
  std::uint64_t seed = 0;
  long long result_size = 0;  // separator size or κ; -1 for "k-connected"
  long long flow_calls = 0;
  long long instance_edges = 0;
  double wall_ms = 0.0;
};

struct BenchInstanceSpec {
  std::string generator;  // gnp | planted | barbell | circulant | circulant-barbell
  int n = 0;
  double p = 0.5;
  int left = 2, sep = 3;           // planted
  int clique = 20, bridge = 3;     // barbell
  int side = 50, half_degree = 6;  // circulant-barbell
  std::vector<int> offsets;        // circulant
  std::vector<std::uint64_t> seeds{0};
};

struct BenchAlgoSpec {
  std::string name;  // check-k | approx | kappa-allpairs | kappa-brute
  int k = 3;
  double eps = 0.5;
  std::string finder = "heuristic";
  double phi = 0.0;  // 0 = library default
  double phibar = 0.0;
};

struct BenchConfig {
  std::vector<BenchInstanceSpec> instances;
  std::vector<BenchAlgoSpec> algorithms;
  int threads = 1;
};

/// One record per (instance spec, seed, algorithm), in config order.
/// Deterministic given the seeds, modulo the wall_ms field.
std::vector<BenchRecord> run_benchmark(const BenchConfig& config);

/// Throws std::invalid_argument on malformed or unknown config entries.
BenchConfig parse_bench_config(const std::string& json_text);

Graph build_bench_instance(const BenchInstanceSpec& spec, std::uint64_t seed);

std::string to_json_lines(const std::vector<BenchRecord>& records);
std::string to_csv(const std::vector<BenchRecord>& records);

}  // namespace vct
