#include "vct/generators.hpp"

#include <algorithm>
#include <random>

#include "vct/oracles.hpp"

namespace vct {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph bowtie_graph() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges, /*dedupe=*/true);
}

Graph make_circulant(int n, const std::vector<int>& offsets) {
  std::vector<std::pair<int, int>> edges;
  for (int o : offsets) {
    if (o < 1 || 2 * o > n)
      throw std::invalid_argument("circulant offset " + std::to_string(o) + " outside [1, n/2]");
    for (int i = 0; i < n; ++i) {
      int j = (i + o) % n;
      edges.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  // each edge appears once per generating (i, o), twice when 2o = n
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

Graph gnp_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph gnp_connected(int n, double p, std::uint64_t seed) {
  for (std::uint64_t attempt = 0; attempt < 10000; ++attempt) {
    Graph g = gnp_graph(n, p, seed + attempt * 0x9e3779b97f4a7c15ULL);
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("gnp_connected: no connected sample found (p too small?)");
}

Graph barbell_graph(int clique_size, int bridge_size) {
  const int c = clique_size, b = bridge_size;
  const int n = 2 * c + b;
  std::vector<std::pair<int, int>> edges;
  for (int side = 0; side < 2; ++side) {
    int base = side * c;
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j) edges.emplace_back(base + i, base + j);
  }
  for (int k = 0; k < b; ++k)
    for (int v = 0; v < 2 * c; ++v) edges.emplace_back(2 * c + k, v);
  return Graph(n, edges);
}

Graph circulant_barbell(int side_n, int side_half_degree, int bridge_size) {
  std::vector<int> offsets;
  for (int o = 1; o <= side_half_degree; ++o) offsets.push_back(o);
  Graph side = make_circulant(side_n, offsets);
  const int n = 2 * side_n + bridge_size;
  std::vector<std::pair<int, int>> edges;
  for (int s = 0; s < 2; ++s)
    for (const auto& [u, v] : side.edges()) edges.emplace_back(s * side_n + u, s * side_n + v);
  for (int k = 0; k < bridge_size; ++k)
    for (int v = 0; v < 2 * side_n; ++v) edges.emplace_back(2 * side_n + k, v);
  return Graph(n, edges);
}

PlantedCutInstance planted_cut_instance(int n, int left_size, int sep_size, double p,
                                        std::uint64_t seed) {
  const int l = left_size, s = sep_size;
  if (l < 1 || s < 1 || l + s + 1 >= n)
    throw std::invalid_argument("planted_cut_instance: infeasible sizes");
  for (std::uint64_t attempt = 0; attempt < 4000; ++attempt) {
    std::mt19937_64 rng(seed + attempt * 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    auto dense_block = [&](int lo, int hi) {
      for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < hi; ++j)
          if (coin(rng) < p) edges.emplace_back(i, j);
    };
    dense_block(0, l);                // L = {0..l-1}
    dense_block(l + s, n);            // R = {l+s..n-1}
    std::uniform_int_distribution<int> pick_l(0, l - 1);
    std::uniform_int_distribution<int> pick_r(l + s, n - 1);
    for (int k = l; k < l + s; ++k) {
      edges.emplace_back(k, pick_l(rng));  // every separator vertex touches both sides
      edges.emplace_back(k, pick_r(rng));
      for (int v = 0; v < l; ++v)
        if (coin(rng) < p) edges.emplace_back(k, v);
      for (int v = l + s; v < n; ++v)
        if (coin(rng) < p) edges.emplace_back(k, v);
    }
    Graph g(n, edges, /*dedupe=*/true);
    VertexSet sep;
    for (int k = l; k < l + s; ++k) sep.push_back(k);
    if (!g.is_connected()) continue;
    if (!is_separator(g, sep)) continue;
    if (!no_separator_below(g, s)) continue;
    VertexCut cut;
    for (int v = 0; v < l; ++v) cut.left.push_back(v);
    cut.sep = sep;
    for (int v = l + s; v < n; ++v) cut.right.push_back(v);
    return {std::move(g), std::move(cut)};
  }
  throw std::runtime_error("planted_cut_instance: rejection sampling exhausted");
}

}  // namespace vct
