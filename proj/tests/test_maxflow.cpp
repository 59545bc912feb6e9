#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vct/maxflow.hpp"
#include "vct/oracles.hpp"

using namespace vct;

namespace {

bool separates_sets(const Graph& g, const VertexSet& sep, const VertexSet& a,
                    const VertexSet& b) {
  std::vector<char> removed(g.n(), 0);
  for (int v : sep) removed[v] = 1;
  auto [label, count] = components_after_removal(g, removed);
  (void)count;
  for (int x : a)
    for (int y : b)
      if (label[x] == label[y]) return false;
  return true;
}

// Enumeration oracle for multi-set separators.
int brute_multi_separator(const Graph& g, const VertexSet& a, const VertexSet& b) {
  VertexSet excluded = set_union(a, b);
  std::vector<int> pool;
  for (int v = 0; v < g.n(); ++v)
    if (!set_contains(excluded, v)) pool.push_back(v);
  for (int size = 0; size <= static_cast<int>(pool.size()); ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet subset;
      for (int i : idx) subset.push_back(pool[i]);
      if (separates_sets(g, subset, a, b)) return size;
      int i = size - 1;
      while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return static_cast<int>(pool.size());
}

}  // namespace

TEST_CASE("path and cycle separators") {
  Graph p5 = path_graph(5);
  auto res = min_vertex_separator(p5, {0}, {4});
  CHECK(res.flow == 1);
  CHECK(res.separator.size() == 1);
  CHECK(separates_sets(p5, res.separator, {0}, {4}));

  Graph c4 = cycle_graph(4);
  auto c4res = min_vertex_separator(c4, {0}, {2});
  CHECK(c4res.separator == VertexSet{1, 3});
}

TEST_CASE("petersen 0-7 needs three vertices") {
  Graph pet = petersen_graph();
  // oracle: exhaustive enumeration confirms no separator of size <= 2 works
  CHECK(brute_force_pair_kappa(pet, 0, 7) == 3);
  auto res = min_vertex_separator(pet, {0}, {7});
  CHECK(res.flow == 3);
  CHECK(separates_sets(pet, res.separator, {0}, {7}));
  CHECK(kappa_pair(pet, 0, 7) == 3);
}

TEST_CASE("kappa_pair conventions") {
  CHECK(kappa_pair(complete_graph(4), 0, 1) == 3);  // adjacent: n-1
  CHECK(kappa_pair(path_graph(3), 0, 2) == 1);
  CHECK_THROWS_AS(kappa_pair(path_graph(3), 1, 1), std::invalid_argument);
}

TEST_CASE("adjacent source and sink sets are rejected with a witness") {
  Graph p3 = path_graph(3);
  try {
    min_vertex_separator(p3, {0}, {1});
    CHECK(false);
  } catch (const no_separator_error& e) {
    auto [u, v] = e.witness_edge();
    CHECK(((u == 0 && v == 1) || (u == 1 && v == 0)));
  }
  CHECK_THROWS_AS(min_vertex_separator(p3, {}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(min_vertex_separator(p3, {0}, {0}), std::invalid_argument);
}

TEST_CASE("pair flows agree with enumeration on all small graphs") {
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : testutil::all_connected_graphs(n)) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          CHECK(kappa_pair(g, u, v) == brute_force_pair_kappa(g, u, v));
        }
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gnp_connected(8, 0.25 + 0.05 * (seed % 8), seed);
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        if (!g.has_edge(u, v)) CHECK(kappa_pair(g, u, v) == brute_force_pair_kappa(g, u, v));
  }
}

TEST_CASE("multi-source multi-sink agrees with enumeration") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = gnp_connected(9, 0.3, seed);
    VertexSet a{0, 1}, b{g.n() - 2, g.n() - 1};
    bool adjacent = false;
    for (int x : a)
      for (int y : b)
        if (g.has_edge(x, y)) adjacent = true;
    if (adjacent) continue;
    auto res = min_vertex_separator(g, a, b);
    CHECK(res.flow == brute_multi_separator(g, a, b));
    CHECK(set_intersection(res.separator, set_union(a, b)).empty());
    CHECK(separates_sets(g, res.separator, a, b));
  }
}

TEST_CASE("flow cap early exit matches the uncapped truth") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = gnp_connected(9, 0.4, seed);
    for (int u = 0; u < g.n(); ++u) {
      for (int v = u + 1; v < g.n(); ++v) {
        if (g.has_edge(u, v)) continue;
        int truth = min_vertex_separator(g, {u}, {v}).flow;
        for (int cap = 0; cap <= truth + 1; ++cap) {
          auto res = min_vertex_separator(g, {u}, {v}, cap);
          CHECK(res.reached_cap == (truth >= cap));
          if (!res.reached_cap) CHECK(res.flow == truth);
        }
      }
    }
  }
}

TEST_CASE("disconnected terminals need no separator") {
  Graph g(5, {{0, 1}, {2, 3}, {3, 4}});
  auto res = min_vertex_separator(g, {0}, {4});
  CHECK(res.flow == 0);
  CHECK(res.separator.empty());
}

TEST_CASE("ledger counts calls and sizes") {
  FlowLedger ledger;
  Graph p5 = path_graph(5);
  min_vertex_separator(p5, {0}, {4}, std::nullopt, &ledger);
  auto one = ledger.snapshot();
  CHECK(one.calls == 1);
  CHECK(one.instance_edges > 0);
  CHECK(one.instance_nodes > 0);
  min_vertex_separator(p5, {0}, {4}, std::nullopt, &ledger);
  auto two = ledger.snapshot();
  CHECK(two.calls == 2);
  CHECK(two.instance_edges == 2 * one.instance_edges);
  ledger.reset();
  CHECK(ledger.snapshot().calls == 0);

  FlowLedger other;
  other.add(two);
  CHECK(other.snapshot().instance_edges == two.instance_edges);
}
