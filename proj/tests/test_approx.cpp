#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "vct/approx.hpp"
#include "vct/bounds.hpp"
#include "vct/oracles.hpp"

using namespace vct;

namespace {

VertexSet neighborhood(const Graph& g, const VertexSet& set) {
  std::vector<char> inside(g.n(), 0), seen(g.n(), 0);
  for (int v : set) inside[v] = 1;
  VertexSet out;
  for (int v : set)
    for (int w : g.neighbors(v))
      if (!inside[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  return normalized(std::move(out));
}

// All subsets of {0..n-1} of size 1..limit, by ascending size.
template <typename Fn>
void for_each_small_subset(int n, int limit, Fn fn) {
  for (int size = 1; size <= limit; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      fn(VertexSet(idx.begin(), idx.end()));
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace

TEST_CASE("spectral lambda2 analytic values") {
  CHECK(spectral_lambda2(complete_graph(4)) == doctest::Approx(1.0 / 3).epsilon(1e-7));
  CHECK(spectral_lambda2(cycle_graph(6)) == doctest::Approx(1.0).epsilon(1e-7));  // bipartite
  // C5 random-walk spectrum: cos(2*pi*j/5); the largest nontrivial absolute
  // value is |cos(4*pi/5)| = cos(pi/5).
  CHECK(spectral_lambda2(cycle_graph(5)) == doctest::Approx(std::cos(M_PI / 5)).epsilon(1e-7));
  CHECK_THROWS_AS(spectral_lambda2(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(spectral_lambda2(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("mixing graph at n=16 certifies exhaustively") {
  auto x = build_mixing_graph(16, 4);
  CHECK(x.lambda2 < 0.9);
  CHECK(x.graph.n() == 16);
  // For every L, the largest candidate R is V minus L minus N(L); if the pair
  // clears the threshold the guarantee would demand an edge, so it must not.
  for (std::uint32_t mask = 1; mask < (1u << 16) - 1; ++mask) {
    VertexSet left;
    for (int v = 0; v < 16; ++v)
      if ((mask >> v) & 1) left.push_back(v);
    VertexSet blocked = set_union(left, neighborhood(x.graph, left));
    long long r_star = 16 - static_cast<long long>(blocked.size());
    if (r_star < 1) continue;
    CHECK(!mixing_guarantee(x, static_cast<long long>(left.size()), r_star));
  }
}

TEST_CASE("mixing graph at n=64 spot checks sampled pairs") {
  // Safety direction at the spec degree: for random L, the set beyond N(L)
  // shares no edge with L, so the certificate must never cover that pair.
  auto low = build_mixing_graph(64, 8);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> size_dist(1, 31);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> perm(64);
    for (int i = 0; i < 64; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    VertexSet left(perm.begin(), perm.begin() + size_dist(rng));
    left = normalized(std::move(left));
    VertexSet blocked = set_union(left, neighborhood(low.graph, left));
    long long r_star = 64 - static_cast<long long>(blocked.size());
    if (r_star < 1) continue;
    CHECK(!mixing_guarantee(low, static_cast<long long>(left.size()), r_star));
  }

  // Positive direction at a degree whose measured eigenvalue makes the
  // threshold reachable: sampled covered pairs must carry an edge.
  auto x = build_mixing_graph(64, 24);
  REQUIRE(x.lambda2 < 0.5);
  int above = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> perm(64);
    for (int i = 0; i < 64; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    int a = size_dist(rng), b = size_dist(rng);
    VertexSet left(perm.begin(), perm.begin() + a);
    VertexSet right(perm.begin() + a, perm.begin() + a + b);
    left = normalized(std::move(left));
    right = normalized(std::move(right));
    if (!mixing_guarantee(x, a, b)) continue;
    ++above;
    bool edge = false;
    for (int u : left)
      for (int w : right)
        if (x.graph.has_edge(u, w)) edge = true;
    CHECK(edge);
  }
  CHECK(above > 0);
}

TEST_CASE("complete fallback mixes everything") {
  auto x = build_mixing_graph(9, 4);  // n <= 2d+1
  CHECK(x.complete);
  CHECK(mixing_guarantee(x, 1, 1));
  CHECK_THROWS_AS(build_mixing_graph(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_mixing_graph(10, 2), std::invalid_argument);
}

TEST_CASE("vertex expansion formula drives certification") {
  CHECK(vertex_expansion_beta(0.05, 0.9) == doctest::Approx(1.0 / (0.05 + 0.95 * 0.81) - 1));
  CHECK(vertex_expansion_beta(0.05, 0.9) < 2.0);  // would force a degree raise
  CHECK(vertex_expansion_beta(0.05, 0.3) == doctest::Approx(1.0 / (0.05 + 0.95 * 0.09) - 1));
  CHECK(vertex_expansion_beta(0.05, 0.3) >= 2.0);  // certified at eps = 1
}

TEST_CASE("small set expander certifies combinatorially at n=24") {
  auto x = build_small_set_expander(24, 1.0);
  double alpha = small_set_alpha(1.0);
  double beta = 2.0;
  int limit = static_cast<int>(alpha * 24);
  REQUIRE(limit >= 1);
  // exhaustive over all sets up to the size bound
  for_each_small_subset(24, limit, [&](const VertexSet& set) {
    CHECK(static_cast<double>(neighborhood(x.graph, set).size()) + 1e-9 >=
          beta * static_cast<double>(set.size()));
  });
  CHECK_THROWS_AS(build_small_set_expander(2, 1.0), infeasible_expander_error);
  CHECK_THROWS_AS(build_small_set_expander(100, 0.0), std::invalid_argument);
}

TEST_CASE("contraction reaches the target size") {
  Graph c8 = cycle_graph(8);
  Graph c4 = contract_to_size(c8, 4);
  CHECK(c4.n() == 4);
  CHECK(c4.m() == 4);  // C4
  for (int i = 0; i < 4; ++i) CHECK(c4.has_edge(i, (i + 1) % 4));

  Graph same = contract_to_size(c8, 8);
  CHECK(serialize_edge_list(same) == serialize_edge_list(c8));
  CHECK_THROWS_AS(contract_to_size(c8, 9), std::invalid_argument);
}

TEST_CASE("contraction transfers vertex expansion") {
  auto x = build_small_set_expander(30, 1.0);
  // input expansion at alpha, certified by the spectral bound
  double alpha = 0.2;
  double beta_in = vertex_expansion_beta(alpha, x.lambda2);
  int in_limit = static_cast<int>(alpha * 30);
  for_each_small_subset(30, in_limit, [&](const VertexSet& set) {
    CHECK(static_cast<double>(neighborhood(x.graph, set).size()) + 1e-9 >=
          beta_in * static_cast<double>(set.size()));
  });
  // contracted graph must satisfy (alpha/ceil(rho), beta*floor(rho)/ceil(rho))
  Graph h = contract_to_size(x.graph, 20);
  double rho_floor = 1.0, rho_ceil = 2.0;  // rho = 1.5
  double alpha_out = alpha / rho_ceil;
  double beta_out = beta_in * rho_floor / rho_ceil;
  int out_limit = static_cast<int>(alpha_out * 20);
  for_each_small_subset(20, out_limit, [&](const VertexSet& set) {
    CHECK(static_cast<double>(neighborhood(h, set).size()) + 1e-9 >=
          beta_out * static_cast<double>(set.size()));
  });
}

TEST_CASE("approx on named graphs") {
  auto bow = approx_vertex_mincut(bowtie_graph(), 0.5);
  REQUIRE(!bow.complete_graph);
  CHECK(bow.separator == VertexSet{2});

  auto c6 = approx_vertex_mincut(cycle_graph(6), 1.0);
  CHECK(c6.separator.size() <= 4);  // floor((1+1)*2)
  CHECK(is_separator(cycle_graph(6), c6.separator));

  auto k5 = approx_vertex_mincut(complete_graph(5), 0.5);
  CHECK(k5.complete_graph);
  CHECK(k5.kappa_complete == 4);

  CHECK_THROWS_AS(approx_vertex_mincut(Graph(4, {{0, 1}, {2, 3}}), 0.5), std::invalid_argument);
}

TEST_CASE("approximation guarantee against oracles") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 10 + static_cast<int>(seed % 12);
    Graph g = gnp_connected(n, 0.3 + 0.05 * (seed % 5), seed);
    if (g.is_complete()) continue;
    int kappa = n <= 16 ? brute_force_kappa(g, 16).kappa : kappa_baseline_allpairs(g);
    for (double eps : {1.0, 0.5, 0.25}) {
      FlowLedger ledger;
      auto res = approx_vertex_mincut(g, eps, &ledger);
      CHECK(static_cast<double>(res.separator.size()) <=
            std::floor((1.0 + eps) * kappa) + 1e-9);
      CHECK(is_separator(g, res.separator));
      CHECK(static_cast<double>(res.flow_calls) <=
            bounds::approx_flow_calls_c * n / (eps * eps));
    }
  }
}

TEST_CASE("balanced mincut predicate") {
  Graph barbell = barbell_graph(8, 2);  // kappa = 2, min degree 9
  CHECK(mincut_sides_at_least(barbell, 2, 2.0));   // every side has a full clique
  Graph p3 = path_graph(3);
  CHECK(mincut_sides_at_least(p3, 1, 1.0));
  CHECK(!mincut_sides_at_least(p3, 1, 1.5));  // sides are singletons
}
