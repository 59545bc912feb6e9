#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vct/maxflow.hpp"
#include "vct/oracles.hpp"

using namespace vct;

TEST_CASE("brute force kappa on named graphs") {
  auto k4 = brute_force_kappa(complete_graph(4));
  CHECK(k4.kappa == 3);
  CHECK(!k4.cut.has_value());

  auto p3 = brute_force_kappa(path_graph(3));
  CHECK(p3.kappa == 1);
  REQUIRE(p3.cut.has_value());
  CHECK(p3.cut->left == VertexSet{0});
  CHECK(p3.cut->sep == VertexSet{1});
  CHECK(p3.cut->right == VertexSet{2});

  auto pet = brute_force_kappa(petersen_graph());
  CHECK(pet.kappa == 3);
  REQUIRE(pet.cut.has_value());
  CHECK(validate_cut(petersen_graph(), *pet.cut));
}

TEST_CASE("brute force kappa refuses big graphs") {
  CHECK_THROWS_AS(brute_force_kappa(path_graph(25)), std::invalid_argument);
  CHECK_NOTHROW(brute_force_kappa(path_graph(25), 30));
}

TEST_CASE("steiner kappa by pair minimum") {
  CHECK(brute_force_steiner_kappa(bowtie_graph(), {0, 4}) == 1);
  CHECK(brute_force_steiner_kappa(complete_graph(4), {0, 1, 2}) == 3);
  CHECK(brute_force_steiner_kappa(path_graph(4), {0}) == 3);  // |T| <= 1: n-1
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gnp_connected(12, 0.3, seed);
    VertexSet t{0, 3, 7, 11};
    int direct = brute_force_steiner_kappa(g, t);
    int via_flows = g.n() - 1;
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = i + 1; j < t.size(); ++j)
        via_flows = std::min(via_flows, kappa_pair(g, t[i], t[j]));
    CHECK(direct == via_flows);
  }
}

TEST_CASE("allpairs baseline on named graphs") {
  CHECK(kappa_baseline_allpairs(cycle_graph(5)) == 2);
  CHECK(kappa_baseline_allpairs(complete_graph(5)) == 4);
  CHECK(kappa_baseline_allpairs(petersen_graph()) == 3);
}

TEST_CASE("oracle agreement across densities") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    double p = 0.15 + 0.1 * (seed % 7);
    Graph g = gnp_graph(9, p, seed);
    if (g.n() < 2) continue;
    auto brute = brute_force_kappa(g);
    auto [flow_kappa, cut] = kappa_baseline_allpairs_cut(g);
    CHECK(brute.kappa == flow_kappa);
    if (cut) {
      CHECK(is_separator(g, *cut));
      CHECK(static_cast<int>(cut->size()) == flow_kappa);
    }
  }
}

TEST_CASE("disconnected graphs have kappa zero") {
  Graph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  CHECK(brute_force_kappa(g).kappa == 0);
  CHECK(kappa_baseline_allpairs(g) == 0);
  CHECK(brute_force_kappa(g).cut->sep.empty());
}

TEST_CASE("no_separator_below scans sizes") {
  CHECK(no_separator_below(petersen_graph(), 3));
  CHECK(!no_separator_below(petersen_graph(), 4));
  CHECK(no_separator_below(complete_graph(5), 4));
  CHECK(!no_separator_below(bowtie_graph(), 2));
}

TEST_CASE("planted instances realize their separator") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto inst = planted_cut_instance(16, 3, 3, 0.7, seed);
    CHECK(validate_cut(inst.graph, inst.cut));
    CHECK(is_separator(inst.graph, inst.cut.sep));
    CHECK(brute_force_kappa(inst.graph).kappa == 3);
  }
}
