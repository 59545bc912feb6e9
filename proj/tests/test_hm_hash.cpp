#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vct/hm_hash.hpp"

using namespace vct;

TEST_CASE("first primes") {
  CHECK(first_primes(4) == std::vector<long long>{2, 3, 5, 7});
  CHECK(first_primes(1) == std::vector<long long>{2});
  CHECK(first_primes(10) == std::vector<long long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  auto many = first_primes(1000);
  CHECK(many.size() == 1000);
  CHECK(many.back() == 7919);
}

TEST_CASE("ceil_log2") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(16) == 4);
  CHECK(ceil_log2(17) == 5);
}

TEST_CASE("hm family shape follows the formula") {
  auto fam = build_hm_family(16, 2, 1);
  CHECK(fam.primes.size() == 9);  // 1 + 2*1*4
  CHECK(fam.primes.front() == 2);
  CHECK(fam.primes.back() == 23);
  CHECK(fam.alphabet == 23);

  CHECK_THROWS_AS(build_hm_family(16, 1, 2), std::invalid_argument);  // b > a
  CHECK_THROWS_AS(build_hm_family(0, 1, 1), std::invalid_argument);
}

TEST_CASE("hm family separates singletons exhaustively at N=8") {
  auto fam = build_hm_family(8, 1, 1);
  CHECK(fam.primes.size() == 4);  // 1 + 3
  CHECK(hm_family_separates_all(fam));
}

TEST_CASE("some family member separates every concrete pair at N=1024") {
  auto fam = build_hm_family(1024, 3, 1);
  std::vector<long long> a{5, 17};
  long long b = 3;
  bool found = false;
  for (long long p : fam.primes) {
    bool miss = true;
    for (long long x : a) miss = miss && (x % p != b % p);
    if (miss) {
      found = true;
      break;
    }
  }
  CHECK(found);
}

TEST_CASE("exhaustive hit and miss for small domains") {
  for (long long n : {2, 3, 5, 9, 16, 25, 32}) {
    for (int a = 1; a <= 3; ++a) {
      auto fam = build_hm_family(n, a, 1);
      CHECK(hm_family_separates_all(fam));
    }
  }
}

TEST_CASE("min support matches direct counting") {
  for (long long n : {7LL, 30LL, 100LL, 500LL}) {
    auto fam = build_hm_family(n, 2, 1);
    long long direct = n;
    for (long long p : fam.primes) {
      std::vector<long long> count(static_cast<size_t>(p), 0);
      for (long long x = 0; x < n; ++x) ++count[x % p];
      for (long long c : count)
        if (c > 0) direct = std::min(direct, c);
    }
    CHECK(fam.min_support == direct);
  }
}

TEST_CASE("terminal family mode selection") {
  auto tiny = build_terminal_family({0, 1, 2}, 2);
  CHECK(tiny.mode == FamilyMode::AllPairs);
  REQUIRE(tiny.subsets.size() == 3);
  CHECK(tiny.subsets[0] == VertexSet{0, 1});
  CHECK(tiny.subsets[1] == VertexSet{0, 2});
  CHECK(tiny.subsets[2] == VertexSet{1, 2});

  VertexSet ten;
  for (int i = 0; i < 10; ++i) ten.push_back(3 * i);
  auto mid = build_terminal_family(ten, 3);
  CHECK(mid.mode == FamilyMode::AllPairs);  // 10 < 200*3*16
  CHECK(static_cast<long long>(mid.subsets.size()) == mid.size_bound);

  CHECK_THROWS_AS(build_terminal_family({0, 1, 2}, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_terminal_family({0}, 2), std::invalid_argument);
}

TEST_CASE("hash mode isolates a lone terminal in a 2^16 universe") {
  const int t = 1 << 16;
  VertexSet terminals(t);
  for (int i = 0; i < t; ++i) terminals[i] = i;
  auto fam = build_terminal_family(terminals, 2, FamilyMode::HashPreimages);
  CHECK(fam.mode == FamilyMode::HashPreimages);
  // planted cut with |T ∩ (L∪S)| = 1: a lone terminal in L, none in S
  const int lone = 31337;
  bool isolated = false;
  for (const auto& sub : fam.subsets) {
    if (sub.size() >= 2 && set_contains(sub, lone)) {
      isolated = true;  // every other member lies on the far side
      break;
    }
  }
  CHECK(isolated);
}

TEST_CASE("hash mode isolates planted unbalanced splits") {
  // Large terminal universe, hash-preimage mode forced. Plant a lone terminal
  // on the small side and check some member contains it, avoids every other
  // small-side terminal, and reaches the far side.
  const int t = 1 << 12;
  VertexSet terminals(t);
  for (int i = 0; i < t; ++i) terminals[i] = i;
  for (int beta : {2, 4, 8}) {
    auto fam = build_terminal_family(terminals, beta, FamilyMode::HashPreimages);
    CHECK(fam.mode == FamilyMode::HashPreimages);
    CHECK(static_cast<long long>(fam.subsets.size()) <= fam.size_bound);
    for (const auto& sub : fam.subsets) CHECK(sub.size() >= 2);

    std::mt19937_64 rng(7 * beta);
    for (int trial = 0; trial < 25; ++trial) {
      std::uniform_int_distribution<int> pick(0, t - 1);
      int lone = pick(rng);
      std::vector<char> in_small(t, 0);
      in_small[lone] = 1;
      for (int extra = 0; extra < beta - 2; ++extra) in_small[pick(rng)] = 1;  // S-side terminals
      bool isolated = false;
      for (const auto& sub : fam.subsets) {
        if (!set_contains(sub, lone)) continue;
        bool clean = true;
        for (int x : sub)
          if (x != lone && in_small[x]) clean = false;
        if (clean && sub.size() >= 2) {
          isolated = true;
          break;
        }
      }
      CHECK(isolated);
    }
  }
}
