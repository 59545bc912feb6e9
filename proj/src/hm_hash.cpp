#include "vct/hm_hash.hpp"

#include <algorithm>
#include <cmath>

namespace vct {

int ceil_log2(long long x) {
  if (x < 1) throw std::invalid_argument("ceil_log2: x must be positive");
  int bits = 0;
  while ((1LL << bits) < x) ++bits;
  return bits;
}

std::vector<long long> first_primes(int count) {
  if (count < 1) throw std::invalid_argument("first_primes: count must be >= 1");
  // The l-th prime is below l(ln l + ln ln l) for l >= 6; sieve with headroom
  // and extend on shortfall.
  long long bound = static_cast<long long>(2.0 * count * std::log(count + 2.0)) + 16;
  std::vector<long long> primes;
  while (true) {
    primes.clear();
    std::vector<char> composite(static_cast<size_t>(bound) + 1, 0);
    for (long long i = 2; i <= bound; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      if (static_cast<int>(primes.size()) == count) return primes;
      for (long long j = i * i; j <= bound; j += i) composite[j] = 1;
    }
    bound *= 2;
  }
}

HMHashFamily build_hm_family(long long domain, int miss_size, int hit_size) {
  if (domain < 1) throw std::invalid_argument("build_hm_family: domain must be >= 1");
  if (hit_size > miss_size)
    throw std::invalid_argument("build_hm_family: requires b <= a");
  if (hit_size < 1) throw std::invalid_argument("build_hm_family: b must be >= 1");

  HMHashFamily family;
  family.domain = domain;
  family.miss_size = miss_size;
  family.hit_size = hit_size;
  int l = 1 + miss_size * hit_size * ceil_log2(domain);
  family.primes = first_primes(l);
  family.alphabet = family.primes.back();
  family.min_support = domain;
  for (long long p : family.primes) {
    // Residue classes j < min(p, N) are nonempty; the smallest holds ⌊N/p⌋
    // elements (or exactly one when p >= N).
    long long smallest = p >= domain ? 1 : domain / p;
    family.min_support = std::min(family.min_support, smallest);
  }
  return family;
}

bool hm_family_separates_all(const HMHashFamily& family) {
  const long long n = family.domain;
  const int a = family.miss_size;
  // b == 1 in every use of this checker; keeping it general costs another
  // subset loop nobody needs.
  if (family.hit_size != 1)
    throw std::invalid_argument("hm_family_separates_all: only b = 1 supported");
  if (a >= n) return true;  // no disjoint (A, B) with |A| = a, |B| = 1 exists

  std::vector<int> pick(a);
  for (long long y = 0; y < n; ++y) {
    // Enumerate A of size exactly a from [n] \ {y}; separating A implies
    // separating every subset of it.
    std::vector<long long> pool;
    pool.reserve(n - 1);
    for (long long x = 0; x < n; ++x)
      if (x != y) pool.push_back(x);
    for (int i = 0; i < a; ++i) pick[i] = i;
    while (true) {
      bool separated = false;
      for (long long p : family.primes) {
        long long hy = y % p;
        bool miss = true;
        for (int i = 0; i < a && miss; ++i) miss = pool[pick[i]] % p != hy;
        if (miss) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
      int i = a - 1;
      while (i >= 0 && pick[i] == static_cast<int>(pool.size()) - a + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < a; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

TerminalFamily build_terminal_family(const VertexSet& terminals, int beta, FamilyMode mode) {
  const long long t = static_cast<long long>(terminals.size());
  if (beta < 2) throw std::invalid_argument("build_terminal_family: beta must be >= 2");
  if (t < 2) throw std::invalid_argument("build_terminal_family: need at least 2 terminals");

  if (mode == FamilyMode::Auto) {
    long long lg = ceil_log2(t);
    mode = (t < 200LL * beta * lg * lg) ? FamilyMode::AllPairs : FamilyMode::HashPreimages;
  }

  TerminalFamily out;
  out.mode = mode;
  if (mode == FamilyMode::AllPairs) {
    out.size_bound = t * (t - 1) / 2;
    out.subsets.reserve(static_cast<size_t>(out.size_bound));
    for (size_t i = 0; i < terminals.size(); ++i)
      for (size_t j = i + 1; j < terminals.size(); ++j)
        out.subsets.push_back({terminals[i], terminals[j]});
    return out;
  }

  HMHashFamily hashes = build_hm_family(t, beta - 1, 1);
  out.size_bound = static_cast<long long>(hashes.primes.size()) * hashes.alphabet;
  for (long long p : hashes.primes) {
    std::vector<VertexSet> buckets(static_cast<size_t>(std::min<long long>(p, t)));
    for (long long i = 0; i < t; ++i) buckets[i % p].push_back(terminals[i]);
    for (auto& bucket : buckets)
      if (!bucket.empty()) out.subsets.push_back(std::move(bucket));
  }
  return out;
}

}  // namespace vct
