#pragma once

#include <cstdint>

#include "vct/graph.hpp"

namespace vct {

/// ⌈log₂ x⌉ for x ≥ 1; log means ⌈log₂⌉ throughout this module.
int ceil_log2(long long x);

/// The first `count` primes in increasing order (incremental sieve).
std::vector<long long> first_primes(int count);

/// Prime-modulus hit-and-miss family over [0, domain): the hashes are
/// h_p(x) = x mod p over the first 1 + a*b*⌈log₂ N⌉ primes. For every
/// disjoint A, B ⊆ [N] with |A| ≤ a, |B| ≤ b some h_p maps all of B away
/// from all of A; every nonempty residue class has at least min_support
/// elements.
struct HMHashFamily {
  long long domain = 0;    // N
  int miss_size = 0;       // a
  int hit_size = 0;        // b
  std::vector<long long> primes;
  long long alphabet = 0;     // q: largest prime in the family
  long long min_support = 0;  // s: smallest nonempty residue class over all primes
};

HMHashFamily build_hm_family(long long domain, int miss_size, int hit_size);

/// Exhaustive hit-and-miss check (all |A| = a, |B| = b disjoint pairs);
/// intended for small domains in tests.
bool hm_family_separates_all(const HMHashFamily& family);

enum class FamilyMode { Auto, AllPairs, HashPreimages };

/// Splitter family over a terminal set: every (T,β)-unbalanced cut with
/// terminals on both outer sides isolates some member.
struct TerminalFamily {
  FamilyMode mode = FamilyMode::AllPairs;  // resolved mode
  std::vector<VertexSet> subsets;
  long long size_bound = 0;  // l*q in hash mode, t(t-1)/2 in all-pairs mode
};

/// Auto mode follows the t < 200·β·⌈log₂t⌉² rule: below it all 2-subsets are
/// emitted, above it the hash preimages {terminals whose sorted index ≡ j
/// (mod p)} with empty preimages dropped. The explicit modes override the
/// rule (used by stress tests that exercise hash mode below the threshold).
TerminalFamily build_terminal_family(const VertexSet& terminals, int beta,
                                     FamilyMode mode = FamilyMode::Auto);

}  // namespace vct
