#pragma once

#include <optional>
#include <utility>

#include "vct/graph.hpp"

namespace vct {

/// Default vertex-count cap for subset-enumeration oracles.
inline constexpr int kBruteForceCap = 20;

struct BruteKappaResult {
  int kappa = 0;
  std::optional<VertexCut> cut;  // absent for complete graphs
};

/// Ground-truth vertex connectivity by enumerating candidate separators in
/// ascending size, lexicographic within each size. Complete graphs give
/// (n-1, no cut). Refuses graphs with n above the cap.
BruteKappaResult brute_force_kappa(const Graph& g, int cap = kBruteForceCap);

/// Smallest S ⊆ V\{u,v} separating u from v by enumeration, or n-1 when u,v
/// are adjacent. Same cap as brute_force_kappa.
int brute_force_pair_kappa(const Graph& g, int u, int v, int cap = kBruteForceCap);

/// κ(T) = min over terminal pairs of brute_force_pair_kappa; n-1 when |T| <= 1.
int brute_force_steiner_kappa(const Graph& g, const VertexSet& terminals,
                              int cap = kBruteForceCap);

class FlowLedger;

/// Exact κ via max-flow over all nonadjacent vertex pairs; n-1 for complete
/// graphs, 0 for disconnected ones. The flow-based second oracle.
int kappa_baseline_allpairs(const Graph& g, FlowLedger* ledger = nullptr);

/// Like kappa_baseline_allpairs but also returns a witnessing separator when
/// the graph is not complete.
std::pair<int, std::optional<VertexSet>> kappa_baseline_allpairs_cut(const Graph& g,
                                                                     FlowLedger* ledger = nullptr);

/// Confirms by enumeration that no separator of size < limit exists. Usable
/// above the brute cap when limit is small: cost is O(n^limit) separator
/// checks, not 2^n.
bool no_separator_below(const Graph& g, int limit);

}  // namespace vct
