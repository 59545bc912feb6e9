#include "vct/isolating.hpp"

#include <algorithm>

#include "vct/hm_hash.hpp"

namespace vct {

VertexSet maximal_independent_set(const Graph& g, const VertexSet& candidates) {
  if (candidates.empty())
    throw std::invalid_argument("maximal_independent_set: empty candidate set");
  VertexSet chosen;
  std::vector<char> blocked(g.n(), 0);
  for (int v : candidates) {
    if (blocked[v]) continue;
    chosen.push_back(v);
    for (int w : g.neighbors(v)) blocked[w] = 1;
  }
  return chosen;
}

IsolatingCutsResult isolating_vertex_cuts(const Graph& g, const VertexSet& independent,
                                          FlowLedger* ledger, std::optional<int> cap,
                                          bool naive) {
  const auto& iset = independent;
  if (iset.size() < 2) throw std::invalid_argument("isolating_vertex_cuts: need |I| >= 2");
  for (int v : iset)
    for (int w : g.neighbors(v))
      if (set_contains(iset, w))
        throw std::invalid_argument("isolating_vertex_cuts: not independent, edge {" +
                                    std::to_string(v) + "," + std::to_string(w) + "}");

  IsolatingCutsResult result;
  result.vertices = iset;
  result.cuts.resize(iset.size());

  if (naive) {
    for (size_t i = 0; i < iset.size(); ++i) {
      VertexSet rest = set_difference(iset, {iset[i]});
      auto res = min_vertex_separator(g, {iset[i]}, rest, cap, ledger);
      if (!res.reached_cap) result.cuts[i] = std::move(res.separator);
    }
    return result;
  }

  // Bit-partition rounds: vertices whose rank differs in bit b end up on
  // opposite sides of a minimum separator, so overlaying all rounds puts
  // each member of I in its own region.
  const int bits = ceil_log2(static_cast<long long>(iset.size()));
  std::vector<char> in_overlay(g.n(), 0);
  for (int b = 0; b < bits; ++b) {
    VertexSet zeros, ones;
    for (size_t r = 0; r < iset.size(); ++r)
      ((r >> b) & 1 ? ones : zeros).push_back(iset[r]);
    auto round = min_vertex_separator(g, zeros, ones, std::nullopt, ledger);
    for (int v : round.separator) in_overlay[v] = 1;
  }

  auto [label, count] = components_after_removal(g, in_overlay);
  std::vector<VertexSet> region_of(count), boundary_of(count);
  for (int u = 0; u < g.n(); ++u)
    if (!in_overlay[u]) region_of[label[u]].push_back(u);
  std::vector<int> last_seen(count, -1);
  for (int u = 0; u < g.n(); ++u) {
    if (!in_overlay[u]) continue;
    for (int w : g.neighbors(u)) {
      if (in_overlay[w]) continue;
      int lab = label[w];
      if (last_seen[lab] != u) {
        last_seen[lab] = u;
        boundary_of[lab].push_back(u);
      }
    }
  }

  for (size_t i = 0; i < iset.size(); ++i) {
    const int home = label[iset[i]];
    auto res = detail::min_separator_to_boundary(g, iset[i], region_of[home], boundary_of[home],
                                                 cap, ledger);
    if (!res.reached_cap) result.cuts[i] = std::move(res.separator);
  }
  return result;
}

}  // namespace vct
