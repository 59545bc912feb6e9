#include "vct/oracles.hpp"

#include <algorithm>
#include <functional>

#include "vct/maxflow.hpp"

namespace vct {

namespace {

// Visits k-subsets of pool in lexicographic order until fn returns true.
// Returns the accepting subset, if any.
std::optional<std::vector<int>> first_subset(const std::vector<int>& pool, int k,
                                             const std::function<bool(const std::vector<int>&)>& fn) {
  int n = static_cast<int>(pool.size());
  if (k > n) return std::nullopt;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> subset(k);
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    if (fn(subset)) return subset;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool separates_pair(const Graph& g, const std::vector<int>& s, int u, int v) {
  std::vector<char> removed(g.n(), 0);
  for (int x : s) removed[x] = 1;
  if (removed[u] || removed[v]) return false;
  auto [label, count] = components_after_removal(g, removed);
  (void)count;
  return label[u] != label[v];
}

}  // namespace

BruteKappaResult brute_force_kappa(const Graph& g, int cap) {
  if (g.n() > cap)
    throw std::invalid_argument("brute_force_kappa: n=" + std::to_string(g.n()) +
                                " exceeds cap " + std::to_string(cap));
  if (g.n() <= 1) return {std::max(0, g.n() - 1), std::nullopt};
  std::vector<int> pool(g.n());
  for (int v = 0; v < g.n(); ++v) pool[v] = v;
  for (int size = 0; size <= g.n() - 2; ++size) {
    auto hit = first_subset(pool, size,
                            [&](const std::vector<int>& s) { return is_separator(g, s); });
    if (hit) return {size, cut_from_separator(g, *hit)};
  }
  return {g.n() - 1, std::nullopt};  // complete graph
}

int brute_force_pair_kappa(const Graph& g, int u, int v, int cap) {
  if (g.n() > cap)
    throw std::invalid_argument("brute_force_pair_kappa: n exceeds cap");
  if (u == v) throw std::invalid_argument("brute_force_pair_kappa: u == v");
  if (g.has_edge(u, v)) return g.n() - 1;
  std::vector<int> pool;
  for (int x = 0; x < g.n(); ++x)
    if (x != u && x != v) pool.push_back(x);
  for (int size = 0; size <= static_cast<int>(pool.size()); ++size) {
    auto hit = first_subset(pool, size,
                            [&](const std::vector<int>& s) { return separates_pair(g, s, u, v); });
    if (hit) return size;
  }
  return g.n() - 1;  // unreachable for nonadjacent u,v: pool itself separates
}

int brute_force_steiner_kappa(const Graph& g, const VertexSet& terminals, int cap) {
  if (terminals.size() <= 1) return g.n() - 1;
  int best = g.n() - 1;
  for (size_t i = 0; i < terminals.size(); ++i)
    for (size_t j = i + 1; j < terminals.size(); ++j)
      best = std::min(best, brute_force_pair_kappa(g, terminals[i], terminals[j], cap));
  return best;
}

int kappa_baseline_allpairs(const Graph& g, FlowLedger* ledger) {
  return kappa_baseline_allpairs_cut(g, ledger).first;
}

bool no_separator_below(const Graph& g, int limit) {
  std::vector<int> pool(g.n());
  for (int v = 0; v < g.n(); ++v) pool[v] = v;
  for (int size = 0; size < limit && size <= g.n(); ++size) {
    auto hit = first_subset(pool, size,
                            [&](const std::vector<int>& s) { return is_separator(g, s); });
    if (hit) return false;
  }
  return true;
}

std::pair<int, std::optional<VertexSet>> kappa_baseline_allpairs_cut(const Graph& g,
                                                                     FlowLedger* ledger) {
  if (g.n() < 2) throw std::invalid_argument("kappa_baseline_allpairs: n < 2");
  if (g.is_complete()) return {g.n() - 1, std::nullopt};
  int best = g.n() - 1;
  std::optional<VertexSet> witness;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v)) continue;
      auto res = min_vertex_separator(g, {u}, {v}, best, ledger);
      if (!res.reached_cap && res.flow < best) {
        best = res.flow;
        witness = res.separator;
      }
    }
  }
  return {best, witness};
}

}  // namespace vct
