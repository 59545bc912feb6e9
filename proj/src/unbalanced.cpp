#include "vct/unbalanced.hpp"

#include <algorithm>

#include "vct/isolating.hpp"
#include "vct/parallel.hpp"

namespace vct {

bool is_unbalanced_cut(const VertexCut& cut, const VertexSet& terminals, long long beta) {
  long long left = intersection_size(terminals, cut.left) + intersection_size(terminals, cut.sep);
  long long right = intersection_size(terminals, cut.right) + intersection_size(terminals, cut.sep);
  return std::min(left, right) < beta;
}

UnbalancedResult unbalanced(const Graph& g, const VertexSet& terminals, int beta,
                            const UnbalancedOptions& opts) {
  if (terminals.size() < 2) throw std::invalid_argument("unbalanced: need |T| >= 2");
  if (beta < 2) throw std::invalid_argument("unbalanced: beta must be >= 2");

  TerminalFamily family = build_terminal_family(terminals, beta, opts.family_mode);

  FlowLedger local;
  std::vector<std::optional<VertexSet>> best_per_subset(family.subsets.size());
  parallel_for(static_cast<int>(family.subsets.size()), opts.threads, [&](int idx) {
    const VertexSet& sub = family.subsets[idx];
    if (sub.size() < 2) return;
    VertexSet mis = maximal_independent_set(g, sub);
    if (mis.size() < 2) return;  // a lone independent vertex yields no candidate
    auto iso = isolating_vertex_cuts(g, mis, &local, opts.cap);
    std::optional<VertexSet> best;
    for (auto& cut : iso.cuts) {
      if (!cut) continue;
      if (!best || cut->size() < best->size()) best = std::move(cut);
    }
    best_per_subset[idx] = std::move(best);
  });

  UnbalancedResult result;
  for (auto& candidate : best_per_subset) {
    if (!candidate) continue;
    if (!result.separator || candidate->size() < result.separator->size())
      result.separator = std::move(candidate);
  }
  result.ledger = local.snapshot();
  if (opts.ledger) opts.ledger->add(result.ledger);
  return result;
}

}  // namespace vct
