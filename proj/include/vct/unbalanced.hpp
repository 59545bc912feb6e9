#pragma once

#include <optional>

#include "vct/hm_hash.hpp"
#include "vct/maxflow.hpp"

namespace vct {

/// min{|T∩(L∪S)|, |T∩(S∪R)|} < beta, evaluated literally.
bool is_unbalanced_cut(const VertexCut& cut, const VertexSet& terminals, long long beta);

struct UnbalancedOptions {
  std::optional<int> cap;                      // early-exit region flows at this value
  FamilyMode family_mode = FamilyMode::Auto;   // splitter family mode
  FlowLedger* ledger = nullptr;                // external ledger to also feed
  int threads = 1;
};

struct UnbalancedResult {
  std::optional<VertexSet> separator;  // smallest candidate; nullopt = none found
  LedgerSnapshot ledger;               // flow work attributable to this call
};

/// Sweeps the splitter family through isolating cuts. Guarantee: whenever G
/// has a (T,β)-unbalanced minimum T-Steiner cut, the returned separator is a
/// minimum separator; any returned set is a genuine separator regardless.
UnbalancedResult unbalanced(const Graph& g, const VertexSet& terminals, int beta,
                            const UnbalancedOptions& opts = {});

}  // namespace vct
