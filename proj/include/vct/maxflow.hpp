#pragma once

#include <atomic>
#include <optional>
#include <utility>

#include "vct/graph.hpp"

namespace vct {

struct LedgerSnapshot {
  long long calls = 0;
  long long instance_nodes = 0;
  long long instance_edges = 0;
};

/// Instrumentation for complexity claims: counts max-flow invocations and the
/// summed node/arc sizes of the flow instances they were run on. Increments
/// are atomic so concurrent flow calls never lose counts.
class FlowLedger {
 public:
  void record(long long nodes, long long edges) {
    calls_.fetch_add(1, std::memory_order_relaxed);
    nodes_.fetch_add(nodes, std::memory_order_relaxed);
    edges_.fetch_add(edges, std::memory_order_relaxed);
  }

  LedgerSnapshot snapshot() const {
    return {calls_.load(std::memory_order_relaxed), nodes_.load(std::memory_order_relaxed),
            edges_.load(std::memory_order_relaxed)};
  }

  /// Merges another ledger's totals (used when a subroutine meters its own
  /// work and the caller aggregates).
  void add(const LedgerSnapshot& s) {
    calls_.fetch_add(s.calls, std::memory_order_relaxed);
    nodes_.fetch_add(s.instance_nodes, std::memory_order_relaxed);
    edges_.fetch_add(s.instance_edges, std::memory_order_relaxed);
  }

  void reset() {
    calls_ = 0;
    nodes_ = 0;
    edges_ = 0;
  }

 private:
  std::atomic<long long> calls_{0};
  std::atomic<long long> nodes_{0};
  std::atomic<long long> edges_{0};
};

/// Requested an A-B separator while some a in A is adjacent to some b in B.
class no_separator_error : public std::invalid_argument {
 public:
  no_separator_error(int u, int v)
      : std::invalid_argument("no separator exists: edge {" + std::to_string(u) + "," +
                              std::to_string(v) + "} joins the two sides"),
        witness_(u, v) {}
  std::pair<int, int> witness_edge() const { return witness_; }

 private:
  std::pair<int, int> witness_;
};

/// Either a concrete minimum separator, or "at least cap" when the flow hit
/// the caller-provided cap before completing.
struct SeparatorResult {
  bool reached_cap = false;
  int flow = 0;             // separator size, or the cap when reached_cap
  VertexSet separator;      // valid iff !reached_cap
};

/// Minimum vertex set S, disjoint from A and B, whose removal disconnects
/// every A-vertex from every B-vertex. Blocking-flow max-flow on the standard
/// in/out split network; A and B are merged into single uncapacitated
/// endpoints. S is the residual-reachability cut nearest the source side.
/// Throws no_separator_error when A and B are joined by an edge.
SeparatorResult min_vertex_separator(const Graph& g, const VertexSet& sources,
                                     const VertexSet& sinks,
                                     std::optional<int> cap = std::nullopt,
                                     FlowLedger* ledger = nullptr);

/// κ(u,v): minimum separator size for nonadjacent u,v; n-1 when adjacent.
int kappa_pair(const Graph& g, int u, int v, FlowLedger* ledger = nullptr);

namespace detail {

/// Minimum vertex set (src excluded, boundary vertices allowed) whose removal
/// disconnects src from the world beyond `boundary`, computed on the induced
/// graph region ∪ boundary with the boundary draining into a super-sink.
/// Region-phase workhorse of the isolating-cuts routine.
SeparatorResult min_separator_to_boundary(const Graph& g, int src, const VertexSet& region,
                                          const VertexSet& boundary,
                                          std::optional<int> cap = std::nullopt,
                                          FlowLedger* ledger = nullptr);

}  // namespace detail

}  // namespace vct
