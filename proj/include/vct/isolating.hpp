#pragma once

#include <optional>

#include "vct/maxflow.hpp"

namespace vct {

/// Greedy maximal independent set inside `candidates`, scanned by ascending
/// vertex id. Deterministic.
VertexSet maximal_independent_set(const Graph& g, const VertexSet& candidates);

/// Per-vertex minimum isolating separators: cuts[i] is a minimum
/// ({vertices[i]}, I \ {vertices[i]}) separator, or nullopt when a flow cap
/// was supplied and that vertex's separator is at least the cap.
struct IsolatingCutsResult {
  VertexSet vertices;                           // I, ascending
  std::vector<std::optional<VertexSet>> cuts;   // parallel to vertices
};

/// ⌈log₂|I|⌉ bit-partition flows carve G into per-vertex regions; one more
/// flow per vertex inside its trimmed region extracts the isolating cut.
/// With naive = true each cut is computed by a direct max-flow instead (the
/// test oracle and correctness fallback).
IsolatingCutsResult isolating_vertex_cuts(const Graph& g, const VertexSet& independent,
                                          FlowLedger* ledger = nullptr,
                                          std::optional<int> cap = std::nullopt,
                                          bool naive = false);

}  // namespace vct
