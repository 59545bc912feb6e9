#pragma once

#include <cstdint>

#include "vct/graph.hpp"

namespace vct {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

/// Star K_{1,leaves} with the hub at vertex 0.
Graph star_graph(int leaves);

/// Two triangles sharing vertex 2: the 5-vertex bowtie.
Graph bowtie_graph();

/// Outer 5-cycle 0..4, spokes i -- i+5, inner 5-cycle with stride 2.
Graph petersen_graph();

/// Circulant graph: i adjacent to i ± o (mod n) for each offset o.
/// Offsets must lie in [1, n/2]; an offset of exactly n/2 contributes one
/// neighbor instead of two.
Graph make_circulant(int n, const std::vector<int>& offsets);

/// Erdos-Renyi G(n,p), deterministic in the seed.
Graph gnp_graph(int n, double p, std::uint64_t seed);

/// G(n,p) conditioned on connectivity: bumps the seed until connected.
Graph gnp_connected(int n, double p, std::uint64_t seed);

/// Two k-cliques plus `bridge_size` extra vertices adjacent to every clique
/// vertex (and to nothing else). For 0 < bridge_size < clique_size the bridge
/// set is the unique minimum separator, so κ = bridge_size by construction.
Graph barbell_graph(int clique_size, int bridge_size);

/// Barbell with circulant sides of degree 2*side_half_degree instead of
/// cliques; same provable κ = bridge_size when bridge_size < 2*side_half_degree.
Graph circulant_barbell(int side_n, int side_half_degree, int bridge_size);

struct PlantedCutInstance {
  Graph graph;
  VertexCut cut;  // the planted (L,S,R); κ equals |sep| once verified
};

/// Random dense sides L = {0..left_size-1}, R = the tail, with a separator
/// S wired into both sides and no L-R edges. The plant is only emitted after
/// verifying that no separator smaller than |S| exists (subset enumeration)
/// and that S itself separates; otherwise the seed is bumped and the build
/// retried.
PlantedCutInstance planted_cut_instance(int n, int left_size, int sep_size, double p,
                                        std::uint64_t seed);

}  // namespace vct
