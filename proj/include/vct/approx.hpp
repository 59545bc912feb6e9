#pragma once

#include <optional>

#include "vct/maxflow.hpp"

namespace vct {

/// |λ₂| of the random-walk matrix AD⁻¹ (eigenvalues ordered by absolute
/// value), certified to 1e-9 absolute. Throws on disconnected input or n < 2.
double spectral_lambda2(const Graph& g);

/// A deterministic expander whose guarantees are derived from its measured
/// second eigenvalue rather than from a citation.
struct CertifiedExpander {
  Graph graph;
  double lambda2 = 0.0;
  int declared_degree = 0;  // the d the construction targeted
  bool complete = false;    // K_n fallback: every disjoint pair is joined
};

/// Near-d-regular circulant on n vertices with measured λ₂ (quadratic-residue
/// spaced offsets). Falls back to K_n when n <= 2d.
CertifiedExpander build_mixing_graph(int n, int d);

/// Mixing-lemma certificate: true guarantees an edge between every pair of
/// disjoint vertex sets of the given sizes (|L||R| > λ₂²n², or complete).
bool mixing_guarantee(const CertifiedExpander& x, long long left_size, long long right_size);

/// Vertex expansion certified by spectral expansion for regular graphs:
/// β(α) = 1/(α + (1-α)λ₂²) - 1.
double vertex_expansion_beta(double alpha, double lambda2);

/// No bounded-degree construction certified the requested small-set
/// expansion; carries the best (α, β) achieved.
class infeasible_expander_error : public std::runtime_error {
 public:
  infeasible_expander_error(double alpha, double beta)
      : std::runtime_error("no construction certifies the requested vertex expansion"
                           " (achieved alpha=" + std::to_string(alpha) +
                           ", beta=" + std::to_string(beta) + ")"),
        alpha_(alpha),
        beta_(beta) {}
  double achieved_alpha() const { return alpha_; }
  double achieved_beta() const { return beta_; }

 private:
  double alpha_, beta_;
};

/// (ε/20, 2/ε)-vertex expander on exactly n vertices, certified via the
/// spectral bound with degree doubling until β(ε/20) ≥ 2/ε.
CertifiedExpander build_small_set_expander(int n, double eps);

/// The α the small-set builder certifies at (recorded constant c = 1).
inline double small_set_alpha(double eps) { return eps / 20.0; }

/// Contracts groups of ⌊ρ⌋ or ⌈ρ⌉ consecutive ids down to exactly target_n
/// vertices; parallel edges collapse, loops drop. An (α,β)-vertex expander
/// contracts to an (α/⌈ρ⌉, β⌊ρ⌋/⌈ρ⌉)-vertex expander.
Graph contract_to_size(const Graph& g, int target_n);

struct ApproxResult {
  bool complete_graph = false;  // κ = n-1 and no separator exists
  int kappa_complete = 0;       // set when complete_graph
  VertexSet separator;          // otherwise: verified separator, size ≤ ⌊(1+ε)κ⌋
  bool via_min_degree = false;  // the N(v) branch was taken
  long long flow_calls = 0;
};

/// (1+ε)-approximate minimum vertex cut: sweeps s-t flows over the edges of
/// a mixing expander H₁ and a small-set vertex expander H₂ on V(G), then
/// compares with the minimum-degree neighborhood.
ApproxResult approx_vertex_mincut(const Graph& g, double eps, FlowLedger* ledger = nullptr,
                                  int threads = 1);

/// Every separator of size kappa leaves each side of the split at least
/// `bound` vertices (enumerates all kappa-subsets; test predicate for the
/// balancedness of minimum cuts under high minimum degree).
bool mincut_sides_at_least(const Graph& g, int kappa, double bound);

}  // namespace vct
