#include "vct/approx.hpp"

#include <algorithm>
#include <cmath>

#include "vct/generators.hpp"
#include "vct/parallel.hpp"

namespace vct {

namespace {

// First half-degree distinct circulant offsets spaced by quadratic residues.
// The squares are taken modulo the smallest prime >= n and folded into
// [1, n/2]; composite moduli (powers of two especially) have too few
// distinct squares.
std::vector<int> square_spaced_offsets(int n, int half_degree) {
  int p = std::max(2, n);
  auto is_prime = [](int x) {
    for (int d = 2; static_cast<long long>(d) * d <= x; ++d)
      if (x % d == 0) return false;
    return x >= 2;
  };
  while (!is_prime(p)) ++p;
  std::vector<int> offsets;
  std::vector<char> used(n / 2 + 1, 0);
  for (long long k = 1; static_cast<int>(offsets.size()) < half_degree && k <= 4LL * p; ++k) {
    long long r = (k * k) % p % n;
    int o = static_cast<int>(std::min(r, n - r));
    if (o < 1 || 2 * o > n || used[o]) continue;
    used[o] = 1;
    offsets.push_back(o);
  }
  // pad with consecutive offsets if the residues repeat too early (tiny n)
  for (int o = 1; static_cast<int>(offsets.size()) < half_degree && 2 * o <= n; ++o) {
    if (!used[o]) {
      used[o] = 1;
      offsets.push_back(o);
    }
  }
  std::sort(offsets.begin(), offsets.end());
  return offsets;
}

}  // namespace

CertifiedExpander build_mixing_graph(int n, int d) {
  if (d < 3) throw std::invalid_argument("build_mixing_graph: d must be >= 3");
  if (n <= d) throw std::invalid_argument("build_mixing_graph: need n > d");
  CertifiedExpander x;
  x.declared_degree = d;
  if (n <= 2 * d + 1) {
    x.graph = complete_graph(n);
    x.complete = true;
    x.lambda2 = n >= 2 ? 1.0 / (n - 1) : 0.0;
    return x;
  }
  x.graph = make_circulant(n, square_spaced_offsets(n, (d + 1) / 2));
  x.lambda2 = spectral_lambda2(x.graph);
  return x;
}

bool mixing_guarantee(const CertifiedExpander& x, long long left_size, long long right_size) {
  if (left_size < 1 || right_size < 1) return false;
  if (x.complete) return true;
  const double n = static_cast<double>(x.graph.n());
  // Expander mixing lemma with the measured eigenvalue, inflated by its
  // certification tolerance: e(L,R) > 0 once |L||R| > λ₂²n².
  const double lam = x.lambda2 + 1e-6;
  return static_cast<double>(left_size) * static_cast<double>(right_size) > lam * lam * n * n;
}

double vertex_expansion_beta(double alpha, double lambda2) {
  return 1.0 / (alpha + (1.0 - alpha) * lambda2 * lambda2) - 1.0;
}

CertifiedExpander build_small_set_expander(int n, double eps) {
  if (eps <= 0 || eps > 1) throw std::invalid_argument("build_small_set_expander: eps in (0,1]");
  if (n < 2.0 / eps)
    throw std::invalid_argument("build_small_set_expander: need n >= 2/eps");
  const double alpha = small_set_alpha(eps);
  const double beta_target = 2.0 / eps;

  CertifiedExpander best;
  bool have = false;
  for (int d = std::max(3, static_cast<int>(std::ceil(1.0 / eps))); ; d = 2 * d) {
    CertifiedExpander x;
    x.declared_degree = d;
    if (n <= 2 * d + 1) {
      x.graph = complete_graph(n);
      x.complete = true;
      x.lambda2 = 1.0 / (n - 1);
    } else {
      x.graph = make_circulant(n, square_spaced_offsets(n, (d + 1) / 2));
      x.lambda2 = spectral_lambda2(x.graph);
    }
    if (!have || x.lambda2 < best.lambda2) {
      best = x;
      have = true;
    }
    if (vertex_expansion_beta(alpha, best.lambda2) >= beta_target) return best;
    if (x.complete) break;  // no denser deterministic option remains
  }
  throw infeasible_expander_error(alpha, vertex_expansion_beta(alpha, best.lambda2));
}

Graph contract_to_size(const Graph& g, int target_n) {
  if (target_n < 1 || target_n > g.n())
    throw std::invalid_argument("contract_to_size: target outside [1, n]");
  const int n = g.n();
  const int small = n / target_n;          // ⌊ρ⌋
  const int remainder = n % target_n;      // this many groups get ⌈ρ⌉ = small+1
  std::vector<int> group(n);
  int v = 0;
  for (int gidx = 0; gidx < target_n; ++gidx) {
    int size = small + (gidx < remainder ? 1 : 0);
    for (int i = 0; i < size; ++i) group[v++] = gidx;
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges()) {
    int ga = group[a], gb = group[b];
    if (ga != gb) edges.emplace_back(std::min(ga, gb), std::max(ga, gb));
  }
  return Graph(target_n, edges, /*dedupe=*/true);
}

ApproxResult approx_vertex_mincut(const Graph& g, double eps, FlowLedger* ledger, int threads) {
  if (eps <= 0 || eps > 1) throw std::invalid_argument("approx_vertex_mincut: eps in (0,1]");
  if (!g.is_connected()) throw std::invalid_argument("approx_vertex_mincut: graph disconnected");
  const int n = g.n();
  ApproxResult result;
  if (g.is_complete()) {
    result.complete_graph = true;
    result.kappa_complete = n - 1;
    return result;
  }

  // H₁ must mix at |L||R| ≥ (αn)² with α = ε/20, i.e. λ₂(H₁) ≤ ε/20. Double
  // the degree until the measured eigenvalue certifies that (K_n at worst).
  const double lambda_target = small_set_alpha(eps);
  CertifiedExpander h1;
  for (int d = std::max(3, static_cast<int>(std::ceil(4.0 / (lambda_target * lambda_target))));;
       d *= 2) {
    if (d >= n - 1) {
      h1.graph = complete_graph(n);
      h1.complete = true;
      h1.lambda2 = 1.0 / (n - 1);
      h1.declared_degree = d;
      break;
    }
    h1 = build_mixing_graph(n, d);
    if (h1.complete || h1.lambda2 <= lambda_target) break;
  }
  CertifiedExpander h2 = build_small_set_expander(n, eps);

  // Union of the two edge sets, deduplicated; pairs adjacent in G are skipped
  // (no separator exists for them, which cannot improve the minimum).
  std::vector<std::pair<int, int>> pairs;
  {
    auto e1 = h1.graph.edges();
    auto e2 = h2.graph.edges();
    pairs.reserve(e1.size() + e2.size());
    pairs.insert(pairs.end(), e1.begin(), e1.end());
    pairs.insert(pairs.end(), e2.begin(), e2.end());
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  }

  FlowLedger local;
  std::vector<std::optional<VertexSet>> found(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), threads, [&](int i) {
    auto [s, t] = pairs[i];
    if (g.has_edge(s, t)) return;
    auto res = min_vertex_separator(g, {s}, {t}, std::nullopt, &local);
    found[i] = std::move(res.separator);
  });

  std::optional<VertexSet> best;
  for (auto& cand : found) {
    if (!cand) continue;
    if (!best || cand->size() < best->size()) best = std::move(cand);
  }

  auto [min_v, min_deg] = min_degree_vertex(g);
  if (!best || min_deg < static_cast<int>(best->size())) {
    result.separator = g.neighbors(min_v);  // isolates min_v; G is not complete
    result.via_min_degree = true;
  } else {
    result.separator = std::move(*best);
  }
  if (!is_separator(g, result.separator))
    throw invariant_error("approx_vertex_mincut: produced set is not a separator");

  result.flow_calls = local.snapshot().calls;
  if (ledger) ledger->add(local.snapshot());
  return result;
}

bool mincut_sides_at_least(const Graph& g, int kappa, double bound) {
  const int n = g.n();
  std::vector<int> idx(kappa);
  for (int i = 0; i < kappa; ++i) idx[i] = i;
  if (kappa > n) return true;
  std::vector<char> removed(n, 0);
  while (true) {
    std::fill(removed.begin(), removed.end(), 0);
    for (int i : idx) removed[i] = 1;
    auto [label, comps] = components_after_removal(g, removed);
    if (comps >= 2) {
      std::vector<int> size(comps, 0);
      for (int v = 0; v < n; ++v)
        if (!removed[v]) ++size[label[v]];
      // The weakest grouping puts the smallest component alone on one side.
      int smallest = *std::min_element(size.begin(), size.end());
      if (static_cast<double>(smallest) + 1e-9 < bound) return false;
    }
    int i = kappa - 1;
    while (i >= 0 && idx[i] == n - kappa + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < kappa; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

}  // namespace vct
