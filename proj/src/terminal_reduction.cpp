#include "vct/terminal_reduction.hpp"

#include <algorithm>
#include <cstdint>

#include "vct/hm_hash.hpp"
#include "vct/unbalanced.hpp"

namespace vct {

Ratio terminal_expansion(const VertexCut& cut, const VertexSet& terminals) {
  long long ts = intersection_size(terminals, cut.sep);
  long long left = intersection_size(terminals, cut.left) + ts;
  long long right = intersection_size(terminals, cut.right) + ts;
  long long denom = std::min(left, right);
  if (denom == 0)
    throw std::invalid_argument("terminal_expansion: no terminals on the smaller side");
  return Ratio{static_cast<long long>(cut.sep.size()), denom};
}

SideGraph build_side_graph(const Graph& g, const VertexCut& cut, int k, Side side,
                           bool remove_sep_edges) {
  if (k < 1) throw std::invalid_argument("build_side_graph: k must be >= 1");
  const VertexSet& kept_outer = side == Side::Left ? cut.left : cut.right;
  const VertexSet& replaced = side == Side::Left ? cut.right : cut.left;
  if (replaced.empty()) throw std::invalid_argument("build_side_graph: replaced side is empty");

  SideGraph sg;
  sg.side = side;
  sg.kept_parent_ids = set_union(kept_outer, cut.sep);
  sg.clique_rep = replaced.front();

  const int base = static_cast<int>(sg.kept_parent_ids.size());
  sg.to_parent = sg.kept_parent_ids;
  sg.to_parent.resize(base + k, -1);
  for (int i = 0; i < k; ++i) sg.clique.push_back(base + i);
  sg.special_terminal = base;

  std::vector<int> side_id(g.n(), -1);
  std::vector<char> in_sep(g.n(), 0);
  for (int i = 0; i < base; ++i) side_id[sg.kept_parent_ids[i]] = i;
  for (int v : cut.sep) in_sep[v] = 1;

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < base; ++i) {
    int u = sg.kept_parent_ids[i];
    for (int w : g.neighbors(u)) {
      if (side_id[w] <= i) continue;  // skip removed side and lower copies
      if (remove_sep_edges && in_sep[u] && in_sep[w]) continue;
      edges.emplace_back(i, side_id[w]);
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(base + i, base + j);
  for (int v : cut.sep)
    for (int i = 0; i < k; ++i) edges.emplace_back(side_id[v], base + i);

  sg.graph = Graph(base + k, edges);
  return sg;
}

int side_id_of_parent(const SideGraph& sg, int parent_id) {
  auto it = std::lower_bound(sg.kept_parent_ids.begin(), sg.kept_parent_ids.end(), parent_id);
  if (it == sg.kept_parent_ids.end() || *it != parent_id)
    throw std::invalid_argument("side_id_of_parent: vertex not kept in side graph");
  return static_cast<int>(it - sg.kept_parent_ids.begin());
}

VertexSet lift_separator(const SideGraph& sg, const VertexSet& side_separator) {
  if (static_cast<int>(side_separator.size()) >= static_cast<int>(sg.clique.size()))
    throw std::invalid_argument("lift_separator: separator must be smaller than k");
  VertexSet lifted;
  for (int v : side_separator)
    if (sg.to_parent[v] >= 0) lifted.push_back(sg.to_parent[v]);
  return lifted;  // kept ids are ascending, so order is preserved
}

VertexSet lift_terminals(const SideGraph& sg, const VertexSet& side_terminals) {
  std::vector<int> out;
  for (int v : side_terminals) out.push_back(sg.to_parent[v] >= 0 ? sg.to_parent[v] : sg.clique_rep);
  return normalized(std::move(out));
}

namespace {

void orient_cut(VertexCut& cut, const VertexSet& terminals) {
  long long ts = intersection_size(terminals, cut.sep);
  long long left = intersection_size(terminals, cut.left) + ts;
  long long right = intersection_size(terminals, cut.right) + ts;
  if (left > right) std::swap(cut.left, cut.right);
}

// Minimum terminal expansion over all vertex cuts with terminals on both
// sides (counting S), by separator enumeration with optimal component
// grouping. Exhaustive; n must be small.
struct MinExpansion {
  bool found = false;
  Ratio h{0, 1};
  VertexCut cut;
};

MinExpansion brute_min_expansion(const Graph& g, const VertexSet& terminals) {
  const int n = g.n();
  MinExpansion best;
  if (n < 2 || n > 30) {
    if (n > 30) throw std::invalid_argument("brute_min_expansion: graph too large");
    return best;
  }
  std::vector<char> removed(n, 0);
  std::vector<char> is_term(n, 0);
  for (int v : terminals) is_term[v] = 1;

  struct BestState {
    std::uint32_t sep_mask = 0;
    int forced_right = -1;
    long long left_sum = 0;  // terminals in left components
  } state;

  // mask = 0 (empty separator) matters on disconnected graphs: those cuts
  // have expansion 0 and must defeat any expander certificate.
  const std::uint32_t full = n >= 32 ? 0xffffffffu : ((1u << n) - 1);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    int sep_size = __builtin_popcount(mask);
    if (n - sep_size < 2) continue;
    for (int v = 0; v < n; ++v) removed[v] = (mask >> v) & 1;
    auto [label, comps] = components_after_removal(g, removed);
    if (comps < 2) continue;

    long long t_sep = 0;
    for (int v : terminals)
      if (removed[v]) ++t_sep;
    std::vector<long long> count(comps, 0);
    for (int v : terminals)
      if (!removed[v]) ++count[label[v]];
    long long t_out = 0;
    for (long long c : count) t_out += c;

    // Groupings fix component 0 on the left and force one component j right;
    // achievable left terminal sums come from subset-sum bitsets.
    const int cap_bits = static_cast<int>(t_out) + 1;
    std::vector<std::uint64_t> prefix(comps + 1);
    prefix[1] = 1;  // comps 1..i-1 contribute to prefix[i]; comp 0 is always left
    for (int i = 1; i < comps; ++i)
      prefix[i + 1] = prefix[i] | (prefix[i] << count[i]);
    std::uint64_t suffix = 1;
    for (int j = comps - 1; j >= 1; --j) {
      // sums over comps {1..j-1} ∪ {j+1..comps-1} = prefix[j] convolved with suffix
      std::uint64_t sums = 0;
      for (int bit = 0; bit < cap_bits && bit < 64; ++bit)
        if ((prefix[j] >> bit) & 1) sums |= suffix << bit;
      for (int bit = 0; bit < cap_bits && bit < 64; ++bit) {
        if (!((sums >> bit) & 1)) continue;
        long long left_total = count[0] + bit;
        long long lhs = left_total + t_sep;
        long long rhs = (t_out - left_total) + t_sep;
        long long denom = std::min(lhs, rhs);
        if (denom == 0) continue;
        Ratio h{sep_size, denom};
        if (!best.found || ratio_less(h, best.h)) {
          best.found = true;
          best.h = h;
          state = {mask, j, left_total};
        }
      }
      suffix = suffix | (suffix << count[j]);
    }
  }
  if (!best.found) return best;

  // Rebuild the winning grouping: components, then a subset of
  // comps \ {0, forced_right} summing to left_sum - count[0].
  for (int v = 0; v < n; ++v) removed[v] = (state.sep_mask >> v) & 1;
  auto [label, comps] = components_after_removal(g, removed);
  std::vector<long long> count(comps, 0);
  for (int v : terminals)
    if (!removed[v]) ++count[label[v]];
  std::vector<int> member_comps;
  for (int i = 1; i < comps; ++i)
    if (i != state.forced_right) member_comps.push_back(i);
  std::vector<std::uint64_t> dp(member_comps.size() + 1);
  dp[0] = 1;
  for (size_t i = 0; i < member_comps.size(); ++i)
    dp[i + 1] = dp[i] | (dp[i] << count[member_comps[i]]);
  long long target = state.left_sum - count[0];
  std::vector<char> comp_left(comps, 0);
  comp_left[0] = 1;
  for (int i = static_cast<int>(member_comps.size()) - 1; i >= 0; --i) {
    long long c = count[member_comps[i]];
    if (target >= c && ((dp[i] >> (target - c)) & 1)) {
      comp_left[member_comps[i]] = 1;
      target -= c;
    }
  }
  // Zero-count components not forced anywhere default to the right side.
  for (int v = 0; v < n; ++v) {
    if (removed[v])
      best.cut.sep.push_back(v);
    else if (comp_left[label[v]])
      best.cut.left.push_back(v);
    else
      best.cut.right.push_back(v);
  }
  return best;
}

}  // namespace

SparseCutFinder::Outcome BruteSparseFinder::find(const Graph& g, const VertexSet& terminals,
                                                 Ratio phibar, Ratio phi) {
  if (g.n() > max_n_)
    throw std::invalid_argument("BruteSparseFinder: n=" + std::to_string(g.n()) +
                                " exceeds cap " + std::to_string(max_n_));
  Outcome out;
  MinExpansion mine = brute_min_expansion(g, terminals);
  if (!mine.found || !ratio_less(mine.h, phibar)) return out;  // expander, certified

  out.expander = false;
  out.cut = std::move(mine.cut);
  orient_cut(out.cut, terminals);

  // Certify the right side as a terminal expander at 2φ when the cut is
  // terminal-unbalanced; enables replacing the right recursion by one
  // unbalanced call.
  long long ts = intersection_size(terminals, out.cut.sep);
  long long left = intersection_size(terminals, out.cut.left) + ts;
  long long right = intersection_size(terminals, out.cut.right) + ts;
  if (3 * std::min(left, right) < static_cast<long long>(terminals.size())) {
    VertexSet keep = set_union(out.cut.sep, out.cut.right);
    Graph sub = induced_subgraph(g, keep);
    VertexSet sub_terms;
    for (size_t i = 0; i < keep.size(); ++i)
      if (set_contains(terminals, keep[i])) sub_terms.push_back(static_cast<int>(i));
    MinExpansion inner = brute_min_expansion(sub, sub_terms);
    Ratio two_phi{2 * phi.num, phi.den};
    out.right_expander = !inner.found || !ratio_less(inner.h, two_phi);
  }
  return out;
}

SparseCutFinder::Outcome HeuristicSparseFinder::find(const Graph& g, const VertexSet& terminals,
                                                     Ratio phibar, Ratio /*phi*/) {
  const int n = g.n();
  Outcome out;
  if (n < 3 || terminals.empty()) return out;

  std::vector<int> seeds{min_degree_vertex(g).first, 0, terminals.front()};
  seeds = normalized(std::move(seeds));

  bool have_best = false;
  Ratio best_h{0, 1};
  int best_seed = -1, best_prefix = -1;

  auto bfs_order = [&](int seed) {
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    std::vector<int> queue{seed};
    seen[seed] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      order.push_back(u);
      for (int w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    for (int v = 0; v < n; ++v)
      if (!seen[v]) order.push_back(v);
    return order;
  };

  std::vector<char> is_term(n, 0);
  for (int v : terminals) is_term[v] = 1;
  const long long t_total = static_cast<long long>(terminals.size());

  auto sweep = [&](int seed, int materialize_prefix) -> std::optional<VertexCut> {
    std::vector<int> order = bfs_order(seed);
    std::vector<int> zone(n, 0);  // 0 = R, 1 = S, 2 = L
    long long sep_size = 0, t_left = 0, t_sep = 0;
    long long in_left = 0;
    for (int i = 0; i < n - 1; ++i) {
      int v = order[i];
      if (zone[v] == 1) {
        --sep_size;
        if (is_term[v]) --t_sep;
      }
      zone[v] = 2;
      ++in_left;
      if (is_term[v]) ++t_left;
      for (int w : g.neighbors(v)) {
        if (zone[w] == 0) {
          zone[w] = 1;
          ++sep_size;
          if (is_term[w]) ++t_sep;
        }
      }
      long long in_right = n - in_left - sep_size;
      if (in_right <= 0) break;
      if (materialize_prefix == i) {
        VertexCut cut;
        for (int u = 0; u < n; ++u) {
          if (zone[u] == 2)
            cut.left.push_back(u);
          else if (zone[u] == 1)
            cut.sep.push_back(u);
          else
            cut.right.push_back(u);
        }
        return cut;
      }
      if (materialize_prefix >= 0) continue;
      long long lhs = t_left + t_sep;
      long long rhs = (t_total - t_left - t_sep) + t_sep;
      long long denom = std::min(lhs, rhs);
      if (denom == 0) continue;
      Ratio h{sep_size, denom};
      if (!have_best || ratio_less(h, best_h)) {
        have_best = true;
        best_h = h;
        best_seed = seed;
        best_prefix = i;
      }
    }
    return std::nullopt;
  };

  for (int seed : seeds) sweep(seed, -1);
  if (!have_best || !ratio_less(best_h, phibar)) return out;

  auto cut = sweep(best_seed, best_prefix);
  if (!cut) return out;
  out.expander = false;
  out.cut = std::move(*cut);
  orient_cut(out.cut, terminals);
  return out;
}

std::unique_ptr<SparseCutFinder> make_finder(const std::string& name) {
  if (name == "brute") return std::make_unique<BruteSparseFinder>();
  if (name == "heuristic") return std::make_unique<HeuristicSparseFinder>();
  if (name == "none") return std::make_unique<ExpanderOnlyFinder>();
  throw std::invalid_argument("unknown finder \"" + name + "\"");
}

namespace {

struct ResolvedConfig {
  Ratio phi;
  Ratio phibar;
  SparseCutFinder* finder;
  std::optional<int> cap;
  FlowLedger* ledger;
  int threads;
  int max_depth;
  bool early_exit;
  bool shortcut;
  int k;
};

ReductionOutcome allpairs_base(const Graph& g, const VertexSet& terminals,
                               const ResolvedConfig& cfg) {
  const int k = cfg.k;
  std::optional<VertexSet> best;
  for (size_t i = 0; i < terminals.size(); ++i) {
    for (size_t j = i + 1; j < terminals.size(); ++j) {
      int x = terminals[i], y = terminals[j];
      if (g.has_edge(x, y)) continue;  // κ(x,y) = n-1, never below k here
      int cap = best ? std::min<int>(k, static_cast<int>(best->size())) : k;
      auto res = min_vertex_separator(g, {x}, {y}, cap, cfg.ledger);
      if (res.reached_cap) continue;
      if (cfg.early_exit) {
        ReductionOutcome out;
        out.kind = ReductionOutcome::Kind::Separator;
        out.separator = std::move(res.separator);
        return out;
      }
      if (!best || res.flow < static_cast<int>(best->size())) best = std::move(res.separator);
    }
  }
  ReductionOutcome out;
  if (best) {
    out.kind = ReductionOutcome::Kind::Separator;
    out.separator = std::move(*best);
  }
  return out;  // empty NewTerminals: no T-Steiner cut below k
}

void ensure_separator(const Graph& g, const VertexSet& sep, int k) {
  if (static_cast<int>(sep.size()) >= k)
    throw invariant_error("emitted separator not smaller than k");
  if (!is_separator(g, sep)) throw invariant_error("emitted set is not a separator");
}

int beta_for(const ResolvedConfig& cfg) {
  long long num = 10LL * cfg.k * cfg.phi.den;
  long long beta = (num + cfg.phi.num - 1) / cfg.phi.num;
  return static_cast<int>(std::max<long long>(beta, 2));
}

bool below_terminal_threshold(size_t t, const ResolvedConfig& cfg) {
  // |T| <= 10k/φ  ⟺  |T|·φ.num <= 10k·φ.den
  return static_cast<long long>(t) * cfg.phi.num <= 10LL * cfg.k * cfg.phi.den;
}

ReductionOutcome reduce_impl(const Graph& g, const VertexSet& terminals,
                             const ResolvedConfig& cfg, int depth) {
  if (below_terminal_threshold(terminals.size(), cfg) || depth >= cfg.max_depth) {
    auto out = allpairs_base(g, terminals, cfg);
    out.depth_reached = depth;
    return out;
  }

  auto found = cfg.finder->find(g, terminals, cfg.phibar, cfg.phi);
  if (found.expander) {
    UnbalancedOptions opts;
    opts.cap = cfg.cap;
    opts.ledger = cfg.ledger;
    opts.threads = cfg.threads;
    auto ures = unbalanced(g, terminals, beta_for(cfg), opts);
    ReductionOutcome out;
    out.depth_reached = depth;
    if (ures.separator && static_cast<int>(ures.separator->size()) < cfg.k) {
      out.kind = ReductionOutcome::Kind::Separator;
      out.separator = std::move(*ures.separator);
    }
    return out;  // else empty terminal set: no T-Steiner cut below k
  }

  const VertexCut& cut = found.cut;
  ReductionOutcome out;
  out.depth_reached = depth;
  if (static_cast<int>(cut.sep.size()) < cfg.k) {
    out.kind = ReductionOutcome::Kind::Separator;
    out.separator = cut.sep;
    return out;
  }

  long long ts = intersection_size(terminals, cut.sep);
  long long t_left_side = intersection_size(terminals, cut.left) + ts;
  long long t_right_side = intersection_size(terminals, cut.right) + ts;
  bool balanced = 3 * std::min(t_left_side, t_right_side) >=
                  static_cast<long long>(terminals.size());

  auto recurse_side = [&](const SideGraph& sg, const VertexSet& side_terms,
                          ReductionOutcome& child) {
    if (side_terms.size() < terminals.size() && static_cast<int>(side_terms.size()) >= 2)
      child = reduce_impl(sg.graph, side_terms, cfg, depth + 1);
    else
      child = allpairs_base(sg.graph, side_terms, cfg);
    out.depth_reached = std::max(out.depth_reached, child.depth_reached);
  };

  auto side_terminals = [&](const SideGraph& sg, const VertexSet& parent_terms) {
    VertexSet mapped;
    for (int v : parent_terms) mapped.push_back(side_id_of_parent(sg, v));
    mapped.push_back(sg.special_terminal);  // kept ids precede clique ids, stays sorted
    return mapped;
  };

  VertexSet t_left = set_intersection(terminals, cut.left);
  VertexSet t_right = set_intersection(terminals, cut.right);

  SideGraph left_graph = build_side_graph(g, cut, cfg.k, Side::Left, /*remove_sep_edges=*/true);
  ReductionOutcome left_child;
  recurse_side(left_graph, side_terminals(left_graph, t_left), left_child);
  if (left_child.kind == ReductionOutcome::Kind::Separator) {
    VertexSet lifted = lift_separator(left_graph, left_child.separator);
    ensure_separator(g, lifted, cfg.k);
    out.kind = ReductionOutcome::Kind::Separator;
    out.separator = std::move(lifted);
    return out;
  }

  VertexSet right_new_terms;
  if (!balanced && found.right_expander && cfg.shortcut) {
    // The right side stays an expander inside the k-right graph, so one
    // unbalanced call replaces the whole right recursion. S-S edges are kept.
    SideGraph right_graph =
        build_side_graph(g, cut, cfg.k, Side::Right, /*remove_sep_edges=*/false);
    VertexSet t_right_sep = set_union(t_right, set_intersection(terminals, cut.sep));
    UnbalancedOptions opts;
    opts.cap = cfg.cap;
    opts.ledger = cfg.ledger;
    opts.threads = cfg.threads;
    auto ures =
        unbalanced(right_graph.graph, side_terminals(right_graph, t_right_sep), beta_for(cfg), opts);
    if (ures.separator && static_cast<int>(ures.separator->size()) < cfg.k) {
      VertexSet lifted = lift_separator(right_graph, *ures.separator);
      ensure_separator(g, lifted, cfg.k);
      out.kind = ReductionOutcome::Kind::Separator;
      out.separator = std::move(lifted);
      return out;
    }
    // certified: no right-side Steiner cut below k; contributes no terminals
  } else {
    SideGraph right_graph =
        build_side_graph(g, cut, cfg.k, Side::Right, /*remove_sep_edges=*/balanced);
    ReductionOutcome right_child;
    recurse_side(right_graph, side_terminals(right_graph, t_right), right_child);
    if (right_child.kind == ReductionOutcome::Kind::Separator) {
      VertexSet lifted = lift_separator(right_graph, right_child.separator);
      ensure_separator(g, lifted, cfg.k);
      out.kind = ReductionOutcome::Kind::Separator;
      out.separator = std::move(lifted);
      return out;
    }
    right_new_terms = lift_terminals(right_graph, right_child.new_terminals);
  }

  VertexSet next = set_union(cut.sep, lift_terminals(left_graph, left_child.new_terminals));
  next = set_union(next, right_new_terms);
  out.kind = ReductionOutcome::Kind::NewTerminals;
  out.new_terminals = std::move(next);
  return out;
}

ResolvedConfig resolve(const Graph& g, int k, const ReduceConfig& cfg, FlowLedger* ledger,
                       std::unique_ptr<SparseCutFinder>& owned_finder) {
  ResolvedConfig rc;
  int lg = std::max(3, ceil_log2(std::max(2, g.n())));
  rc.phi = cfg.phi.num > 0 ? cfg.phi : Ratio{1, static_cast<long long>(lg) * lg};
  rc.phibar = cfg.phibar.num > 0 ? cfg.phibar : Ratio{4 * rc.phi.num, rc.phi.den};
  if (!ratio_less(Ratio{0, 1}, rc.phi) || !ratio_less(rc.phi, rc.phibar) ||
      !ratio_less(rc.phibar, Ratio{1, 2}))
    throw std::invalid_argument("reduce: need 0 < phi < phibar < 1/2");
  if (cfg.finder) {
    rc.finder = cfg.finder;
  } else {
    owned_finder = std::make_unique<HeuristicSparseFinder>();
    rc.finder = owned_finder.get();
  }
  rc.cap = cfg.flow_cap ? cfg.flow_cap : std::optional<int>(k);
  rc.ledger = ledger;
  rc.threads = cfg.threads;
  rc.max_depth = cfg.max_depth;
  rc.early_exit = cfg.early_exit_allpairs;
  rc.shortcut = cfg.use_expander_shortcut;
  rc.k = k;
  return rc;
}

}  // namespace

ReductionOutcome reduce_terminal_slow(const Graph& g, const VertexSet& terminals, int k,
                                      const ReduceConfig& cfg) {
  if (k < 1) throw std::invalid_argument("reduce_terminal_slow: k must be >= 1");
  FlowLedger local;
  std::unique_ptr<SparseCutFinder> owned;
  ResolvedConfig rc = resolve(g, k, cfg, &local, owned);
  auto out = reduce_impl(g, terminals, rc, 0);
  if (out.kind == ReductionOutcome::Kind::Separator) ensure_separator(g, out.separator, k);
  // flag rounds that failed to halve: the check_k driver settles those exactly
  out.halving_fallback = out.kind == ReductionOutcome::Kind::NewTerminals &&
                         2 * out.new_terminals.size() > terminals.size();
  if (cfg.ledger) cfg.ledger->add(local.snapshot());
  return out;
}

CheckKResult check_k_connectivity(const Graph& g, int k, ReduceConfig cfg) {
  if (k < 1) throw std::invalid_argument("check_k_connectivity: k must be >= 1");
  FlowLedger local;
  std::unique_ptr<SparseCutFinder> owned;
  ResolvedConfig rc = resolve(g, k, cfg, &local, owned);

  CheckKResult result;
  auto finish = [&](bool k_connected, VertexSet sep) {
    result.k_connected = k_connected;
    result.separator = std::move(sep);
    result.ledger = local.snapshot();
    if (cfg.ledger) cfg.ledger->add(result.ledger);
    if (!k_connected) ensure_separator(g, result.separator, k);
    return result;
  };

  if (g.n() <= 1) return finish(true, {});
  if (!g.is_connected()) return finish(false, {});  // κ = 0: the empty separator
  if (g.is_complete()) return finish(true, {});     // κ = n-1

  VertexSet terminals(g.n());
  for (int v = 0; v < g.n(); ++v) terminals[v] = v;

  const int max_rounds = 2 * ceil_log2(std::max(2, g.n())) + 2;
  for (int round = 0; round < max_rounds; ++round) {
    auto out = reduce_impl(g, terminals, rc, 0);
    ++result.rounds;
    if (out.kind == ReductionOutcome::Kind::Separator) return finish(false, out.separator);
    VertexSet next = out.new_terminals;
    if (next.size() <= 1) return finish(true, {});
    if (2 * next.size() > terminals.size()) {
      // Reduction failed to halve the terminal set; settle the current
      // terminal set exactly instead of risking a stall.
      result.halving_fallback = true;
      auto settled = allpairs_base(g, terminals, rc);
      if (settled.kind == ReductionOutcome::Kind::Separator)
        return finish(false, settled.separator);
      return finish(true, {});
    }
    terminals = std::move(next);
  }
  result.halving_fallback = true;
  auto settled = allpairs_base(g, terminals, rc);
  if (settled.kind == ReductionOutcome::Kind::Separator) return finish(false, settled.separator);
  return finish(true, {});
}

}  // namespace vct
