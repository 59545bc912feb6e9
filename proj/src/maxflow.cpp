#include "vct/maxflow.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <vector>

namespace vct {

namespace {

// Dinic blocking flow. Arc i and its reverse are paired as i ^ 1.
class Dinic {
 public:
  explicit Dinic(int n) : adj_(n), level_(n), iter_(n) {}

  void add_arc(int from, int to, int cap) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  int nodes() const { return static_cast<int>(adj_.size()); }
  long long forward_arcs() const { return static_cast<long long>(arcs_.size()) / 2; }

  // Augments until no path remains or total flow reaches `limit`.
  int run(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (flow < limit) {
        int pushed = dfs(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int id : adj_[u]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int id : adj_[u]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int u, int t, int limit) {
    if (u == t) return limit;
    for (int& i = iter_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      int id = adj_[u][i];
      Arc& a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[u] + 1) continue;
      int pushed = dfs(a.to, t, std::min(limit, a.cap));
      if (pushed > 0) {
        a.cap -= pushed;
        arcs_[id ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

constexpr int kSource = 0;
constexpr int kSink = 1;

}  // namespace

SeparatorResult min_vertex_separator(const Graph& g, const VertexSet& sources,
                                     const VertexSet& sinks, std::optional<int> cap,
                                     FlowLedger* ledger) {
  if (sources.empty() || sinks.empty())
    throw std::invalid_argument("min_vertex_separator: empty source or sink set");
  if (!set_intersection(sources, sinks).empty())
    throw std::invalid_argument("min_vertex_separator: source and sink sets intersect");

  const int n = g.n();
  const int inf = n + 1;  // no finite cut can use an edge arc

  // role: 0 = source side, 1 = sink side, -1 = interior (split).
  std::vector<int> role(n, -1);
  for (int v : sources) role[v] = 0;
  for (int v : sinks) role[v] = 1;
  for (int a : sources)
    for (int w : g.neighbors(a))
      if (role[w] == 1) throw no_separator_error(a, w);

  std::vector<int> in_node(n, -1), out_node(n, -1);
  int next = 2;
  for (int v = 0; v < n; ++v) {
    if (role[v] == 0) {
      in_node[v] = out_node[v] = kSource;
    } else if (role[v] == 1) {
      in_node[v] = out_node[v] = kSink;
    } else {
      in_node[v] = next++;
      out_node[v] = next++;
    }
  }

  Dinic net(next);
  for (int v = 0; v < n; ++v)
    if (role[v] == -1) net.add_arc(in_node[v], out_node[v], 1);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (out_node[u] == in_node[v]) continue;  // both endpoints merged into the same terminal
      net.add_arc(out_node[u], in_node[v], inf);
    }
  }
  if (ledger) ledger->record(net.nodes(), net.forward_arcs());

  const int limit = cap.value_or(inf);
  int flow = net.run(kSource, kSink, limit);
  if (cap && flow >= *cap) return {true, *cap, {}};

  auto reach = net.residual_reachable(kSource);
  SeparatorResult result;
  result.flow = flow;
  for (int v = 0; v < n; ++v)
    if (role[v] == -1 && reach[in_node[v]] && !reach[out_node[v]]) result.separator.push_back(v);

  // strong duality on the split network
  if (static_cast<int>(result.separator.size()) != flow)
    throw invariant_error("min_vertex_separator: cut size disagrees with the flow value");
#ifndef NDEBUG
  if (flow > 0 || !g.is_connected()) {
    std::vector<char> removed(n, 0);
    for (int v : result.separator) removed[v] = 1;
    auto [label, count] = components_after_removal(g, removed);
    (void)count;
    for (int a : sources)
      for (int b : sinks) assert(label[a] != label[b]);
  }
#endif
  return result;
}

int kappa_pair(const Graph& g, int u, int v, FlowLedger* ledger) {
  if (u == v) throw std::invalid_argument("kappa_pair: u == v");
  if (g.has_edge(u, v)) return g.n() - 1;
  return min_vertex_separator(g, {u}, {v}, std::nullopt, ledger).flow;
}

namespace detail {

SeparatorResult min_separator_to_boundary(const Graph& g, int src, const VertexSet& region,
                                          const VertexSet& boundary, std::optional<int> cap,
                                          FlowLedger* ledger) {
  const int n = g.n();
  const int inf = n + 1;

  // role: 0 = source, 1 = member of region (split), 2 = boundary (split,
  // drains to sink), -1 = outside the instance.
  std::vector<int> role(n, -1);
  for (int v : region) role[v] = 1;
  for (int v : boundary) role[v] = 2;
  if (role[src] != 1) throw std::invalid_argument("src must lie in the region");
  role[src] = 0;

  std::vector<int> in_node(n, -1), out_node(n, -1);
  int next = 2;
  for (int v = 0; v < n; ++v) {
    if (role[v] == 0) {
      in_node[v] = out_node[v] = kSource;
    } else if (role[v] > 0) {
      in_node[v] = next++;
      out_node[v] = next++;
    }
  }

  Dinic net(next);
  for (int v = 0; v < n; ++v) {
    if (role[v] <= 0) continue;
    net.add_arc(in_node[v], out_node[v], 1);
    if (role[v] == 2) net.add_arc(out_node[v], kSink, inf);
  }
  for (int u = 0; u < n; ++u) {
    if (role[u] < 0) continue;
    for (int v : g.neighbors(u)) {
      if (role[v] < 0) continue;
      if (role[u] == 2 && role[v] == 2) continue;  // edges inside the boundary are irrelevant
      net.add_arc(out_node[u], in_node[v], inf);
    }
  }
  if (ledger) ledger->record(net.nodes(), net.forward_arcs());

  const int limit = cap.value_or(inf);
  int flow = net.run(kSource, kSink, limit);
  if (cap && flow >= *cap) return {true, *cap, {}};

  auto reach = net.residual_reachable(kSource);
  SeparatorResult result;
  result.flow = flow;
  for (int v = 0; v < n; ++v)
    if (role[v] > 0 && reach[in_node[v]] && !reach[out_node[v]]) result.separator.push_back(v);
  if (static_cast<int>(result.separator.size()) != flow)
    throw invariant_error("min_separator_to_boundary: cut size disagrees with the flow value");
  return result;
}

}  // namespace detail

}  // namespace vct
