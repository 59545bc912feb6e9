#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vct {

/// Malformed input; carries the 1-based line number when known.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line = -1)
      : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A result failed re-validation against the graph it was produced from.
/// This is the "must never fire" class of error (CLI exit code 3).
class invariant_error : public std::runtime_error {
 public:
  explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

VertexSet normalized(std::vector<int> ids);
bool set_contains(const VertexSet& s, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
long long intersection_size(const VertexSet& a, const VertexSet& b);

/// Exact nonnegative rational, kept unreduced; den > 0.
struct Ratio {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline bool ratio_less(Ratio a, Ratio b) { return a.num * b.den < b.num * a.den; }
inline bool ratio_less_eq(Ratio a, Ratio b) { return a.num * b.den <= b.num * a.den; }

/// Simple undirected graph on vertex ids 0..n-1 with sorted adjacency lists.
/// Immutable after construction, safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Rejects out-of-range ids and self-loops. Duplicate edges are rejected
  /// unless dedupe is set, in which case they collapse to one edge.
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list, bool dedupe = false);

  int n() const { return n_; }
  long long m() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  bool is_complete() const { return m_ == static_cast<long long>(n_) * (n_ - 1) / 2; }
  bool is_connected() const;

  /// All edges as (u,v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
};

enum class GraphFormat { EdgeList, Dimacs };

/// EdgeList: header "n m", then m lines "u v" (0-based). '#' starts a comment.
/// DIMACS:   "p edge n m" header, "e u v" lines (1-based), 'c' comments.
Graph parse_graph(std::istream& in, GraphFormat fmt, bool dedupe = false);
Graph parse_graph_text(const std::string& text, GraphFormat fmt, bool dedupe = false);

/// Reads a graph file, sniffing DIMACS by a leading 'p'/'c' line.
Graph load_graph_file(const std::string& path, bool dedupe = false);

/// Canonical edge-list encoding; parse(serialize(g)) == g.
std::string serialize_edge_list(const Graph& g);

/// Vertex cut (L,S,R): partition of V with no edge between L and R,
/// L and R nonempty. S is the separator.
struct VertexCut {
  VertexSet left;
  VertexSet sep;
  VertexSet right;
};

/// Partition + no L-R edge + nonempty sides, checked against g.
bool validate_cut(const Graph& g, const VertexCut& cut);

/// True iff G - S has at least two connected components (and at least two
/// vertices survive). S may be empty: a disconnected graph has ∅ as separator.
bool is_separator(const Graph& g, const VertexSet& s);

/// Canonicalizes a separator into (L,S,R): L is the component of G - S
/// containing the smallest surviving id, R the rest. Throws invariant_error
/// if s is not a separator.
VertexCut cut_from_separator(const Graph& g, const VertexSet& s);

/// (vertex, degree) of minimum degree, ties broken by smallest id.
std::pair<int, int> min_degree_vertex(const Graph& g);

/// Component labels of G - removed (removed[v] != 0 excludes v, label -1).
/// Returns (labels, component count).
std::pair<std::vector<int>, int> components_after_removal(const Graph& g,
                                                          const std::vector<char>& removed);

/// Subgraph induced on `keep` (sorted). Vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace vct
