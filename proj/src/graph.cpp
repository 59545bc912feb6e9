#include "vct/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace vct {

VertexSet normalized(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

long long intersection_size(const VertexSet& a, const VertexSet& b) {
  long long count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list, bool dedupe) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(n, {});
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                              " outside [0," + std::to_string(n) + ")");
    if (u == v) {
      if (!dedupe) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      continue;  // dedupe mode drops loops
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nbrs = adj_[v];
    std::sort(nbrs.begin(), nbrs.end());
    auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end()) {
      if (!dedupe)
        throw std::invalid_argument("duplicate edge {" + std::to_string(v) + "," +
                                    std::to_string(*dup) + "}");
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    m_ += nbrs.size();
  }
  m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> removed(n_, 0);
  return components_after_removal(*this, removed).second == 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

// Strips comments and whitespace-only lines, keeping 1-based line numbers.
struct LineReader {
  std::istream& in;
  char comment;
  int line_no = 0;

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      size_t start = raw.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (raw[start] == comment) continue;
      out = raw;
      return true;
    }
    return false;
  }
};

Graph parse_edge_list(std::istream& in, bool dedupe) {
  LineReader reader{in, '#'};
  std::string line;
  if (!reader.next(line)) throw parse_error("empty input", reader.line_no);
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw parse_error("expected header \"n m\"", reader.line_no);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(line)) throw parse_error("expected " + std::to_string(m) + " edges, got " +
                                              std::to_string(i), reader.line_no);
    std::istringstream ss(line);
    long long u, v;
    if (!(ss >> u >> v)) throw parse_error("expected \"u v\"", reader.line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw parse_error("vertex id out of range [0," + std::to_string(n) + ")", reader.line_no);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (reader.next(line)) throw parse_error("trailing content after edge list", reader.line_no);
  try {
    return Graph(static_cast<int>(n), edges, dedupe);
  } catch (const std::exception& e) {
    throw parse_error(e.what());
  }
}

Graph parse_dimacs(std::istream& in, bool dedupe) {
  LineReader reader{in, 'c'};
  std::string line;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (reader.next(line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "p") {
      std::string kind;
      if (!(ss >> kind >> n >> m) || n < 0 || m < 0)
        throw parse_error("expected \"p edge n m\"", reader.line_no);
    } else if (tag == "e") {
      long long u, v;
      if (!(ss >> u >> v)) throw parse_error("expected \"e u v\"", reader.line_no);
      if (n < 0) throw parse_error("edge before problem line", reader.line_no);
      if (u < 1 || u > n || v < 1 || v > n)
        throw parse_error("vertex id out of range [1," + std::to_string(n) + "]", reader.line_no);
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw parse_error("unknown line tag \"" + tag + "\"", reader.line_no);
    }
  }
  if (n < 0) throw parse_error("missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    throw parse_error("header declares " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  try {
    return Graph(static_cast<int>(n), edges, dedupe);
  } catch (const std::exception& e) {
    throw parse_error(e.what());
  }
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat fmt, bool dedupe) {
  return fmt == GraphFormat::EdgeList ? parse_edge_list(in, dedupe) : parse_dimacs(in, dedupe);
}

Graph parse_graph_text(const std::string& text, GraphFormat fmt, bool dedupe) {
  std::istringstream in(text);
  return parse_graph(in, fmt, dedupe);
}

Graph load_graph_file(const std::string& path, bool dedupe) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  // Sniff: DIMACS files open with a 'c' comment or the 'p' problem line.
  char first = 0;
  in >> first;
  in.seekg(0);
  GraphFormat fmt = (first == 'p' || first == 'c') ? GraphFormat::Dimacs : GraphFormat::EdgeList;
  return parse_graph(in, fmt, dedupe);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::pair<std::vector<int>, int> components_after_removal(const Graph& g,
                                                          const std::vector<char>& removed) {
  std::vector<int> label(g.n(), -1);
  std::vector<int> stack;
  int count = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (removed[s] || label[s] >= 0) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (removed[w] || label[w] >= 0) continue;
        label[w] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return {std::move(label), count};
}

bool is_separator(const Graph& g, const VertexSet& s) {
  std::vector<char> removed(g.n(), 0);
  for (int v : s) removed[v] = 1;
  auto [label, count] = components_after_removal(g, removed);
  (void)label;
  return count >= 2;
}

VertexCut cut_from_separator(const Graph& g, const VertexSet& s) {
  std::vector<char> removed(g.n(), 0);
  for (int v : s) removed[v] = 1;
  auto [label, count] = components_after_removal(g, removed);
  if (count < 2) throw invariant_error("cut_from_separator: input set is not a separator");
  int left_label = -1;
  for (int v = 0; v < g.n(); ++v) {
    if (!removed[v]) {
      left_label = label[v];  // component of the smallest surviving id
      break;
    }
  }
  VertexCut cut;
  cut.sep = s;
  for (int v = 0; v < g.n(); ++v) {
    if (removed[v]) continue;
    (label[v] == left_label ? cut.left : cut.right).push_back(v);
  }
  return cut;
}

bool validate_cut(const Graph& g, const VertexCut& cut) {
  if (cut.left.empty() || cut.right.empty()) return false;
  std::vector<int> where(g.n(), -1);
  auto place = [&](const VertexSet& part, int tag) {
    for (int v : part) {
      if (v < 0 || v >= g.n() || where[v] != -1) return false;
      where[v] = tag;
    }
    return true;
  };
  if (!place(cut.left, 0) || !place(cut.sep, 1) || !place(cut.right, 2)) return false;
  for (int v = 0; v < g.n(); ++v)
    if (where[v] == -1) return false;
  for (int u : cut.left)
    for (int w : g.neighbors(u))
      if (where[w] == 2) return false;
  return true;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> id_of(g.n(), -1);
  for (size_t i = 0; i < keep.size(); ++i) id_of[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < keep.size(); ++i)
    for (int w : g.neighbors(keep[i]))
      if (id_of[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), id_of[w]);
  return Graph(static_cast<int>(keep.size()), edges);
}

std::pair<int, int> min_degree_vertex(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("empty graph");
  int best = 0;
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) < g.degree(best)) best = v;
  return {best, g.degree(best)};
}

}  // namespace vct
