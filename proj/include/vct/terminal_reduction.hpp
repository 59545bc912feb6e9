#pragma once

#include <memory>
#include <optional>
#include <string>

#include "vct/maxflow.hpp"

namespace vct {

/// h_T(L,S,R) = |S| / min{|T∩(L∪S)|, |T∩(R∪S)|}, exact.
/// Throws when both side terminal counts are zero.
Ratio terminal_expansion(const VertexCut& cut, const VertexSet& terminals);

enum class Side { Left, Right };

/// One side of a cut with the other side replaced by a k-clique glued to S
/// by a biclique. Clique vertices are fresh ids tagged with parent id -1;
/// clique_rep is the smallest parent id of the replaced side, standing in
/// for any clique vertex when terminal sets are mapped back.
struct SideGraph {
  Graph graph;
  Side side = Side::Left;
  VertexSet clique;        // side-graph ids, contiguous at the top
  int special_terminal = 0;  // smallest clique id (t_R for Left, t_L for Right)
  std::vector<int> to_parent;  // side id -> parent id, -1 for clique vertices
  int clique_rep = 0;
  // maps parent ids of the kept side to side-graph ids
  VertexSet kept_parent_ids;   // sorted; side id of kept_parent_ids[i] is i
};

/// Kept side (L∪S for Left, S∪R for Right) induced, S-S edges dropped when
/// remove_sep_edges is set, plus the k-clique and the S × clique biclique.
SideGraph build_side_graph(const Graph& g, const VertexCut& cut, int k, Side side,
                           bool remove_sep_edges);

/// Side-graph id of a kept parent vertex.
int side_id_of_parent(const SideGraph& sg, int parent_id);

/// Maps a side-graph separator of size < k back to parent ids, discarding
/// clique vertices. The result is a separator of the parent graph.
VertexSet lift_separator(const SideGraph& sg, const VertexSet& side_separator);

/// Maps a side-graph terminal set to parent ids; clique vertices map to
/// clique_rep so the witness of a Steiner cut through the replaced side
/// survives the translation.
VertexSet lift_terminals(const SideGraph& sg, const VertexSet& side_terminals);

/// Pluggable (T,φ̄)-sparse-cut finder: either returns a sparse cut or reports
/// that none was found ("expander"). Cut orientation: the left side carries
/// at most as many terminals (counting S) as the right.
class SparseCutFinder {
 public:
  struct Outcome {
    bool expander = true;
    VertexCut cut;                // valid when !expander; h_T(cut) < phibar
    bool right_expander = false;  // certified: G[S∪R] is a (T∩(S∪R), 2φ)-expander
  };

  virtual ~SparseCutFinder() = default;
  virtual Outcome find(const Graph& g, const VertexSet& terminals, Ratio phibar, Ratio phi) = 0;
  virtual std::string name() const = 0;
};

/// Exhaustive separator enumeration with optimal component grouping; exact,
/// and able to certify the right-side expander. Refuses n above the cap.
class BruteSparseFinder : public SparseCutFinder {
 public:
  explicit BruteSparseFinder(int max_n = 18) : max_n_(max_n) {}
  Outcome find(const Graph& g, const VertexSet& terminals, Ratio phibar, Ratio phi) override;
  std::string name() const override { return "brute"; }

 private:
  int max_n_;
};

/// Sweep cuts over BFS orderings from a few seeds; returns the best prefix
/// cut when its expansion beats phibar, else reports expander (which is a
/// heuristic claim: soundness of callers never depends on it).
class HeuristicSparseFinder : public SparseCutFinder {
 public:
  Outcome find(const Graph& g, const VertexSet& terminals, Ratio phibar, Ratio phi) override;
  std::string name() const override { return "heuristic"; }
};

/// Always reports expander, sending callers straight to the unbalanced
/// subroutine. Useful on instances whose interesting cuts are known to be
/// terminal-unbalanced.
class ExpanderOnlyFinder : public SparseCutFinder {
 public:
  Outcome find(const Graph&, const VertexSet&, Ratio, Ratio) override { return {}; }
  std::string name() const override { return "none"; }
};

/// "brute", "heuristic" or "none".
std::unique_ptr<SparseCutFinder> make_finder(const std::string& name);

struct ReduceConfig {
  Ratio phi{0, 1};     // {0,1} = use the default 1/⌈log₂n⌉² (clamped at n < 8)
  Ratio phibar{0, 1};  // default 4·phi
  SparseCutFinder* finder = nullptr;  // default: heuristic
  std::optional<int> flow_cap;        // set to k by the drivers
  FlowLedger* ledger = nullptr;
  int threads = 1;
  int max_depth = 64;                  // recursion guard; all-pairs fallback past it
  bool early_exit_allpairs = true;     // first pair below k wins in base cases
  bool use_expander_shortcut = true;   // certified right expander -> one unbalanced call
};

struct ReductionOutcome {
  enum class Kind { Separator, NewTerminals, KConnected };
  Kind kind = Kind::NewTerminals;
  VertexSet separator;       // Kind::Separator: verified, size < k
  VertexSet new_terminals;   // Kind::NewTerminals (empty = no T-Steiner cut < k)
  bool halving_fallback = false;
  int depth_reached = 0;
};

/// One round of the recursive terminal reduction: a separator of size < k,
/// or a terminal set T' with κ(T') < k whenever κ(T) < k.
ReductionOutcome reduce_terminal_slow(const Graph& g, const VertexSet& terminals, int k,
                                      const ReduceConfig& cfg);

struct CheckKResult {
  bool k_connected = false;
  VertexSet separator;     // when !k_connected; verified, size < k
  LedgerSnapshot ledger;
  int rounds = 0;
  bool halving_fallback = false;
};

/// Repeats reduce_terminal_slow from T = V until a separator of size < k
/// appears or the terminal set empties (k-connected). Disconnected graphs
/// yield the empty separator.
CheckKResult check_k_connectivity(const Graph& g, int k, ReduceConfig cfg = {});

}  // namespace vct
