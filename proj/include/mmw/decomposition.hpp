#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mmw/cut.hpp"
#include "mmw/graph.hpp"
#include "mmw/tree.hpp"

namespace mmw {

// Ternary tree plus a bijection from its leaves to the ground set 0..|X|-1.
class BranchDecomposition {
 public:
  BranchDecomposition() = default;
  // leaf_label[v] is the ground element at leaf v, or -1 for internal nodes.
  // Throws InvalidInput unless the labels biject the leaves onto 0..|X|-1.
  BranchDecomposition(TernaryTree tree, std::vector<int> leaf_label);

  const TernaryTree& tree() const { return tree_; }
  const std::vector<int>& leaf_labels() const { return leaf_label_; }
  int label(Node v) const { return leaf_label_.at(static_cast<std::size_t>(v)); }
  int ground_size() const { return ground_size_; }

 private:
  TernaryTree tree_;
  std::vector<int> leaf_label_;
  int ground_size_ = 0;
};

// Ground-set bipartition induced by removing tree edge e; the first set is
// the side containing e.a.
std::pair<Mask, Mask> induced_partition(const BranchDecomposition& bd, TreeEdge e);

struct WidthResult {
  int width = 0;
  std::optional<BranchDecomposition> witness;
  std::optional<TreeEdge> critical_edge;
};

// Maximum cut value over the edges of bd; critical_edge is the first edge
// (in tree edge order) attaining it.
WidthResult f_width_of(const BranchDecomposition& bd, const CutFunction& cf);

inline constexpr int kDefaultDecompositionCap = 10;

// Every leaf-labeled ternary tree on x_size leaves, generated by inserting
// leaf i into each edge of every tree on leaves 0..i-1. Yields (2n-5)!!
// trees for n >= 3 and one tree for n = 2. visit returns false to stop.
void enumerate_decompositions(int x_size,
                              const std::function<bool(const BranchDecomposition&)>& visit,
                              int cap = kDefaultDecompositionCap);

std::uint64_t decomposition_count(int x_size);

struct SearchOptions {
  int cap = kDefaultDecompositionCap;
  int workers = 1;
};

// Minimum f-width over all branch-decompositions of the ground set, by
// branch-and-bound over the leaf-insertion order. The witness is the first
// optimal tree in enumeration order, independent of the worker count.
WidthResult exact_f_width(const CutFunction& cf, const SearchOptions& opts = {});

struct SolverCaps {
  int mmw_n = 10;
  int bw_m = 10;
  int tw_n = 12;
};

// Maximum matching width. Graphs with at most one vertex get width 0 and no witness.
WidthResult mmw_exact(const Graph& g, const SolverCaps& caps = {}, int workers = 1);

// Branch-width via the boundary function on E(G). Graphs with at most one
// edge get width 0.
WidthResult branchwidth_exact(const Graph& g, const SolverCaps& caps = {}, int workers = 1);

// Tree-width by dynamic programming over eliminated vertex sets.
// Graphs with no vertices get 0.
int treewidth_exact(const Graph& g, const SolverCaps& caps = {});

struct InequalityChainReport {
  int mmw = 0;
  int bw = 0;
  int tw = 0;
  bool mmw_le_bw = false;      // mmw <= max(bw, 1)
  bool bw_le_tw = false;       // max(bw, 1) <= tw + 1
  bool tw_le_3mmw = false;     // tw + 1 <= 3 mmw
  bool ok() const { return mmw_le_bw && bw_le_tw && tw_le_3mmw; }
};

// Requires g connected with at least one edge.
InequalityChainReport check_inequality_chain(const Graph& g, const SolverCaps& caps = {},
                                             int workers = 1);

}  // namespace mmw
