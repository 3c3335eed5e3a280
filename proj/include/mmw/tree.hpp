#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmw/errors.hpp"

namespace mmw {

using Node = int;

struct TreeEdge {
  Node a = 0;
  Node b = 0;
  friend auto operator<=>(const TreeEdge&, const TreeEdge&) = default;
};

inline TreeEdge normalized(TreeEdge e) { return e.a <= e.b ? e : TreeEdge{e.b, e.a}; }

// A tree whose nodes all have degree 1 or 3, on nodes 0..node_count-1.
// The constructor checks the invariant and throws MalformedTree otherwise.
// Nodes may carry display names, which only matter for serialization.
class TernaryTree {
 public:
  TernaryTree() = default;
  TernaryTree(int node_count, std::vector<TreeEdge> edges, std::vector<std::string> names = {});

  int node_count() const { return node_count_; }
  bool empty() const { return node_count_ == 0; }
  // Edges in insertion order, each normalized to a <= b.
  const std::vector<TreeEdge>& edges() const { return edges_; }
  const std::vector<Node>& neighbors(Node v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Node v) const { return static_cast<int>(neighbors(v).size()); }
  bool is_leaf(Node v) const { return degree(v) == 1; }
  std::vector<Node> leaves() const;

  bool has_names() const { return !names_.empty(); }
  std::string name(Node v) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Node> find_by_name(const std::string& name) const;

  // Index into edges() of {a, b}, if present.
  std::optional<std::size_t> edge_index(Node a, Node b) const;

 private:
  int node_count_ = 0;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<Node>> adj_;
  std::vector<std::string> names_;
};

// Node set of the component containing `start` after deleting `removed`.
std::vector<char> component_without_edge(const TernaryTree& t, Node start, TreeEdge removed);

}  // namespace mmw
