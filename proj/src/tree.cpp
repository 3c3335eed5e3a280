#include "mmw/tree.hpp"

#include <algorithm>

namespace mmw {

TernaryTree::TernaryTree(int node_count, std::vector<TreeEdge> edges,
                         std::vector<std::string> names)
    : node_count_(node_count), names_(std::move(names)) {
  if (node_count < 0) throw MalformedTree("negative node count");
  if (!names_.empty() && static_cast<int>(names_.size()) != node_count) {
    throw MalformedTree("node name list does not match node count");
  }
  if (node_count == 0) {
    if (!edges.empty()) throw MalformedTree("edges given for an empty tree");
    return;
  }
  if (node_count == 1) throw MalformedTree("a single node has degree 0");
  if (static_cast<int>(edges.size()) != node_count - 1) {
    throw MalformedTree("a tree on " + std::to_string(node_count) + " nodes needs " +
                        std::to_string(node_count - 1) + " edges, got " +
                        std::to_string(edges.size()));
  }
  adj_.assign(static_cast<std::size_t>(node_count), {});
  for (TreeEdge& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= node_count || e.b >= node_count) {
      throw MalformedTree("tree edge endpoint out of range");
    }
    if (e.a == e.b) throw MalformedTree("tree edge is a loop at node " + std::to_string(e.a));
    e = normalized(e);
    auto& na = adj_[static_cast<std::size_t>(e.a)];
    if (std::find(na.begin(), na.end(), e.b) != na.end()) {
      throw MalformedTree("duplicate tree edge {" + std::to_string(e.a) + "," +
                          std::to_string(e.b) + "}");
    }
    na.push_back(e.b);
    adj_[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  edges_ = std::move(edges);
  // n-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
  std::vector<Node> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Node v = stack.back();
    stack.pop_back();
    for (Node w : adj_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != node_count) throw MalformedTree("tree is not connected");
  for (Node v = 0; v < node_count; ++v) {
    const int d = degree(v);
    if (d != 1 && d != 3) {
      throw MalformedTree("node " + name(v) + " has degree " + std::to_string(d) +
                          "; ternary trees allow only 1 or 3");
    }
  }
}

std::vector<Node> TernaryTree::leaves() const {
  std::vector<Node> out;
  for (Node v = 0; v < node_count_; ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::string TernaryTree::name(Node v) const {
  if (names_.empty()) return std::to_string(v);
  return names_.at(static_cast<std::size_t>(v));
}

std::optional<Node> TernaryTree::find_by_name(const std::string& name) const {
  for (Node v = 0; v < node_count_; ++v) {
    if (this->name(v) == name) return v;
  }
  return std::nullopt;
}

std::optional<std::size_t> TernaryTree::edge_index(Node a, Node b) const {
  const TreeEdge key = normalized({a, b});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] == key) return i;
  }
  return std::nullopt;
}

std::vector<char> component_without_edge(const TernaryTree& t, Node start, TreeEdge removed) {
  removed = normalized(removed);
  std::vector<char> in(static_cast<std::size_t>(t.node_count()), 0);
  std::vector<Node> stack{start};
  in[static_cast<std::size_t>(start)] = 1;
  while (!stack.empty()) {
    const Node v = stack.back();
    stack.pop_back();
    for (Node w : t.neighbors(v)) {
      if (normalized({v, w}) == removed || in[static_cast<std::size_t>(w)]) continue;
      in[static_cast<std::size_t>(w)] = 1;
      stack.push_back(w);
    }
  }
  return in;
}

}  // namespace mmw
