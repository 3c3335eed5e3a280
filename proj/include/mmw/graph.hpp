#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mmw/errors.hpp"

namespace mmw {

using Vertex = int;
using VertexList = std::vector<Vertex>;

// Subset of a ground set of at most 64 elements.
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

inline Mask bit(int i) { return Mask{1} << i; }
inline Mask full_mask(int n) { return n >= kMaskBits ? ~Mask{0} : bit(n) - 1; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }
VertexList mask_to_list(Mask m);
Mask list_to_mask(std::span<const Vertex> vs, int n);

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// edges are kept normalized (u < v) and sorted.
class Graph {
 public:
  Graph() = default;
  // Accepts edges in any orientation and order. Throws InvalidInput on
  // self-loops, duplicates or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int n() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexList& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // Adjacency bitmask; only available when n <= 64.
  bool has_masks() const { return n_ <= kMaskBits; }
  Mask adjacency_mask(Vertex v) const { return adj_mask_[static_cast<std::size_t>(v)]; }

  // Image of the graph under vertex map perm (old vertex i becomes perm[i]).
  Graph relabeled(std::span<const Vertex> perm) const;
  Graph with_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexList> adj_;
  std::vector<Mask> adj_mask_;
};

void check_vertex(const Graph& g, Vertex v);

// Vertices adjacent to at least one member of s. Members of s are included
// when they have a neighbor inside s.
VertexList neighborhood(const Graph& g, std::span<const Vertex> s);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

bool is_connected(const Graph& g);

// Edge bitmask over the pairs (0,1),(0,2),...,(0,n-1),(1,2),... in that order.
Graph graph_from_edge_mask(int n, std::uint64_t edge_bits);

inline constexpr int kDefaultSmallGraphCap = 7;

// Calls visit(edge_bits, graph) for all 2^(n choose 2) labeled graphs on n
// vertices, ordered by edge bitmask. Throws ResourceLimit when n > cap.
void for_each_small_graph(int n, const std::function<void(std::uint64_t, const Graph&)>& visit,
                          int cap = kDefaultSmallGraphCap);
std::vector<Graph> enumerate_small_graphs(int n, int cap = kDefaultSmallGraphCap);

// Graph plus a certified clique / independent-set partition.
class SplitGraph {
 public:
  const Graph& graph() const { return graph_; }
  const VertexList& clique() const { return clique_; }
  const VertexList& independent() const { return independent_; }
  bool in_clique(Vertex v) const { return in_clique_.at(static_cast<std::size_t>(v)) != 0; }

 private:
  friend SplitGraph validate_split(const Graph&, std::span<const Vertex>, std::span<const Vertex>);
  Graph graph_;
  VertexList clique_;
  VertexList independent_;
  std::vector<char> in_clique_;
};

class SplitError : public InvalidInput {
 public:
  enum class Kind { kNotPartition, kNonCliquePair, kNonIndependentPair };
  SplitError(Kind kind, Vertex u, Vertex v, const std::string& what)
      : InvalidInput(what), kind_(kind), u_(u), v_(v) {}
  Kind kind() const { return kind_; }
  // For kNotPartition, u is the offending vertex and v is -1.
  Vertex u() const { return u_; }
  Vertex v() const { return v_; }

 private:
  Kind kind_;
  Vertex u_;
  Vertex v_;
};

// Certifies (clique, independent) as a split partition of g, or throws
// SplitError naming the first violated vertex or pair.
SplitGraph validate_split(const Graph& g, std::span<const Vertex> clique,
                          std::span<const Vertex> independent);

}  // namespace mmw
