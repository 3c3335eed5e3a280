#pragma once

#include <array>
#include <climits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmw/graph.hpp"
#include "mmw/tree.hpp"

namespace mmw {

// A subtree of a host tree, stored by its edges.
using EdgeSubtree = std::vector<TreeEdge>;
using NodeSet = std::vector<Node>;

// Ternary host tree with one subtree per graph vertex (indexed by vertex).
struct TreeRepresentation {
  TernaryTree host;
  std::vector<EdgeSubtree> subtrees;
};

struct EdgeLoadProfile {
  std::vector<int> load;  // indexed like host.edges()
  int max_load = 0;
};

struct RepViolation {
  enum class Kind {
    kEdgeNotInHost,
    kTrivialSubtree,
    kDisconnectedSubtree,
    kAdjacentDisjoint,  // uv in E(G) but T_u and T_v share no node
    kOverloadedEdge,    // more than k subtrees use a host edge
  };
  Kind kind;
  Vertex u = -1;
  Vertex v = -1;
  std::optional<TreeEdge> edge;
  int load = 0;
  std::string message;
};

std::string to_string(RepViolation::Kind kind);

struct RepValidation {
  bool pass = true;
  std::vector<RepViolation> violations;
  EdgeLoadProfile profile;
};

// Checks nontriviality and connectivity of every subtree, that adjacent
// vertices get intersecting subtrees, and that no host edge carries more than
// k subtrees. Violations are collected, not thrown; a subtree list that does
// not match V(g) or an empty host throws MalformedTree.
RepValidation validate_tree_representation(const Graph& g, const TreeRepresentation& tr,
                                           int k = INT_MAX);

NodeSet subtree_nodes(const EdgeSubtree& s);

// A host node lying in every member, or nullopt when none exists. Pairwise
// intersecting members always share a node. Throws InvalidInput for members
// that are not connected in the host.
std::optional<Node> helly_intersection(const TernaryTree& host, std::span<const NodeSet> members);
std::optional<Node> helly_intersection(const TernaryTree& host,
                                       std::span<const EdgeSubtree> members);

// Split of the clique into three parts of equal size k such that every
// independent vertex of I_j has its neighborhood inside C_j.
struct CliqueTripartition {
  std::array<VertexList, 3> c_parts;
  std::array<VertexList, 3> i_parts;
  int k() const { return static_cast<int>(c_parts[0].size()); }
};

// Throws InvalidInput unless parts is such a split for sg. Returns the
// independent vertices with empty neighborhood, which satisfy the
// containment condition vacuously.
VertexList check_clique_tripartition(const SplitGraph& sg, const CliqueTripartition& parts);

// Width-k tree-representation of a split graph with |C| = 3k from a clique
// tripartition. The host has |V| + (|V| - 3) + 1 nodes named "b:x" for every
// vertex x, "a:x" for every x except the last clique vertex of each part, and
// "a0". Each branch j is the path over I_j then C_j (minus its last vertex)
// hanging off a0. Independent vertices get the single edge a:w - b:w; clique
// vertices get the path from b:c to a0.
//
// Throws UnsupportedCase when a branch would be empty (k = 1 and I_j empty).
TreeRepresentation build_tree_representation(const SplitGraph& sg,
                                             const CliqueTripartition& parts);

struct CliqueBound {
  Node common_node = 0;  // a node shared by every clique subtree
  int bound = 0;         // ceil(|C| / 3)
  int max_load = 0;
  // Number of clique subtrees on each host edge at common_node.
  std::vector<std::pair<TreeEdge, int>> incident_clique_loads;
};

// Pigeonhole lower bound on the width of any representation of sg: all
// clique subtrees meet at one node, which has at most three incident edges.
// Throws Contradiction when no common node exists or the bound is violated.
CliqueBound lower_bound_from_clique(const SplitGraph& sg, const TreeRepresentation& tr);

}  // namespace mmw
