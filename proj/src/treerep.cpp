#include "mmw/treerep.hpp"

#include <algorithm>
#include <map>

namespace mmw {

std::string to_string(RepViolation::Kind kind) {
  switch (kind) {
    case RepViolation::Kind::kEdgeNotInHost: return "edge-not-in-host";
    case RepViolation::Kind::kTrivialSubtree: return "trivial-subtree";
    case RepViolation::Kind::kDisconnectedSubtree: return "disconnected-subtree";
    case RepViolation::Kind::kAdjacentDisjoint: return "adjacent-disjoint";
    case RepViolation::Kind::kOverloadedEdge: return "overloaded-edge";
  }
  return "unknown";
}

NodeSet subtree_nodes(const EdgeSubtree& s) {
  NodeSet out;
  for (const TreeEdge& e : s) {
    out.push_back(e.a);
    out.push_back(e.b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string edge_str(const TernaryTree& t, TreeEdge e) {
  return "{" + t.name(e.a) + "," + t.name(e.b) + "}";
}

// Connectivity of a node set inside the host (induced subgraph).
bool nodes_connected(const TernaryTree& host, const NodeSet& nodes) {
  if (nodes.empty()) return true;
  std::vector<char> member(static_cast<std::size_t>(host.node_count()), 0);
  for (Node v : nodes) member[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(member.size(), 0);
  std::vector<Node> stack{nodes.front()};
  seen[static_cast<std::size_t>(nodes.front())] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Node v = stack.back();
    stack.pop_back();
    for (Node w : host.neighbors(v)) {
      if (member[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == nodes.size();
}

// Edge-set connectivity: the edges form one component (checked via nodes,
// which is equivalent for a subgraph of a tree).
bool edges_connected(const EdgeSubtree& s) {
  if (s.empty()) return true;
  const NodeSet nodes = subtree_nodes(s);
  std::map<Node, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
  std::vector<std::size_t> parent(nodes.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = nodes.size();
  for (const TreeEdge& e : s) {
    const auto a = find(index[e.a]);
    const auto b = find(index[e.b]);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

RepValidation validate_tree_representation(const Graph& g, const TreeRepresentation& tr, int k) {
  const TernaryTree& host = tr.host;
  if (host.empty()) throw MalformedTree("host tree is empty");
  if (static_cast<int>(tr.subtrees.size()) != g.n()) {
    throw MalformedTree("representation has " + std::to_string(tr.subtrees.size()) +
                        " subtrees for a graph with " + std::to_string(g.n()) + " vertices");
  }
  RepValidation rep;
  rep.profile.load.assign(host.edges().size(), 0);
  std::vector<NodeSet> node_sets(tr.subtrees.size());
  using Kind = RepViolation::Kind;
  for (Vertex u = 0; u < g.n(); ++u) {
    const EdgeSubtree& s = tr.subtrees[static_cast<std::size_t>(u)];
    bool edges_ok = true;
    EdgeSubtree seen_edges;
    for (const TreeEdge& raw : s) {
      const TreeEdge e = normalized(raw);
      const auto idx = host.edge_index(e.a, e.b);
      if (!idx) {
        const bool in_range =
            e.a >= 0 && e.b >= 0 && e.a < host.node_count() && e.b < host.node_count();
        rep.violations.push_back({Kind::kEdgeNotInHost, u, -1, e, 0,
                                  "subtree of vertex " + std::to_string(u) + " uses " +
                                      (in_range ? edge_str(host, e) : std::string("an edge")) +
                                      " which is not a host edge"});
        edges_ok = false;
        continue;
      }
      if (std::find(seen_edges.begin(), seen_edges.end(), e) != seen_edges.end()) continue;
      seen_edges.push_back(e);
      ++rep.profile.load[*idx];
    }
    if (seen_edges.empty()) {
      rep.violations.push_back({Kind::kTrivialSubtree, u, -1, std::nullopt, 0,
                                "subtree of vertex " + std::to_string(u) + " has no edge"});
    } else if (edges_ok && !edges_connected(seen_edges)) {
      rep.violations.push_back({Kind::kDisconnectedSubtree, u, -1, std::nullopt, 0,
                                "subtree of vertex " + std::to_string(u) + " is disconnected"});
    }
    node_sets[static_cast<std::size_t>(u)] = subtree_nodes(seen_edges);
  }
  for (const Edge& e : g.edges()) {
    const NodeSet& a = node_sets[static_cast<std::size_t>(e.u)];
    const NodeSet& b = node_sets[static_cast<std::size_t>(e.v)];
    NodeSet common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) {
      rep.violations.push_back({Kind::kAdjacentDisjoint, e.u, e.v, std::nullopt, 0,
                                "adjacent vertices " + std::to_string(e.u) + " and " +
                                    std::to_string(e.v) + " have disjoint subtrees"});
    }
  }
  for (std::size_t i = 0; i < host.edges().size(); ++i) {
    const int load = rep.profile.load[i];
    rep.profile.max_load = std::max(rep.profile.max_load, load);
    if (load > k) {
      rep.violations.push_back({Kind::kOverloadedEdge, -1, -1, host.edges()[i], load,
                                "host edge " + edge_str(host, host.edges()[i]) + " carries " +
                                    std::to_string(load) + " subtrees, more than k=" +
                                    std::to_string(k)});
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

std::optional<Node> helly_intersection(const TernaryTree& host, std::span<const NodeSet> members) {
  const int n = host.node_count();
  for (const NodeSet& m : members) {
    for (Node v : m) {
      if (v < 0 || v >= n) throw InvalidInput("subtree node " + std::to_string(v) + " not in host");
    }
    if (!nodes_connected(host, m)) throw InvalidInput("subtree is not connected in the host");
    if (m.empty()) return std::nullopt;
  }
  if (n == 0) return std::nullopt;
  if (members.empty()) return Node{0};

  // Root the host at node 0. The highest node of each member is unique; if
  // any common node exists, the deepest of these tops is one.
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<Node> order{0};
  depth[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Node w : host.neighbors(order[i])) {
      if (depth[static_cast<std::size_t>(w)] < 0) {
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(order[i])] + 1;
        order.push_back(w);
      }
    }
  }
  Node deepest = -1;
  for (const NodeSet& m : members) {
    const Node top = *std::min_element(m.begin(), m.end(), [&](Node a, Node b) {
      return depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)];
    });
    if (deepest < 0 || depth[static_cast<std::size_t>(top)] > depth[static_cast<std::size_t>(deepest)]) {
      deepest = top;
    }
  }
  for (const NodeSet& m : members) {
    if (std::find(m.begin(), m.end(), deepest) == m.end()) return std::nullopt;
  }
  return deepest;
}

std::optional<Node> helly_intersection(const TernaryTree& host,
                                       std::span<const EdgeSubtree> members) {
  std::vector<NodeSet> sets;
  sets.reserve(members.size());
  for (const EdgeSubtree& s : members) {
    for (const TreeEdge& e : s) {
      if (!host.edge_index(e.a, e.b)) throw InvalidInput("subtree edge is not a host edge");
    }
    sets.push_back(subtree_nodes(s));
  }
  return helly_intersection(host, std::span<const NodeSet>(sets));
}

VertexList check_clique_tripartition(const SplitGraph& sg, const CliqueTripartition& parts) {
  const Graph& g = sg.graph();
  const std::size_t k = parts.c_parts[0].size();
  std::vector<int> part_of(static_cast<std::size_t>(g.n()), -1);
  std::size_t clique_seen = 0;
  std::size_t indep_seen = 0;
  for (int j = 0; j < 3; ++j) {
    if (parts.c_parts[static_cast<std::size_t>(j)].size() != k) {
      throw InvalidInput("clique parts differ in size");
    }
    for (Vertex c : parts.c_parts[static_cast<std::size_t>(j)]) {
      check_vertex(g, c);
      if (!sg.in_clique(c)) throw InvalidInput("vertex " + std::to_string(c) + " is not in the clique");
      if (part_of[static_cast<std::size_t>(c)] >= 0) {
        throw InvalidInput("clique vertex " + std::to_string(c) + " is in two parts");
      }
      part_of[static_cast<std::size_t>(c)] = j;
      ++clique_seen;
    }
  }
  if (clique_seen != sg.clique().size()) throw InvalidInput("clique parts do not cover the clique");
  VertexList isolated;
  for (int j = 0; j < 3; ++j) {
    for (Vertex w : parts.i_parts[static_cast<std::size_t>(j)]) {
      check_vertex(g, w);
      if (sg.in_clique(w)) throw InvalidInput("vertex " + std::to_string(w) + " is not independent");
      if (part_of[static_cast<std::size_t>(w)] >= 0) {
        throw InvalidInput("independent vertex " + std::to_string(w) + " is in two parts");
      }
      part_of[static_cast<std::size_t>(w)] = j;
      ++indep_seen;
      if (g.degree(w) == 0) isolated.push_back(w);
      for (Vertex c : g.neighbors(w)) {
        if (part_of[static_cast<std::size_t>(c)] != j) {
          throw InvalidInput("neighbor " + std::to_string(c) + " of independent vertex " +
                             std::to_string(w) + " lies outside its part");
        }
      }
    }
  }
  if (indep_seen != sg.independent().size()) {
    throw InvalidInput("independent parts do not cover the independent set");
  }
  return isolated;
}

TreeRepresentation build_tree_representation(const SplitGraph& sg,
                                             const CliqueTripartition& parts) {
  check_clique_tripartition(sg, parts);
  const int k = parts.k();
  if (k < 1) throw InvalidInput("clique tripartition needs k >= 1");
  for (int j = 0; j < 3; ++j) {
    if (parts.i_parts[static_cast<std::size_t>(j)].empty() && k == 1) {
      throw UnsupportedCase("branch " + std::to_string(j + 1) +
                            " has no path node (k = 1 with an empty independent part)");
    }
  }
  const Graph& g = sg.graph();
  const int n = g.n();

  std::vector<std::string> names;
  std::vector<TreeEdge> edges;
  std::vector<Node> alpha(static_cast<std::size_t>(n), -1);
  std::vector<Node> beta(static_cast<std::size_t>(n), -1);
  auto add_node = [&](std::string name) {
    names.push_back(std::move(name));
    return static_cast<Node>(names.size() - 1);
  };
  const Node a0 = add_node("a0");

  std::array<std::vector<Vertex>, 3> path;  // vertices whose alpha nodes form branch j
  for (std::size_t j = 0; j < 3; ++j) {
    path[j] = parts.i_parts[j];
    const auto& cj = parts.c_parts[j];
    path[j].insert(path[j].end(), cj.begin(), cj.end() - 1);
    for (Vertex x : path[j]) alpha[static_cast<std::size_t>(x)] = add_node("a:" + std::to_string(x));
  }
  for (Vertex x = 0; x < n; ++x) beta[static_cast<std::size_t>(x)] = add_node("b:" + std::to_string(x));

  for (std::size_t j = 0; j < 3; ++j) {
    // (a) the path, (b) its first node joined to a0.
    const auto& p = path[j];
    edges.push_back({a0, alpha[static_cast<std::size_t>(p.front())]});
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      edges.push_back({alpha[static_cast<std::size_t>(p[i])], alpha[static_cast<std::size_t>(p[i + 1])]});
    }
    // (c) pendant leaves: b:x on a:x, and the last clique vertex's leaf on the path end.
    for (Vertex x : p) edges.push_back({alpha[static_cast<std::size_t>(x)], beta[static_cast<std::size_t>(x)]});
    const Vertex last = parts.c_parts[j].back();
    edges.push_back({alpha[static_cast<std::size_t>(p.back())], beta[static_cast<std::size_t>(last)]});
  }

  TreeRepresentation tr;
  const int node_count = static_cast<int>(names.size());
  tr.host = TernaryTree(node_count, edges, std::move(names));
  tr.subtrees.assign(static_cast<std::size_t>(n), {});
  for (std::size_t j = 0; j < 3; ++j) {
    const auto& p = path[j];
    for (Vertex w : parts.i_parts[j]) {
      tr.subtrees[static_cast<std::size_t>(w)] = {
          normalized({alpha[static_cast<std::size_t>(w)], beta[static_cast<std::size_t>(w)]})};
    }
    // Clique vertex at path position i: b:c - a:c - ... - first path node - a0.
    for (std::size_t i = parts.i_parts[j].size(); i <= p.size(); ++i) {
      const bool last = i == p.size();
      const Vertex c = last ? parts.c_parts[j].back() : p[i];
      const std::size_t end = last ? p.size() - 1 : i;
      EdgeSubtree s;
      s.push_back(normalized({alpha[static_cast<std::size_t>(p[end])], beta[static_cast<std::size_t>(c)]}));
      for (std::size_t t = end; t > 0; --t) {
        s.push_back(normalized({alpha[static_cast<std::size_t>(p[t - 1])], alpha[static_cast<std::size_t>(p[t])]}));
      }
      s.push_back(normalized({a0, alpha[static_cast<std::size_t>(p.front())]}));
      tr.subtrees[static_cast<std::size_t>(c)] = std::move(s);
    }
  }
  return tr;
}

CliqueBound lower_bound_from_clique(const SplitGraph& sg, const TreeRepresentation& tr) {
  const RepValidation check = validate_tree_representation(sg.graph(), tr);
  if (!check.pass) {
    throw InvalidInput("not a tree-representation: " + check.violations.front().message);
  }
  std::vector<EdgeSubtree> clique_subtrees;
  for (Vertex c : sg.clique()) clique_subtrees.push_back(tr.subtrees[static_cast<std::size_t>(c)]);
  const auto common = helly_intersection(tr.host, std::span<const EdgeSubtree>(clique_subtrees));
  if (!common) throw Contradiction("clique subtrees have no common node");

  CliqueBound out;
  out.common_node = *common;
  const int size = static_cast<int>(sg.clique().size());
  out.bound = (size + 2) / 3;
  out.max_load = check.profile.max_load;
  int total = 0;
  for (Node w : tr.host.neighbors(*common)) {
    const TreeEdge e = normalized({*common, w});
    int load = 0;
    for (const EdgeSubtree& s : clique_subtrees) {
      if (std::find(s.begin(), s.end(), e) != s.end()) ++load;
    }
    total += load;
    out.incident_clique_loads.emplace_back(e, load);
  }
  if (total < size) throw Contradiction("a clique subtree avoids every edge at the common node");
  if (out.max_load < out.bound) {
    throw Contradiction("maximum edge load " + std::to_string(out.max_load) +
                        " is below the clique bound " + std::to_string(out.bound));
  }
  return out;
}

}  // namespace mmw
