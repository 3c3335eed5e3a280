#include "mmw/graph.hpp"

#include <algorithm>
#include <numeric>

namespace mmw {

VertexList mask_to_list(Mask m) {
  VertexList out;
  while (m != 0) {
    out.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return out;
}

Mask list_to_mask(std::span<const Vertex> vs, int n) {
  if (n > kMaskBits) throw InvalidInput("bitmask sets support at most 64 elements");
  Mask m = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= n) throw InvalidInput("element " + std::to_string(v) + " out of range");
    m |= bit(v);
  }
  return m;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InvalidInput("vertex count must be nonnegative");
  for (Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InvalidInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidInput("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                       "}");
  }
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  if (has_masks()) {
    adj_mask_.assign(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges_) {
      adj_mask_[static_cast<std::size_t>(e.u)] |= bit(e.v);
      adj_mask_[static_cast<std::size_t>(e.v)] |= bit(e.u);
    }
  }
}

namespace {
std::vector<Edge> to_edges(std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}
}  // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n, to_edges(edges)) {}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidInput("permutation size mismatch");
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const Edge& e : edges_) {
    mapped.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
  }
  return Graph(n_, std::move(mapped));
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  std::vector<Edge> more = edges_;
  more.push_back({u, v});
  return Graph(n_, std::move(more));
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.n()) {
    throw InvalidInput("vertex " + std::to_string(v) + " not in graph with " +
                       std::to_string(g.n()) + " vertices");
  }
}

VertexList neighborhood(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> hit(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : s) {
    check_vertex(g, v);
    for (Vertex w : g.neighbors(v)) hit[static_cast<std::size_t>(w)] = 1;
  }
  VertexList out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (hit[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.n();
}

Graph graph_from_edge_mask(int n, std::uint64_t edge_bits) {
  std::vector<Edge> edges;
  int idx = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++idx) {
      if (edge_bits >> idx & 1U) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

void for_each_small_graph(int n, const std::function<void(std::uint64_t, const Graph&)>& visit,
                          int cap) {
  if (n < 0) throw InvalidInput("vertex count must be nonnegative");
  if (n > cap || n > 11) {
    throw ResourceLimit("small-graph enumeration capped at n=" + std::to_string(cap) +
                        ", requested n=" + std::to_string(n));
  }
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  for (std::uint64_t bits = 0; bits < total; ++bits) visit(bits, graph_from_edge_mask(n, bits));
}

std::vector<Graph> enumerate_small_graphs(int n, int cap) {
  std::vector<Graph> out;
  for_each_small_graph(n, [&](std::uint64_t, const Graph& g) { out.push_back(g); }, cap);
  return out;
}

SplitGraph validate_split(const Graph& g, std::span<const Vertex> clique,
                          std::span<const Vertex> independent) {
  using Kind = SplitError::Kind;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> in_clique(static_cast<std::size_t>(g.n()), 0);
  auto claim = [&](Vertex v, bool clique_side) {
    if (v < 0 || v >= g.n()) {
      throw SplitError(Kind::kNotPartition, v, -1,
                       "vertex " + std::to_string(v) + " is not in the graph");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw SplitError(Kind::kNotPartition, v, -1,
                       "vertex " + std::to_string(v) + " listed more than once");
    }
    seen[static_cast<std::size_t>(v)] = 1;
    in_clique[static_cast<std::size_t>(v)] = clique_side ? 1 : 0;
  };
  for (Vertex v : clique) claim(v, true);
  for (Vertex v : independent) claim(v, false);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw SplitError(Kind::kNotPartition, v, -1,
                       "vertex " + std::to_string(v) + " is in neither part");
    }
  }
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!g.has_edge(clique[i], clique[j])) {
        throw SplitError(Kind::kNonCliquePair, clique[i], clique[j],
                         "clique vertices " + std::to_string(clique[i]) + " and " +
                             std::to_string(clique[j]) + " are not adjacent");
      }
    }
  }
  for (std::size_t i = 0; i < independent.size(); ++i) {
    for (std::size_t j = i + 1; j < independent.size(); ++j) {
      if (g.has_edge(independent[i], independent[j])) {
        throw SplitError(Kind::kNonIndependentPair, independent[i], independent[j],
                         "independent vertices " + std::to_string(independent[i]) + " and " +
                             std::to_string(independent[j]) + " are adjacent");
      }
    }
  }
  SplitGraph sg;
  sg.graph_ = g;
  sg.clique_.assign(clique.begin(), clique.end());
  sg.independent_.assign(independent.begin(), independent.end());
  sg.in_clique_ = std::move(in_clique);
  return sg;
}

}  // namespace mmw
