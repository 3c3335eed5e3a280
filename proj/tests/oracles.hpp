#pragma once

// Brute-force reference implementations used only by tests. None of these
// share code paths with the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "mmw/decomposition.hpp"
#include "mmw/graph.hpp"
#include "mmw/reductions.hpp"
#include "mmw/treerep.hpp"

namespace mmw::oracle {

// Largest set of pairwise disjoint crossing edges, by trying every subset.
inline int matching_by_subsets(const Graph& g, Mask side) {
  std::vector<Edge> crossing;
  for (const Edge& e : g.edges()) {
    if (((side >> e.u) & 1U) != ((side >> e.v) & 1U)) crossing.push_back(e);
  }
  const std::size_t m = crossing.size();
  int best = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    Mask used = 0;
    bool ok = true;
    int size = 0;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!((pick >> i) & 1U)) continue;
      const Mask ends = bit(crossing[i].u) | bit(crossing[i].v);
      ok = (used & ends) == 0;
      used |= ends;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

inline int crossing_edge_count(const Graph& g, Mask side) {
  int c = 0;
  for (const Edge& e : g.edges()) c += ((side >> e.u) & 1U) != ((side >> e.v) & 1U);
  return c;
}

// Tree-width as the best elimination order over all n! orders, simulating
// fill-in on an adjacency matrix.
inline int treewidth_by_orderings(const Graph& g) {
  const int n = g.n();
  if (n == 0) return 0;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  int best = std::numeric_limits<int>::max();
  do {
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    int width = 0;
    for (int v : order) {
      std::vector<int> later;
      for (int w = 0; w < n; ++w) {
        if (!gone[w] && w != v && adj[v][w]) later.push_back(w);
      }
      width = std::max(width, static_cast<int>(later.size()));
      for (int a : later)
        for (int b : later)
          if (a != b) adj[a][b] = 1;
      gone[v] = 1;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Unordered leaf-labeled trees are determined by their splits; the canonical
// form is the sorted list of min(side, complement) over all tree edges.
inline std::vector<Mask> split_signature(const BranchDecomposition& bd) {
  const Mask all = full_mask(bd.ground_size());
  std::vector<Mask> sig;
  for (const TreeEdge& e : bd.tree().edges()) {
    const Mask a = induced_partition(bd, e).first;
    sig.push_back(std::min(a, all & ~a));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

// Distinct tree shapes reachable by building with every insertion order of
// the labels: enumerate, relabel by each permutation, dedup by signature.
inline std::size_t distinct_shapes_by_dedup(int n) {
  std::set<std::vector<Mask>> seen;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    enumerate_decompositions(n, [&](const BranchDecomposition& bd) {
      std::vector<int> labels = bd.leaf_labels();
      for (int& l : labels) {
        if (l >= 0) l = perm[static_cast<std::size_t>(l)];
      }
      seen.insert(split_signature(BranchDecomposition(bd.tree(), labels)));
      return true;
    });
  } while (std::next_permutation(perm.begin(), perm.end()));
  return seen.size();
}

inline int f_width_by_enumeration(const CutFunction& cf) {
  int best = std::numeric_limits<int>::max();
  enumerate_decompositions(cf.ground_size, [&](const BranchDecomposition& bd) {
    best = std::min(best, f_width_of(bd, cf).width);
    return true;
  });
  return best;
}

// Every assignment of items to `parts` parts; true when one has equal sums.
inline bool equal_sum_by_assignment(const std::vector<long long>& items, int parts) {
  const std::size_t m = items.size();
  std::vector<int> a(m, 0);
  for (;;) {
    std::vector<long long> sums(static_cast<std::size_t>(parts), 0);
    for (std::size_t i = 0; i < m; ++i) sums[static_cast<std::size_t>(a[i])] += items[i];
    if (std::all_of(sums.begin(), sums.end(), [&](long long s) { return s == sums[0]; })) return true;
    std::size_t i = 0;
    while (i < m && a[i] == parts - 1) a[i++] = 0;
    if (i == m) return false;
    ++a[i];
  }
}

// Lemma-3 predicate over all 3^|C| assignments of the clique.
inline bool clique_split_by_assignment(const SplitGraph& sg) {
  const VertexList& c = sg.clique();
  const std::size_t size = c.size();
  if (size == 0 || size % 3 != 0) return false;
  const Graph& g = sg.graph();
  std::vector<int> part_of(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> a(size, 0);
  for (;;) {
    std::array<std::size_t, 3> count{0, 0, 0};
    for (std::size_t i = 0; i < size; ++i) {
      ++count[static_cast<std::size_t>(a[i])];
      part_of[static_cast<std::size_t>(c[i])] = a[i];
    }
    if (count[0] == size / 3 && count[1] == size / 3) {
      bool ok = true;
      for (Vertex w : sg.independent()) {
        const auto& nb = g.neighbors(w);
        for (Vertex x : nb) ok = ok && part_of[static_cast<std::size_t>(x)] == part_of[static_cast<std::size_t>(nb.front())];
      }
      if (ok) return true;
    }
    std::size_t i = 0;
    while (i < size && a[i] == 2) a[i++] = 0;
    if (i == size) return false;
    ++a[i];
  }
}

inline std::optional<Node> common_node_by_scan(int nodes, const std::vector<NodeSet>& members) {
  for (Node v = 0; v < nodes; ++v) {
    const bool all = std::all_of(members.begin(), members.end(), [&](const NodeSet& m) {
      return std::find(m.begin(), m.end(), v) != m.end();
    });
    if (all) return v;
  }
  return std::nullopt;
}

inline bool intersects(const NodeSet& a, const NodeSet& b) {
  return std::any_of(a.begin(), a.end(), [&](Node v) { return std::find(b.begin(), b.end(), v) != b.end(); });
}

// Uniform-ish draw in [0, bound) that does not depend on the standard
// library's distribution implementation.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

// Random ternary tree with `leaves` leaves by random leaf insertion.
inline TernaryTree random_ternary_tree(std::mt19937_64& rng, int leaves) {
  std::vector<TreeEdge> edges{{0, 1}};
  int nodes = 2;
  for (int l = 2; l < leaves; ++l) {
    const std::size_t pick = draw(rng, edges.size());
    const TreeEdge e = edges[pick];
    const Node w = nodes++;
    const Node leaf = nodes++;
    edges[pick] = {e.a, w};
    edges.push_back({w, e.b});
    edges.push_back({w, leaf});
  }
  return TernaryTree(nodes, edges);
}

// Random connected node set grown from a random start.
inline NodeSet random_subtree(std::mt19937_64& rng, const TernaryTree& t, int max_size) {
  NodeSet s{static_cast<Node>(draw(rng, static_cast<std::uint64_t>(t.node_count())))};
  const int target = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_size)));
  while (static_cast<int>(s.size()) < target) {
    std::vector<Node> frontier;
    for (Node v : s)
      for (Node w : t.neighbors(v))
        if (std::find(s.begin(), s.end(), w) == s.end()) frontier.push_back(w);
    if (frontier.empty()) break;
    s.push_back(frontier[draw(rng, frontier.size())]);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace mmw::oracle
