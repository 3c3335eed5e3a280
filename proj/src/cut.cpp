#include "mmw/cut.hpp"

#include <random>

namespace mmw {

int CutFunction::bound(Mask side, Mask placed) const {
  if (placed == ground()) return evaluate(side & placed);
  return restricted ? restricted(side & placed, placed) : 0;
}

namespace {

void require_masks(const Graph& g) {
  if (!g.has_masks()) throw InvalidInput("bitmask cut evaluation supports at most 64 vertices");
}

// Kuhn's augmenting-path search over bitmask adjacency.
bool augment(const Graph& g, Vertex u, Mask right, Mask& visited, std::vector<Vertex>& mate) {
  Mask cand = g.adjacency_mask(u) & right & ~visited;
  while (cand != 0) {
    const Vertex w = __builtin_ctzll(cand);
    cand &= cand - 1;
    visited |= bit(w);
    Vertex& m = mate[static_cast<std::size_t>(w)];
    if (m < 0 || augment(g, m, right, visited, mate)) {
      m = u;
      return true;
    }
  }
  return false;
}

}  // namespace

int matching_between(const Graph& g, Mask left, Mask right) {
  require_masks(g);
  std::vector<Vertex> mate(static_cast<std::size_t>(g.n()), -1);
  int size = 0;
  for (Mask l = left; l != 0; l &= l - 1) {
    const Vertex u = __builtin_ctzll(l);
    if ((g.adjacency_mask(u) & right) == 0) continue;
    Mask visited = 0;
    if (augment(g, u, right, visited, mate)) ++size;
  }
  return size;
}

int mm_cut(const Graph& g, Mask a) {
  const Mask all = full_mask(g.n());
  if ((a & ~all) != 0) throw InvalidInput("cut side contains a vertex outside the graph");
  return matching_between(g, a, all & ~a);
}

int mm_cut(const Graph& g, std::span<const Vertex> a) {
  std::vector<char> side(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : a) {
    check_vertex(g, v);
    side[static_cast<std::size_t>(v)] = 1;
  }
  if (g.has_masks()) {
    Mask m = 0;
    for (Vertex v : a) m |= bit(v);
    return mm_cut(g, m);
  }
  // Adjacency-list path for graphs beyond 64 vertices.
  std::vector<Vertex> mate(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> stamp(static_cast<std::size_t>(g.n()), -1);
  int round = 0;
  std::function<bool(Vertex)> try_augment = [&](Vertex u) {
    for (Vertex w : g.neighbors(u)) {
      if (side[static_cast<std::size_t>(w)] || stamp[static_cast<std::size_t>(w)] == round) continue;
      stamp[static_cast<std::size_t>(w)] = round;
      Vertex& m = mate[static_cast<std::size_t>(w)];
      if (m < 0 || try_augment(m)) {
        m = u;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (!side[static_cast<std::size_t>(u)]) continue;
    ++round;
    if (try_augment(u)) ++size;
  }
  return size;
}

namespace {

std::vector<Mask> incident_edge_masks(const Graph& g) {
  if (g.num_edges() > static_cast<std::size_t>(kMaskBits)) {
    throw InvalidInput("bitmask edge sets support at most 64 edges");
  }
  std::vector<Mask> inc(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    inc[static_cast<std::size_t>(e.u)] |= bit(static_cast<int>(i));
    inc[static_cast<std::size_t>(e.v)] |= bit(static_cast<int>(i));
  }
  return inc;
}

int boundary_between(const std::vector<Mask>& inc, Mask side, Mask other) {
  int count = 0;
  for (Mask m : inc) {
    if ((m & side) != 0 && (m & other) != 0) ++count;
  }
  return count;
}

}  // namespace

int boundary_cut(const Graph& g, Mask edge_set) {
  const auto inc = incident_edge_masks(g);
  const Mask all = full_mask(static_cast<int>(g.num_edges()));
  if ((edge_set & ~all) != 0) throw InvalidInput("edge set contains an unknown edge");
  return boundary_between(inc, edge_set, all & ~edge_set);
}

int boundary_cut(const Graph& g, std::span<const int> edge_indices) {
  Mask m = 0;
  for (int i : edge_indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= g.num_edges()) {
      throw InvalidInput("unknown edge index " + std::to_string(i));
    }
    m |= bit(i);
  }
  return boundary_cut(g, m);
}

CutFunction mm_cut_function(const Graph& g) {
  require_masks(g);
  CutFunction cf;
  cf.ground_size = g.n();
  const Mask all = full_mask(g.n());
  cf.evaluate = [g, all](Mask a) { return matching_between(g, a, all & ~a); };
  // A matching inside the placed vertices survives in every completion.
  cf.restricted = [g](Mask side, Mask placed) {
    return matching_between(g, side, placed & ~side);
  };
  return cf;
}

CutFunction boundary_cut_function(const Graph& g) {
  CutFunction cf;
  cf.ground_size = static_cast<int>(g.num_edges());
  auto inc = incident_edge_masks(g);
  const Mask all = full_mask(cf.ground_size);
  cf.evaluate = [inc, all](Mask f) { return boundary_between(inc, f, all & ~f); };
  cf.restricted = [inc](Mask side, Mask placed) {
    return boundary_between(inc, side, placed & ~side);
  };
  return cf;
}

CutCache::CutCache(const CutFunction& cf) : cf_(&cf) {
  if (cf.ground_size > 31) throw ResourceLimit("cut cache keys support ground sets up to 31");
}

int CutCache::bound(Mask side, Mask placed) {
  const Mask other = placed & ~side;
  const Mask canon = side < other ? side : other;
  const std::uint64_t key = canon | (static_cast<std::uint64_t>(placed) << 32);
  if (auto it = table_.find(key); it != table_.end()) return it->second;
  const int v = cf_->bound(canon, placed);
  table_.emplace(key, v);
  return v;
}

std::string to_string(SymmetrySubmodularityReport::Mode mode) {
  switch (mode) {
    case SymmetrySubmodularityReport::Mode::kExhaustivePairs: return "exhaustive-pairs";
    case SymmetrySubmodularityReport::Mode::kExhaustiveLocal: return "exhaustive-local";
    case SymmetrySubmodularityReport::Mode::kRandom: return "random";
  }
  return "unknown";
}

SymmetrySubmodularityReport check_symmetric_submodular(const CutFunction& cf, std::uint64_t trials,
                                                       std::uint64_t seed) {
  using Report = SymmetrySubmodularityReport;
  Report rep;
  const int n = cf.ground_size;
  const Mask all = cf.ground();
  auto fail_sub = [&](Mask a, Mask b, int fa, int fb, int fu, int fi) {
    rep.pass = false;
    rep.counterexample = Report::Counterexample{"submodularity", a, b, fa, fb, fu, fi};
  };

  if (n <= 20) {
    std::vector<int> table(std::size_t{1} << n);
    for (Mask a = 0; a <= all; ++a) table[a] = cf(a);
    for (Mask a = 0; a <= all; ++a) {
      ++rep.checks;
      if (table[a] != table[all & ~a]) {
        rep.pass = false;
        rep.counterexample = Report::Counterexample{"symmetry", a, all & ~a, table[a],
                                                    table[all & ~a], 0, 0};
        rep.mode = n <= 10 ? Report::Mode::kExhaustivePairs : Report::Mode::kExhaustiveLocal;
        return rep;
      }
    }
    if (n <= 10) {
      rep.mode = Report::Mode::kExhaustivePairs;
      for (Mask a = 0; a <= all; ++a) {
        for (Mask b = 0; b <= all; ++b) {
          ++rep.checks;
          const int lhs = table[a] + table[b];
          if (lhs < table[a | b] + table[a & b]) {
            fail_sub(a, b, table[a], table[b], table[a | b], table[a & b]);
            return rep;
          }
        }
      }
    } else {
      rep.mode = Report::Mode::kExhaustiveLocal;
      for (Mask s = 0; s <= all; ++s) {
        for (int x = 0; x < n; ++x) {
          if (s & bit(x)) continue;
          for (int y = x + 1; y < n; ++y) {
            if (s & bit(y)) continue;
            ++rep.checks;
            const Mask a = s | bit(x);
            const Mask b = s | bit(y);
            if (table[a] + table[b] < table[a | b] + table[s]) {
              fail_sub(a, b, table[a], table[b], table[a | b], table[s]);
              return rep;
            }
          }
        }
      }
    }
    return rep;
  }

  rep.mode = Report::Mode::kRandom;
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Mask a = rng() & all;
    const Mask b = rng() & all;
    rep.checks += 2;
    const int fa = cf(a);
    if (fa != cf(all & ~a)) {
      rep.pass = false;
      rep.counterexample = Report::Counterexample{"symmetry", a, all & ~a, fa, cf(all & ~a), 0, 0};
      return rep;
    }
    const int fb = cf(b);
    const int fu = cf(a | b);
    const int fi = cf(a & b);
    if (fa + fb < fu + fi) {
      fail_sub(a, b, fa, fb, fu, fi);
      return rep;
    }
  }
  return rep;
}

}  // namespace mmw
