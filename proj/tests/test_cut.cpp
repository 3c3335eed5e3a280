#include <doctest.h>

#include "mmw/cut.hpp"
#include "oracles.hpp"

using namespace mmw;

TEST_SUITE("cut_functions") {

TEST_CASE("mm_cut examples") {
  CHECK(mm_cut(complete_graph(2), VertexList{0}) == 1);
  CHECK(mm_cut(cycle_graph(5), VertexList{}) == 0);
  const Graph p = path_graph(3);
  CHECK(oracle::matching_by_subsets(p, bit(0) | bit(2)) == 1);
  CHECK(mm_cut(p, VertexList{0, 2}) == 1);
  const Graph k4 = complete_graph(4);
  CHECK(oracle::matching_by_subsets(k4, bit(0) | bit(1)) == 2);
  CHECK(mm_cut(k4, VertexList{0, 1}) == 2);
  CHECK_THROWS_AS(mm_cut(p, VertexList{5}), InvalidInput);
  CHECK_THROWS_AS(mm_cut(p, Mask{bit(3)}), InvalidInput);
}

TEST_CASE("mm_cut agrees with subset-enumeration matching oracle") {
  for (int n = 2; n <= 6; ++n) {
    std::mt19937_64 rng(100 + n);
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = graph_from_edge_mask(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
      for (Mask a = 0; a <= full_mask(n); ++a) {
        if (oracle::crossing_edge_count(g, a) > 8) continue;
        CHECK(mm_cut(g, a) == oracle::matching_by_subsets(g, a));
      }
    }
  }
}

TEST_CASE("mm_cut bounds and singleton rule on all graphs with n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for_each_small_graph(n, [&](std::uint64_t, const Graph& g) {
      const Mask all = full_mask(n);
      for (Mask a = 0; a <= all; ++a) {
        const int v = mm_cut(g, a);
        CHECK(v <= std::min(popcount(a), popcount(all & ~a)));
        CHECK(v <= oracle::crossing_edge_count(g, a));
      }
      for (Vertex x = 0; x < n; ++x) CHECK(mm_cut(g, bit(x)) == (g.degree(x) > 0 ? 1 : 0));
    });
  }
}

TEST_CASE("list-based mm_cut handles graphs beyond 64 vertices") {
  const Graph g = complete_graph(70);
  VertexList half;
  for (int v = 0; v < 35; ++v) half.push_back(v);
  CHECK(mm_cut(g, half) == 35);
  CHECK(mm_cut(path_graph(80), VertexList{0, 2, 4}) == 3);
}

TEST_CASE("boundary_cut examples") {
  CHECK(boundary_cut(cycle_graph(5), Mask{0}) == 0);
  const Graph p = path_graph(3);
  CHECK(boundary_cut(p, std::vector<int>{0}) == 1);
  const Graph c4 = cycle_graph(4);
  // edges() = {01, 03, 12, 23}; {01, 12} share vertex 1.
  REQUIRE(c4.edges()[0] == Edge{0, 1});
  REQUIRE(c4.edges()[2] == Edge{1, 2});
  CHECK(boundary_cut(c4, std::vector<int>{0, 2}) == 2);
  CHECK_THROWS_AS(boundary_cut(c4, std::vector<int>{4}), InvalidInput);
}

TEST_CASE("restricted bound never exceeds any completion") {
  const Graph g = graph_from_edge_mask(5, 0b1011011101);
  const CutFunction cf = mm_cut_function(g);
  const Mask all = cf.ground();
  for (Mask placed = 0; placed <= all; ++placed) {
    for (Mask side = placed;; side = (side - 1) & placed) {
      const Mask free = all & ~placed;
      for (Mask extra = free;; extra = (extra - 1) & free) {
        CHECK(cf.bound(side, placed) <= cf(side | extra));
        if (extra == 0) break;
      }
      if (side == 0) break;
    }
  }
}

TEST_CASE("symmetry/submodularity check examples") {
  const auto k3 = check_symmetric_submodular(mm_cut_function(complete_graph(3)));
  CHECK(k3.pass);
  CHECK(k3.mode == SymmetrySubmodularityReport::Mode::kExhaustivePairs);
  CHECK(k3.checks == 8 + 64);

  CutFunction zero{4, [](Mask) { return 0; }, {}};
  CHECK(check_symmetric_submodular(zero).pass);

  // |A| is submodular but not symmetric.
  CutFunction size{3, [](Mask a) { return popcount(a); }, {}};
  const auto bad = check_symmetric_submodular(size);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.counterexample);
  CHECK(bad.counterexample->property == "symmetry");

  // min(|A|,|X\A|)^2 is symmetric but not submodular.
  CutFunction sq{4, [](Mask a) { const int k = std::min(popcount(a), 4 - popcount(a)); return k * k; }, {}};
  const auto bad2 = check_symmetric_submodular(sq);
  CHECK_FALSE(bad2.pass);
  REQUIRE(bad2.counterexample);
  CHECK(bad2.counterexample->property == "submodularity");
  const auto& c = *bad2.counterexample;
  CHECK(c.f_a + c.f_b < c.f_union + c.f_intersection);
}

TEST_CASE("mm_cut passes on every graph with n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    for_each_small_graph(n, [&](std::uint64_t, const Graph& g) {
      CHECK(check_symmetric_submodular(mm_cut_function(g)).pass);
    });
  }
}

TEST_CASE("larger ground sets use local and random modes") {
  const Graph g = cycle_graph(12);
  const auto local = check_symmetric_submodular(mm_cut_function(g));
  CHECK(local.pass);
  CHECK(local.mode == SymmetrySubmodularityReport::Mode::kExhaustiveLocal);

  std::mt19937_64 rng(7);
  std::vector<Edge> edges;
  for (int u = 0; u < 24; ++u)
    for (int v = u + 1; v < 24; ++v)
      if (rng() % 4 == 0) edges.push_back({u, v});
  const auto random = check_symmetric_submodular(mm_cut_function(Graph(24, edges)), 500, 3);
  CHECK(random.pass);
  CHECK(random.mode == SymmetrySubmodularityReport::Mode::kRandom);
  CHECK(random.checks == 1000);

  // Local mode still finds violations.
  CutFunction sq{12, [](Mask a) { const int k = std::min(popcount(a), 12 - popcount(a)); return k * k; }, {}};
  CHECK_FALSE(check_symmetric_submodular(sq).pass);
}

TEST_CASE("cache returns the same values as direct evaluation") {
  const Graph g = complete_graph(6);
  const CutFunction cf = mm_cut_function(g);
  CutCache cache(cf);
  for (Mask a = 0; a <= cf.ground(); ++a) CHECK(cache.value(a) == cf(a));
  CHECK(cache.size() == 32);  // one entry per complementary pair
}

}
