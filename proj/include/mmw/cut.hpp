#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>

#include "mmw/graph.hpp"

namespace mmw {

// A symmetric set function f over a ground set {0..ground_size-1}.
//
// `evaluate` gives f(A). `restricted`, when present, gives a lower bound
// on f(A) for every A whose trace on `placed` is `side`; it must equal
// f(side) when placed is the whole ground set. The exact-width search
// prunes on it, so it must also be symmetric in side <-> placed \ side.
struct CutFunction {
  int ground_size = 0;
  std::function<int(Mask)> evaluate;
  std::function<int(Mask side, Mask placed)> restricted;

  Mask ground() const { return full_mask(ground_size); }
  int operator()(Mask a) const { return evaluate(a & ground()); }
  int bound(Mask side, Mask placed) const;
};

// Maximum matching size in the bipartite subgraph of g between the disjoint
// vertex sets left and right (n <= 64).
int matching_between(const Graph& g, Mask left, Mask right);

// mm_G(A): maximum matching between A and its complement.
int mm_cut(const Graph& g, std::span<const Vertex> a);
int mm_cut(const Graph& g, Mask a);

// Number of vertices incident both to an edge of f and to an edge outside f.
// Edges are identified by their index in g.edges().
int boundary_cut(const Graph& g, std::span<const int> edge_indices);
int boundary_cut(const Graph& g, Mask edge_set);

CutFunction mm_cut_function(const Graph& g);
CutFunction boundary_cut_function(const Graph& g);

// Per-worker memo keyed by the canonical side min(A, placed \ A).
class CutCache {
 public:
  explicit CutCache(const CutFunction& cf);
  int bound(Mask side, Mask placed);
  int value(Mask side) { return bound(side, cf_->ground()); }
  std::size_t size() const { return table_.size(); }

 private:
  const CutFunction* cf_;
  std::unordered_map<std::uint64_t, int> table_;
};

struct SymmetrySubmodularityReport {
  enum class Mode { kExhaustivePairs, kExhaustiveLocal, kRandom };
  struct Counterexample {
    std::string property;  // "symmetry" or "submodularity"
    Mask a = 0;
    Mask b = 0;
    int f_a = 0;
    int f_b = 0;
    int f_union = 0;
    int f_intersection = 0;
  };
  bool pass = true;
  Mode mode = Mode::kExhaustivePairs;
  std::uint64_t checks = 0;
  std::optional<Counterexample> counterexample;
};

std::string to_string(SymmetrySubmodularityReport::Mode mode);

// Checks f(A) = f(X \ A) and f(A) + f(B) >= f(A u B) + f(A n B).
// Ground sets up to 10 elements check every pair (A, B); up to 20 use the
// equivalent local form f(S+x) + f(S+y) >= f(S+x+y) + f(S); larger sets
// sample `trials` random pairs from a generator seeded with `seed`.
SymmetrySubmodularityReport check_symmetric_submodular(const CutFunction& cf,
                                                       std::uint64_t trials = 10000,
                                                       std::uint64_t seed = 0);

}  // namespace mmw
