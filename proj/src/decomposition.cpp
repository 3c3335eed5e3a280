#include "mmw/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace mmw {

BranchDecomposition::BranchDecomposition(TernaryTree tree, std::vector<int> leaf_label)
    : tree_(std::move(tree)), leaf_label_(std::move(leaf_label)) {
  if (static_cast<int>(leaf_label_.size()) != tree_.node_count()) {
    throw InvalidInput("leaf map size does not match tree node count");
  }
  const auto leaves = tree_.leaves();
  ground_size_ = static_cast<int>(leaves.size());
  std::vector<char> hit(leaves.size(), 0);
  for (Node v = 0; v < tree_.node_count(); ++v) {
    const int x = leaf_label_[static_cast<std::size_t>(v)];
    if (!tree_.is_leaf(v)) {
      if (x != -1) throw InvalidInput("internal node " + std::to_string(v) + " carries a label");
      continue;
    }
    if (x < 0 || x >= ground_size_) {
      throw InvalidInput("leaf " + std::to_string(v) + " label " + std::to_string(x) +
                         " outside ground set of size " + std::to_string(ground_size_));
    }
    if (hit[static_cast<std::size_t>(x)]) {
      throw InvalidInput("ground element " + std::to_string(x) + " mapped to two leaves");
    }
    hit[static_cast<std::size_t>(x)] = 1;
  }
}

std::pair<Mask, Mask> induced_partition(const BranchDecomposition& bd, TreeEdge e) {
  const TernaryTree& t = bd.tree();
  if (!t.edge_index(e.a, e.b)) {
    throw InvalidInput("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                       "} is not in the decomposition tree");
  }
  const auto side = component_without_edge(t, e.a, e);
  Mask first = 0;
  Mask second = 0;
  for (Node v = 0; v < t.node_count(); ++v) {
    const int x = bd.label(v);
    if (x < 0) continue;
    (side[static_cast<std::size_t>(v)] ? first : second) |= bit(x);
  }
  return {first, second};
}

WidthResult f_width_of(const BranchDecomposition& bd, const CutFunction& cf) {
  if (cf.ground_size != bd.ground_size()) {
    throw InvalidInput("cut function ground set has " + std::to_string(cf.ground_size) +
                       " elements, decomposition has " + std::to_string(bd.ground_size()));
  }
  WidthResult r;
  r.witness = bd;
  for (const TreeEdge& e : bd.tree().edges()) {
    const int v = cf(induced_partition(bd, e).first);
    if (!r.critical_edge || v > r.width) {
      r.width = v;
      r.critical_edge = e;
    }
  }
  return r;
}

namespace {

// Leaf-labeled ternary tree grown by leaf insertion, rooted at the leaf for
// element 0. Each non-root node c stands for the edge to its parent, and
// below[c] is the set of labels on the child side of that edge.
class PartialTree {
 public:
  explicit PartialTree(int n)
      : parent_(static_cast<std::size_t>(2 * n - 2), -1),
        below_(static_cast<std::size_t>(2 * n - 2), 0),
        label_(static_cast<std::size_t>(2 * n - 2), -1) {
    label_[0] = 0;
    label_[1] = 1;
    parent_[1] = 0;
    below_[1] = bit(1);
    nodes_ = 2;
    placed_ = bit(0) | bit(1);
  }

  int nodes() const { return nodes_; }
  Mask placed() const { return placed_; }
  Mask below(Node c) const { return below_[static_cast<std::size_t>(c)]; }

  void insert(int x, Node c) {
    const Node w = nodes_;
    const Node leaf = nodes_ + 1;
    const Node p = parent_[static_cast<std::size_t>(c)];
    parent_[static_cast<std::size_t>(w)] = p;
    parent_[static_cast<std::size_t>(c)] = w;
    parent_[static_cast<std::size_t>(leaf)] = w;
    label_[static_cast<std::size_t>(leaf)] = x;
    below_[static_cast<std::size_t>(leaf)] = bit(x);
    below_[static_cast<std::size_t>(w)] = below_[static_cast<std::size_t>(c)] | bit(x);
    for (Node u = p; u != 0; u = parent_[static_cast<std::size_t>(u)]) {
      below_[static_cast<std::size_t>(u)] |= bit(x);
    }
    nodes_ += 2;
    placed_ |= bit(x);
  }

  void undo(int x, Node c) {
    const Node w = nodes_ - 2;
    const Node p = parent_[static_cast<std::size_t>(w)];
    parent_[static_cast<std::size_t>(c)] = p;
    for (Node u = p; u != 0; u = parent_[static_cast<std::size_t>(u)]) {
      below_[static_cast<std::size_t>(u)] &= ~bit(x);
    }
    label_[static_cast<std::size_t>(nodes_ - 1)] = -1;
    nodes_ -= 2;
    placed_ &= ~bit(x);
  }

  BranchDecomposition materialize() const {
    std::vector<TreeEdge> edges;
    edges.reserve(static_cast<std::size_t>(nodes_ - 1));
    for (Node c = 1; c < nodes_; ++c) edges.push_back({parent_[static_cast<std::size_t>(c)], c});
    return BranchDecomposition(TernaryTree(nodes_, std::move(edges)),
                               std::vector<int>(label_.begin(), label_.begin() + nodes_));
  }

 private:
  std::vector<Node> parent_;
  std::vector<Mask> below_;
  std::vector<int> label_;
  int nodes_ = 0;
  Mask placed_ = 0;
};

void check_cap(int x_size, int cap) {
  if (x_size < 2) {
    throw InvalidInput("branch-decompositions need a ground set of at least 2 elements");
  }
  if (x_size > cap || x_size > 31) {
    throw ResourceLimit("decomposition search capped at " + std::to_string(std::min(cap, 31)) +
                        " leaves, requested " + std::to_string(x_size));
  }
}

bool enumerate_from(PartialTree& t, int x, int n,
                    const std::function<bool(const BranchDecomposition&)>& visit) {
  if (x == n) return visit(t.materialize());
  const int edges = t.nodes();
  for (Node c = 1; c < edges; ++c) {
    t.insert(x, c);
    const bool more = enumerate_from(t, x + 1, n, visit);
    t.undo(x, c);
    if (!more) return false;
  }
  return true;
}

constexpr std::uint64_t kNoKey = std::numeric_limits<std::uint64_t>::max();

// Branch-and-bound over insertion sequences. The search space is split into
// shards by the choices for the first few inserted leaves; shards are
// contiguous in enumeration order, so ordering candidates by
// (width, shard, position in shard) makes the first optimal tree the unique
// winner however the shards are scheduled.
class WidthSearch {
 public:
  WidthSearch(const CutFunction& cf, int workers) : cf_(cf), n_(cf.ground_size), workers_(workers) {
    prefix_len_ = std::min(n_ - 2, 3);
    std::vector<Node> prefix;
    build_prefixes(2, prefix);
    shard_count_ = prefixes_.size();
    results_.resize(shard_count_);
    for (int x = 0; x < n_; ++x) lower_bound_ = std::max(lower_bound_, cf_(bit(x)));
  }

  WidthResult run() {
    const int threads = std::max(1, std::min<int>(workers_, static_cast<int>(shard_count_)));
    if (threads == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (int i = 0; i < threads; ++i) pool.emplace_back([this] { work(); });
    }
    const ShardBest* best = nullptr;
    for (std::size_t s = 0; s < shard_count_; ++s) {
      const auto& r = results_[s];
      if (r.width < 0) continue;
      if (!best || r.width < best->width) {
        best = &r;
      }
    }
    PartialTree t(n_);
    for (int x = 2; x < n_; ++x) t.insert(x, best->choices[static_cast<std::size_t>(x - 2)]);
    WidthResult r = f_width_of(t.materialize(), cf_);
    if (r.width != best->width) throw Contradiction("search width disagrees with re-evaluation");
    return r;
  }

 private:
  struct ShardBest {
    int width = -1;
    std::vector<Node> choices;
  };

  void build_prefixes(int x, std::vector<Node>& prefix) {
    if (x == 2 + prefix_len_) {
      prefixes_.push_back(prefix);
      return;
    }
    // A tree with x placed leaves has 2x - 3 edges, i.e. non-root nodes 1..2x-3.
    for (Node c = 1; c <= 2 * x - 3; ++c) {
      prefix.push_back(c);
      build_prefixes(x + 1, prefix);
      prefix.pop_back();
    }
  }

  std::uint64_t key(int width, std::size_t shard) const {
    return static_cast<std::uint64_t>(width) * shard_count_ + shard;
  }

  void work() {
    CutCache cache(cf_);
    for (;;) {
      const std::size_t shard = next_shard_.fetch_add(1);
      if (shard >= shard_count_) return;
      PartialTree t(n_);
      std::vector<Node> choices;
      bool alive = !pruned(t, cache, shard);
      for (int i = 0; alive && i < prefix_len_; ++i) {
        const Node c = prefixes_[shard][static_cast<std::size_t>(i)];
        t.insert(2 + i, c);
        choices.push_back(c);
        alive = !pruned(t, cache, shard);
      }
      if (alive) search(t, 2 + prefix_len_, choices, cache, shard);
    }
  }

  int partial_width(const PartialTree& t, CutCache& cache) const {
    int w = 0;
    const Mask placed = t.placed();
    for (Node c = 1; c < t.nodes(); ++c) w = std::max(w, cache.bound(t.below(c), placed));
    return w;
  }

  bool pruned(const PartialTree& t, CutCache& cache, std::size_t shard) const {
    const int b = std::max(partial_width(t, cache), lower_bound_);
    return key(b, shard) >= best_key_.load(std::memory_order_relaxed);
  }

  void search(PartialTree& t, int x, std::vector<Node>& choices, CutCache& cache,
              std::size_t shard) {
    if (x == n_) {
      const int w = partial_width(t, cache);
      const std::uint64_t k = key(w, shard);
      std::uint64_t cur = best_key_.load();
      while (k < cur && !best_key_.compare_exchange_weak(cur, k)) {
      }
      if (k < cur) results_[shard] = {w, choices};
      return;
    }
    const int edges = t.nodes();
    for (Node c = 1; c < edges; ++c) {
      t.insert(x, c);
      choices.push_back(c);
      if (!pruned(t, cache, shard)) search(t, x + 1, choices, cache, shard);
      choices.pop_back();
      t.undo(x, c);
    }
  }

  const CutFunction& cf_;
  int n_;
  int workers_;
  int prefix_len_ = 0;
  int lower_bound_ = 0;
  std::vector<std::vector<Node>> prefixes_;
  std::size_t shard_count_ = 0;
  std::vector<ShardBest> results_;
  std::atomic<std::size_t> next_shard_{0};
  std::atomic<std::uint64_t> best_key_{kNoKey};
};

}  // namespace

void enumerate_decompositions(int x_size,
                              const std::function<bool(const BranchDecomposition&)>& visit,
                              int cap) {
  check_cap(x_size, cap);
  PartialTree t(x_size);
  enumerate_from(t, 2, x_size, visit);
}

std::uint64_t decomposition_count(int x_size) {
  std::uint64_t count = 1;
  for (int k = 3; k <= x_size; ++k) count *= static_cast<std::uint64_t>(2 * k - 5);
  return count;
}

WidthResult exact_f_width(const CutFunction& cf, const SearchOptions& opts) {
  check_cap(cf.ground_size, opts.cap);
  WidthSearch search(cf, opts.workers);
  return search.run();
}

WidthResult mmw_exact(const Graph& g, const SolverCaps& caps, int workers) {
  if (g.n() > caps.mmw_n) {
    throw ResourceLimit("mm-width solver capped at n=" + std::to_string(caps.mmw_n) +
                        ", graph has n=" + std::to_string(g.n()));
  }
  if (g.n() <= 1) return WidthResult{};
  return exact_f_width(mm_cut_function(g), {caps.mmw_n, workers});
}

WidthResult branchwidth_exact(const Graph& g, const SolverCaps& caps, int workers) {
  const int m = static_cast<int>(g.num_edges());
  if (m > caps.bw_m) {
    throw ResourceLimit("branch-width solver capped at m=" + std::to_string(caps.bw_m) +
                        ", graph has m=" + std::to_string(m));
  }
  if (m <= 1) return WidthResult{};
  return exact_f_width(boundary_cut_function(g), {caps.bw_m, workers});
}

int treewidth_exact(const Graph& g, const SolverCaps& caps) {
  const int n = g.n();
  if (n > caps.tw_n || n > 24) {
    throw ResourceLimit("tree-width solver capped at n=" + std::to_string(caps.tw_n) +
                        ", graph has n=" + std::to_string(n));
  }
  if (n == 0) return 0;
  // best[S] = min over orderings of S of the max number of later neighbors
  // in the fill-in graph when S is eliminated first.
  const std::size_t states = std::size_t{1} << n;
  std::vector<int> best(states, std::numeric_limits<int>::max());
  best[0] = -1;
  auto later_degree = [&](Mask eliminated, Vertex v) {
    Mask reach = bit(v);
    Mask frontier = bit(v);
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= g.adjacency_mask(__builtin_ctzll(f));
      next &= eliminated & ~reach;
      reach |= next;
      frontier = next;
    }
    Mask nbrs = 0;
    for (Mask r = reach; r != 0; r &= r - 1) nbrs |= g.adjacency_mask(__builtin_ctzll(r));
    return popcount(nbrs & ~reach & ~eliminated);
  };
  for (Mask s = 1; s < states; ++s) {
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      const Vertex v = __builtin_ctzll(rest);
      const Mask before = s & ~bit(v);
      const int cost = std::max(best[before], later_degree(before, v));
      best[s] = std::min(best[s], cost);
    }
  }
  return best[states - 1];
}

InequalityChainReport check_inequality_chain(const Graph& g, const SolverCaps& caps,
                                             int workers) {
  if (g.num_edges() == 0 || !is_connected(g)) {
    throw InvalidInput("inequality chain check needs a connected graph with at least one edge");
  }
  InequalityChainReport r;
  r.mmw = mmw_exact(g, caps, workers).width;
  r.bw = branchwidth_exact(g, caps, workers).width;
  r.tw = treewidth_exact(g, caps);
  const int bw1 = std::max(r.bw, 1);
  r.mmw_le_bw = r.mmw <= bw1;
  r.bw_le_tw = bw1 <= r.tw + 1;
  r.tw_le_3mmw = r.tw + 1 <= 3 * r.mmw;
  return r;
}

}  // namespace mmw
