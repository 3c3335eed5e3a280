#include "mmw/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace mmw {

PartitionInstance::PartitionInstance(std::vector<long long> items) : items_(std::move(items)) {
  if (items_.empty()) throw InvalidInput("instance needs at least one item");
  for (long long x : items_) {
    if (x < 1) throw InvalidInput("instance items must be positive, got " + std::to_string(x));
    total_ += x;
  }
}

namespace {

struct StateHash {
  std::size_t operator()(const std::array<long long, 3>& s) const {
    std::size_t h = 1469598103934665603ULL;
    for (long long v : s) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};

// Depth-first assignment of items in index order, parts tried in ascending
// order, so the first success is the lexicographically smallest witness.
// Failed states (item, sums of all but the last part) are memoized.
class EqualSumSearch {
 public:
  EqualSumSearch(const std::vector<long long>& items, int parts)
      : items_(items), parts_(parts), part_(items.size(), 0) {
    long long total = std::accumulate(items.begin(), items.end(), 0LL);
    target_ = total / parts;
  }

  bool run() { return visit(0); }
  const std::vector<int>& assignment() const { return part_; }

 private:
  bool visit(std::size_t i) {
    if (i == items_.size()) return true;  // totals are multiples of parts_, all but one full
    const std::array<long long, 3> key{static_cast<long long>(i), sums_[0], sums_[1]};
    if (failed_.contains(key)) return false;
    for (int p = 0; p < parts_; ++p) {
      // Empty parts are interchangeable; only the first empty one is tried.
      if (p > 0 && sums_[static_cast<std::size_t>(p)] == 0 &&
          sums_[static_cast<std::size_t>(p - 1)] == 0) {
        break;
      }
      if (sums_[static_cast<std::size_t>(p)] + items_[i] > target_) continue;
      sums_[static_cast<std::size_t>(p)] += items_[i];
      part_[i] = p + 1;
      const bool ok = visit(i + 1);
      sums_[static_cast<std::size_t>(p)] -= items_[i];
      if (ok) return true;
    }
    part_[i] = 0;
    failed_.insert(key);
    return false;
  }

  const std::vector<long long>& items_;
  int parts_;
  long long target_ = 0;
  std::array<long long, 3> sums_{0, 0, 0};
  std::vector<int> part_;
  std::unordered_set<std::array<long long, 3>, StateHash> failed_;
};

PartitionAnswer equal_sum_oracle(const PartitionInstance& s, int parts) {
  PartitionAnswer ans;
  const long long total = s.total();
  if (total % parts != 0) {
    ans.reason = parts == 2 ? "sum is odd" : "sum not divisible by 3";
    return ans;
  }
  const long long target = total / parts;
  const long long largest = *std::max_element(s.items().begin(), s.items().end());
  if (largest > target) {
    ans.reason = parts == 2 ? "an item exceeds half of the sum" : "an item exceeds a third of the sum";
    return ans;
  }
  EqualSumSearch search(s.items(), parts);
  if (!search.run()) {
    ans.reason = "no equal-sum split exists";
    return ans;
  }
  ans.yes = true;
  ans.part = search.assignment();
  return ans;
}

}  // namespace

PartitionAnswer partition2_oracle(const PartitionInstance& s) {
  if (s.size() > kPartition2MaxItems) {
    throw ResourceLimit("PARTITION oracle capped at " + std::to_string(kPartition2MaxItems) +
                        " items, instance has " + std::to_string(s.size()));
  }
  return equal_sum_oracle(s, 2);
}

PartitionAnswer partition3_oracle(const PartitionInstance& s) {
  if (s.size() > kPartition3MaxItems && s.total() > kPartition3MaxTotal) {
    throw ResourceLimit("PARTITION-3 oracle needs at most " + std::to_string(kPartition3MaxItems) +
                        " items or a total of at most " + std::to_string(kPartition3MaxTotal));
  }
  return equal_sum_oracle(s, 3);
}

bool witness_valid(const PartitionInstance& s, const std::vector<int>& part, int parts) {
  if (part.size() != s.size()) return false;
  std::vector<long long> sums(static_cast<std::size_t>(parts), 0);
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (part[i] < 1 || part[i] > parts) return false;
    sums[static_cast<std::size_t>(part[i] - 1)] += s.items()[i];
  }
  return std::all_of(sums.begin(), sums.end(), [&](long long x) { return x == sums[0]; });
}

Partition3Reduction reduce_partition_to_partition3(const PartitionInstance& s) {
  if (s.total() % 2 != 0) return {PartitionInstance({1, 1, 2}), true};
  std::vector<long long> items = s.items();
  items.push_back(s.total() / 2);
  return {PartitionInstance(std::move(items)), false};
}

ReducedSplitGraph reduce_partition3_to_splitgraph(const PartitionInstance& s) {
  const long long total = s.total();
  if (total + static_cast<long long>(s.size()) > 1'000'000) {
    throw ResourceLimit("reduced graph would have more than 10^6 vertices");
  }
  const int clique_size = static_cast<int>(total);
  const int n = clique_size + static_cast<int>(s.size());
  std::vector<Edge> edges;
  for (int u = 0; u < clique_size; ++u)
    for (int v = u + 1; v < clique_size; ++v) edges.push_back({u, v});
  ReducedSplitGraph out;
  int next = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Vertex w = clique_size + static_cast<int>(i);
    VertexList block;
    for (long long t = 0; t < s.items()[i]; ++t) {
      block.push_back(next);
      edges.push_back({next, w});
      ++next;
    }
    out.blocks.push_back(std::move(block));
    out.independent_of.push_back(w);
  }
  VertexList clique(static_cast<std::size_t>(clique_size));
  std::iota(clique.begin(), clique.end(), 0);
  Graph g(n, std::move(edges));
  out.graph = validate_split(g, clique, out.independent_of);
  return out;
}

Lemma3Answer lemma3_check(const SplitGraph& sg) {
  const Graph& g = sg.graph();
  const std::size_t csize = sg.clique().size();
  if (csize == 0 || csize % 3 != 0) {
    throw InvalidInput("clique size " + std::to_string(csize) + " is not a positive multiple of 3");
  }
  // Union clique vertices that share an independent neighbor.
  std::vector<Vertex> parent(static_cast<std::size_t>(g.n()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  Lemma3Answer ans;
  VertexList independent = sg.independent();
  std::sort(independent.begin(), independent.end());
  for (Vertex w : independent) {
    const auto& nb = g.neighbors(w);
    if (nb.empty()) {
      ans.isolated_independent.push_back(w);
      continue;
    }
    for (Vertex c : nb) {
      const Vertex a = find(nb.front());
      const Vertex b = find(c);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  VertexList clique = sg.clique();
  std::sort(clique.begin(), clique.end());
  std::vector<int> block_of(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> root_block(static_cast<std::size_t>(g.n()), -1);
  for (Vertex c : clique) {
    const Vertex r = find(c);
    int& b = root_block[static_cast<std::size_t>(r)];
    if (b < 0) {
      b = static_cast<int>(ans.blocks.size());
      ans.blocks.emplace_back();
    }
    ans.blocks[static_cast<std::size_t>(b)].push_back(c);
    block_of[static_cast<std::size_t>(c)] = b;
  }
  std::vector<long long> sizes;
  for (const auto& b : ans.blocks) sizes.push_back(static_cast<long long>(b.size()));
  const PartitionAnswer split = partition3_oracle(PartitionInstance(sizes));
  if (!split.yes) return ans;

  CliqueTripartition parts;
  for (std::size_t b = 0; b < ans.blocks.size(); ++b) {
    auto& cp = parts.c_parts[static_cast<std::size_t>(split.part[b] - 1)];
    cp.insert(cp.end(), ans.blocks[b].begin(), ans.blocks[b].end());
  }
  for (auto& cp : parts.c_parts) std::sort(cp.begin(), cp.end());
  for (Vertex w : independent) {
    const auto& nb = g.neighbors(w);
    const int j = nb.empty() ? 1 : split.part[static_cast<std::size_t>(block_of[static_cast<std::size_t>(nb.front())])];
    parts.i_parts[static_cast<std::size_t>(j - 1)].push_back(w);
  }
  check_clique_tripartition(sg, parts);
  ans.yes = true;
  ans.witness = std::move(parts);
  return ans;
}

Certificate certify_end_to_end(const PartitionInstance& s, const CertifyCaps& caps) {
  Certificate cert;
  cert.instance = s;
  auto add = [&](std::string name, std::string answer, bool skipped, std::string note) {
    cert.checks.push_back({std::move(name), std::move(answer), skipped, std::move(note)});
  };
  auto yes_no = [](bool b) { return std::string(b ? "YES" : "NO"); };

  try {
    cert.partition3 = partition3_oracle(s);
    add("partition3", yes_no(cert.partition3.yes), false, cert.partition3.reason);
  } catch (const ResourceLimit& e) {
    add("partition3", "", true, e.what());
    return cert;
  }
  const long long total = s.total();
  const bool divisible = total % 3 == 0;
  const long long k = total / 3;

  std::optional<ReducedSplitGraph> reduced;
  try {
    reduced = reduce_partition3_to_splitgraph(s);
  } catch (const ResourceLimit& e) {
    add("lemma3_check", "", true, e.what());
    return cert;
  }
  const int n = reduced->graph.graph().n();

  if (!divisible) {
    cert.lemma3 = Lemma3Answer{};
    add("lemma3_check", "NO", false, "clique size not divisible by 3");
  } else {
    try {
      cert.lemma3 = lemma3_check(reduced->graph);
      add("lemma3_check", yes_no(cert.lemma3->yes), false, "");
    } catch (const ResourceLimit& e) {
      add("lemma3_check", "", true, e.what());
    }
  }
  if (cert.lemma3) {
    cert.answers_agree = cert.lemma3->yes == cert.partition3.yes;
    add("answers_agree", cert.answers_agree ? "PASS" : "FAIL", false, "");
    if (!cert.answers_agree) cert.consistent = false;
  }

  if (cert.lemma3 && cert.lemma3->yes) {
    try {
      TreeRepresentation tr = build_tree_representation(reduced->graph, *cert.lemma3->witness);
      const RepValidation v = validate_tree_representation(reduced->graph.graph(), tr, static_cast<int>(k));
      const bool ok = v.pass && v.profile.max_load == k;
      cert.representation_max_load = v.profile.max_load;
      add("tree_representation", ok ? "PASS" : "FAIL", false,
          "max load " + std::to_string(v.profile.max_load) + ", target " + std::to_string(k));
      if (!ok) cert.consistent = false;
      const CliqueBound lb = lower_bound_from_clique(reduced->graph, tr);
      add("clique_lower_bound", std::to_string(lb.bound), false,
          "common node " + tr.host.name(lb.common_node));
      if (lb.bound != k) cert.consistent = false;
      cert.representation = std::move(tr);
    } catch (const UnsupportedCase& e) {
      add("tree_representation", "", true, e.what());
    }
  } else {
    add("tree_representation", "", true, "no clique tripartition to build from");
  }

  if (!divisible) {
    add("mmw_exact", "", true, "sum not divisible by 3");
  } else if (n > caps.solver.mmw_n) {
    add("mmw_exact", "", true,
        "n=" + std::to_string(n) + " exceeds the mm-width cap " + std::to_string(caps.solver.mmw_n));
  } else {
    cert.mmw = mmw_exact(reduced->graph.graph(), caps.solver, caps.workers).width;
    const bool equal = *cert.mmw == k;
    const bool expected = cert.partition3.yes;
    add("mmw_exact", std::to_string(*cert.mmw), false,
        std::string(equal ? "equals" : "differs from") + " sum/3 = " + std::to_string(k));
    if (equal != expected) cert.consistent = false;
  }
  return cert;
}

}  // namespace mmw
