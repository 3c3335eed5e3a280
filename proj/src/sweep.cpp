#include "mmw/sweep.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace mmw {

std::optional<SweepKind> parse_sweep_kind(const std::string& name) {
  if (name == "chain") return SweepKind::kChain;
  if (name == "soundness2to3") return SweepKind::kSoundness2to3;
  if (name == "soundness3tograph") return SweepKind::kSoundness3toGraph;
  if (name == "solver-agreement") return SweepKind::kSolverAgreement;
  return std::nullopt;
}

std::string to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::kChain: return "chain";
    case SweepKind::kSoundness2to3: return "soundness2to3";
    case SweepKind::kSoundness3toGraph: return "soundness3tograph";
    case SweepKind::kSolverAgreement: return "solver-agreement";
  }
  return "unknown";
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            next.store(count);
            return;
          }
        }
      });
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

void for_each_multiset(int max_m, int max_item,
                       const std::function<void(const std::vector<long long>&)>& visit) {
  std::vector<long long> items;
  std::function<void(int, long long)> grow = [&](int remaining, long long from) {
    if (remaining == 0) {
      visit(items);
      return;
    }
    for (long long x = from; x <= max_item; ++x) {
      items.push_back(x);
      grow(remaining - 1, x);
      items.pop_back();
    }
  };
  for (int m = 1; m <= max_m; ++m) grow(m, 1);
}

namespace {

struct Row {
  json data;
  bool violation = false;
};

SweepReport finish(SweepKind kind, json params, std::vector<Row> rows) {
  SweepReport r;
  r.kind = kind;
  r.params = std::move(params);
  r.rows = json::array();
  for (Row& row : rows) {
    ++r.instances;
    if (row.violation) ++r.violations;
    r.rows.push_back(std::move(row.data));
  }
  return r;
}

SweepReport sweep_chain(const SweepOptions& o) {
  const int lo = o.n_min < 0 ? o.n : o.n_min;
  std::vector<std::pair<int, std::uint64_t>> graphs;
  for (int n = lo; n <= o.n; ++n) {
    for_each_small_graph(n, [&](std::uint64_t bits, const Graph& g) {
      if (g.num_edges() >= 2 && is_connected(g)) graphs.emplace_back(n, bits);
    }, std::max(o.n, kDefaultSmallGraphCap));
  }
  std::vector<Row> rows(graphs.size());
  parallel_for(graphs.size(), o.workers, [&](std::size_t i) {
    const auto [n, bits] = graphs[i];
    const Graph g = graph_from_edge_mask(n, bits);
    const InequalityChainReport rep = check_inequality_chain(g, o.caps, 1);
    json d = to_json(rep);
    d["graph"] = std::to_string(n) + ":" + std::to_string(bits);
    d["n"] = n;
    d["m"] = g.num_edges();
    rows[i] = {std::move(d), !rep.ok()};
  });
  return finish(SweepKind::kChain, {{"n_min", lo}, {"n", o.n}}, std::move(rows));
}

std::vector<PartitionInstance> multisets(int max_m, int max_item) {
  std::vector<PartitionInstance> out;
  for_each_multiset(max_m, max_item, [&](const std::vector<long long>& items) {
    out.emplace_back(items);
  });
  return out;
}

SweepReport sweep_soundness_2to3(const SweepOptions& o) {
  const auto instances = multisets(o.max_m, o.max_item);
  std::vector<Row> rows(instances.size());
  parallel_for(instances.size(), o.workers, [&](std::size_t i) {
    const PartitionInstance& s = instances[i];
    const PartitionAnswer p2 = partition2_oracle(s);
    const Partition3Reduction red = reduce_partition_to_partition3(s);
    const PartitionAnswer p3 = partition3_oracle(red.instance);
    bool bad = p2.yes != p3.yes;
    bad = bad || (p2.yes && !witness_valid(s, p2.part, 2));
    bad = bad || (p3.yes && !witness_valid(red.instance, p3.part, 3));
    rows[i] = {{{"items", s.items()},
                {"reduced", red.instance.items()},
                {"forced_no", red.forced_no},
                {"partition2", p2.yes ? "YES" : "NO"},
                {"partition3", p3.yes ? "YES" : "NO"},
                {"agree", !bad}},
               bad};
  });
  return finish(SweepKind::kSoundness2to3, {{"max_m", o.max_m}, {"max_item", o.max_item}},
                std::move(rows));
}

SweepReport sweep_soundness_3tograph(const SweepOptions& o) {
  std::vector<PartitionInstance> instances;
  for (auto& s : multisets(o.max_m, o.max_item)) {
    if (s.total() % 3 == 0) instances.push_back(std::move(s));
  }
  std::vector<Row> rows(instances.size());
  parallel_for(instances.size(), o.workers, [&](std::size_t i) {
    const PartitionInstance& s = instances[i];
    const PartitionAnswer p3 = partition3_oracle(s);
    const ReducedSplitGraph red = reduce_partition3_to_splitgraph(s);
    const Lemma3Answer l3 = lemma3_check(red.graph);
    bool bad = p3.yes != l3.yes;
    bad = bad || (p3.yes && !witness_valid(s, p3.part, 3));
    if (l3.witness) check_clique_tripartition(red.graph, *l3.witness);
    rows[i] = {{{"items", s.items()},
                {"partition3", p3.yes ? "YES" : "NO"},
                {"lemma3", l3.yes ? "YES" : "NO"},
                {"agree", !bad}},
               bad};
  });
  return finish(SweepKind::kSoundness3toGraph, {{"max_m", o.max_m}, {"max_item", o.max_item}},
                std::move(rows));
}

SweepReport sweep_solver_agreement(const SweepOptions& o) {
  std::vector<PartitionInstance> instances;
  for_each_multiset(o.max_total, o.max_total, [&](const std::vector<long long>& items) {
    long long total = 0;
    for (long long x : items) total += x;
    if (total % 3 == 0 && total + static_cast<long long>(items.size()) <= o.max_total) {
      instances.emplace_back(items);
    }
  });
  std::vector<Row> rows(instances.size());
  parallel_for(instances.size(), o.workers, [&](std::size_t i) {
    const PartitionInstance& s = instances[i];
    const ReducedSplitGraph red = reduce_partition3_to_splitgraph(s);
    const Lemma3Answer l3 = lemma3_check(red.graph);
    const int k = static_cast<int>(s.total() / 3);
    const int width = mmw_exact(red.graph.graph(), o.caps, 1).width;
    const bool bad = l3.yes != (width == k);
    rows[i] = {{{"items", s.items()},
                {"n", red.graph.graph().n()},
                {"lemma3", l3.yes ? "YES" : "NO"},
                {"mmw", width},
                {"target", k},
                {"agree", !bad}},
               bad};
  });
  return finish(SweepKind::kSolverAgreement, {{"max_total", o.max_total}}, std::move(rows));
}

}  // namespace

SweepReport run_sweep(SweepKind kind, const SweepOptions& opts) {
  switch (kind) {
    case SweepKind::kChain: return sweep_chain(opts);
    case SweepKind::kSoundness2to3: return sweep_soundness_2to3(opts);
    case SweepKind::kSoundness3toGraph: return sweep_soundness_3tograph(opts);
    case SweepKind::kSolverAgreement: return sweep_solver_agreement(opts);
  }
  throw InvalidInput("unknown sweep kind");
}

json to_json(const SweepReport& r) {
  return {{"kind", to_string(r.kind)},
          {"params", r.params},
          {"instances", r.instances},
          {"violations", r.violations},
          {"rows", r.rows}};
}

}  // namespace mmw
