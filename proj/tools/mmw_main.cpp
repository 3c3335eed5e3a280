// mmw: command-line front end over the mmw_core library.
//
// Exit status: 0 success (NO answers included), 1 invalid input,
// 2 resource cap exceeded, 3 internal contradiction.
#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mmw/serialize.hpp"
#include "mmw/sweep.hpp"

using namespace mmw;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kCap = 2, kContradiction = 3 };

struct Config {
  SolverCaps caps;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string format = "json";

  std::string graph, instance, rep, parts, set;
  std::string what;
  int k = -1;
  bool check = false;
  SweepOptions sweep;
};

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_table(const json& j, std::ostream& out) {
  if (j.is_object() && j.contains("rows") && j["rows"].is_array() && !j["rows"].empty()) {
    for (const auto& [key, value] : j.items())
      if (key != "rows") out << key << ": " << cell(value) << "\n";
    std::vector<std::string> cols;
    for (const auto& [key, value] : j["rows"][0].items()) cols.push_back(key);
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      width[c] = cols[c].size();
      for (const auto& row : j["rows"]) width[c] = std::max(width[c], cell(row.value(cols[c], json())).size());
    }
    auto line = [&](auto get) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::string s = get(c);
        out << s << std::string(width[c] - s.size() + 2, ' ');
      }
      out << "\n";
    };
    line([&](std::size_t c) { return cols[c]; });
    for (const auto& row : j["rows"]) line([&](std::size_t c) { return cell(row.value(cols[c], json())); });
    return;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) out << key << ": " << cell(value) << "\n";
    return;
  }
  out << cell(j) << "\n";
}

void emit(const Config& cfg, const json& j) {
  if (cfg.format == "table")
    print_table(j, std::cout);
  else
    std::cout << j.dump() << "\n";
}

VertexList parse_set(const std::string& text) {
  VertexList out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("--set: '" + tok + "' is not a vertex number");
    }
    if (used != tok.size()) throw InvalidInput("--set: '" + tok + "' is not a vertex number");
    out.push_back(v);
  }
  return out;
}

Graph load_graph(const Config& cfg) { return graph_from_json(read_json_file(cfg.graph)); }
PartitionInstance load_instance(const Config& cfg) { return instance_from_json(read_json_file(cfg.instance)); }

json run_solve(const Config& cfg) {
  const Graph g = load_graph(cfg);
  if (cfg.what == "mmw") return to_json(mmw_exact(g, cfg.caps, cfg.workers));
  if (cfg.what == "bw") return to_json(branchwidth_exact(g, cfg.caps, cfg.workers));
  if (cfg.what == "tw") return {{"width", treewidth_exact(g, cfg.caps)}};
  return to_json(check_inequality_chain(g, cfg.caps, cfg.workers));
}

json run_cut(const Config& cfg) {
  const Graph g = load_graph(cfg);
  json out = json::object();
  if (!cfg.set.empty() || !cfg.check) {
    VertexList a = parse_set(cfg.set);
    for (Vertex v : a) check_vertex(g, v);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    out["set"] = a;
    out["mm"] = mm_cut(g, std::span<const Vertex>(a));
  }
  if (cfg.check) {
    if (g.n() > 31) throw ResourceLimit("symmetry/submodularity check supports at most 31 vertices");
    out["properties"] = to_json(check_symmetric_submodular(mm_cut_function(g), 10000, cfg.seed));
  }
  return out;
}

json run_reduce(const Config& cfg) {
  const PartitionInstance s = load_instance(cfg);
  if (cfg.what == "p2p3") {
    const auto r = reduce_partition_to_partition3(s);
    return {{"instance", to_json(r.instance)}, {"forced_no", r.forced_no}};
  }
  const auto r = reduce_partition3_to_splitgraph(s);
  return {{"graph", to_json(r.graph)}, {"blocks", r.blocks}, {"independent_of", r.independent_of}};
}

json run_oracle(const Config& cfg) {
  const PartitionInstance s = load_instance(cfg);
  if (cfg.what == "p2") return to_json(partition2_oracle(s), s, 2);
  return to_json(partition3_oracle(s), s, 3);
}

json run_verify_rep(const Config& cfg) {
  const Graph g = load_graph(cfg);
  const TreeRepresentation tr = representation_from_json(read_json_file(cfg.rep));
  const auto v = validate_tree_representation(g, tr, cfg.k < 0 ? std::numeric_limits<int>::max() : cfg.k);
  json out = to_json(v, tr.host);
  if (cfg.k >= 0) out["k"] = cfg.k;
  return out;
}

json run_build_rep(const Config& cfg) {
  const SplitGraph sg = split_graph_from_json(read_json_file(cfg.graph));
  CliqueTripartition parts;
  json out = json::object();
  if (!cfg.parts.empty()) {
    parts = clique_tripartition_from_json(read_json_file(cfg.parts));
  } else {
    const auto ans = lemma3_check(sg);
    out["lemma3"] = to_json(ans);
    if (!ans.witness) {
      out["answer"] = "NO";
      return out;
    }
    parts = *ans.witness;
  }
  const auto tr = build_tree_representation(sg, parts);
  const int k = parts.k();
  const auto v = validate_tree_representation(sg.graph(), tr, k);
  if (!v.pass) throw Contradiction("built representation fails validation at k=" + std::to_string(k));
  out["answer"] = "YES";
  out["k"] = k;
  out["representation"] = to_json(tr);
  out["max_load"] = v.profile.max_load;
  return out;
}

json run_certify(const Config& cfg) {
  CertifyCaps caps;
  caps.solver = cfg.caps;
  caps.workers = cfg.workers;
  const Certificate c = certify_end_to_end(load_instance(cfg), caps);
  if (!c.consistent) {
    std::cerr << to_json(c).dump() << "\n";
    throw Contradiction("certificate checks disagree");
  }
  return to_json(c);
}

json run_sweep_cmd(Config cfg) {
  cfg.sweep.caps = cfg.caps;
  cfg.sweep.workers = cfg.workers;
  const auto t0 = std::chrono::steady_clock::now();
  const SweepReport r = run_sweep(*parse_sweep_kind(cfg.what), cfg.sweep);
  std::cerr << "sweep " << cfg.what << ": " << r.instances << " instances, " << r.violations << " violations, "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s\n";
  if (r.violations != 0) {
    std::cout << to_json(r).dump() << "\n";
    throw Contradiction(std::to_string(r.violations) + " violations in sweep " + cfg.what);
  }
  return to_json(r);
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"mm-width toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  auto positive = CLI::PositiveNumber;
  app.add_option("--cap-mmw-n", cfg.caps.mmw_n, "largest vertex count for exact mm-width")->check(positive);
  app.add_option("--cap-bw-m", cfg.caps.bw_m, "largest edge count for exact branchwidth")->check(positive);
  app.add_option("--cap-tw-n", cfg.caps.tw_n, "largest vertex count for exact treewidth")->check(positive);
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));

  auto* solve = app.add_subcommand("solve", "exact width of a graph");
  solve->add_option("what", cfg.what)->required()->check(CLI::IsMember({"mmw", "bw", "tw", "chain"}));
  solve->add_option("--graph", cfg.graph)->required();

  auto* cut = app.add_subcommand("cut", "evaluate the mm cut function");
  cut->add_option("--graph", cfg.graph)->required();
  cut->add_option("--set", cfg.set, "comma-separated vertices");
  cut->add_flag("--check", cfg.check, "check symmetry and submodularity");

  auto* reduce = app.add_subcommand("reduce", "apply a reduction to a partition instance");
  reduce->add_option("what", cfg.what)->required()->check(CLI::IsMember({"p2p3", "p3graph"}));
  reduce->add_option("--instance", cfg.instance)->required();

  auto* oracle = app.add_subcommand("oracle", "decide a partition instance");
  oracle->add_option("what", cfg.what)->required()->check(CLI::IsMember({"p2", "p3"}));
  oracle->add_option("--instance", cfg.instance)->required();

  auto* verify = app.add_subcommand("verify-rep", "validate a tree-representation");
  verify->add_option("--graph", cfg.graph)->required();
  verify->add_option("--rep", cfg.rep)->required();
  verify->add_option("--k", cfg.k, "load bound")->check(CLI::NonNegativeNumber);

  auto* build = app.add_subcommand("build-rep", "build a tree-representation of a split graph");
  build->add_option("--graph", cfg.graph, "split graph JSON")->required();
  build->add_option("--parts", cfg.parts, "clique tripartition JSON (searched for when omitted)");

  auto* certify = app.add_subcommand("certify", "run every check of the split-graph reduction");
  certify->add_option("--instance", cfg.instance)->required();

  auto* sweep = app.add_subcommand("sweep", "run an exhaustive experiment");
  sweep->add_option("what", cfg.what)
      ->required()
      ->check(CLI::IsMember({"chain", "soundness2to3", "soundness3tograph", "solver-agreement"}));
  sweep->add_option("--n", cfg.sweep.n, "chain: largest vertex count")->check(positive);
  sweep->add_option("--n-min", cfg.sweep.n_min, "chain: smallest vertex count")->check(positive);
  sweep->add_option("--max-m", cfg.sweep.max_m, "most items per instance")->check(positive);
  sweep->add_option("--max-item", cfg.sweep.max_item, "largest item")->check(positive);
  sweep->add_option("--max-total", cfg.sweep.max_total, "bound on sum + item count")->check(positive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    json out;
    if (*solve) out = run_solve(cfg);
    else if (*cut) out = run_cut(cfg);
    else if (*reduce) out = run_reduce(cfg);
    else if (*oracle) out = run_oracle(cfg);
    else if (*verify) out = run_verify_rep(cfg);
    else if (*build) out = run_build_rep(cfg);
    else if (*certify) out = run_certify(cfg);
    else out = run_sweep_cmd(cfg);
    emit(cfg, out);
    return kOk;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const ResourceLimit& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const Contradiction& e) {
    std::cerr << "contradiction: " << e.what() << "\n";
    return kContradiction;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kContradiction;
  }
}
