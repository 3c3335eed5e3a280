#include "mmw/serialize.hpp"

#include <fstream>
#include <map>

namespace mmw {

namespace {

json edge_pair(int a, int b) { return json::array({a, b}); }

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<std::pair<json, json>> pair_list(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<std::pair<json, json>> out;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2) throw InvalidInput(std::string(what) + " entries must be pairs");
    out.emplace_back(p[0], p[1]);
  }
  return out;
}

VertexList vertex_list(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  VertexList out;
  for (const json& v : j) out.push_back(as_int(v, what));
  return out;
}

json sorted_list(VertexList v) {
  std::sort(v.begin(), v.end());
  return json(v);
}

json tree_node(const TernaryTree& t, Node v) {
  return t.has_names() ? json(t.name(v)) : json(v);
}

}  // namespace

json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_pair(e.u, e.v));
  return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  const int n = as_int(field(j, "n"), "n");
  std::vector<Edge> edges;
  for (const auto& [a, b] : pair_list(field(j, "edges"), "edges")) {
    edges.push_back({as_int(a, "edge endpoint"), as_int(b, "edge endpoint")});
  }
  return Graph(n, std::move(edges));
}

json to_json(const SplitGraph& sg) {
  json j = to_json(sg.graph());
  j["clique"] = sorted_list(sg.clique());
  j["independent"] = sorted_list(sg.independent());
  return j;
}

SplitGraph split_graph_from_json(const json& j) {
  const Graph g = graph_from_json(j);
  return validate_split(g, vertex_list(field(j, "clique"), "clique"),
                        vertex_list(field(j, "independent"), "independent"));
}

json to_json(const BranchDecomposition& bd) {
  json edges = json::array();
  for (const TreeEdge& e : bd.tree().edges()) edges.push_back(edge_pair(e.a, e.b));
  json leaf_map = json::object();
  for (Node v = 0; v < bd.tree().node_count(); ++v) {
    if (bd.label(v) >= 0) leaf_map[std::to_string(v)] = bd.label(v);
  }
  return {{"tree_edges", edges}, {"leaf_map", leaf_map}};
}

BranchDecomposition decomposition_from_json(const json& j) {
  std::vector<TreeEdge> edges;
  int max_node = -1;
  for (const auto& [a, b] : pair_list(field(j, "tree_edges"), "tree_edges")) {
    edges.push_back({as_int(a, "tree node"), as_int(b, "tree node")});
    max_node = std::max({max_node, edges.back().a, edges.back().b});
  }
  const json& lm = field(j, "leaf_map");
  if (!lm.is_object()) throw InvalidInput("leaf_map must be an object");
  std::vector<int> labels(static_cast<std::size_t>(max_node + 1), -1);
  for (const auto& [key, value] : lm.items()) {
    int node = -1;
    try {
      std::size_t used = 0;
      node = std::stoi(key, &used);
      if (used != key.size()) node = -1;
    } catch (const std::exception&) {
      node = -1;
    }
    if (node < 0 || node > max_node) throw InvalidInput("leaf_map key \"" + key + "\" is not a tree node");
    labels[static_cast<std::size_t>(node)] = as_int(value, "leaf_map value");
  }
  return BranchDecomposition(TernaryTree(max_node + 1, std::move(edges)), std::move(labels));
}

json to_json(const WidthResult& r) {
  json j = {{"width", r.width}};
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  j["critical_edge"] = r.critical_edge ? edge_pair(r.critical_edge->a, r.critical_edge->b) : json(nullptr);
  return j;
}

json to_json(const TreeRepresentation& tr) {
  const TernaryTree& h = tr.host;
  json host_edges = json::array();
  for (const TreeEdge& e : h.edges()) host_edges.push_back({tree_node(h, e.a), tree_node(h, e.b)});
  json subtrees = json::object();
  for (std::size_t u = 0; u < tr.subtrees.size(); ++u) {
    json edges = json::array();
    for (const TreeEdge& e : tr.subtrees[u]) edges.push_back({tree_node(h, e.a), tree_node(h, e.b)});
    subtrees[std::to_string(u)] = edges;
  }
  return {{"host_edges", host_edges}, {"subtrees", subtrees}};
}

TreeRepresentation representation_from_json(const json& j) {
  const auto host_pairs = pair_list(field(j, "host_edges"), "host_edges");
  bool named = false;
  for (const auto& [a, b] : host_pairs) named = named || a.is_string() || b.is_string();

  std::map<std::string, Node> ids;
  std::vector<std::string> names;
  int max_node = -1;
  auto resolve = [&](const json& x, bool create) -> Node {
    if (named) {
      if (!x.is_string()) throw InvalidInput("mixed named and numbered host nodes");
      const auto s = x.get<std::string>();
      if (auto it = ids.find(s); it != ids.end()) return it->second;
      if (!create) throw InvalidInput("subtree uses unknown host node \"" + s + "\"");
      names.push_back(s);
      return ids[s] = static_cast<Node>(names.size() - 1);
    }
    const int v = as_int(x, "host node");
    if (v < 0) throw InvalidInput("host node ids must be nonnegative");
    if (create) max_node = std::max(max_node, v);
    return v;
  };
  std::vector<TreeEdge> edges;
  for (const auto& [a, b] : host_pairs) edges.push_back({resolve(a, true), resolve(b, true)});
  const int count = named ? static_cast<int>(names.size()) : max_node + 1;

  TreeRepresentation tr;
  tr.host = TernaryTree(count, std::move(edges), std::move(names));
  const json& st = field(j, "subtrees");
  if (!st.is_object()) throw InvalidInput("subtrees must be an object keyed by vertex");
  std::map<int, EdgeSubtree> by_vertex;
  for (const auto& [key, value] : st.items()) {
    int u = -1;
    try {
      std::size_t used = 0;
      u = std::stoi(key, &used);
      if (used != key.size()) u = -1;
    } catch (const std::exception&) {
      u = -1;
    }
    if (u < 0) throw InvalidInput("subtree key \"" + key + "\" is not a vertex");
    EdgeSubtree s;
    for (const auto& [a, b] : pair_list(value, "subtree edges")) {
      s.push_back(normalized({resolve(a, false), resolve(b, false)}));
    }
    by_vertex[u] = std::move(s);
  }
  const int n = by_vertex.empty() ? 0 : by_vertex.rbegin()->first + 1;
  if (static_cast<int>(by_vertex.size()) != n) throw InvalidInput("subtrees must be keyed by 0..n-1");
  for (auto& [u, s] : by_vertex) tr.subtrees.push_back(std::move(s));
  return tr;
}

json to_json(const RepValidation& v, const TernaryTree& host) {
  json violations = json::array();
  for (const RepViolation& x : v.violations) {
    json item = {{"kind", to_string(x.kind)}, {"message", x.message}};
    if (x.u >= 0) item["u"] = x.u;
    if (x.v >= 0) item["v"] = x.v;
    if (x.edge && x.edge->a < host.node_count() && x.edge->b < host.node_count() && x.edge->a >= 0 &&
        x.edge->b >= 0) {
      item["edge"] = {tree_node(host, x.edge->a), tree_node(host, x.edge->b)};
    }
    if (x.kind == RepViolation::Kind::kOverloadedEdge) item["load"] = x.load;
    violations.push_back(item);
  }
  json loads = json::array();
  for (std::size_t i = 0; i < host.edges().size(); ++i) {
    const TreeEdge& e = host.edges()[i];
    loads.push_back({{"edge", {tree_node(host, e.a), tree_node(host, e.b)}}, {"load", v.profile.load[i]}});
  }
  return {{"pass", v.pass},
          {"violations", violations},
          {"max_load", v.profile.max_load},
          {"edge_loads", loads}};
}

json to_json(const PartitionInstance& s) { return {{"items", s.items()}}; }

PartitionInstance instance_from_json(const json& j) {
  const json& items = field(j, "items");
  if (!items.is_array()) throw InvalidInput("items must be an array");
  std::vector<long long> out;
  for (const json& x : items) {
    if (!x.is_number_integer()) throw InvalidInput("items must be integers");
    out.push_back(x.get<long long>());
  }
  return PartitionInstance(std::move(out));
}

json to_json(const PartitionAnswer& a, const PartitionInstance& s, int parts) {
  json j = {{"answer", a.yes ? "YES" : "NO"}};
  if (!a.reason.empty()) j["reason"] = a.reason;
  if (a.yes) {
    j["assignment"] = a.part;
    json groups = json::array();
    for (int p = 1; p <= parts; ++p) {
      json g = json::array();
      for (std::size_t i = 0; i < a.part.size(); ++i) {
        if (a.part[i] == p) g.push_back(s.items()[i]);
      }
      groups.push_back(g);
    }
    j["parts"] = groups;
  }
  return j;
}

json to_json(const CliqueTripartition& p) {
  json c = json::array();
  json i = json::array();
  for (std::size_t j = 0; j < 3; ++j) {
    c.push_back(p.c_parts[j]);
    i.push_back(p.i_parts[j]);
  }
  return {{"k", p.k()}, {"c_parts", c}, {"i_parts", i}};
}

CliqueTripartition clique_tripartition_from_json(const json& j) {
  const json& c = field(j, "c_parts");
  const json& i = field(j, "i_parts");
  if (!c.is_array() || c.size() != 3 || !i.is_array() || i.size() != 3) {
    throw InvalidInput("c_parts and i_parts must each hold three lists");
  }
  CliqueTripartition p;
  for (std::size_t k = 0; k < 3; ++k) {
    p.c_parts[k] = vertex_list(c[k], "c_parts");
    p.i_parts[k] = vertex_list(i[k], "i_parts");
  }
  return p;
}

json to_json(const Lemma3Answer& a) {
  json j = {{"answer", a.yes ? "YES" : "NO"}, {"blocks", a.blocks}};
  j["witness"] = a.witness ? to_json(*a.witness) : json(nullptr);
  if (!a.isolated_independent.empty()) j["isolated_independent"] = a.isolated_independent;
  return j;
}

json to_json(const Certificate& c) {
  json checks = json::array();
  for (const CertifyCheck& k : c.checks) {
    json item = {{"name", k.name}, {"skipped", k.skipped}};
    if (!k.answer.empty()) item["answer"] = k.answer;
    if (!k.note.empty()) item["note"] = k.note;
    checks.push_back(item);
  }
  json j = {{"instance", to_json(c.instance)},
            {"partition3", to_json(c.partition3, c.instance, 3)},
            {"checks", checks},
            {"consistent", c.consistent}};
  j["lemma3"] = c.lemma3 ? to_json(*c.lemma3) : json(nullptr);
  j["representation"] = c.representation ? to_json(*c.representation) : json(nullptr);
  j["mmw"] = c.mmw ? json(*c.mmw) : json(nullptr);
  return j;
}

json to_json(const InequalityChainReport& r) {
  return {{"mmw", r.mmw},
          {"bw", r.bw},
          {"tw", r.tw},
          {"mmw_le_max_bw_1", r.mmw_le_bw},
          {"max_bw_1_le_tw_plus_1", r.bw_le_tw},
          {"tw_plus_1_le_3mmw", r.tw_le_3mmw},
          {"chain_ok", r.ok()}};
}

json to_json(const SymmetrySubmodularityReport& r) {
  json j = {{"pass", r.pass}, {"mode", to_string(r.mode)}, {"checks", r.checks}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = {{"property", c.property}, {"a", mask_to_list(c.a)}, {"b", mask_to_list(c.b)},
                           {"f_a", c.f_a}, {"f_b", c.f_b}, {"f_union", c.f_union},
                           {"f_intersection", c.f_intersection}};
  }
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace mmw
