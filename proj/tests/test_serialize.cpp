#include <doctest.h>

#include "mmw/serialize.hpp"
#include "oracles.hpp"

using namespace mmw;

TEST_SUITE("serialize") {

TEST_CASE("graph JSON is canonical and parsers accept any order") {
  const json in = json::parse(R"({"n": 3, "edges": [[2, 1], [1, 0]]})");
  const Graph g = graph_from_json(in);
  CHECK(to_json(g).dump() == R"({"edges":[[0,1],[1,2]],"n":3})");
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2})")), InvalidInput);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0]]})")), InvalidInput);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, "1"]]})")), InvalidInput);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 1], [1, 0]]})")), InvalidInput);
}

TEST_CASE("split graph JSON round-trips and re-validates") {
  const json in = json::parse(R"({"n": 3, "edges": [[0,1],[1,2],[0,2]], "clique": [2, 0], "independent": [1]})");
  const SplitGraph sg = split_graph_from_json(in);
  CHECK(to_json(sg)["clique"] == json::parse("[0, 2]"));
  CHECK_THROWS_AS(split_graph_from_json(json::parse(R"({"n": 3, "edges": [[0,1],[1,2]], "clique": [0, 2], "independent": [1]})")),
                  SplitError);
}

TEST_CASE("decomposition witnesses round-trip and re-evaluate") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = graph_from_edge_mask(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
    const WidthResult r = mmw_exact(g);
    const json j = to_json(*r.witness);
    const BranchDecomposition back = decomposition_from_json(json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(f_width_of(back, mm_cut_function(g)).width == r.width);
  }
  CHECK_THROWS_AS(decomposition_from_json(json::parse(R"({"tree_edges": [[0,1]], "leaf_map": {"0": 0, "x": 1}})")),
                  InvalidInput);
  CHECK_THROWS_AS(decomposition_from_json(json::parse(R"({"tree_edges": [[0,1],[1,2]], "leaf_map": {"0": 0, "2": 1}})")),
                  MalformedTree);
}

TEST_CASE("tree representations round-trip with node names") {
  const auto red = reduce_partition3_to_splitgraph(PartitionInstance({2, 2, 2}));
  const auto tr = build_tree_representation(red.graph, *lemma3_check(red.graph).witness);
  const json j = to_json(tr);
  CHECK(j["host_edges"][0][0] == "a0");
  const TreeRepresentation back = representation_from_json(json::parse(j.dump()));
  CHECK(to_json(back) == j);
  const auto v = validate_tree_representation(red.graph.graph(), back, 2);
  CHECK(v.pass);
  CHECK(v.profile.max_load == 2);
  const json report = to_json(v, back.host);
  CHECK(report["pass"] == true);
  CHECK(report["edge_loads"].size() == back.host.edges().size());
}

TEST_CASE("numbered representations and malformed hosts") {
  const json ok = json::parse(R"({"host_edges": [[0,1],[0,2],[0,3]], "subtrees": {"0": [[0,1]], "1": [[2,0]]}})");
  const TreeRepresentation tr = representation_from_json(ok);
  CHECK(tr.subtrees[1].front() == TreeEdge{0, 2});
  CHECK_FALSE(tr.host.has_names());
  const json path = json::parse(R"({"host_edges": [[0,1],[1,2]], "subtrees": {"0": [[0,1]]}})");
  CHECK_THROWS_AS(representation_from_json(path), MalformedTree);
  const json gap = json::parse(R"({"host_edges": [[0,1],[0,2],[0,3]], "subtrees": {"1": [[0,1]]}})");
  CHECK_THROWS_AS(representation_from_json(gap), InvalidInput);
  const json unknown = json::parse(R"({"host_edges": [["a","b"]], "subtrees": {"0": [["a","c"]]}})");
  CHECK_THROWS_AS(representation_from_json(unknown), InvalidInput);
}

TEST_CASE("instance and answer JSON") {
  const PartitionInstance s = instance_from_json(json::parse(R"({"items": [1,1,1,3,2,1]})"));
  const json a = to_json(partition3_oracle(s), s, 3);
  CHECK(a["answer"] == "YES");
  CHECK(a["parts"] == json::parse("[[1,1,1],[3],[2,1]]"));
  const PartitionInstance no = instance_from_json(json::parse(R"({"items": [3,1,1,2,1]})"));
  CHECK(to_json(partition3_oracle(no), no, 3).dump() == R"({"answer":"NO","reason":"sum not divisible by 3"})");
  CHECK_THROWS_AS(instance_from_json(json::parse(R"({"items": [1, 0]})")), InvalidInput);
  CHECK_THROWS_AS(instance_from_json(json::parse(R"({"items": [1.5]})")), InvalidInput);
  CHECK_THROWS_AS(instance_from_json(json::parse(R"({"values": [1]})")), InvalidInput);
}

TEST_CASE("clique tripartition JSON round-trips and re-validates") {
  const auto red = reduce_partition3_to_splitgraph(PartitionInstance({1, 1, 1, 3, 2, 1}));
  const auto ans = lemma3_check(red.graph);
  const json j = to_json(*ans.witness);
  const CliqueTripartition back = clique_tripartition_from_json(json::parse(j.dump()));
  CHECK(to_json(back) == j);
  CHECK_NOTHROW(check_clique_tripartition(red.graph, back));
}

TEST_CASE("certificate JSON") {
  const json j = to_json(certify_end_to_end(PartitionInstance({1, 1, 1})));
  CHECK(j["consistent"] == true);
  CHECK(j["mmw"] == 1);
  CHECK(j["representation"].is_object());
  const TreeRepresentation tr = representation_from_json(j["representation"]);
  const auto red = reduce_partition3_to_splitgraph(PartitionInstance({1, 1, 1}));
  CHECK(validate_tree_representation(red.graph.graph(), tr, 1).pass);
}

}
