#pragma once

// JSON forms of every library value. Serializers emit canonical output
// (normalized, sorted edges; sorted object keys); parsers accept any edge
// order and orientation and throw InvalidInput on schema violations.

#include <nlohmann/json.hpp>
#include <string>

#include "mmw/cut.hpp"
#include "mmw/decomposition.hpp"
#include "mmw/graph.hpp"
#include "mmw/reductions.hpp"
#include "mmw/treerep.hpp"

namespace mmw {

using json = nlohmann::json;

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json to_json(const SplitGraph& sg);
SplitGraph split_graph_from_json(const json& j);

// {"tree_edges": [[a,b],...], "leaf_map": {"<leaf node>": element}}
json to_json(const BranchDecomposition& bd);
BranchDecomposition decomposition_from_json(const json& j);

json to_json(const WidthResult& r);

// {"host_edges": [[a,b],...], "subtrees": {"<vertex>": [[a,b],...]}}.
// Named hosts use their node names as endpoints.
json to_json(const TreeRepresentation& tr);
TreeRepresentation representation_from_json(const json& j);

json to_json(const RepValidation& v, const TernaryTree& host);

json to_json(const PartitionInstance& s);
PartitionInstance instance_from_json(const json& j);

// parts is 2 for PARTITION answers and 3 for PARTITION-3.
json to_json(const PartitionAnswer& a, const PartitionInstance& s, int parts);
json to_json(const CliqueTripartition& p);
CliqueTripartition clique_tripartition_from_json(const json& j);
json to_json(const Lemma3Answer& a);
json to_json(const Certificate& c);
json to_json(const InequalityChainReport& r);
json to_json(const SymmetrySubmodularityReport& r);

json read_json_file(const std::string& path);

}  // namespace mmw
