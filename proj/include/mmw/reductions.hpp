#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmw/decomposition.hpp"
#include "mmw/graph.hpp"
#include "mmw/treerep.hpp"

namespace mmw {

// Multiset of positive integers, kept in the given order.
class PartitionInstance {
 public:
  PartitionInstance() = default;
  // Throws InvalidInput for an empty list or a non-positive item.
  explicit PartitionInstance(std::vector<long long> items);

  const std::vector<long long>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  long long total() const { return total_; }

  friend bool operator==(const PartitionInstance&, const PartitionInstance&) = default;

 private:
  std::vector<long long> items_;
  long long total_ = 0;
};

// Answer of a PARTITION / PARTITION-3 oracle. On YES, part[i] in {1, 2}
// (resp. {1, 2, 3}) assigns item i; the assignment is the lexicographically
// smallest one with equal part sums.
struct PartitionAnswer {
  bool yes = false;
  std::vector<int> part;
  std::string reason;  // why NO, when decided without search
};

inline constexpr std::size_t kPartition2MaxItems = 24;
inline constexpr std::size_t kPartition3MaxItems = 16;
inline constexpr long long kPartition3MaxTotal = 3000;

// Throws ResourceLimit beyond 24 items.
PartitionAnswer partition2_oracle(const PartitionInstance& s);

// Throws ResourceLimit when there are more than 16 items and the total exceeds 3000.
PartitionAnswer partition3_oracle(const PartitionInstance& s);

// Checks a YES witness against the instance: every item assigned to one of
// `parts` parts and all part sums equal.
bool witness_valid(const PartitionInstance& s, const std::vector<int>& part, int parts);

struct Partition3Reduction {
  PartitionInstance instance;
  bool forced_no = false;  // odd total: the PARTITION answer is already NO
};

// S -> S + {sum(S)/2}. An odd total maps to the fixed NO instance {1, 1, 2}.
Partition3Reduction reduce_partition_to_partition3(const PartitionInstance& s);

struct ReducedSplitGraph {
  SplitGraph graph;
  // blocks[i] are the clique vertices of item i; independent vertex
  // independent_of[i] is adjacent to exactly blocks[i].
  std::vector<VertexList> blocks;
  VertexList independent_of;
};

// Clique on sum(S) vertices 0..sum-1 cut into consecutive blocks of sizes
// s_1..s_m, plus independent vertices sum..sum+m-1, the i-th adjacent to block i.
ReducedSplitGraph reduce_partition3_to_splitgraph(const PartitionInstance& s);

struct Lemma3Answer {
  bool yes = false;
  std::optional<CliqueTripartition> witness;
  // Clique vertices grouped by the independent neighborhoods that must stay
  // together, ordered by smallest member.
  std::vector<VertexList> blocks;
  VertexList isolated_independent;  // empty neighborhoods, accepted vacuously
};

// Decides whether the clique of sg (|C| = 3k, k >= 1) splits into three
// k-sets with every independent neighborhood inside one of them. Clique
// vertices sharing an independent neighbor are merged into blocks, then the
// block sizes are split three ways. Throws InvalidInput when 3 does not
// divide |C| or C is empty.
Lemma3Answer lemma3_check(const SplitGraph& sg);

struct CertifyCaps {
  SolverCaps solver;
  int workers = 1;
};

struct CertifyCheck {
  std::string name;
  std::string answer;  // "YES", "NO", "PASS", "FAIL", or a number
  bool skipped = false;
  std::string note;
};

struct Certificate {
  PartitionInstance instance;
  PartitionAnswer partition3;
  std::optional<Lemma3Answer> lemma3;
  bool answers_agree = false;
  std::optional<TreeRepresentation> representation;
  std::optional<int> representation_max_load;
  std::optional<int> mmw;
  std::vector<CertifyCheck> checks;
  bool consistent = true;
};

// Runs the whole chain on one PARTITION-3 instance: the oracle, the split
// graph reduction and its clique test, the width-(sum/3) representation when
// the answer is YES, and the exact mm-width when the graph fits the cap.
// Checks that exceed a cap are marked skipped rather than failing.
Certificate certify_end_to_end(const PartitionInstance& s, const CertifyCaps& caps = {});

}  // namespace mmw
