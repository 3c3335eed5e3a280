#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mmw/decomposition.hpp"
#include "mmw/serialize.hpp"

namespace mmw {

enum class SweepKind { kChain, kSoundness2to3, kSoundness3toGraph, kSolverAgreement };

std::optional<SweepKind> parse_sweep_kind(const std::string& name);
std::string to_string(SweepKind kind);

struct SweepOptions {
  int n = 5;        // chain: largest vertex count
  int n_min = -1;   // chain: smallest vertex count, defaults to n
  int max_m = 6;    // soundness sweeps: most items per instance
  int max_item = 6; // soundness sweeps: largest item
  int max_total = 9;  // solver-agreement: bound on sum + number of items
  SolverCaps caps;
  int workers = 1;
};

struct SweepReport {
  SweepKind kind = SweepKind::kChain;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  json params;
  json rows;  // one object per instance, in enumeration order
};

// Runs one exhaustive experiment. Instances are spread over `workers`
// threads and merged back in enumeration order, so the report does not
// depend on the worker count.
SweepReport run_sweep(SweepKind kind, const SweepOptions& opts);

json to_json(const SweepReport& r);

// Non-decreasing item lists with 1..max_m items drawn from 1..max_item,
// by length and then lexicographically.
void for_each_multiset(int max_m, int max_item,
                       const std::function<void(const std::vector<long long>&)>& visit);

// Runs body(i) for i in [0, count) on up to `workers` threads. The first
// exception thrown by any call is rethrown after all threads finish.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

}  // namespace mmw
