#include <doctest.h>

#include "mmw/sweep.hpp"

using namespace mmw;

TEST_SUITE("sweep") {

TEST_CASE("multiset enumeration counts") {
  std::size_t count = 0;
  for_each_multiset(3, 2, [&](const std::vector<long long>& items) {
    CHECK(std::is_sorted(items.begin(), items.end()));
    ++count;
  });
  CHECK(count == 2 + 3 + 4);
}

TEST_CASE("sweep kinds parse") {
  CHECK(parse_sweep_kind("chain") == SweepKind::kChain);
  CHECK(parse_sweep_kind("solver-agreement") == SweepKind::kSolverAgreement);
  CHECK_FALSE(parse_sweep_kind("nope"));
  for (auto k : {SweepKind::kChain, SweepKind::kSoundness2to3, SweepKind::kSoundness3toGraph,
                 SweepKind::kSolverAgreement}) {
    CHECK(parse_sweep_kind(to_string(k)) == k);
  }
}

TEST_CASE("small sweeps report no violations") {
  SweepOptions o;
  o.n = 4;
  o.n_min = 3;
  const auto chain = run_sweep(SweepKind::kChain, o);
  CHECK(chain.violations == 0);
  // Connected labeled graphs: 4 on 3 vertices, 38 on 4.
  CHECK(chain.instances == 4 + 38);

  o.max_m = 4;
  o.max_item = 4;
  CHECK(run_sweep(SweepKind::kSoundness2to3, o).violations == 0);
  CHECK(run_sweep(SweepKind::kSoundness3toGraph, o).violations == 0);
  o.max_total = 7;
  const auto agree = run_sweep(SweepKind::kSolverAgreement, o);
  CHECK(agree.violations == 0);
  CHECK(agree.instances > 0);
}

TEST_CASE("reports are identical for any worker count") {
  SweepOptions o;
  o.n = 4;
  o.n_min = 2;
  o.max_m = 4;
  o.max_item = 4;
  o.max_total = 7;
  for (auto kind : {SweepKind::kChain, SweepKind::kSoundness2to3, SweepKind::kSoundness3toGraph,
                    SweepKind::kSolverAgreement}) {
    o.workers = 1;
    const std::string one = to_json(run_sweep(kind, o)).dump();
    o.workers = 4;
    CHECK(to_json(run_sweep(kind, o)).dump() == one);
  }
}

TEST_CASE("parallel_for propagates exceptions") {
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                    if (i == 7) throw InvalidInput("boom");
                  }),
                  InvalidInput);
}

TEST_CASE("sweeps surface cap violations") {
  SweepOptions o;
  o.n = 5;
  o.caps.bw_m = 5;
  CHECK_THROWS_AS(run_sweep(SweepKind::kChain, o), ResourceLimit);
}

}
