#include <doctest.h>

#include <algorithm>
#include <random>

#include "pigeonpost/error.hpp"
#include "pigeonpost/flight_plan.hpp"
#include "pigeonpost/generators.hpp"
#include "pigeonpost/planners.hpp"
#include "support.hpp"

using namespace pigeonpost;
using support::plan;

namespace {

const FlightPlan kHubPlan = plan({{2, 0}, {1, 0}, {0, 3}, {0, 4}, {0, 5}});

FlightPlan random_plan(std::mt19937_64& rng, unsigned n, std::size_t len) {
  FlightPlan p;
  while (p.size() < len) {
    const auto u = static_cast<NodeId>(rng() % n);
    const auto v = static_cast<NodeId>(rng() % n);
    if (u != v) p.push_back({u, v});
  }
  return p;
}

}  // namespace

TEST_SUITE("flightplan") {

TEST_CASE("flights reject remote == home") {
  FlightPlan p;
  CHECK_THROWS_AS(p.push_back({1, 1}), InputError);
  CHECK_THROWS_AS(FlightPlan({{0, 1}, {2, 2}}), InputError);
}

TEST_CASE("parse plan json") {
  const FlightPlan p = parse_flight_plan(R"({"flights":[{"remote":2,"home":0},{"remote":0,"home":3}]})");
  CHECK(p == plan({{2, 0}, {0, 3}}));
  CHECK_THROWS_AS(parse_flight_plan(R"({"flights":[{"remote":2}]})"), InputError);
  CHECK_THROWS_AS(parse_flight_plan(R"([1,2])"), InputError);
  CHECK_THROWS_AS(parse_flight_plan(R"({"flights":[{"remote":1,"home":1}]})"), InputError);
}

TEST_CASE("singlehop verifier") {
  const DemandGraph hub = gen::hub6();
  const VerificationReport ok = verify_singlehop(hub, plan_singlehop(hub).plan);
  CHECK(ok.satisfied);
  CHECK(ok.pigeon_count == 6);

  const VerificationReport bad = verify_singlehop(hub, kHubPlan);
  CHECK_FALSE(bad.satisfied);
  const auto it = std::find_if(bad.witnesses.begin(), bad.witnesses.end(),
                               [](const DemandWitness& w) { return w.demand == Demand{1, 4}; });
  REQUIRE(it != bad.witnesses.end());
  CHECK(it->kind == WitnessKind::unsatisfied);

  const VerificationReport empty = verify_singlehop(DemandGraph(3, {}), FlightPlan{});
  CHECK(empty.satisfied);
  CHECK(empty.pigeon_count == 0);
}

TEST_CASE("singlehop witness is the earliest direct slot") {
  const VerificationReport r = verify_singlehop(DemandGraph(2, {{0, 1}}), plan({{1, 0}, {0, 1}, {0, 1}}));
  REQUIRE(r.satisfied);
  CHECK(r.witnesses[0].kind == WitnessKind::direct);
  CHECK(r.witnesses[0].slots == std::vector<std::size_t>{1});
}

TEST_CASE("twohop verifier on the hub plan") {
  const DemandGraph hub = gen::hub6();
  const VerificationReport r = verify_twohop(hub, kHubPlan);
  CHECK(r.satisfied);
  const auto it = std::find_if(r.witnesses.begin(), r.witnesses.end(),
                               [](const DemandWitness& w) { return w.demand == Demand{1, 4}; });
  REQUIRE(it != r.witnesses.end());
  CHECK(it->kind == WitnessKind::relay);
  CHECK(it->route == std::vector<NodeId>{1, 0, 4});
  // 0-based slots of 1->0 and 0->4.
  CHECK(it->slots == std::vector<std::size_t>{1, 3});

  const FlightPlan reversed = plan({{0, 3}, {0, 4}, {0, 5}, {2, 0}, {1, 0}});
  const VerificationReport bad = verify_twohop(hub, reversed);
  CHECK_FALSE(bad.satisfied);
  CHECK(bad.unsatisfied_count() == 3);

  CHECK(verify_twohop(DemandGraph(2, {{0, 1}}), plan({{0, 1}})).satisfied);
}

TEST_CASE("twohop does not accept three legs") {
  const DemandGraph g(4, {{0, 3}});
  CHECK_FALSE(verify_twohop(g, plan({{0, 1}, {1, 2}, {2, 3}})).satisfied);
  CHECK(verify_multihop(g, plan({{0, 1}, {1, 2}, {2, 3}})).satisfied);
}

TEST_CASE("multihop verifier") {
  const DemandGraph g(3, {{0, 2}});
  const VerificationReport ok = verify_multihop(g, plan({{0, 1}, {1, 2}}));
  REQUIRE(ok.satisfied);
  CHECK(ok.witnesses[0].kind == WitnessKind::path);
  CHECK(ok.witnesses[0].route == std::vector<NodeId>{0, 1, 2});
  CHECK(ok.witnesses[0].slots == std::vector<std::size_t>{0, 1});

  CHECK_FALSE(verify_multihop(g, plan({{1, 2}, {0, 1}})).satisfied);

  const DemandGraph cyc = gen::cycle(4);
  const PlannerResult cycle_plan = plan_cycle(cyc);
  CHECK(cycle_plan.plan.size() == 6);
  CHECK(verify_multihop(cyc, cycle_plan.plan).satisfied);
}

TEST_CASE("multihop information waits at nodes") {
  const DemandGraph g(4, {{0, 3}});
  CHECK(verify_multihop(g, plan({{0, 1}, {2, 0}, {1, 2}, {3, 1}, {2, 3}})).satisfied);
}

TEST_CASE("verifiers reject flights outside the graph") {
  const DemandGraph g(2, {{0, 1}});
  CHECK_THROWS_AS(verify_singlehop(g, plan({{0, 2}})), InputError);
  CHECK_THROWS_AS(verify_twohop(g, plan({{5, 1}})), InputError);
  CHECK_THROWS_AS(verify_multihop(g, plan({{0, 9}})), InputError);
}

TEST_CASE("plan stats") {
  const PlanStats hub = plan_stats(kHubPlan);
  CHECK(hub.pigeon_count == 5);
  CHECK(hub.breeding[0] == 2);
  CHECK(hub.release[0] == 3);

  const PlanStats empty = plan_stats(FlightPlan{}, 3);
  CHECK(empty.pigeon_count == 0);
  CHECK(empty.breeding == std::vector<std::size_t>{0, 0, 0});
  CHECK(empty.release == std::vector<std::size_t>{0, 0, 0});

  const PlanStats parallel = plan_stats(plan({{0, 1}, {0, 1}}));
  CHECK(parallel.pigeon_count == 2);
  CHECK(parallel.release[0] == 2);
  CHECK(parallel.breeding[1] == 2);
}

TEST_CASE("property: verifiers agree with brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 600; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 4);
    const DemandGraph g = gen::random(n, 0.4, rng());
    const FlightPlan p = random_plan(rng, n, rng() % 7);
    const auto d = support::pairs(g);
    const auto f = support::pairs(p);
    CHECK(verify_singlehop(g, p).satisfied == oracle::singlehop_ok(d, f));
    CHECK(verify_twohop(g, p).satisfied == oracle::twohop_ok(d, f));
    CHECK(verify_multihop(g, p).satisfied == oracle::multihop_ok(d, f));
  }
}

TEST_CASE("property: witnesses are well formed") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 5);
    const DemandGraph g = gen::random(n, 0.3, rng());
    const FlightPlan p = random_plan(rng, n, rng() % 10);
    for (RoutingMode mode : {RoutingMode::singlehop, RoutingMode::twohop, RoutingMode::multihop}) {
      const VerificationReport r = verify(mode, g, p);
      CHECK(r.witnesses.size() == g.demand_count());
      for (const DemandWitness& w : r.witnesses) {
        if (w.kind == WitnessKind::unsatisfied) {
          CHECK(w.route.empty());
          continue;
        }
        REQUIRE(w.route.size() == w.slots.size() + 1);
        CHECK(w.route.front() == w.demand.src);
        CHECK(w.route.back() == w.demand.dst);
        for (std::size_t k = 0; k < w.slots.size(); ++k) {
          CHECK(p[w.slots[k]] == Flight{w.route[k], w.route[k + 1]});
          if (k > 0) CHECK(w.slots[k - 1] < w.slots[k]);
        }
      }
    }
  }
}

TEST_CASE("property: containment, monotonicity and permutation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 4);
    const DemandGraph g = gen::random(n, 0.3, rng());
    const FlightPlan p = random_plan(rng, n, rng() % 8);

    const bool single = verify_singlehop(g, p).satisfied;
    const bool two = verify_twohop(g, p).satisfied;
    const bool multi = verify_multihop(g, p).satisfied;
    if (single) CHECK(two);
    if (two) CHECK(multi);

    std::vector<Flight> shuffled(p.flights().begin(), p.flights().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(verify_singlehop(g, FlightPlan(shuffled)).satisfied == single);

    if (multi) {
      std::vector<Flight> extended(p.flights().begin(), p.flights().end());
      const FlightPlan extra = random_plan(rng, n, 3);
      for (const Flight& f : extra.flights()) {
        extended.insert(extended.begin() + static_cast<std::ptrdiff_t>(rng() % (extended.size() + 1)), f);
      }
      CHECK(verify_multihop(g, FlightPlan(extended)).satisfied);
    }
  }
}

}  // TEST_SUITE
