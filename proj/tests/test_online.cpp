#include <doctest.h>

#include <random>

#include "coldseq/online_policy.hpp"
#include "coldseq/static_optimizer.hpp"
#include "testutil.hpp"

using namespace coldseq;

namespace {

LoadProfile make_profile(std::vector<double> loads, double step_min = 60.0) {
  LoadProfile p;
  p.step_minutes = step_min;
  p.loads_kw = std::move(loads);
  return p;
}

}  // namespace

TEST_CASE("zero demand keeps every machine off") {
  const Fleet fleet = testutil::table1_fleet();
  const ShiftPlan plan = online_shift(fleet, make_profile({0.0, 0.0, 0.0}));
  CHECK(plan.avg_power_kw == 0.0);
  for (const Assignment& a : plan.assignments)
    for (double q : a.loads_kw) CHECK(q == 0.0);
}

TEST_CASE("constant full demand runs the whole fleet nonstop") {
  const Fleet fleet = testutil::table1_fleet();
  const LoadProfile p = make_profile({9237.0, 9237.0, 9237.0});
  const ShiftPlan plan = online_shift(fleet, p);
  CHECK(plan.avg_power_kw == doctest::Approx(1539.0));
  check_plan(fleet, plan);
}

TEST_CASE("dispatches are always full machines in shift-order prefixes") {
  const Fleet fleet = testutil::table1_fleet();
  std::mt19937_64 rng(404);
  std::vector<double> loads;
  for (int k = 0; k < 50; ++k)
    loads.push_back(static_cast<double>(testutil::randint(rng, 0, 9000)));
  const LoadProfile p = make_profile(std::move(loads));
  const ShiftPlan plan = online_shift(fleet, p);
  check_plan(fleet, plan);
  const SequencingOrder order = shift_order(fleet);
  for (const Assignment& a : plan.assignments) {
    bool tail = false;  // once a machine is off, later ones must be too
    for (const std::string& id : order.ids) {
      const std::size_t i = fleet.index_of(id);
      const double q = a.loads_kw[i];
      const double q_max = fleet.compressors()[i].q_max_kw;
      CHECK((q == 0.0 || q == q_max));
      if (q == 0.0) tail = true;
      if (tail) CHECK(q == 0.0);
    }
  }
}

TEST_CASE("online dispatch is never cheaper than the optimal shift") {
  // Demands in multiples of the surplus step and a cap beyond the online
  // policy's largest bank make the online plan grid-feasible, so the exact
  // search lower-bounds it with no snapping slack.
  const Fleet fleet = testutil::single_c1_fleet();
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<double> loads;
    for (int k = 0; k < 10; ++k)
      loads.push_back(static_cast<double>(10 * testutil::randint(rng, 0, 300)));
    const LoadProfile p = make_profile(std::move(loads));
    ShiftOptions opts;
    opts.surplus_step_kw = 10.0;
    opts.surplus_cap_hours = 10.0;
    const double on = online_shift(fleet, p).avg_power_kw;
    const double op = optimal_shift(fleet, p, opts).avg_power_kw;
    CHECK(on >= op - 1e-9);
  }
}

TEST_CASE("a capacity-level mean keeps the whole fleet running") {
  const Fleet fleet = testutil::table1_fleet();
  const LoadProfile p = make_profile({100.0, 50.0, 0.0});
  const ShiftPlan plan = online_shift(fleet, p, 9237.0);
  for (const Assignment& a : plan.assignments) {
    double total = 0.0;
    for (double q : a.loads_kw) total += q;
    CHECK(total == doctest::Approx(9237.0));
  }
}

TEST_CASE("a mean above capacity is infeasible") {
  const Fleet fleet = testutil::table1_fleet();
  const LoadProfile p = make_profile({100.0, 50.0});
  CHECK_THROWS_AS(online_shift(fleet, p, 9300.0), infeasible_error);
  CHECK_THROWS_AS(online_shift(fleet, p, -5.0), parse_error);
}

TEST_CASE("single machine at constant q_max matches the offline optimum") {
  const Fleet fleet = testutil::single_c1_fleet();
  const LoadProfile p = make_profile(std::vector<double>(10, 3000.0));
  const ShiftPlan plan = online_shift(fleet, p);
  CHECK(plan.avg_power_kw == doctest::Approx(262.0));
}

TEST_CASE("capacity distribution sums to one and spots trimming") {
  const Fleet fleet = testutil::table1_fleet();
  const LoadProfile p = make_profile({3100.0, 3100.0, 3100.0, 3100.0});

  const ShiftPlan online = online_shift(fleet, p);
  for (const CapacityShares& s : capacity_distribution(fleet, online)) {
    CHECK(s.off + s.trimmed + s.full == doctest::Approx(1.0));
    CHECK(s.trimmed == 0.0);  // online plans never trim
  }

  const ShiftPlan untouched = static_trajectory(fleet, p);
  double trimmed = 0.0;
  for (const CapacityShares& s : capacity_distribution(fleet, untouched)) {
    CHECK(s.off + s.trimmed + s.full == doctest::Approx(1.0));
    trimmed += s.trimmed;
  }
  // Serving 3100 kW statically runs C1 strictly inside its window.
  CHECK(trimmed > 0.0);

  ShiftPlan idle = online_shift(fleet, make_profile({0.0, 0.0}));
  for (const CapacityShares& s : capacity_distribution(fleet, idle)) {
    CHECK(s.off == doctest::Approx(1.0));
    CHECK(s.full == 0.0);
  }
}

TEST_CASE("online dispatch meets cumulative demand on bounded profiles") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 10; ++trial) {
    const Fleet fleet = testutil::random_integer_fleet(
        rng, (int)testutil::randint(rng, 1, 4));
    const double cap = total_capacity(fleet);
    std::vector<double> loads;
    for (int k = 0; k < 40; ++k)
      loads.push_back(
          static_cast<double>(testutil::randint(rng, 0, (long long)cap)));
    const LoadProfile p = make_profile(std::move(loads));
    const ShiftPlan plan = online_shift(fleet, p);
    check_plan(fleet, plan);  // includes cumulative dominance
  }
}
