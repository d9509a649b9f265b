// Acceptance gate: one numbered end-to-end check per release criterion,
// runnable singly (argv[1] = number) or all together. Each check prints
// [PASS]/[FAIL] with the measured quantities and wall time; the process
// exit code is the number of failed checks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coldseq/fleet.hpp"
#include "coldseq/load_shift.hpp"
#include "coldseq/online_policy.hpp"
#include "coldseq/profile.hpp"
#include "coldseq/report.hpp"
#include "coldseq/static_optimizer.hpp"
#include "coldseq/waterfill.hpp"
#include "testutil.hpp"

namespace {

using coldseq::Assignment;
using coldseq::Fleet;
using coldseq::LoadProfile;
using coldseq::SequencingOrder;
using coldseq::ShiftOptions;
using coldseq::ShiftPlan;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double max_power_slope(const Fleet& fleet) {
  double s = 0.0;
  for (const auto& c : fleet.compressors())
    s = std::max(s, (c.p_max_kw - c.p_min_kw) / (c.q_max_kw - c.q_min_kw));
  return s;
}

// 1. Waterfill splits 3100 kW across the reference fleet in shift order as
//    exactly (2861, 239, 0, 0), in under a millisecond.
Outcome criterion_1() {
  const Fleet fleet = testutil::table1_fleet();
  const SequencingOrder order = coldseq::shift_order(fleet);
  Assignment a = coldseq::waterfill(fleet, order, 3100.0);
  const auto t0 = std::chrono::steady_clock::now();
  for (int rep = 0; rep < 200; ++rep) a = coldseq::waterfill(fleet, order, 3100.0);
  const auto t1 = std::chrono::steady_clock::now();
  const double call_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count() / 200.0;

  const std::vector<double> want{2861.0, 239.0, 0.0, 0.0};
  Outcome out;
  out.pass = a.loads_kw == want && call_ms < 1.0;
  std::ostringstream msg;
  msg << "waterfill(3100) = {";
  for (std::size_t i = 0; i < a.loads_kw.size(); ++i)
    msg << (i ? ", " : "") << a.loads_kw[i];
  msg << "} kW, " << call_ms << " ms per call";
  out.detail = msg.str();
  return out;
}

// 2. The relative-savings upper bound for the reference fleet is 8.85
//    within 0.01, in under a millisecond.
Outcome criterion_2() {
  const Fleet fleet = testutil::table1_fleet();
  coldseq::SavingsBounds sb = coldseq::savings_bounds(fleet);
  const auto t0 = std::chrono::steady_clock::now();
  for (int rep = 0; rep < 200; ++rep) sb = coldseq::savings_bounds(fleet);
  const auto t1 = std::chrono::steady_clock::now();
  const double call_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count() / 200.0;

  Outcome out;
  out.pass = std::abs(sb.savings_upper_bound - 8.85) <= 0.01 && call_ms < 1.0;
  std::ostringstream msg;
  msg << "savings_upper_bound = " << sb.savings_upper_bound << " (rates "
      << sb.max_rate_at_min_capacity << " / " << sb.min_rate_at_full_capacity
      << "), " << call_ms << " ms per call";
  out.detail = msg.str();
  return out;
}

// 3. Sweeping demand over the full feasible span at 1 kW, the largest
//    relative spread between the worst and best sequencing order lands in
//    [0.44, 0.54], in under 30 seconds.
Outcome criterion_3() {
  const Fleet fleet = testutil::table1_fleet();
  double max_ratio = -1.0, at_q = 0.0, ratio_sum = 0.0;
  long samples = 0;
  for (long q = 165; q <= 9237; ++q) {
    const auto costs = coldseq::fixed_order_costs(fleet, static_cast<double>(q));
    const double best = costs.front().cost_kw;
    const double worst = costs.back().cost_kw;
    const double ratio = (worst - best) / best;
    ratio_sum += ratio;
    ++samples;
    if (ratio > max_ratio) {
      max_ratio = ratio;
      at_q = static_cast<double>(q);
    }
  }
  Outcome out;
  out.pass = max_ratio >= 0.44 && max_ratio <= 0.54;
  std::ostringstream msg;
  msg << "max (worst-best)/best = " << max_ratio << " at q = " << at_q
      << " kW over " << samples << " demands (mean ratio "
      << ratio_sum / static_cast<double>(samples)
      << "); required within [0.44, 0.54]";
  out.detail = msg.str();
  return out;
}

// 4. On 200 random integer fleets the 1 kW grid oracle returns optima with
//    at most one machine strictly inside its window, and the closed-form
//    optimizer agrees with the oracle cost within one grid step of slack.
Outcome criterion_4() {
  std::mt19937_64 rng(404);
  double max_diff = 0.0;
  int max_interior = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Fleet fleet = testutil::random_integer_fleet(rng, 4);
    const double capacity = coldseq::total_capacity(fleet);
    const double q = static_cast<double>(
        testutil::randint(rng, 0, static_cast<long long>(capacity)));
    const coldseq::StaticSolution grid =
        coldseq::grid_optimal_static(fleet, q, 1.0);
    const coldseq::StaticSolution exact = coldseq::optimal_static(fleet, q);

    int interior = 0;
    const auto& cs = fleet.compressors();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const double l = grid.assignment.loads_kw[i];
      if (l > cs[i].q_min_kw + 1e-9 && l < cs[i].q_max_kw - 1e-9) ++interior;
    }
    max_interior = std::max(max_interior, interior);

    const double slack = 1.0 * max_power_slope(fleet) + 1e-6;
    const double diff = grid.cost_kw - exact.cost_kw;
    max_diff = std::max(max_diff, std::abs(diff));
    if (interior > 1 || exact.cost_kw > grid.cost_kw + 1e-9 || diff > slack) {
      Outcome out;
      std::ostringstream msg;
      msg << "trial " << trial << ": interior machines = " << interior
          << ", grid cost " << grid.cost_kw << " vs exact " << exact.cost_kw
          << " (slack " << slack << ") at q = " << q;
      out.detail = msg.str();
      return out;
    }
  }
  Outcome out;
  out.pass = true;
  std::ostringstream msg;
  msg << "200 fleets: grid optima had at most " << max_interior
      << " machine strictly in trim; max |grid - exact| cost gap = "
      << max_diff << " kW";
  out.detail = msg.str();
  return out;
}

// 5. On 50 tiny random instances the shift planner and the exhaustive
//    grid search return bitwise-identical average power and deliveries.
Outcome criterion_5() {
  std::mt19937_64 rng(505);
  double max_free_gap = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Fleet fleet = testutil::random_integer_fleet(
        rng, static_cast<int>(testutil::randint(rng, 1, 2)), 20, 150);
    ShiftOptions opts;
    opts.surplus_step_kw =
        static_cast<double>(testutil::randint(rng, 1, 3));
    opts.surplus_cap_hours = 3.0;
    // Demands live on the surplus grid and below the gridded capacity, so
    // snapping changes nothing and stage 0 is always serviceable.
    const long long u_tot = static_cast<long long>(
        coldseq::total_capacity(fleet) / opts.surplus_step_kw);
    LoadProfile profile;
    profile.step_minutes = 60.0;
    const long long stages = testutil::randint(rng, 1, 5);
    for (long long k = 0; k < stages; ++k)
      profile.loads_kw.push_back(opts.surplus_step_kw *
                                 static_cast<double>(
                                     testutil::randint(rng, 0, u_tot)));

    const ShiftPlan dp = coldseq::optimal_shift(fleet, profile, opts);
    const ShiftPlan oracle = coldseq::exhaustive_shift(
        fleet, profile, opts, coldseq::StageCostModel::fixed_order);
    if (dp.avg_power_kw != oracle.avg_power_kw ||
        dp.shifted_kw != oracle.shifted_kw) {
      Outcome out;
      std::ostringstream msg;
      msg << "trial " << trial << ": planner " << dp.avg_power_kw
          << " kW != oracle " << oracle.avg_power_kw << " kW ("
          << fleet.size() << " machines, " << stages << " stages, step "
          << opts.surplus_step_kw << " kW)";
      out.detail = msg.str();
      return out;
    }
    const ShiftPlan free_order = coldseq::exhaustive_shift(
        fleet, profile, opts, coldseq::StageCostModel::per_stage_optimal);
    if (free_order.avg_power_kw > 0.0)
      max_free_gap = std::max(
          max_free_gap, (dp.avg_power_kw - free_order.avg_power_kw) /
                            free_order.avg_power_kw);
  }
  Outcome out;
  out.pass = true;
  std::ostringstream msg;
  msg << "50 instances bitwise-equal to the exhaustive oracle; worst gap to "
         "the free-order oracle = "
      << max_free_gap * 100.0 << "%";
  out.detail = msg.str();
  return out;
}

// 6. On the single-machine worst-case profile pair, shifting beats static
//    dispatch by at least 90% of the theoretical 5.454 ratio.
Outcome criterion_6() {
  const Fleet fleet = testutil::single_c1_fleet();
  const coldseq::WorstCasePair pair =
      coldseq::worst_case_profiles(fleet.compressors()[0], 0.1, 400);
  ShiftOptions opts;
  opts.surplus_step_kw = 1.0;
  opts.surplus_cap_hours = 0.5;
  const double gap = coldseq::savings_gap(fleet, pair.back_loaded, opts);
  Outcome out;
  out.pass = gap >= 0.9 * 5.454;
  std::ostringstream msg;
  msg << "savings_gap = " << gap << " on a " << pair.back_loaded.loads_kw.size()
      << "-stage back-loaded profile; required >= " << 0.9 * 5.454;
  out.detail = msg.str();
  return out;
}

// 7. 200 random synthetic weeks on the reference fleet: the comparison
//    report builds without violating the dominance chain, and every plan it
//    checks satisfies cumulative feasibility (compare throws otherwise).
Outcome criterion_7() {
  const Fleet fleet = testutil::table1_fleet();
  std::mt19937_64 rng(707);
  ShiftOptions opts;
  opts.surplus_step_kw = 25.0;
  opts.surplus_cap_hours = 24.0;
  double min_savings = 1e300, max_savings = -1e300;
  for (int trial = 0; trial < 200; ++trial) {
    coldseq::ProfileSpec spec;
    spec.horizon_days = 7;
    spec.step_minutes = 60.0;
    spec.weekday_base_kw =
        std::uniform_real_distribution<double>(800.0, 2750.0)(rng);
    spec.weekend_plateau_kw =
        std::uniform_real_distribution<double>(1200.0, 2750.0)(rng);
    double peak = std::uniform_real_distribution<double>(3300.0, 5450.0)(rng);
    if (peak > 5000.0) peak += 550.0;
    spec.weekday_peak_kw = peak;
    spec.noise_std_kw = std::uniform_real_distribution<double>(0.0, 80.0)(rng);
    spec.work_start_hour = 6.0;
    spec.work_end_hour = 18.0;
    spec.seed = rng();
    const LoadProfile profile = coldseq::synth_profile(spec);
    try {
      const coldseq::ComparisonReport r = coldseq::compare(fleet, profile, opts);
      min_savings = std::min(min_savings, r.optimal_shift_savings_pct);
      max_savings = std::max(max_savings, r.optimal_shift_savings_pct);
    } catch (const std::exception& e) {
      Outcome out;
      std::ostringstream msg;
      msg << "profile " << trial << " (peak " << spec.weekday_peak_kw
          << ", base " << spec.weekday_base_kw << ", noise "
          << spec.noise_std_kw << "): " << e.what();
      out.detail = msg.str();
      return out;
    }
  }
  Outcome out;
  out.pass = true;
  std::ostringstream msg;
  msg << "200 synthetic weeks upheld the dominance chain and plan checks; "
         "shift savings spanned ["
      << min_savings << "%, " << max_savings << "%]";
  out.detail = msg.str();
  return out;
}

// 8. The bundled demo: shifting saves at least 5% of static power, the
//    online policy lands within 3% of the optimal plan, and the capacity
//    distribution shows zero trim time for both shift plans against
//    nonzero trim for static dispatch.
Outcome criterion_8() {
  const Fleet fleet = testutil::table1_fleet();
  std::ifstream in(std::string(COLDSEQ_DATA_DIR) + "/demo_profile_spec.json");
  std::stringstream buf;
  buf << in.rdbuf();
  const coldseq::ProfileSpec spec = coldseq::profile_spec_from_json(buf.str());
  const LoadProfile profile = coldseq::synth_profile(spec);
  ShiftOptions opts;
  opts.surplus_step_kw = 25.0;
  opts.surplus_cap_hours = 24.0;
  const coldseq::ComparisonReport r = coldseq::compare(fleet, profile, opts);

  const ShiftPlan shift = coldseq::optimal_shift(fleet, profile, opts);
  const ShiftPlan online = coldseq::online_shift(fleet, profile);
  const ShiftPlan stat = coldseq::static_trajectory(fleet, profile);
  double shift_trim = 0.0, online_trim = 0.0, static_trim = 0.0;
  for (const auto& cs : coldseq::capacity_distribution(fleet, shift))
    shift_trim += cs.trimmed;
  for (const auto& cs : coldseq::capacity_distribution(fleet, online))
    online_trim += cs.trimmed;
  for (const auto& cs : coldseq::capacity_distribution(fleet, stat))
    static_trim += cs.trimmed;

  const double online_gap =
      (r.online_shift_kw - r.optimal_shift_kw) / r.optimal_shift_kw;
  Outcome out;
  out.pass = r.optimal_shift_savings_pct >= 5.0 && online_gap <= 0.03 &&
             shift_trim == 0.0 && online_trim == 0.0 && static_trim > 0.0;
  std::ostringstream msg;
  msg << "savings " << r.optimal_shift_savings_pct << "% (static "
      << r.static_kw << " -> shift " << r.optimal_shift_kw
      << " kW); online gap " << online_gap * 100.0
      << "%; trim fractions shift/online/static = " << shift_trim << " / "
      << online_trim << " / " << static_trim;
  out.detail = msg.str();
  return out;
}

// 9. 10,000 random (fleet, order, demand) triples: waterfill never delivers
//    short and every load is zero or inside its window.
Outcome criterion_9() {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 10000; ++trial) {
    const Fleet fleet = testutil::random_integer_fleet(
        rng, static_cast<int>(testutil::randint(rng, 1, 6)));
    SequencingOrder order;
    for (const auto& c : fleet.compressors()) order.ids.push_back(c.id);
    std::shuffle(order.ids.begin(), order.ids.end(), rng);
    const double capacity = coldseq::total_capacity(fleet);
    const double q =
        std::uniform_real_distribution<double>(0.0, capacity)(rng);
    const Assignment a = coldseq::waterfill(fleet, order, q);
    double total = 0.0;
    for (double l : a.loads_kw) total += l;
    bool windows_ok = true;
    const auto& cs = fleet.compressors();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const double l = a.loads_kw[i];
      if (!(l == 0.0 ||
            (l >= cs[i].q_min_kw - 1e-6 && l <= cs[i].q_max_kw + 1e-6)))
        windows_ok = false;
    }
    if (total < q - 1e-6 || !windows_ok) {
      Outcome out;
      std::ostringstream msg;
      msg << "trial " << trial << ": delivered " << total << " for demand "
          << q << (windows_ok ? "" : " with an out-of-window load");
      out.detail = msg.str();
      return out;
    }
  }
  Outcome out;
  out.pass = true;
  out.detail =
      "10000 random dispatches delivered the demand with every load zero or "
      "in-window";
  return out;
}

struct Criterion {
  int number;
  double budget_seconds;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, 0.01, criterion_1}, {2, 0.01, criterion_2},  {3, 30.0, criterion_3},
    {4, 300.0, criterion_4}, {5, 120.0, criterion_5}, {6, 10.0, criterion_6},
    {7, 600.0, criterion_7}, {8, 300.0, criterion_8}, {9, 10.0, criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("unexpected exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    // Sub-second budgets time the call inside the criterion itself.
    const bool in_budget = c.budget_seconds < 1.0 || secs <= c.budget_seconds;
    const bool pass = out.pass && in_budget;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number
              << ": " << out.detail << " (" << secs << " s)";
    if (!in_budget) std::cout << " [over " << c.budget_seconds << " s budget]";
    std::cout << "\n";
    if (!pass) ++failures;
  }
  return failures;
}
