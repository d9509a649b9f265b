#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "coldseq/fleet.hpp"
#include "coldseq/profile.hpp"
#include "coldseq/waterfill.hpp"

namespace coldseq {

// A load-shifting dispatch plan. shifted_kw[k] is the cooling actually
// delivered at stage k (sum of assignments[k]); cumulative delivered
// cooling never lags cumulative demand.
struct ShiftPlan {
  LoadProfile input;
  std::vector<double> shifted_kw;
  std::vector<Assignment> assignments;
  double avg_power_kw = 0.0;
};

struct ShiftOptions {
  // Grid for delivered cooling and carried surplus (kW).
  double surplus_step_kw = 1.0;
  // Cap on carried surplus: this many hours of full-fleet output.
  double surplus_cap_hours = 24.0;
  // Refuse dynamic programs needing more table cells than this.
  double max_table_cells = 120e6;
};

// Minimum-average-power plan over the horizon: chooses per-stage delivered
// cooling q_sh(k) >= 0 with cumulative dominance over the demand profile,
// assigning machines by waterfill in shift_order (one fixed bring-up order
// for the whole horizon). Dynamic program over carried surplus discretized
// at surplus_step_kw; demands are snapped up to the grid once. Decisions
// come from the stage-cost breakpoints plus state boundaries
// (surplus-clearing and cap-filling); when the instance is small enough
// the full decision grid is searched, making the result exact on the grid.
ShiftPlan optimal_shift(const Fleet& fleet, const LoadProfile& profile,
                        const ShiftOptions& opts = {});

// Which per-stage dispatch the exhaustive planner prices a delivery with.
enum class StageCostModel {
  fixed_order,        // waterfill in shift_order, as optimal_shift uses
  per_stage_optimal,  // optimal_static at every stage (free order)
};

// Independent exhaustive check of optimal_shift: memoized search over all
// grid deliveries per stage under the same surplus cap. Exact optimum on
// the shared grid. Guarded for tiny instances only.
ShiftPlan exhaustive_shift(const Fleet& fleet, const LoadProfile& profile,
                           const ShiftOptions& opts = {},
                           StageCostModel model = StageCostModel::fixed_order);

// No shifting: serve each stage's demand as it arrives, dispatched by
// optimal_static.
ShiftPlan static_trajectory(const Fleet& fleet, const LoadProfile& profile);

// The same demand profile dispatched by waterfill under one fixed order at
// every stage, without shifting.
ShiftPlan fixed_order_trajectory(const Fleet& fleet,
                                 const SequencingOrder& order,
                                 const LoadProfile& profile);

// Matched pair of profiles with equal total cooling where shifting is
// maximally valuable for a single machine c: back_loaded runs q_min for
// the final round(scale*q_max) stages; front_loaded delivers the same
// total at q_max from stage 0 (full stages plus one remainder stage), so
// it cumulative-dominates back_loaded at every prefix. Horizon is stages
// 0..horizon (inclusive); the q_max block must end before the q_min block
// begins.
struct WorstCasePair {
  LoadProfile back_loaded;
  LoadProfile front_loaded;
};
WorstCasePair worst_case_profiles(const Compressor& c, double scale,
                                  long horizon);

// (static avg power - optimal shift avg power) / optimal shift avg power.
// Returns +infinity when shifting reaches zero power but static cannot;
// 0 when both are zero.
double savings_gap(const Fleet& fleet, const LoadProfile& profile,
                   const ShiftOptions& opts = {});

// Plan CSV: header stage,q_in_kw,q_sh_kw,<one column per compressor
// id>,power_kw.
std::string plan_to_csv_text(const Fleet& fleet, const ShiftPlan& plan);
void save_plan_csv(const Fleet& fleet, const ShiftPlan& plan,
                   const std::string& path);
ShiftPlan plan_from_csv_text(const Fleet& fleet, const std::string& text,
                             const std::string& origin = "plan CSV");
ShiftPlan load_plan_csv(const Fleet& fleet, const std::string& path);

// Throws logic_error if the plan violates cumulative dominance, per-stage
// service, in-window loads, or its stated average power.
void check_plan(const Fleet& fleet, const ShiftPlan& plan);

}  // namespace coldseq
