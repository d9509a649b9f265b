#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "coldseq/load_shift.hpp"
#include "coldseq/online_policy.hpp"

namespace coldseq {

// Average power of the five dispatch methods on one profile, and the
// savings the shifting methods achieve against the static baseline.
// worst/best fixed order evaluate every sequencing permutation at each
// stage; static uses the per-stage free-order optimum; the shift entries
// come from optimal_shift and online_shift.
struct ComparisonReport {
  double worst_fixed_kw = 0.0;
  double best_fixed_kw = 0.0;
  double static_kw = 0.0;
  double optimal_shift_kw = 0.0;
  double online_shift_kw = 0.0;
  double optimal_shift_savings_pct = 0.0;  // vs static
  double online_shift_savings_pct = 0.0;   // vs static
  // Slack allowed when asserting the dominance chain; absorbs the shift
  // planner's surplus-grid discretization.
  double tolerance_kw = 0.0;
  std::uint64_t fleet_hash = 0;
  std::uint64_t profile_hash = 0;
};

// FNV-1a over the canonical serialized form; identifies inputs in reports.
std::uint64_t fnv1a_hash(const std::string& text);

// Runs all five methods and checks the dominance chain
// worst >= best >= static >= optimal shift and online >= optimal shift
// (each within tolerance_kw) before returning; a violation throws
// std::logic_error.
ComparisonReport compare(const Fleet& fleet, const LoadProfile& profile,
                         const ShiftOptions& opts = {},
                         std::optional<double> mean_kw = std::nullopt);

std::string report_to_json(const ComparisonReport& report);
std::string report_to_csv(const ComparisonReport& report);

}  // namespace coldseq
