#pragma once

#include <optional>
#include <vector>

#include "coldseq/load_shift.hpp"

namespace coldseq {

// Greedy real-time dispatcher. Each stage adds the incoming demand to a
// running unmet-demand accumulator, targets the larger of the accumulator
// and the long-run mean load, and turns machines fully on in shift order
// until the target is covered. Every load is therefore 0 or q_max; the
// accumulator may go negative, which is banked surplus from deliberate
// overcooling.
//
// The mean is the one clairvoyant ingredient: it defaults to the mean of
// the given profile, and mean_kw substitutes a forecast. The effective
// mean must not exceed the fleet capacity.
ShiftPlan online_shift(const Fleet& fleet, const LoadProfile& profile,
                       std::optional<double> mean_kw = std::nullopt);

// Fraction of stages a compressor spends off, trimmed, or effectively
// full (above 99% of q_max). The three fractions sum to 1.
struct CapacityShares {
  std::string id;
  double off = 0.0;
  double trimmed = 0.0;
  double full = 0.0;
};

std::vector<CapacityShares> capacity_distribution(const Fleet& fleet,
                                                  const ShiftPlan& plan);

}  // namespace coldseq
