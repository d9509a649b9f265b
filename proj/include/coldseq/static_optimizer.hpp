#pragma once

#include <string>
#include <vector>

#include "coldseq/fleet.hpp"
#include "coldseq/waterfill.hpp"

namespace coldseq {

struct StaticSolution {
  Assignment assignment;
  double cost_kw = 0.0;
  // An order whose waterfill reproduces the assignment.
  SequencingOrder realizing_order;
};

// Minimum-power split of q_in kW across the fleet, over all assignments
// with each machine off or inside its operating window and loads summing
// to q_in. At an optimum at most one machine runs strictly between q_min
// and q_max; the enumeration exploits this by classifying every other
// machine as off, pinned at q_min, or pinned at q_max. Fleets above 12
// machines are rejected with resource_error.
StaticSolution optimal_static(const Fleet& fleet, double q_in_kw);

// Independent check of optimal_static: dynamic program over cooling
// quantized to grid_step_kw, exact on fleets whose q_min/q_max are
// multiples of the step. Returns the optimal assignment on that grid.
StaticSolution grid_optimal_static(const Fleet& fleet, double q_in_kw,
                                   double grid_step_kw);

struct OrderCost {
  SequencingOrder order;
  double cost_kw = 0.0;
};

// Waterfill cost of every sequencing order (all permutations; fleets above
// 8 machines are rejected with resource_error), sorted by ascending cost,
// ties by id sequence.
std::vector<OrderCost> fixed_order_costs(const Fleet& fleet, double q_in_kw);

struct OrderInterval {
  double q_lo_kw = 0.0;
  double q_hi_kw = 0.0;
  SequencingOrder order;
};

// Sweep demand from q_lo to q_hi in steps, recording which sequencing
// order realizes the static optimum; adjacent sample points with the same
// order merge into one interval.
std::vector<OrderInterval> order_partition(const Fleet& fleet, double q_lo_kw,
                                           double q_hi_kw, double step_kw);

}  // namespace coldseq
