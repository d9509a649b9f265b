#pragma once

#include <vector>

#include "coldseq/fleet.hpp"

namespace coldseq {

// Cooling load assigned to each compressor, aligned with fleet order.
struct Assignment {
  std::vector<double> loads_kw;
};

// Sum of q_max over the fleet.
double total_capacity(const Fleet& fleet);

// Smallest q_min over the fleet: the least cooling any single running
// machine must deliver.
double min_turn_on(const Fleet& fleet);

// Distribute q_in kW of cooling across the fleet following a sequencing
// order. Pass 1 walks the order turning machines to full capacity while
// demand strictly exceeds the running total. Pass 2 walks the order in
// reverse trimming running machines (never below q_min) until the total
// matches demand. The order must be a permutation of the fleet ids.
// Minimum-capacity floors can force the total above q_in (e.g. positive
// demand below the first machine's q_min); the total never falls short.
// Throws infeasible_error if q_in is negative or exceeds total capacity.
Assignment waterfill(const Fleet& fleet, const SequencingOrder& order,
                     double q_in_kw);

// Total electrical power (kW) of an assignment.
double assignment_cost(const Fleet& fleet, const Assignment& a);

}  // namespace coldseq
