#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coldseq/errors.hpp"

namespace coldseq {

// Absolute tolerance (kW) for load comparisons throughout the library.
inline constexpr double kLoadTolKw = 1e-6;

// One compressor. While running, its cooling capacity q lives in
// [q_min_kw, q_max_kw] and electrical power is affine in q:
//   P(q) = p_min + (q - q_min) / (q_max - q_min) * (p_max - p_min).
// Off means q = 0 and P = 0.
struct Compressor {
  std::string id;
  double q_min_kw = 0.0;
  double q_max_kw = 0.0;
  double p_min_kw = 0.0;
  double p_max_kw = 0.0;
};

// Validated collection of compressors. Construction enforces, per machine:
//   0 < q_min < q_max, 0 < p_min <= p_max, and
//   p_min / q_min >= p_max / q_max
// (power per unit cooling never improves by throttling down), plus
// nonempty unique ids across the fleet.
class Fleet {
 public:
  explicit Fleet(std::vector<Compressor> compressors);

  const std::vector<Compressor>& compressors() const { return compressors_; }
  std::size_t size() const { return compressors_.size(); }

  // Index of the compressor with the given id; throws parse_error if absent.
  std::size_t index_of(const std::string& id) const;

 private:
  std::vector<Compressor> compressors_;
};

// A permutation of fleet ids giving the order machines are brought up.
struct SequencingOrder {
  std::vector<std::string> ids;
};

// Electrical power (kW) of compressor c delivering q kW of cooling.
// q within kLoadTolKw of 0 means off (0 kW). q within kLoadTolKw of the
// operating window is clamped; anything else throws infeasible_error.
double power_at(const Compressor& c, double q);

// p_max / q_max: power per unit cooling when running flat out.
double full_capacity_cost_ratio(const Compressor& c);

// Order machines by ascending full-capacity cost ratio (cheapest marginal
// cooling first). Stable with respect to fleet order on ties.
SequencingOrder shift_order(const Fleet& fleet);

struct SavingsBounds {
  // max over machines of p_min / q_min: worst cost rate at minimum capacity.
  double max_rate_at_min_capacity = 0.0;
  // min over machines of p_max / q_max: best cost rate at full capacity.
  double min_rate_at_full_capacity = 0.0;
  // (max_rate_at_min_capacity - min_rate_at_full_capacity)
  //   / min_rate_at_full_capacity.
  double savings_upper_bound = 0.0;
};

// Upper bound on the relative power savings any load-shifting strategy can
// achieve over running the same cooling at the worst machine's minimum-
// capacity rate.
SavingsBounds savings_bounds(const Fleet& fleet);

// JSON (de)serialization. Schema:
//   {"compressors": [{"id": "...", "q_min_kw": ..., "q_max_kw": ...,
//                     "p_min_kw": ..., "p_max_kw": ...}, ...]}
Fleet fleet_from_json(const std::string& json_text);
std::string fleet_to_json(const Fleet& fleet);
Fleet load_fleet_file(const std::string& path);

}  // namespace coldseq
