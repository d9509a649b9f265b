#include "coldseq/waterfill.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace coldseq {

double total_capacity(const Fleet& fleet) {
  double total = 0.0;
  for (const Compressor& c : fleet.compressors()) total += c.q_max_kw;
  return total;
}

double min_turn_on(const Fleet& fleet) {
  double lo = fleet.compressors().front().q_min_kw;
  for (const Compressor& c : fleet.compressors())
    lo = std::min(lo, c.q_min_kw);
  return lo;
}

Assignment waterfill(const Fleet& fleet, const SequencingOrder& order,
                     double q_in_kw) {
  if (q_in_kw < -kLoadTolKw) {
    std::ostringstream msg;
    msg << "negative cooling demand " << q_in_kw << " kW";
    throw infeasible_error(msg.str(), -q_in_kw);
  }
  const double capacity = total_capacity(fleet);
  if (q_in_kw > capacity + kLoadTolKw) {
    std::ostringstream msg;
    msg << "cooling demand " << q_in_kw << " kW exceeds fleet capacity "
        << capacity << " kW";
    throw infeasible_error(msg.str(), q_in_kw - capacity);
  }
  if (order.ids.size() != fleet.size()) {
    std::ostringstream msg;
    msg << "sequencing order has " << order.ids.size() << " ids, fleet has "
        << fleet.size();
    throw parse_error(msg.str());
  }
  std::vector<std::size_t> seq;
  seq.reserve(order.ids.size());
  std::vector<bool> used(fleet.size(), false);
  for (const std::string& id : order.ids) {
    const std::size_t i = fleet.index_of(id);
    if (used[i]) {
      std::ostringstream msg;
      msg << "sequencing order repeats compressor " << id;
      throw parse_error(msg.str());
    }
    used[i] = true;
    seq.push_back(i);
  }

  const auto& cs = fleet.compressors();
  Assignment a;
  a.loads_kw.assign(fleet.size(), 0.0);

  // Pass 1: bring machines to full capacity while demand strictly exceeds
  // the running total.
  double q_tot = 0.0;
  for (std::size_t i : seq) {
    if (q_in_kw > q_tot) {
      a.loads_kw[i] = cs[i].q_max_kw;
      q_tot += cs[i].q_max_kw;
    }
  }

  // Pass 2: walk the order in reverse, trimming running machines toward
  // q_min until the total matches demand.
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    const std::size_t i = *it;
    if (q_in_kw <= q_tot && a.loads_kw[i] != 0.0) {
      const double d =
          std::min(cs[i].q_max_kw - cs[i].q_min_kw, q_tot - q_in_kw);
      a.loads_kw[i] -= d;
      q_tot -= d;
    }
  }

  if (q_tot < q_in_kw - kLoadTolKw) {
    std::ostringstream msg;
    msg << "sequencing delivers " << q_tot << " kW, short of demand "
        << q_in_kw << " kW (minimum-capacity floors block an exact match)";
    throw infeasible_error(msg.str(), q_in_kw - q_tot);
  }
  return a;
}

double assignment_cost(const Fleet& fleet, const Assignment& a) {
  if (a.loads_kw.size() != fleet.size()) {
    std::ostringstream msg;
    msg << "assignment has " << a.loads_kw.size() << " loads, fleet has "
        << fleet.size();
    throw parse_error(msg.str());
  }
  double p = 0.0;
  for (std::size_t i = 0; i < fleet.size(); ++i) {
    p += power_at(fleet.compressors()[i], a.loads_kw[i]);
  }
  return p;
}

}  // namespace coldseq
