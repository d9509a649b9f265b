#include "coldseq/online_policy.hpp"

#include <cmath>
#include <sstream>

namespace coldseq {

ShiftPlan online_shift(const Fleet& fleet, const LoadProfile& profile,
                       std::optional<double> mean_kw) {
  if (profile.loads_kw.empty()) throw parse_error("empty load profile");
  for (double q : profile.loads_kw)
    if (q < 0.0) throw parse_error("negative load in profile");
  const double mean = mean_kw ? *mean_kw : mean_load(profile);
  if (!std::isfinite(mean) || mean < 0.0) {
    std::ostringstream msg;
    msg << "mean load must be finite and nonnegative, got " << mean;
    throw parse_error(msg.str());
  }
  const double capacity = total_capacity(fleet);
  if (mean > capacity + kLoadTolKw) {
    std::ostringstream msg;
    msg << "mean load " << mean << " kW exceeds fleet capacity " << capacity
        << " kW";
    throw infeasible_error(msg.str(), mean - capacity);
  }

  const auto& cs = fleet.compressors();
  std::vector<std::size_t> seq;
  seq.reserve(fleet.size());
  for (const std::string& id : shift_order(fleet).ids)
    seq.push_back(fleet.index_of(id));

  ShiftPlan plan;
  plan.input = profile;
  plan.assignments.reserve(profile.loads_kw.size());
  plan.shifted_kw.reserve(profile.loads_kw.size());
  double backlog = 0.0;
  double total_power = 0.0;
  for (double q_in : profile.loads_kw) {
    backlog += q_in;
    double target = std::max(backlog, mean);
    Assignment a;
    a.loads_kw.assign(fleet.size(), 0.0);
    double served = 0.0;
    for (std::size_t i : seq) {
      if (target > 0.0) {
        a.loads_kw[i] = cs[i].q_max_kw;
        served += cs[i].q_max_kw;
        target -= cs[i].q_max_kw;
        backlog -= cs[i].q_max_kw;
      }
    }
    plan.shifted_kw.push_back(served);
    total_power += assignment_cost(fleet, a);
    plan.assignments.push_back(std::move(a));
  }
  plan.avg_power_kw =
      total_power / static_cast<double>(plan.assignments.size());
  return plan;
}

std::vector<CapacityShares> capacity_distribution(const Fleet& fleet,
                                                  const ShiftPlan& plan) {
  if (plan.assignments.empty()) throw parse_error("plan has no stages");
  const auto& cs = fleet.compressors();
  std::vector<CapacityShares> shares(fleet.size());
  std::vector<long> off(fleet.size(), 0), trimmed(fleet.size(), 0),
      full(fleet.size(), 0);
  for (const Assignment& a : plan.assignments) {
    if (a.loads_kw.size() != fleet.size()) {
      std::ostringstream msg;
      msg << "plan assignment has " << a.loads_kw.size()
          << " loads, fleet has " << fleet.size();
      throw parse_error(msg.str());
    }
    for (std::size_t i = 0; i < fleet.size(); ++i) {
      const double q = a.loads_kw[i];
      if (q <= kLoadTolKw)
        ++off[i];
      else if (q > 0.99 * cs[i].q_max_kw)
        ++full[i];
      else
        ++trimmed[i];
    }
  }
  const double n = static_cast<double>(plan.assignments.size());
  for (std::size_t i = 0; i < fleet.size(); ++i) {
    shares[i].id = cs[i].id;
    shares[i].off = static_cast<double>(off[i]) / n;
    shares[i].trimmed = static_cast<double>(trimmed[i]) / n;
    shares[i].full = static_cast<double>(full[i]) / n;
  }
  return shares;
}

}  // namespace coldseq
