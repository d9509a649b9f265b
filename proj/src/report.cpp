#include "coldseq/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "coldseq/static_optimizer.hpp"
#include "text_util.hpp"

namespace coldseq {

using detail::append_shortest;

namespace {

std::string hash_text(std::uint64_t h) {
  std::ostringstream out;
  out << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace

std::uint64_t fnv1a_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ComparisonReport compare(const Fleet& fleet, const LoadProfile& profile,
                         const ShiftOptions& opts,
                         std::optional<double> mean_kw) {
  ComparisonReport report;

  const ShiftPlan static_plan = static_trajectory(fleet, profile);
  const ShiftPlan shift_plan = optimal_shift(fleet, profile, opts);
  const ShiftPlan online_plan = online_shift(fleet, profile, mean_kw);
  check_plan(fleet, static_plan);
  check_plan(fleet, shift_plan);
  check_plan(fleet, online_plan);
  report.static_kw = static_plan.avg_power_kw;
  report.optimal_shift_kw = shift_plan.avg_power_kw;
  report.online_shift_kw = online_plan.avg_power_kw;

  double worst_total = 0.0, best_total = 0.0;
  for (double q : profile.loads_kw) {
    const std::vector<OrderCost> costs = fixed_order_costs(fleet, q);
    best_total += costs.front().cost_kw;
    worst_total += costs.back().cost_kw;
  }
  const double n = static_cast<double>(profile.loads_kw.size());
  report.worst_fixed_kw = worst_total / n;
  report.best_fixed_kw = best_total / n;

  if (report.static_kw > kLoadTolKw) {
    report.optimal_shift_savings_pct =
        100.0 * (report.static_kw - report.optimal_shift_kw) /
        report.static_kw;
    report.online_shift_savings_pct =
        100.0 * (report.static_kw - report.online_shift_kw) /
        report.static_kw;
  }

  double steepest = 0.0;
  for (const Compressor& c : fleet.compressors())
    steepest = std::max(steepest, (c.p_max_kw - c.p_min_kw) /
                                      (c.q_max_kw - c.q_min_kw));
  report.tolerance_kw = 1e-6 + opts.surplus_step_kw * steepest;

  const auto require = [&](bool ok, const char* what) {
    if (!ok) {
      std::ostringstream msg;
      msg << "dominance violated: " << what << " (worst "
          << report.worst_fixed_kw << ", best " << report.best_fixed_kw
          << ", static " << report.static_kw << ", shift "
          << report.optimal_shift_kw << ", online "
          << report.online_shift_kw << ", tolerance "
          << report.tolerance_kw << " kW)";
      throw std::logic_error(msg.str());
    }
  };
  const double tol = report.tolerance_kw;
  require(report.worst_fixed_kw >= report.best_fixed_kw - tol,
          "worst fixed order below best fixed order");
  require(report.best_fixed_kw >= report.static_kw - tol,
          "best fixed order below static optimum");
  require(report.static_kw >= report.optimal_shift_kw - tol,
          "static optimum below shifted optimum");
  require(report.online_shift_kw >= report.optimal_shift_kw - tol,
          "online dispatch below shifted optimum");

  report.fleet_hash = fnv1a_hash(fleet_to_json(fleet));
  report.profile_hash = fnv1a_hash(profile_to_csv_text(profile));
  return report;
}

std::string report_to_json(const ComparisonReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["methods_avg_kw"] = {{"worst_fixed", report.worst_fixed_kw},
                         {"best_fixed", report.best_fixed_kw},
                         {"static", report.static_kw},
                         {"optimal_shift", report.optimal_shift_kw},
                         {"online_shift", report.online_shift_kw}};
  j["savings_vs_static_pct"] = {
      {"optimal_shift", report.optimal_shift_savings_pct},
      {"online_shift", report.online_shift_savings_pct}};
  j["tolerance_kw"] = report.tolerance_kw;
  j["fleet_hash"] = hash_text(report.fleet_hash);
  j["profile_hash"] = hash_text(report.profile_hash);
  return j.dump(2) + "\n";
}

std::string report_to_csv(const ComparisonReport& report) {
  std::string out = "metric,value\n";
  const auto row = [&out](const char* name, double v) {
    out += name;
    out.push_back(',');
    append_shortest(out, v);
    out.push_back('\n');
  };
  row("worst_fixed_kw", report.worst_fixed_kw);
  row("best_fixed_kw", report.best_fixed_kw);
  row("static_kw", report.static_kw);
  row("optimal_shift_kw", report.optimal_shift_kw);
  row("online_shift_kw", report.online_shift_kw);
  row("optimal_shift_savings_pct", report.optimal_shift_savings_pct);
  row("online_shift_savings_pct", report.online_shift_savings_pct);
  row("tolerance_kw", report.tolerance_kw);
  out += "fleet_hash," + hash_text(report.fleet_hash) + "\n";
  out += "profile_hash," + hash_text(report.profile_hash) + "\n";
  return out;
}

}  // namespace coldseq
