#include "coldseq.h"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "coldseq/fleet.hpp"
#include "coldseq/load_shift.hpp"
#include "coldseq/online_policy.hpp"
#include "coldseq/profile.hpp"
#include "coldseq/report.hpp"
#include "coldseq/static_optimizer.hpp"
#include "coldseq/waterfill.hpp"
#include "text_util.hpp"

struct coldseq_fleet {
  coldseq::Fleet impl;
};
struct coldseq_profile {
  coldseq::LoadProfile impl;
};
struct coldseq_plan {
  coldseq::ShiftPlan impl;
};

namespace {

using coldseq::detail::append_shortest;

thread_local std::string t_last_error;

template <typename F>
coldseq_status wrap(F&& body) noexcept {
  try {
    t_last_error.clear();
    return body();
  } catch (const coldseq::infeasible_error& e) {
    t_last_error = e.what();
    return COLDSEQ_ERR_INFEASIBLE;
  } catch (const coldseq::parse_error& e) {
    t_last_error = e.what();
    return COLDSEQ_ERR_PARSE;
  } catch (const coldseq::resource_error& e) {
    t_last_error = e.what();
    return COLDSEQ_ERR_RESOURCE;
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return COLDSEQ_ERR_RESOURCE;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return COLDSEQ_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return COLDSEQ_ERR_INTERNAL;
  }
}

coldseq_status invalid(const char* what) {
  t_last_error = what;
  return COLDSEQ_ERR_INVALID;
}

char* dup_text(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

coldseq::SequencingOrder parse_order(const coldseq::Fleet& fleet,
                                     const char* order) {
  if (!order || !*order) return coldseq::shift_order(fleet);
  coldseq::SequencingOrder seq;
  const std::string text = order;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    std::string id = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!id.empty() && (id.front() == ' ' || id.front() == '\t'))
      id.erase(id.begin());
    while (!id.empty() && (id.back() == ' ' || id.back() == '\t'))
      id.pop_back();
    if (id.empty()) throw coldseq::parse_error("empty id in order list");
    seq.ids.push_back(std::move(id));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return seq;
}

coldseq::ShiftOptions to_options(const coldseq_shift_options* o) {
  coldseq::ShiftOptions opts;
  if (o) {
    opts.surplus_step_kw = o->surplus_step_kw;
    opts.surplus_cap_hours = o->surplus_cap_hours;
    opts.max_table_cells = o->max_table_cells;
  }
  return opts;
}

nlohmann::ordered_json dispatch_json(const coldseq::Fleet& fleet,
                                     double q_in_kw,
                                     const coldseq::SequencingOrder& order,
                                     const char* order_key,
                                     const coldseq::Assignment& a,
                                     double total_power_kw) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["q_in_kw"] = q_in_kw;
  j[order_key] = order.ids;
  auto machines = nlohmann::ordered_json::array();
  double delivered = 0.0;
  const auto& cs = fleet.compressors();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    machines.push_back({{"id", cs[i].id},
                        {"load_kw", a.loads_kw[i]},
                        {"power_kw", coldseq::power_at(cs[i], a.loads_kw[i])}});
    delivered += a.loads_kw[i];
  }
  j["machines"] = std::move(machines);
  j["delivered_kw"] = delivered;
  j["total_power_kw"] = total_power_kw;
  return j;
}

std::string dispatch_csv(const coldseq::Fleet& fleet,
                         const coldseq::Assignment& a,
                         double total_power_kw) {
  std::string out = "id,load_kw,power_kw\n";
  const auto& cs = fleet.compressors();
  double delivered = 0.0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    out += cs[i].id;
    out.push_back(',');
    append_shortest(out, a.loads_kw[i]);
    out.push_back(',');
    append_shortest(out, coldseq::power_at(cs[i], a.loads_kw[i]));
    out.push_back('\n');
    delivered += a.loads_kw[i];
  }
  out += "total,";
  append_shortest(out, delivered);
  out.push_back(',');
  append_shortest(out, total_power_kw);
  out.push_back('\n');
  return out;
}

struct GapRow {
  double q_in_kw = 0.0;
  double best_kw = 0.0;
  double worst_kw = 0.0;
  double gap = 0.0;
};

std::vector<GapRow> gap_rows(const coldseq::Fleet& fleet, double lo_kw,
                             double hi_kw, double step_kw) {
  if (!(step_kw > 0.0) || !(hi_kw >= lo_kw)) {
    std::string msg = "gap sweep needs lo <= hi and a positive step";
    throw coldseq::parse_error(msg);
  }
  std::vector<double> samples;
  for (double q = lo_kw; q < hi_kw - coldseq::kLoadTolKw; q += step_kw)
    samples.push_back(q);
  samples.push_back(hi_kw);
  std::vector<GapRow> rows;
  rows.reserve(samples.size());
  for (double q : samples) {
    const auto costs = coldseq::fixed_order_costs(fleet, q);
    GapRow row;
    row.q_in_kw = q;
    row.best_kw = costs.front().cost_kw;
    row.worst_kw = costs.back().cost_kw;
    row.gap = row.best_kw > coldseq::kLoadTolKw
                  ? (row.worst_kw - row.best_kw) / row.best_kw
                  : 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const std::string& id : ids) {
    if (!out.empty()) out.push_back(' ');
    out += id;
  }
  return out;
}

}  // namespace

extern "C" {

const char* coldseq_last_error(void) { return t_last_error.c_str(); }

void coldseq_string_free(char* text) { std::free(text); }

/* ---------- fleet ---------- */

coldseq_status coldseq_fleet_load(const char* path, coldseq_fleet** out) {
  return wrap([&]() -> coldseq_status {
    if (!path || !out) return invalid("fleet_load: null argument");
    *out = new coldseq_fleet{coldseq::load_fleet_file(path)};
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_fleet_parse(const char* json_text,
                                   coldseq_fleet** out) {
  return wrap([&]() -> coldseq_status {
    if (!json_text || !out) return invalid("fleet_parse: null argument");
    *out = new coldseq_fleet{coldseq::fleet_from_json(json_text)};
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_fleet_dump(const coldseq_fleet* fleet,
                                  char** out_json) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !out_json) return invalid("fleet_dump: null argument");
    *out_json = dup_text(coldseq::fleet_to_json(fleet->impl));
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_fleet_capacity(const coldseq_fleet* fleet,
                                      double* out_kw) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !out_kw) return invalid("fleet_capacity: null argument");
    *out_kw = coldseq::total_capacity(fleet->impl);
    return COLDSEQ_OK;
  });
}

void coldseq_fleet_free(coldseq_fleet* fleet) { delete fleet; }

/* ---------- load profiles ---------- */

coldseq_status coldseq_profile_load(const char* path,
                                    coldseq_profile** out) {
  return wrap([&]() -> coldseq_status {
    if (!path || !out) return invalid("profile_load: null argument");
    *out = new coldseq_profile{coldseq::load_profile_csv(path)};
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_profile_parse(const char* csv_text,
                                     coldseq_profile** out) {
  return wrap([&]() -> coldseq_status {
    if (!csv_text || !out) return invalid("profile_parse: null argument");
    *out = new coldseq_profile{coldseq::profile_from_csv_text(csv_text)};
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_profile_dump(const coldseq_profile* profile,
                                    char** out_csv) {
  return wrap([&]() -> coldseq_status {
    if (!profile || !out_csv) return invalid("profile_dump: null argument");
    *out_csv = dup_text(coldseq::profile_to_csv_text(profile->impl));
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_profile_synth(const char* spec_json,
                                     long long seed_override,
                                     coldseq_profile** out) {
  return wrap([&]() -> coldseq_status {
    if (!spec_json || !out) return invalid("profile_synth: null argument");
    coldseq::ProfileSpec spec = coldseq::profile_spec_from_json(spec_json);
    if (seed_override >= 0)
      spec.seed = static_cast<std::uint64_t>(seed_override);
    *out = new coldseq_profile{coldseq::synth_profile(spec)};
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_profile_moving_average(const coldseq_profile* profile,
                                              double window_minutes,
                                              coldseq_profile** out) {
  return wrap([&]() -> coldseq_status {
    if (!profile || !out)
      return invalid("profile_moving_average: null argument");
    *out = new coldseq_profile{
        coldseq::moving_average(profile->impl, window_minutes)};
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_profile_mean(const coldseq_profile* profile,
                                    double* out_kw) {
  return wrap([&]() -> coldseq_status {
    if (!profile || !out_kw) return invalid("profile_mean: null argument");
    *out_kw = coldseq::mean_load(profile->impl);
    return COLDSEQ_OK;
  });
}

void coldseq_profile_free(coldseq_profile* profile) { delete profile; }

/* ---------- single-stage sequencing ---------- */

coldseq_status coldseq_sequence_json(const coldseq_fleet* fleet,
                                     const char* order, double q_in_kw,
                                     char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !out) return invalid("sequence: null argument");
    const coldseq::SequencingOrder seq = parse_order(fleet->impl, order);
    const coldseq::Assignment a =
        coldseq::waterfill(fleet->impl, seq, q_in_kw);
    const double cost = coldseq::assignment_cost(fleet->impl, a);
    *out = dup_text(
        dispatch_json(fleet->impl, q_in_kw, seq, "order", a, cost).dump(2) +
        "\n");
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_sequence_csv(const coldseq_fleet* fleet,
                                    const char* order, double q_in_kw,
                                    char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !out) return invalid("sequence: null argument");
    const coldseq::SequencingOrder seq = parse_order(fleet->impl, order);
    const coldseq::Assignment a =
        coldseq::waterfill(fleet->impl, seq, q_in_kw);
    *out = dup_text(
        dispatch_csv(fleet->impl, a, coldseq::assignment_cost(fleet->impl, a)));
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_optimal_sequence_json(const coldseq_fleet* fleet,
                                             double q_in_kw, char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !out) return invalid("optimal_sequence: null argument");
    const coldseq::StaticSolution sol =
        coldseq::optimal_static(fleet->impl, q_in_kw);
    *out = dup_text(dispatch_json(fleet->impl, q_in_kw, sol.realizing_order,
                                  "realizing_order", sol.assignment,
                                  sol.cost_kw)
                        .dump(2) +
                    "\n");
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_optimal_sequence_csv(const coldseq_fleet* fleet,
                                            double q_in_kw, char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !out) return invalid("optimal_sequence: null argument");
    const coldseq::StaticSolution sol =
        coldseq::optimal_static(fleet->impl, q_in_kw);
    *out = dup_text(dispatch_csv(fleet->impl, sol.assignment, sol.cost_kw));
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_bounds_json(const coldseq_fleet* fleet, char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !out) return invalid("bounds: null argument");
    const coldseq::SavingsBounds b = coldseq::savings_bounds(fleet->impl);
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["max_rate_at_min_capacity"] = b.max_rate_at_min_capacity;
    j["min_rate_at_full_capacity"] = b.min_rate_at_full_capacity;
    j["savings_upper_bound"] = b.savings_upper_bound;
    *out = dup_text(j.dump(2) + "\n");
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_bounds_csv(const coldseq_fleet* fleet, char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !out) return invalid("bounds: null argument");
    const coldseq::SavingsBounds b = coldseq::savings_bounds(fleet->impl);
    std::string text = "metric,value\n";
    const auto row = [&text](const char* name, double v) {
      text += name;
      text.push_back(',');
      append_shortest(text, v);
      text.push_back('\n');
    };
    row("max_rate_at_min_capacity", b.max_rate_at_min_capacity);
    row("min_rate_at_full_capacity", b.min_rate_at_full_capacity);
    row("savings_upper_bound", b.savings_upper_bound);
    *out = dup_text(text);
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_partition_json(const coldseq_fleet* fleet,
                                      double lo_kw, double hi_kw,
                                      double step_kw, char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !out) return invalid("partition: null argument");
    const auto intervals =
        coldseq::order_partition(fleet->impl, lo_kw, hi_kw, step_kw);
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& iv : intervals)
      arr.push_back({{"q_lo_kw", iv.q_lo_kw},
                     {"q_hi_kw", iv.q_hi_kw},
                     {"order", iv.order.ids}});
    j["intervals"] = std::move(arr);
    *out = dup_text(j.dump(2) + "\n");
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_partition_csv(const coldseq_fleet* fleet,
                                     double lo_kw, double hi_kw,
                                     double step_kw, char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !out) return invalid("partition: null argument");
    const auto intervals =
        coldseq::order_partition(fleet->impl, lo_kw, hi_kw, step_kw);
    std::string text = "q_lo_kw,q_hi_kw,order\n";
    for (const auto& iv : intervals) {
      append_shortest(text, iv.q_lo_kw);
      text.push_back(',');
      append_shortest(text, iv.q_hi_kw);
      text.push_back(',');
      text += join_ids(iv.order.ids);
      text.push_back('\n');
    }
    *out = dup_text(text);
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_gap_sweep_json(const coldseq_fleet* fleet,
                                      double lo_kw, double hi_kw,
                                      double step_kw, char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !out) return invalid("gap_sweep: null argument");
    const auto rows = gap_rows(fleet->impl, lo_kw, hi_kw, step_kw);
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    double max_gap = 0.0, argmax = rows.empty() ? 0.0 : rows.front().q_in_kw;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"q_in_kw", r.q_in_kw},
                     {"best_kw", r.best_kw},
                     {"worst_kw", r.worst_kw},
                     {"gap", r.gap}});
      if (r.gap > max_gap) {
        max_gap = r.gap;
        argmax = r.q_in_kw;
      }
    }
    j["rows"] = std::move(arr);
    j["max_gap"] = max_gap;
    j["argmax_q_in_kw"] = argmax;
    *out = dup_text(j.dump(2) + "\n");
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_gap_sweep_csv(const coldseq_fleet* fleet,
                                     double lo_kw, double hi_kw,
                                     double step_kw, char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !out) return invalid("gap_sweep: null argument");
    const auto rows = gap_rows(fleet->impl, lo_kw, hi_kw, step_kw);
    std::string text = "q_in_kw,best_kw,worst_kw,gap\n";
    for (const auto& r : rows) {
      append_shortest(text, r.q_in_kw);
      text.push_back(',');
      append_shortest(text, r.best_kw);
      text.push_back(',');
      append_shortest(text, r.worst_kw);
      text.push_back(',');
      append_shortest(text, r.gap);
      text.push_back('\n');
    }
    *out = dup_text(text);
    return COLDSEQ_OK;
  });
}

/* ---------- load shifting ---------- */

void coldseq_shift_options_init(coldseq_shift_options* opts) {
  if (!opts) return;
  const coldseq::ShiftOptions defaults;
  opts->surplus_step_kw = defaults.surplus_step_kw;
  opts->surplus_cap_hours = defaults.surplus_cap_hours;
  opts->max_table_cells = defaults.max_table_cells;
}

coldseq_status coldseq_optimal_shift(const coldseq_fleet* fleet,
                                     const coldseq_profile* profile,
                                     const coldseq_shift_options* opts,
                                     coldseq_plan** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !profile || !out)
      return invalid("optimal_shift: null argument");
    *out = new coldseq_plan{
        coldseq::optimal_shift(fleet->impl, profile->impl, to_options(opts))};
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_static_trajectory(const coldseq_fleet* fleet,
                                         const coldseq_profile* profile,
                                         coldseq_plan** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !profile || !out)
      return invalid("static_trajectory: null argument");
    *out = new coldseq_plan{
        coldseq::static_trajectory(fleet->impl, profile->impl)};
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_online_shift(const coldseq_fleet* fleet,
                                    const coldseq_profile* profile,
                                    double mean_kw, coldseq_plan** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !profile || !out)
      return invalid("online_shift: null argument");
    std::optional<double> mean;
    if (mean_kw >= 0.0) mean = mean_kw;
    *out = new coldseq_plan{
        coldseq::online_shift(fleet->impl, profile->impl, mean)};
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_savings_gap(const coldseq_fleet* fleet,
                                   const coldseq_profile* profile,
                                   const coldseq_shift_options* opts,
                                   double* out_gap) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !profile || !out_gap)
      return invalid("savings_gap: null argument");
    *out_gap =
        coldseq::savings_gap(fleet->impl, profile->impl, to_options(opts));
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_plan_dump_csv(const coldseq_fleet* fleet,
                                     const coldseq_plan* plan, char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !plan || !out) return invalid("plan_dump: null argument");
    *out = dup_text(coldseq::plan_to_csv_text(fleet->impl, plan->impl));
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_plan_load_csv(const coldseq_fleet* fleet,
                                     const char* path, coldseq_plan** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !path || !out) return invalid("plan_load: null argument");
    *out = new coldseq_plan{coldseq::load_plan_csv(fleet->impl, path)};
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_plan_avg_power(const coldseq_plan* plan,
                                      double* out_kw) {
  return wrap([&]() -> coldseq_status {
    if (!plan || !out_kw) return invalid("plan_avg_power: null argument");
    *out_kw = plan->impl.avg_power_kw;
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_plan_check(const coldseq_fleet* fleet,
                                  const coldseq_plan* plan) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !plan) return invalid("plan_check: null argument");
    coldseq::check_plan(fleet->impl, plan->impl);
    return COLDSEQ_OK;
  });
}

void coldseq_plan_free(coldseq_plan* plan) { delete plan; }

coldseq_status coldseq_capacity_distribution_json(const coldseq_fleet* fleet,
                                                  const coldseq_plan* plan,
                                                  char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !plan || !out)
      return invalid("capacity_distribution: null argument");
    const auto shares =
        coldseq::capacity_distribution(fleet->impl, plan->impl);
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : shares)
      arr.push_back({{"id", s.id},
                     {"off_fraction", s.off},
                     {"trim_fraction", s.trimmed},
                     {"full_fraction", s.full}});
    j["machines"] = std::move(arr);
    *out = dup_text(j.dump(2) + "\n");
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_capacity_distribution_csv(const coldseq_fleet* fleet,
                                                 const coldseq_plan* plan,
                                                 char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !plan || !out)
      return invalid("capacity_distribution: null argument");
    const auto shares =
        coldseq::capacity_distribution(fleet->impl, plan->impl);
    std::string text = "id,off_fraction,trim_fraction,full_fraction\n";
    for (const auto& s : shares) {
      text += s.id;
      text.push_back(',');
      append_shortest(text, s.off);
      text.push_back(',');
      append_shortest(text, s.trimmed);
      text.push_back(',');
      append_shortest(text, s.full);
      text.push_back('\n');
    }
    *out = dup_text(text);
    return COLDSEQ_OK;
  });
}

/* ---------- method comparison ---------- */

coldseq_status coldseq_compare_json(const coldseq_fleet* fleet,
                                    const coldseq_profile* profile,
                                    const coldseq_shift_options* opts,
                                    double mean_kw, char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !profile || !out) return invalid("compare: null argument");
    std::optional<double> mean;
    if (mean_kw >= 0.0) mean = mean_kw;
    const coldseq::ComparisonReport report =
        coldseq::compare(fleet->impl, profile->impl, to_options(opts), mean);
    *out = dup_text(coldseq::report_to_json(report));
    return COLDSEQ_OK;
  });
}

coldseq_status coldseq_compare_csv(const coldseq_fleet* fleet,
                                   const coldseq_profile* profile,
                                   const coldseq_shift_options* opts,
                                   double mean_kw, char** out) {
  return wrap([&]() -> coldseq_status {
    if (!fleet || !profile || !out) return invalid("compare: null argument");
    std::optional<double> mean;
    if (mean_kw >= 0.0) mean = mean_kw;
    const coldseq::ComparisonReport report =
        coldseq::compare(fleet->impl, profile->impl, to_options(opts), mean);
    *out = dup_text(coldseq::report_to_csv(report));
    return COLDSEQ_OK;
  });
}

}  // extern "C"
