#include "coldseq/load_shift.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "coldseq/static_optimizer.hpp"
#include "text_util.hpp"

namespace coldseq {

using detail::append_shortest;
using detail::parse_double;

namespace {

// Stage cost of serving x kW under the fleet's shift order. Mirrors
// waterfill's comparison and update sequence and assignment_cost's
// summation order, so cost(x) equals assignment_cost(assign(x)) bit for
// bit. The shift plans rely on that equality: the planner prices decisions
// with cost() and the finished plan re-prices them from the assignments.
class FixedOrderCost {
 public:
  explicit FixedOrderCost(const Fleet& fleet)
      : fleet_(&fleet), order_(shift_order(fleet)) {
    for (const std::string& id : order_.ids)
      seq_.push_back(fleet.index_of(id));
    scratch_.assign(fleet.size(), 0.0);
  }

  const SequencingOrder& order() const { return order_; }

  double cost(double x) const {
    const auto& cs = fleet_->compressors();
    std::fill(scratch_.begin(), scratch_.end(), 0.0);
    double q_tot = 0.0;
    std::size_t on = 0;
    while (on < seq_.size() && x > q_tot) {
      scratch_[seq_[on]] = cs[seq_[on]].q_max_kw;
      q_tot += cs[seq_[on]].q_max_kw;
      ++on;
    }
    for (std::size_t j = on; j-- > 0;) {
      const Compressor& c = cs[seq_[j]];
      if (x <= q_tot) {
        const double d = std::min(c.q_max_kw - c.q_min_kw, q_tot - x);
        scratch_[seq_[j]] -= d;
        q_tot -= d;
      }
    }
    double power = 0.0;
    for (std::size_t i = 0; i < cs.size(); ++i)
      power += power_at(cs[i], scratch_[i]);
    return power;
  }

  Assignment assign(double x) const { return waterfill(*fleet_, order_, x); }

  // Demand levels where the stage cost changes slope or jumps: every
  // bring-up boundary (prefix sum of q_max) and every partial-trim depth
  // below it.
  std::vector<double> kinks_kw() const {
    const auto& cs = fleet_->compressors();
    std::vector<double> ks{0.0};
    double ps = 0.0;
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      ps += cs[seq_[i]].q_max_kw;
      ks.push_back(ps);
      double depth = 0.0;
      for (std::size_t t = i + 1; t-- > 0;) {
        depth += cs[seq_[t]].q_max_kw - cs[seq_[t]].q_min_kw;
        ks.push_back(ps - depth);
      }
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    while (!ks.empty() && ks.front() < 0.0) ks.erase(ks.begin());
    return ks;
  }

 private:
  const Fleet* fleet_;
  SequencingOrder order_;
  std::vector<std::size_t> seq_;
  mutable std::vector<double> scratch_;
};

struct GridProblem {
  double g = 0.0;            // kW per surplus unit
  long long u_tot = 0;       // full-fleet output, units
  long long cap = 0;         // surplus cap, units
  std::vector<long long> u;  // per-stage demand snapped up to the grid
};

GridProblem make_grid(const Fleet& fleet, const LoadProfile& profile,
                      const ShiftOptions& opts) {
  if (profile.loads_kw.empty()) throw parse_error("empty load profile");
  if (!(opts.surplus_step_kw > 0.0)) {
    std::ostringstream msg;
    msg << "surplus step must be positive, got " << opts.surplus_step_kw;
    throw parse_error(msg.str());
  }
  if (!(opts.surplus_cap_hours >= 0.0)) {
    std::ostringstream msg;
    msg << "surplus cap must be nonnegative, got " << opts.surplus_cap_hours;
    throw parse_error(msg.str());
  }
  const double capacity = total_capacity(fleet);
  const double mean = mean_load(profile);
  if (mean > capacity + kLoadTolKw) {
    std::ostringstream msg;
    msg << "profile mean " << mean << " kW exceeds fleet capacity "
        << capacity << " kW";
    throw infeasible_error(msg.str(), mean - capacity);
  }
  GridProblem gp;
  gp.g = opts.surplus_step_kw;
  gp.u_tot = std::llround(std::floor(capacity / gp.g + 1e-9));
  if (gp.u_tot + 1 > 65534) {
    std::ostringstream msg;
    msg << "fleet capacity spans " << gp.u_tot
        << " surplus-grid units; raise surplus_step_kw";
    throw resource_error(msg.str());
  }
  const double stages_per_hour = 60.0 / profile.step_minutes;
  gp.cap = std::llround(std::floor(
      opts.surplus_cap_hours * stages_per_hour * (capacity / gp.g) + 1e-9));
  gp.u.reserve(profile.loads_kw.size());
  for (double q : profile.loads_kw) {
    if (q < 0.0) throw parse_error("negative load in profile");
    gp.u.push_back(std::llround(std::ceil(q / gp.g - 1e-9)));
  }

  // Reachability scan: the carried surplus always covers an interval
  // [0, bank]. Distinguish genuinely unserviceable stages from stages the
  // surplus cap alone blocks.
  long long bank = 0, bank_uncapped = 0;
  const long long bank_limit = 1LL << 62;
  for (std::size_t k = 0; k < gp.u.size(); ++k) {
    const long long need = gp.u[k] - gp.u_tot;
    if (need > bank) {
      std::ostringstream msg;
      if (need <= bank_uncapped) {
        msg << "stage " << k << " needs " << static_cast<double>(need) * gp.g
            << " kW of carried surplus but the cap allows only "
            << static_cast<double>(bank) * gp.g
            << " kW; raise surplus_cap_hours";
        throw resource_error(msg.str());
      }
      msg << "stage " << k << " demands "
          << static_cast<double>(gp.u[k]) * gp.g
          << " kW, beyond fleet capacity plus any bankable surplus";
      throw infeasible_error(
          msg.str(), static_cast<double>(need - bank_uncapped) * gp.g,
          static_cast<long>(k));
    }
    bank = std::min(gp.cap, bank + gp.u_tot - gp.u[k]);
    bank_uncapped =
        std::min(bank_limit, bank_uncapped + gp.u_tot - gp.u[k]);
  }
  return gp;
}

ShiftPlan finish_plan(const Fleet& fleet, const LoadProfile& profile,
                      std::vector<Assignment> assignments) {
  ShiftPlan plan;
  plan.input = profile;
  plan.assignments = std::move(assignments);
  plan.shifted_kw.reserve(plan.assignments.size());
  double total = 0.0;
  for (const Assignment& a : plan.assignments) {
    double q = 0.0;
    for (double v : a.loads_kw) q += v;
    plan.shifted_kw.push_back(q);
    total += assignment_cost(fleet, a);
  }
  plan.avg_power_kw = total / static_cast<double>(plan.assignments.size());
  return plan;
}

}  // namespace

ShiftPlan optimal_shift(const Fleet& fleet, const LoadProfile& profile,
                        const ShiftOptions& opts) {
  const GridProblem gp = make_grid(fleet, profile, opts);
  const std::size_t n = gp.u.size();
  const std::size_t states = static_cast<std::size_t>(gp.cap) + 1;
  const double cells = static_cast<double>(n) * static_cast<double>(states);
  if (cells > opts.max_table_cells) {
    std::ostringstream msg;
    msg << "surplus table needs " << cells << " cells (limit "
        << opts.max_table_cells
        << "); raise surplus_step_kw or lower surplus_cap_hours";
    throw resource_error(msg.str());
  }
  const FixedOrderCost foc(fleet);
  std::vector<double> unit_cost(static_cast<std::size_t>(gp.u_tot) + 1);
  for (long long d = 0; d <= gp.u_tot; ++d)
    unit_cost[static_cast<std::size_t>(d)] =
        foc.cost(static_cast<double>(d) * gp.g);

  // Small tables afford every grid decision, which makes the result the
  // exact optimum over gridded plans. Larger tables use the stage-cost
  // breakpoints plus the feasibility boundaries, where an optimal decision
  // ordinarily lies.
  const bool full_decisions =
      cells * static_cast<double>(gp.u_tot + 1) <= 2e7;
  std::vector<long long> base;
  if (!full_decisions) {
    for (double kink : foc.kinks_kw()) {
      for (long long d : {std::llround(std::floor(kink / gp.g + 1e-9)),
                          std::llround(std::ceil(kink / gp.g - 1e-9))})
        if (d >= 0 && d <= gp.u_tot) base.push_back(d);
    }
    base.push_back(0);
    base.push_back(gp.u_tot);
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
  }

  // Backward induction over suffix cost. Decisions are scanned in
  // ascending order and ties keep the first achiever, so the cheapest plan
  // with the smallest delivery at every tie is selected; the exhaustive
  // checker resolves ties the same way, which keeps the two bitwise
  // comparable on instances both can afford.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> cur(states, inf), nxt(states, 0.0);
  std::vector<std::uint16_t> dec(n * states, 0);
  for (std::size_t k = n; k-- > 0;) {
    std::fill(cur.begin(), cur.end(), inf);
    const long long uk = gp.u[k];
    std::uint16_t* dk = dec.data() + k * states;
    for (long long s = 0; s < static_cast<long long>(states); ++s) {
      const long long lb = std::max<long long>(0, uk - s);
      const long long ub = std::min(gp.u_tot, uk - s + gp.cap);
      if (lb > ub) continue;
      double best = inf;
      long long pick = -1;
      const auto consider = [&](long long d) {
        const double after = nxt[static_cast<std::size_t>(s + d - uk)];
        if (!(after < inf)) return;
        const double v = unit_cost[static_cast<std::size_t>(d)] + after;
        if (v < best) {
          best = v;
          pick = d;
        }
      };
      if (full_decisions) {
        for (long long d = lb; d <= ub; ++d) consider(d);
      } else {
        // Weave the candidates in ascending order; repeats are harmless
        // because only a strictly better value displaces the pick.
        consider(lb);
        bool uk_pending = uk > lb && uk < ub;
        for (auto it = std::upper_bound(base.begin(), base.end(), lb);
             it != base.end() && *it < ub; ++it) {
          if (uk_pending && uk <= *it) {
            consider(uk);
            uk_pending = false;
          }
          consider(*it);
        }
        if (uk_pending) consider(uk);
        if (ub > lb) consider(ub);
      }
      if (pick >= 0) {
        cur[static_cast<std::size_t>(s)] = best;
        dk[static_cast<std::size_t>(s)] = static_cast<std::uint16_t>(pick);
      }
    }
    cur.swap(nxt);
  }
  if (!(nxt[0] < inf)) {
    // Unreachable once the reachability scan passes; kept as a guard
    // against decision-set regressions.
    throw infeasible_error("no feasible gridded trajectory", 0.0);
  }

  std::vector<long long> d(n, 0);
  long long s = 0;
  for (std::size_t k = 0; k < n; ++k) {
    d[k] = dec[k * states + static_cast<std::size_t>(s)];
    s = s + d[k] - gp.u[k];
  }
  std::vector<Assignment> assignments;
  assignments.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    assignments.push_back(foc.assign(static_cast<double>(d[k]) * gp.g));
  return finish_plan(fleet, profile, std::move(assignments));
}

ShiftPlan exhaustive_shift(const Fleet& fleet, const LoadProfile& profile,
                           const ShiftOptions& opts, StageCostModel model) {
  const GridProblem gp = make_grid(fleet, profile, opts);
  const std::size_t n = gp.u.size();
  const std::size_t states = static_cast<std::size_t>(gp.cap) + 1;
  const double work = static_cast<double>(n + 1) *
                      static_cast<double>(states) *
                      static_cast<double>(gp.u_tot + 1);
  if (work > 1e8) {
    std::ostringstream msg;
    msg << "exhaustive search would visit about " << work
        << " decisions; use optimal_shift or coarsen the grid";
    throw resource_error(msg.str());
  }

  const SequencingOrder order = shift_order(fleet);
  std::vector<double> stage_cost(static_cast<std::size_t>(gp.u_tot) + 1);
  for (long long du = 0; du <= gp.u_tot; ++du) {
    const double x = static_cast<double>(du) * gp.g;
    stage_cost[static_cast<std::size_t>(du)] =
        model == StageCostModel::fixed_order
            ? assignment_cost(fleet, waterfill(fleet, order, x))
            : optimal_static(fleet, x).cost_kw;
  }

  const double inf = std::numeric_limits<double>::infinity();
  // value[k][s]: cheapest completion of stages k..n-1 entering stage k
  // with surplus s, minimized over every grid decision.
  std::vector<std::vector<double>> value(n + 1,
                                         std::vector<double>(states, inf));
  std::fill(value[n].begin(), value[n].end(), 0.0);
  for (std::size_t k = n; k-- > 0;) {
    for (long long s = 0; s < static_cast<long long>(states); ++s) {
      const long long lb = std::max<long long>(0, gp.u[k] - s);
      const long long ub = std::min(gp.u_tot, gp.u[k] - s + gp.cap);
      double bestv = inf;
      for (long long du = lb; du <= ub; ++du) {
        const double v =
            stage_cost[static_cast<std::size_t>(du)] +
            value[k + 1][static_cast<std::size_t>(s + du - gp.u[k])];
        if (v < bestv) bestv = v;
      }
      value[k][static_cast<std::size_t>(s)] = bestv;
    }
  }
  if (!(value[0][0] < inf)) {
    throw infeasible_error("no feasible gridded trajectory", 0.0);
  }

  std::vector<Assignment> assignments;
  assignments.reserve(n);
  long long s = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const long long lb = std::max<long long>(0, gp.u[k] - s);
    const long long ub = std::min(gp.u_tot, gp.u[k] - s + gp.cap);
    long long pick = -1;
    for (long long du = lb; du <= ub; ++du) {
      const double v =
          stage_cost[static_cast<std::size_t>(du)] +
          value[k + 1][static_cast<std::size_t>(s + du - gp.u[k])];
      if (v == value[k][static_cast<std::size_t>(s)]) {
        pick = du;
        break;
      }
    }
    if (pick < 0)
      throw resource_error("exhaustive search reconstruction lost its path");
    const double x = static_cast<double>(pick) * gp.g;
    assignments.push_back(model == StageCostModel::fixed_order
                              ? waterfill(fleet, order, x)
                              : optimal_static(fleet, x).assignment);
    s += pick - gp.u[k];
  }
  return finish_plan(fleet, profile, std::move(assignments));
}

ShiftPlan static_trajectory(const Fleet& fleet, const LoadProfile& profile) {
  if (profile.loads_kw.empty()) throw parse_error("empty load profile");
  std::vector<Assignment> assignments;
  assignments.reserve(profile.loads_kw.size());
  for (std::size_t k = 0; k < profile.loads_kw.size(); ++k) {
    try {
      assignments.push_back(
          optimal_static(fleet, profile.loads_kw[k]).assignment);
    } catch (const infeasible_error& e) {
      std::ostringstream msg;
      msg << "stage " << k << ": " << e.what();
      throw infeasible_error(msg.str(), e.shortfall_kw,
                             static_cast<long>(k));
    }
  }
  return finish_plan(fleet, profile, std::move(assignments));
}

ShiftPlan fixed_order_trajectory(const Fleet& fleet,
                                 const SequencingOrder& order,
                                 const LoadProfile& profile) {
  if (profile.loads_kw.empty()) throw parse_error("empty load profile");
  std::vector<Assignment> assignments;
  assignments.reserve(profile.loads_kw.size());
  for (std::size_t k = 0; k < profile.loads_kw.size(); ++k) {
    try {
      assignments.push_back(waterfill(fleet, order, profile.loads_kw[k]));
    } catch (const infeasible_error& e) {
      std::ostringstream msg;
      msg << "stage " << k << ": " << e.what();
      throw infeasible_error(msg.str(), e.shortfall_kw,
                             static_cast<long>(k));
    }
  }
  return finish_plan(fleet, profile, std::move(assignments));
}

WorstCasePair worst_case_profiles(const Compressor& c, double scale,
                                  long horizon) {
  const long back_count = std::lround(scale * c.q_max_kw);
  if (back_count < 1) {
    std::ostringstream msg;
    msg << "scale " << scale << " rounds the q_min block to zero stages";
    throw parse_error(msg.str());
  }
  const double total = static_cast<double>(back_count) * c.q_min_kw;
  // Deliver the same total at q_max as fast as possible: full stages plus
  // one remainder stage. That keeps the totals exactly equal, so the front
  // profile cumulative-dominates the back one at every prefix.
  const long front_full = static_cast<long>(std::floor(total / c.q_max_kw));
  const double remainder = total - static_cast<double>(front_full) * c.q_max_kw;
  const long front_count = front_full + (remainder > 0.0 ? 1 : 0);
  if (front_count >= horizon - back_count) {
    std::ostringstream msg;
    msg << "separation requires the " << front_count
        << " q_max stages to end before the " << back_count
        << " q_min stages begin; horizon " << horizon << " is too short";
    throw parse_error(msg.str());
  }
  WorstCasePair pair;
  pair.back_loaded.step_minutes = 1.0;
  pair.front_loaded.step_minutes = 1.0;
  const long n = horizon + 1;
  pair.back_loaded.loads_kw.assign(static_cast<std::size_t>(n), 0.0);
  pair.front_loaded.loads_kw.assign(static_cast<std::size_t>(n), 0.0);
  for (long k = n - back_count; k < n; ++k)
    pair.back_loaded.loads_kw[static_cast<std::size_t>(k)] = c.q_min_kw;
  for (long k = 0; k < front_full; ++k)
    pair.front_loaded.loads_kw[static_cast<std::size_t>(k)] = c.q_max_kw;
  if (remainder > 0.0)
    pair.front_loaded.loads_kw[static_cast<std::size_t>(front_full)] =
        remainder;
  return pair;
}

double savings_gap(const Fleet& fleet, const LoadProfile& profile,
                   const ShiftOptions& opts) {
  const double st = static_trajectory(fleet, profile).avg_power_kw;
  const double op = optimal_shift(fleet, profile, opts).avg_power_kw;
  if (op <= kLoadTolKw)
    return st <= kLoadTolKw ? 0.0 : std::numeric_limits<double>::infinity();
  return (st - op) / op;
}

std::string plan_to_csv_text(const Fleet& fleet, const ShiftPlan& plan) {
  std::string out = "stage,q_in_kw,q_sh_kw";
  for (const Compressor& c : fleet.compressors()) {
    out.push_back(',');
    out += c.id;
  }
  out += ",power_kw\n";
  for (std::size_t k = 0; k < plan.shifted_kw.size(); ++k) {
    out += std::to_string(k);
    out.push_back(',');
    append_shortest(out, plan.input.loads_kw[k]);
    out.push_back(',');
    append_shortest(out, plan.shifted_kw[k]);
    for (double q : plan.assignments[k].loads_kw) {
      out.push_back(',');
      append_shortest(out, q);
    }
    out.push_back(',');
    append_shortest(out, assignment_cost(fleet, plan.assignments[k]));
    out.push_back('\n');
  }
  return out;
}

void save_plan_csv(const Fleet& fleet, const ShiftPlan& plan,
                   const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    std::ostringstream msg;
    msg << "cannot write plan file " << path;
    throw parse_error(msg.str());
  }
  out << plan_to_csv_text(fleet, plan);
  out.flush();
  if (!out) {
    std::ostringstream msg;
    msg << "short write to " << path;
    throw parse_error(msg.str());
  }
}

ShiftPlan plan_from_csv_text(const Fleet& fleet, const std::string& text,
                             const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    std::ostringstream msg;
    msg << origin << ": empty plan file";
    throw parse_error(msg.str());
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const auto comma = s.find(',', pos);
      cells.push_back(s.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return cells;
  };
  const std::vector<std::string> header = split(line);
  const std::size_t m = fleet.size();
  if (header.size() != m + 4 || header[0] != "stage" ||
      header[1] != "q_in_kw" || header[2] != "q_sh_kw" ||
      header.back() != "power_kw") {
    std::ostringstream msg;
    msg << origin << ": expected header stage,q_in_kw,q_sh_kw,<" << m
        << " compressor ids>,power_kw";
    throw parse_error(msg.str(), 1);
  }
  std::vector<std::size_t> col_to_fleet(m);
  for (std::size_t j = 0; j < m; ++j)
    col_to_fleet[j] = fleet.index_of(header[3 + j]);

  ShiftPlan plan;
  plan.input.step_minutes = 1.0;
  long row = 1;
  double total_power = 0.0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line);
    if (cells.size() != header.size()) {
      std::ostringstream msg;
      msg << origin << ", row " << row << ": expected " << header.size()
          << " columns, got " << cells.size();
      throw parse_error(msg.str(), row);
    }
    std::vector<double> vals(cells.size(), 0.0);
    for (std::size_t j = 1; j < cells.size(); ++j) {
      if (!parse_double(cells[j], vals[j])) {
        std::ostringstream msg;
        msg << origin << ", row " << row << ": bad number in column "
            << header[j];
        throw parse_error(msg.str(), row);
      }
    }
    plan.input.loads_kw.push_back(vals[1]);
    plan.shifted_kw.push_back(vals[2]);
    Assignment a;
    a.loads_kw.assign(m, 0.0);
    for (std::size_t j = 0; j < m; ++j)
      a.loads_kw[col_to_fleet[j]] = vals[3 + j];
    plan.assignments.push_back(std::move(a));
    total_power += vals.back();
  }
  if (plan.assignments.empty()) {
    std::ostringstream msg;
    msg << origin << ": no plan rows";
    throw parse_error(msg.str());
  }
  plan.avg_power_kw =
      total_power / static_cast<double>(plan.assignments.size());
  return plan;
}

ShiftPlan load_plan_csv(const Fleet& fleet, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::ostringstream msg;
    msg << "cannot open plan file " << path;
    throw parse_error(msg.str());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return plan_from_csv_text(fleet, buf.str(), path);
}

void check_plan(const Fleet& fleet, const ShiftPlan& plan) {
  const std::size_t n = plan.shifted_kw.size();
  std::ostringstream msg;
  if (n == 0 || plan.assignments.size() != n ||
      plan.input.loads_kw.size() != n) {
    msg << "plan stage counts disagree: " << plan.input.loads_kw.size()
        << " demands, " << n << " deliveries, " << plan.assignments.size()
        << " assignments";
    throw std::logic_error(msg.str());
  }
  double cum_in = 0.0, cum_sh = 0.0, total_power = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Assignment& a = plan.assignments[k];
    double served = 0.0;
    for (double q : a.loads_kw) served += q;
    double power = 0.0;
    try {
      power = assignment_cost(fleet, a);
    } catch (const std::exception& e) {
      msg << "stage " << k << ": invalid assignment: " << e.what();
      throw std::logic_error(msg.str());
    }
    total_power += power;
    if (served + kLoadTolKw < plan.shifted_kw[k]) {
      msg << "stage " << k << ": assignment serves " << served
          << " kW but the plan claims " << plan.shifted_kw[k];
      throw std::logic_error(msg.str());
    }
    cum_in += plan.input.loads_kw[k];
    cum_sh += plan.shifted_kw[k];
    if (cum_sh + kLoadTolKw < cum_in) {
      msg << "stage " << k << ": cumulative delivered cooling " << cum_sh
          << " kW lags cumulative demand " << cum_in << " kW";
      throw std::logic_error(msg.str());
    }
  }
  const double avg = total_power / static_cast<double>(n);
  if (std::abs(avg - plan.avg_power_kw) >
      1e-6 * std::max(1.0, std::abs(avg))) {
    msg << "plan states average power " << plan.avg_power_kw
        << " kW but its assignments cost " << avg << " kW";
    throw std::logic_error(msg.str());
  }
}

}  // namespace coldseq
