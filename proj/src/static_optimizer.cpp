#include "coldseq/static_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

namespace coldseq {

namespace {

constexpr double kCostTieTol = 1e-9;
constexpr double kLoadMatchTol = 1e-6;

struct Candidate {
  std::vector<double> loads_kw;
  double cost_kw = 0.0;
  int on_count = 0;
};

// True if a is preferred over b: lower cost, then fewer machines running,
// then lexicographically larger loads (deterministic).
bool better_candidate(const Candidate& a, const Candidate& b) {
  if (a.cost_kw < b.cost_kw - kCostTieTol) return true;
  if (a.cost_kw > b.cost_kw + kCostTieTol) return false;
  if (a.on_count != b.on_count) return a.on_count < b.on_count;
  return a.loads_kw > b.loads_kw;
}

// Canonical order realizing a full/interior/min structure: full machines
// first, then the interior one, then machines at q_min by ascending q_max
// (small machines must come up before big ones swallow the demand), then
// the off machines.
SequencingOrder structure_order(const Fleet& fleet,
                                const std::vector<double>& loads_kw) {
  const auto& cs = fleet.compressors();
  std::vector<std::size_t> full, interior, at_min, off;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const double q = loads_kw[i];
    if (q <= kLoadTolKw) {
      off.push_back(i);
    } else if (std::abs(q - cs[i].q_max_kw) <= kLoadMatchTol) {
      full.push_back(i);
    } else if (std::abs(q - cs[i].q_min_kw) <= kLoadMatchTol) {
      at_min.push_back(i);
    } else {
      interior.push_back(i);
    }
  }
  std::stable_sort(at_min.begin(), at_min.end(),
                   [&](std::size_t a, std::size_t b) {
                     return cs[a].q_max_kw < cs[b].q_max_kw;
                   });
  SequencingOrder order;
  for (std::size_t i : full) order.ids.push_back(cs[i].id);
  for (std::size_t i : interior) order.ids.push_back(cs[i].id);
  for (std::size_t i : at_min) order.ids.push_back(cs[i].id);
  for (std::size_t i : off) order.ids.push_back(cs[i].id);
  return order;
}

bool loads_match(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > kLoadMatchTol) return false;
  }
  return true;
}

int count_on(const std::vector<double>& loads_kw) {
  int n = 0;
  for (double q : loads_kw)
    if (q > kLoadTolKw) ++n;
  return n;
}

SequencingOrder ids_of(const Fleet& fleet,
                       const std::vector<std::size_t>& idx) {
  SequencingOrder order;
  for (std::size_t i : idx) order.ids.push_back(fleet.compressors()[i].id);
  return order;
}

void check_demand(const Fleet& fleet, double q_in_kw) {
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
}

}  // namespace

StaticSolution optimal_static(const Fleet& fleet, double q_in_kw) {
  const std::size_t m = fleet.size();
  if (m > 12) {
    std::ostringstream msg;
    msg << "optimal_static enumerates 3^m patterns; fleet of " << m
        << " machines exceeds the limit of 12";
    throw resource_error(msg.str());
  }
  check_demand(fleet, q_in_kw);
  const auto& cs = fleet.compressors();

  // Every machine is off, at q_min, or at q_max, except at most one running
  // strictly inside its window (two interior machines can always exchange
  // load toward a cheaper endpoint). Enumerate all off/min/full patterns;
  // for each, also try closing the gap to q_in with one machine left off by
  // the pattern.
  std::vector<Candidate> best_ties;
  std::vector<double> loads(m, 0.0);
  const auto consider = [&](const std::vector<double>& cand_loads) {
    Candidate c;
    c.loads_kw = cand_loads;
    c.cost_kw = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      c.cost_kw += power_at(cs[i], cand_loads[i]);
    c.on_count = count_on(cand_loads);
    if (best_ties.empty()) {
      best_ties.push_back(std::move(c));
      return;
    }
    if (better_candidate(c, best_ties.front())) {
      if (std::abs(c.cost_kw - best_ties.front().cost_kw) <= kCostTieTol) {
        best_ties.insert(best_ties.begin(), std::move(c));
        if (best_ties.size() > 128) best_ties.resize(128);
      } else {
        best_ties.clear();
        best_ties.push_back(std::move(c));
      }
    } else if (std::abs(c.cost_kw - best_ties.front().cost_kw) <=
                   kCostTieTol &&
               best_ties.size() < 128) {
      best_ties.push_back(std::move(c));
    }
  };

  std::vector<int> pattern(m, 0);  // 0 off, 1 at q_min, 2 at q_max
  for (;;) {
    double delivered = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      loads[i] = pattern[i] == 0   ? 0.0
                 : pattern[i] == 1 ? cs[i].q_min_kw
                                   : cs[i].q_max_kw;
      delivered += loads[i];
    }
    if (delivered >= q_in_kw - kLoadTolKw) consider(loads);
    const double residual = q_in_kw - delivered;
    for (std::size_t t = 0; t < m; ++t) {
      if (pattern[t] != 0) continue;
      if (residual < cs[t].q_min_kw - kLoadTolKw ||
          residual > cs[t].q_max_kw + kLoadTolKw)
        continue;
      loads[t] = std::clamp(residual, cs[t].q_min_kw, cs[t].q_max_kw);
      consider(loads);
      loads[t] = 0.0;
    }
    // Next base-3 pattern.
    std::size_t i = 0;
    while (i < m && pattern[i] == 2) pattern[i++] = 0;
    if (i == m) break;
    ++pattern[i];
  }

  if (best_ties.empty()) {
    // Unreachable: the all-max pattern always delivers full capacity.
    throw infeasible_error("no feasible static assignment", 0.0);
  }

  // The winner must be reproducible by a sequencing order. Try the
  // canonical order of each tied candidate first.
  for (const Candidate& c : best_ties) {
    SequencingOrder order = structure_order(fleet, c.loads_kw);
    Assignment wf = waterfill(fleet, order, q_in_kw);
    if (loads_match(wf.loads_kw, c.loads_kw)) {
      StaticSolution s;
      s.assignment = std::move(wf);
      s.cost_kw = assignment_cost(fleet, s.assignment);
      s.realizing_order = std::move(order);
      return s;
    }
  }

  // Fall back to the best order over all permutations. An exact match to a
  // tied winner is preferred; otherwise the cheapest order stands in.
  if (m <= 8) {
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> best_perm;
    Assignment best_wf;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
      SequencingOrder order = ids_of(fleet, perm);
      Assignment wf = waterfill(fleet, order, q_in_kw);
      for (const Candidate& c : best_ties) {
        if (loads_match(wf.loads_kw, c.loads_kw)) {
          StaticSolution s;
          s.assignment = std::move(wf);
          s.cost_kw = assignment_cost(fleet, s.assignment);
          s.realizing_order = std::move(order);
          return s;
        }
      }
      const double cost = assignment_cost(fleet, wf);
      if (cost < best_cost - kCostTieTol) {
        best_cost = cost;
        best_perm = perm;
        best_wf = std::move(wf);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    StaticSolution s;
    s.assignment = std::move(best_wf);
    s.cost_kw = best_cost;
    s.realizing_order = ids_of(fleet, best_perm);
    return s;
  }

  // Large fleet and no canonical order reproduced a winner: return the
  // waterfill of the winner's canonical order, a feasible and
  // self-consistent sequencing even if the enumerated pattern itself is
  // not order-reachable.
  StaticSolution s;
  s.realizing_order = structure_order(fleet, best_ties.front().loads_kw);
  s.assignment = waterfill(fleet, s.realizing_order, q_in_kw);
  s.cost_kw = assignment_cost(fleet, s.assignment);
  return s;
}

StaticSolution grid_optimal_static(const Fleet& fleet, double q_in_kw,
                                   double grid_step_kw) {
  if (!(grid_step_kw > 0.0)) {
    std::ostringstream msg;
    msg << "grid step must be positive, got " << grid_step_kw;
    throw parse_error(msg.str());
  }
  check_demand(fleet, q_in_kw);
  const auto& cs = fleet.compressors();
  const std::size_t m = fleet.size();
  const double g = grid_step_kw;
  const long long target = std::llround(std::ceil(q_in_kw / g - 1e-9));
  const std::size_t top = static_cast<std::size_t>(std::max(0LL, target));

  double work = 0.0;
  for (const Compressor& c : cs)
    work += static_cast<double>(top + 1) +
            (c.q_max_kw - c.q_min_kw) / g + 1.0;
  if (work > 1e8) {
    std::ostringstream msg;
    msg << "grid dynamic program needs about " << work
        << " cell updates; raise grid_step_kw";
    throw resource_error(msg.str());
  }

  struct Option {
    long long u_min = 0;
    long long u_max = 0;
    double alpha = 0.0;  // cost(u) = alpha + gamma * u on [u_min, u_max]
    double gamma = 0.0;
  };
  std::vector<Option> opts(m);
  for (std::size_t j = 0; j < m; ++j) {
    Option& o = opts[j];
    o.u_min = std::max<long long>(
        1, std::llround(std::ceil(cs[j].q_min_kw / g - 1e-9)));
    o.u_max = std::llround(std::floor(cs[j].q_max_kw / g + 1e-9));
    o.gamma = g * (cs[j].p_max_kw - cs[j].p_min_kw) /
              (cs[j].q_max_kw - cs[j].q_min_kw);
    o.alpha = cs[j].p_min_kw - o.gamma * (cs[j].q_min_kw / g);
  }

  const double inf = std::numeric_limits<double>::infinity();
  // layers[j][v]: min cost of delivering at least v units (bucket `top`
  // means ">= top") using machines 0..j-1.
  std::vector<std::vector<double>> layers(m + 1,
                                          std::vector<double>(top + 1, inf));
  layers[0][0] = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const Option& o = opts[j];
    const auto& prev = layers[j];
    auto& next = layers[j + 1];
    next = prev;  // off
    if (o.u_min > o.u_max) continue;
    // v < top: slide a window minimum of prev[w] - gamma*w over
    // w in [v - u_max, v - u_min].
    std::deque<std::size_t> win;
    const auto h = [&](std::size_t w) { return prev[w] - o.gamma * w; };
    for (std::size_t v = static_cast<std::size_t>(o.u_min); v < top; ++v) {
      const std::size_t w_new = v - static_cast<std::size_t>(o.u_min);
      while (!win.empty() && h(win.back()) >= h(w_new)) win.pop_back();
      win.push_back(w_new);
      while (static_cast<long long>(win.front()) <
             static_cast<long long>(v) - o.u_max)
        win.pop_front();
      const double cand = o.alpha + o.gamma * v + h(win.front());
      if (cand < next[v]) next[v] = cand;
    }
    // v = top: any u in window, landing clamps to the bucket. Suffix minima
    // of prev pick the best starting point w >= top - u.
    std::vector<double> suffix(top + 2, inf);
    for (std::size_t w = top + 1; w-- > 0;)
      suffix[w] = std::min(prev[w], suffix[w + 1]);
    for (long long u = o.u_min; u <= o.u_max; ++u) {
      const std::size_t w_lo = static_cast<std::size_t>(
          std::max<long long>(0, static_cast<long long>(top) - u));
      const double cand = suffix[w_lo] + o.alpha + o.gamma * u;
      if (cand < next[top]) next[top] = cand;
    }
  }

  if (!std::isfinite(layers[m][top])) {
    std::ostringstream msg;
    msg << "no grid assignment delivers " << q_in_kw << " kW at step " << g;
    throw infeasible_error(msg.str(), q_in_kw);
  }

  // Walk back, re-checking options in preference order (full, off, q_min,
  // then interior descending) against the layer values.
  constexpr double kRescanTol = 1e-6;
  std::vector<double> loads(m, 0.0);
  std::size_t v = top;
  for (std::size_t j = m; j-- > 0;) {
    const Option& o = opts[j];
    const auto& prev = layers[j];
    const double want = layers[j + 1][v];
    std::vector<long long> try_u;
    if (o.u_min <= o.u_max) try_u.push_back(o.u_max);
    try_u.push_back(0);
    if (o.u_min < o.u_max) try_u.push_back(o.u_min);
    for (long long u = o.u_max - 1; u > o.u_min; --u) try_u.push_back(u);

    bool found = false;
    for (long long u : try_u) {
      if (u == 0) {
        if (prev[v] <= want + kRescanTol) {
          found = true;
          break;
        }
        continue;
      }
      const double cost_u = o.alpha + o.gamma * u;
      if (v == top) {
        const std::size_t w_lo = static_cast<std::size_t>(
            std::max<long long>(0, static_cast<long long>(top) - u));
        for (std::size_t w = w_lo; w <= top; ++w) {
          if (prev[w] + cost_u <= want + kRescanTol) {
            loads[j] = u * g;
            v = w;
            found = true;
            break;
          }
        }
      } else if (static_cast<long long>(v) >= u) {
        const std::size_t w = v - static_cast<std::size_t>(u);
        if (prev[w] + cost_u <= want + kRescanTol) {
          loads[j] = u * g;
          v = w;
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) {
      throw resource_error(
          "grid dynamic program reconstruction lost the optimal path");
    }
  }

  // Two machines strictly inside their windows at an optimum must share the
  // same per-kW slope (else shifting one grid unit would improve the cost),
  // so load can migrate from the steeper machine to the shallower one until
  // a boundary stops it. Cost never increases; each pass parks one machine.
  for (;;) {
    std::vector<std::size_t> interior;
    for (std::size_t j = 0; j < m; ++j) {
      const long long u = std::llround(loads[j] / g);
      if (u > opts[j].u_min && u < opts[j].u_max) interior.push_back(j);
    }
    if (interior.size() < 2) break;
    std::size_t a = interior[0], b = interior[1];
    if (opts[a].gamma < opts[b].gamma) std::swap(a, b);  // a steeper: drain a
    const long long ua = std::llround(loads[a] / g);
    const long long ub = std::llround(loads[b] / g);
    const long long d = std::min(ua - opts[a].u_min, opts[b].u_max - ub);
    loads[a] = (ua - d) * g;
    loads[b] = (ub + d) * g;
  }

  StaticSolution s;
  s.assignment.loads_kw = loads;
  s.cost_kw = assignment_cost(fleet, s.assignment);
  s.realizing_order = structure_order(fleet, loads);
  return s;
}

std::vector<OrderCost> fixed_order_costs(const Fleet& fleet, double q_in_kw) {
  const std::size_t m = fleet.size();
  if (m > 8) {
    std::ostringstream msg;
    msg << "fixed_order_costs enumerates m! orders; fleet of " << m
        << " machines exceeds the limit of 8";
    throw resource_error(msg.str());
  }
  check_demand(fleet, q_in_kw);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<OrderCost> out;
  do {
    OrderCost oc;
    oc.order = ids_of(fleet, perm);
    oc.cost_kw = assignment_cost(fleet, waterfill(fleet, oc.order, q_in_kw));
    out.push_back(std::move(oc));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const OrderCost& a, const OrderCost& b) {
    if (a.cost_kw != b.cost_kw) return a.cost_kw < b.cost_kw;
    return a.order.ids < b.order.ids;
  });
  return out;
}

std::vector<OrderInterval> order_partition(const Fleet& fleet, double q_lo_kw,
                                           double q_hi_kw, double step_kw) {
  if (!(step_kw > 0.0)) {
    std::ostringstream msg;
    msg << "partition step must be positive, got " << step_kw;
    throw parse_error(msg.str());
  }
  if (q_hi_kw < q_lo_kw) {
    std::ostringstream msg;
    msg << "partition range [" << q_lo_kw << ", " << q_hi_kw << "] is empty";
    throw parse_error(msg.str());
  }
  std::vector<double> samples;
  for (double q = q_lo_kw; q < q_hi_kw - kLoadTolKw; q += step_kw)
    samples.push_back(q);
  samples.push_back(q_hi_kw);

  std::vector<OrderInterval> out;
  for (double qq : samples) {
    StaticSolution s = optimal_static(fleet, qq);
    if (!out.empty() && out.back().order.ids == s.realizing_order.ids) {
      out.back().q_hi_kw = qq;
    } else {
      OrderInterval iv;
      iv.q_lo_kw = qq;
      iv.q_hi_kw = qq;
      iv.order = std::move(s.realizing_order);
      out.push_back(std::move(iv));
    }
  }
  return out;
}

}  // namespace coldseq
