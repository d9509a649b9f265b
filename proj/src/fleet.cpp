#include "coldseq/fleet.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace coldseq {

namespace {

void validate_compressor(const Compressor& c) {
  std::ostringstream msg;
  if (c.id.empty()) {
    msg << "compressor with empty id";
    throw parse_error(msg.str());
  }
  if (!(c.q_min_kw > 0.0) || !(c.q_max_kw > c.q_min_kw)) {
    msg << "compressor " << c.id << ": require 0 < q_min < q_max, got q_min="
        << c.q_min_kw << " q_max=" << c.q_max_kw;
    throw parse_error(msg.str());
  }
  if (!(c.p_min_kw > 0.0) || !(c.p_max_kw >= c.p_min_kw)) {
    msg << "compressor " << c.id << ": require 0 < p_min <= p_max, got p_min="
        << c.p_min_kw << " p_max=" << c.p_max_kw;
    throw parse_error(msg.str());
  }
  // Cross-multiplied form of p_min / q_min >= p_max / q_max.
  if (c.p_min_kw * c.q_max_kw < c.p_max_kw * c.q_min_kw) {
    msg << "compressor " << c.id
        << ": power per unit cooling must not improve at lower capacity "
           "(p_min/q_min >= p_max/q_max), got "
        << c.p_min_kw / c.q_min_kw << " < " << c.p_max_kw / c.q_max_kw;
    throw parse_error(msg.str());
  }
}

}  // namespace

Fleet::Fleet(std::vector<Compressor> compressors)
    : compressors_(std::move(compressors)) {
  if (compressors_.empty()) {
    throw parse_error("fleet has no compressors");
  }
  std::unordered_set<std::string> seen;
  for (const Compressor& c : compressors_) {
    validate_compressor(c);
    if (!seen.insert(c.id).second) {
      std::ostringstream msg;
      msg << "duplicate compressor id " << c.id;
      throw parse_error(msg.str());
    }
  }
}

std::size_t Fleet::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < compressors_.size(); ++i) {
    if (compressors_[i].id == id) return i;
  }
  std::ostringstream msg;
  msg << "unknown compressor id " << id;
  throw parse_error(msg.str());
}

double power_at(const Compressor& c, double q) {
  if (q <= kLoadTolKw) {
    if (q < -kLoadTolKw) {
      std::ostringstream msg;
      msg << "compressor " << c.id << ": negative load " << q << " kW";
      throw infeasible_error(msg.str(), -q);
    }
    return 0.0;
  }
  if (q < c.q_min_kw - kLoadTolKw || q > c.q_max_kw + kLoadTolKw) {
    std::ostringstream msg;
    msg << "compressor " << c.id << ": load " << q
        << " kW outside operating window [" << c.q_min_kw << ", " << c.q_max_kw
        << "]";
    throw infeasible_error(msg.str(),
                           q > c.q_max_kw ? q - c.q_max_kw : c.q_min_kw - q);
  }
  const double clamped = std::clamp(q, c.q_min_kw, c.q_max_kw);
  const double frac = (clamped - c.q_min_kw) / (c.q_max_kw - c.q_min_kw);
  return c.p_min_kw + frac * (c.p_max_kw - c.p_min_kw);
}

double full_capacity_cost_ratio(const Compressor& c) {
  return c.p_max_kw / c.q_max_kw;
}

SequencingOrder shift_order(const Fleet& fleet) {
  std::vector<std::size_t> idx(fleet.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const auto& cs = fleet.compressors();
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return full_capacity_cost_ratio(cs[a]) < full_capacity_cost_ratio(cs[b]);
  });
  SequencingOrder order;
  order.ids.reserve(idx.size());
  for (std::size_t i : idx) order.ids.push_back(cs[i].id);
  return order;
}

SavingsBounds savings_bounds(const Fleet& fleet) {
  SavingsBounds b;
  b.max_rate_at_min_capacity = 0.0;
  b.min_rate_at_full_capacity = std::numeric_limits<double>::infinity();
  for (const Compressor& c : fleet.compressors()) {
    b.max_rate_at_min_capacity =
        std::max(b.max_rate_at_min_capacity, c.p_min_kw / c.q_min_kw);
    b.min_rate_at_full_capacity =
        std::min(b.min_rate_at_full_capacity, full_capacity_cost_ratio(c));
  }
  b.savings_upper_bound =
      (b.max_rate_at_min_capacity - b.min_rate_at_full_capacity) /
      b.min_rate_at_full_capacity;
  return b;
}

Fleet fleet_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    std::ostringstream msg;
    msg << "fleet JSON: " << e.what();
    throw parse_error(msg.str());
  }
  if (!j.is_object() || !j.contains("compressors") ||
      !j["compressors"].is_array()) {
    throw parse_error("fleet JSON: expected object with a compressors array");
  }
  std::vector<Compressor> cs;
  for (const auto& e : j["compressors"]) {
    Compressor c;
    try {
      c.id = e.at("id").get<std::string>();
      c.q_min_kw = e.at("q_min_kw").get<double>();
      c.q_max_kw = e.at("q_max_kw").get<double>();
      c.p_min_kw = e.at("p_min_kw").get<double>();
      c.p_max_kw = e.at("p_max_kw").get<double>();
    } catch (const nlohmann::json::exception& ex) {
      std::ostringstream msg;
      msg << "fleet JSON: bad compressor entry: " << ex.what();
      throw parse_error(msg.str());
    }
    cs.push_back(std::move(c));
  }
  return Fleet(std::move(cs));
}

std::string fleet_to_json(const Fleet& fleet) {
  nlohmann::json j;
  j["compressors"] = nlohmann::json::array();
  for (const Compressor& c : fleet.compressors()) {
    j["compressors"].push_back({{"id", c.id},
                                {"q_min_kw", c.q_min_kw},
                                {"q_max_kw", c.q_max_kw},
                                {"p_min_kw", c.p_min_kw},
                                {"p_max_kw", c.p_max_kw}});
  }
  return j.dump(2) + "\n";
}

Fleet load_fleet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::ostringstream msg;
    msg << "cannot open fleet file " << path;
    throw parse_error(msg.str());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return fleet_from_json(buf.str());
}

}  // namespace coldseq
