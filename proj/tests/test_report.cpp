#include <doctest.h>

#include <json.hpp>

#include "coldseq/report.hpp"
#include "testutil.hpp"

using namespace coldseq;

namespace {

LoadProfile make_profile(std::vector<double> loads, double step_min = 60.0) {
  LoadProfile p;
  p.step_minutes = step_min;
  p.loads_kw = std::move(loads);
  return p;
}

}  // namespace

TEST_CASE("fnv1a reference vectors") {
  CHECK(fnv1a_hash("") == 14695981039346656037ULL);
  CHECK(fnv1a_hash("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a_hash("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("comparison on a flat full-capacity profile is all ties") {
  const Fleet fleet = testutil::table1_fleet();
  const LoadProfile p = make_profile({9237.0, 9237.0, 9237.0, 9237.0});
  const ComparisonReport r = compare(fleet, p);
  CHECK(r.worst_fixed_kw == doctest::Approx(1539.0));
  CHECK(r.best_fixed_kw == doctest::Approx(1539.0));
  CHECK(r.static_kw == doctest::Approx(1539.0));
  CHECK(r.optimal_shift_kw == doctest::Approx(1539.0));
  CHECK(r.online_shift_kw == doctest::Approx(1539.0));
  CHECK(r.optimal_shift_savings_pct == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("comparison on a varied profile keeps the dominance chain") {
  const Fleet fleet = testutil::table1_fleet();
  std::vector<double> loads;
  for (int k = 0; k < 12; ++k) loads.push_back(k % 2 ? 4400.0 : 1900.0);
  const LoadProfile p = make_profile(std::move(loads));
  ShiftOptions opts;
  opts.surplus_step_kw = 25.0;
  const ComparisonReport r = compare(fleet, p, opts);
  CHECK(r.worst_fixed_kw >= r.best_fixed_kw - r.tolerance_kw);
  CHECK(r.best_fixed_kw >= r.static_kw - r.tolerance_kw);
  CHECK(r.static_kw >= r.optimal_shift_kw - r.tolerance_kw);
  CHECK(r.online_shift_kw >= r.optimal_shift_kw - r.tolerance_kw);
  CHECK(r.optimal_shift_savings_pct >= -1e-9);
  // Steepest power slope in the fleet is C4's 313/2067.
  CHECK(r.tolerance_kw ==
        doctest::Approx(1e-6 + 25.0 * 313.0 / 2067.0).epsilon(1e-9));

  const ComparisonReport again = compare(fleet, p, opts);
  CHECK(report_to_json(again) == report_to_json(r));
}

TEST_CASE("report JSON is well formed") {
  const Fleet fleet = testutil::table1_fleet();
  const LoadProfile p = make_profile({3100.0, 500.0, 2600.0, 1200.0});
  ShiftOptions opts;
  opts.surplus_step_kw = 10.0;
  const ComparisonReport r = compare(fleet, p, opts);
  const nlohmann::json j = nlohmann::json::parse(report_to_json(r));
  CHECK(j.at("schema_version").get<int>() == 1);
  CHECK(j.at("methods_avg_kw").at("static").get<double>() ==
        doctest::Approx(r.static_kw));
  CHECK(j.at("methods_avg_kw").at("online_shift").get<double>() ==
        doctest::Approx(r.online_shift_kw));
  CHECK(j.at("savings_vs_static_pct").at("optimal_shift").get<double>() ==
        doctest::Approx(r.optimal_shift_savings_pct));
  const std::string fh = j.at("fleet_hash").get<std::string>();
  CHECK(fh.substr(0, 6) == "fnv1a:");
  CHECK(fh.size() == 6 + 16);
}

TEST_CASE("report CSV carries one metric per row") {
  const Fleet fleet = testutil::table1_fleet();
  const LoadProfile p = make_profile({2000.0, 2000.0});
  const ComparisonReport r = compare(fleet, p);
  const std::string csv = report_to_csv(r);
  CHECK(csv.rfind("metric,value\n", 0) == 0);
  CHECK(csv.find("worst_fixed_kw,") != std::string::npos);
  CHECK(csv.find("optimal_shift_savings_pct,") != std::string::npos);
  CHECK(csv.find("profile_hash,fnv1a:") != std::string::npos);
  int rows = 0;
  for (char c : csv)
    if (c == '\n') ++rows;
  CHECK(rows == 11);
}

TEST_CASE("hashes fingerprint their inputs") {
  const Fleet fleet = testutil::table1_fleet();
  const LoadProfile p1 = make_profile({1000.0, 2000.0});
  const LoadProfile p2 = make_profile({1000.0, 2001.0});
  const ComparisonReport r1 = compare(fleet, p1);
  const ComparisonReport r2 = compare(fleet, p2);
  CHECK(r1.fleet_hash == r2.fleet_hash);
  CHECK(r1.profile_hash != r2.profile_hash);
}
