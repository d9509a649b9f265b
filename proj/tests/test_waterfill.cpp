#include <doctest.h>

#include <random>

#include "coldseq/waterfill.hpp"
#include "testutil.hpp"

using namespace coldseq;

TEST_CASE("fleet aggregates") {
  const Fleet fleet = testutil::table1_fleet();
  CHECK(total_capacity(fleet) == 9237.0);
  CHECK(min_turn_on(fleet) == 165.0);
}

TEST_CASE("waterfill splits 3100 kW as 2861 + 239") {
  const Fleet fleet = testutil::table1_fleet();
  const Assignment a = waterfill(fleet, shift_order(fleet), 3100.0);
  CHECK(a.loads_kw == std::vector<double>{2861.0, 239.0, 0.0, 0.0});
  // P_C1(2861) + P_C2(239) = 255.1 + 173 = 428.1.
  CHECK(assignment_cost(fleet, a) == doctest::Approx(428.1).epsilon(1e-12));
}

TEST_CASE("waterfill keeps a full machine full when the next is at minimum") {
  const Fleet fleet = testutil::table1_fleet();
  // 5126 = 3000 + 2126: second machine lands exactly at its capacity.
  const Assignment a = waterfill(fleet, shift_order(fleet), 5126.0);
  CHECK(a.loads_kw == std::vector<double>{3000.0, 2126.0, 0.0, 0.0});
}

TEST_CASE("waterfill at zero demand leaves everything off") {
  const Fleet fleet = testutil::table1_fleet();
  const Assignment a = waterfill(fleet, shift_order(fleet), 0.0);
  CHECK(a.loads_kw == std::vector<double>{0.0, 0.0, 0.0, 0.0});
  CHECK(assignment_cost(fleet, a) == 0.0);
}

TEST_CASE("waterfill at total capacity runs everything full") {
  const Fleet fleet = testutil::table1_fleet();
  const Assignment a = waterfill(fleet, shift_order(fleet), 9237.0);
  CHECK(a.loads_kw == std::vector<double>{3000.0, 2126.0, 1760.0, 2351.0});
  CHECK(assignment_cost(fleet, a) == doctest::Approx(1539.0));
}

TEST_CASE("small demands overdeliver at the first machine's minimum") {
  const Fleet fleet = testutil::table1_fleet();
  const Assignment a = waterfill(fleet, shift_order(fleet), 100.0);
  CHECK(a.loads_kw == std::vector<double>{220.0, 0.0, 0.0, 0.0});
}

TEST_CASE("waterfill honours an explicit order") {
  const Fleet fleet = testutil::table1_fleet();
  const SequencingOrder order{{"C4", "C2", "C3", "C1"}};
  const Assignment a = waterfill(fleet, order, 2400.0);
  // C4 runs full in pass one, then is trimmed back while C2 idles at minimum.
  CHECK(a.loads_kw == std::vector<double>{0.0, 239.0, 0.0, 2161.0});
  CHECK(assignment_cost(fleet, a) == doctest::Approx(638.228834).epsilon(1e-9));
}

TEST_CASE("waterfill rejects demand above capacity with the shortfall") {
  const Fleet fleet = testutil::table1_fleet();
  try {
    waterfill(fleet, shift_order(fleet), 10000.0);
    FAIL("expected infeasible_error");
  } catch (const infeasible_error& e) {
    CHECK(e.shortfall_kw == doctest::Approx(763.0));
  }
  CHECK_THROWS_AS(waterfill(fleet, shift_order(fleet), -1.0),
                  infeasible_error);
}

TEST_CASE("waterfill validates the order") {
  const Fleet fleet = testutil::table1_fleet();
  CHECK_THROWS_AS(waterfill(fleet, SequencingOrder{{"C1", "C2"}}, 500.0),
                  parse_error);
  CHECK_THROWS_AS(
      waterfill(fleet, SequencingOrder{{"C1", "C1", "C2", "C3"}}, 500.0),
      parse_error);
  CHECK_THROWS_AS(
      waterfill(fleet, SequencingOrder{{"C1", "C2", "C3", "C9"}}, 500.0),
      parse_error);
}

TEST_CASE("assignment_cost validates the assignment size") {
  const Fleet fleet = testutil::table1_fleet();
  CHECK_THROWS_AS(assignment_cost(fleet, Assignment{{0.0, 0.0}}), parse_error);
}

TEST_CASE("random waterfills deliver at least the demand, loads in window") {
  std::mt19937_64 rng(20260815);
  for (int trial = 0; trial < 200; ++trial) {
    const Fleet fleet =
        testutil::random_integer_fleet(rng, testutil::randint(rng, 1, 5));
    const double cap = total_capacity(fleet);
    std::vector<std::string> ids;
    for (const auto& c : fleet.compressors()) ids.push_back(c.id);
    std::shuffle(ids.begin(), ids.end(), rng);
    const double q_in =
        static_cast<double>(testutil::randint(rng, 0, (long long)cap));
    const Assignment a = waterfill(fleet, SequencingOrder{ids}, q_in);
    double total = 0.0;
    for (std::size_t i = 0; i < fleet.size(); ++i) {
      const Compressor& c = fleet.compressors()[i];
      const double q = a.loads_kw[i];
      const bool off = q == 0.0;
      const bool in_window =
          q >= c.q_min_kw - 1e-6 && q <= c.q_max_kw + 1e-6;
      CHECK((off || in_window));
      total += q;
    }
    CHECK(total >= q_in - 1e-6);
  }
}
