#pragma once

#include <random>
#include <string>
#include <vector>

#include "coldseq/fleet.hpp"

namespace testutil {

// Four-machine reference fleet used throughout the tests.
inline coldseq::Fleet table1_fleet() {
  return coldseq::Fleet({{"C1", 220.0, 3000.0, 124.0, 262.0},
                         {"C2", 239.0, 2126.0, 173.0, 427.0},
                         {"C3", 165.0, 1760.0, 142.0, 356.0},
                         {"C4", 284.0, 2351.0, 181.0, 494.0}});
}

inline coldseq::Fleet single_c1_fleet() {
  return coldseq::Fleet({{"C1", 220.0, 3000.0, 124.0, 262.0}});
}

inline long long randint(std::mt19937_64& rng, long long lo, long long hi) {
  std::uniform_int_distribution<long long> dist(lo, hi);
  return dist(rng);
}

// Random fleet with integer parameters. Integer q_min/q_max keep the 1 kW
// grid oracles exact, and p_min is drawn at or above ceil(p_max*q_min/q_max)
// so power per unit cooling never improves toward full load.
inline coldseq::Fleet random_integer_fleet(std::mt19937_64& rng,
                                           int machines,
                                           long long q_max_lo = 200,
                                           long long q_max_hi = 4000) {
  std::vector<coldseq::Compressor> cs;
  for (int i = 0; i < machines; ++i) {
    const long long q_max = randint(rng, q_max_lo, q_max_hi);
    const long long q_min =
        randint(rng, std::max<long long>(1, q_max / 20),
                std::max<long long>(2, q_max / 4));
    const long long p_max =
        randint(rng, std::max<long long>(2, q_max / 20),
                std::max<long long>(3, q_max / 2));
    const long long p_floor = (p_max * q_min + q_max - 1) / q_max;
    const long long p_min =
        randint(rng, std::max<long long>(1, p_floor), p_max);
    cs.push_back({"M" + std::to_string(i + 1), static_cast<double>(q_min),
                  static_cast<double>(q_max), static_cast<double>(p_min),
                  static_cast<double>(p_max)});
  }
  return coldseq::Fleet(cs);
}

}  // namespace testutil
