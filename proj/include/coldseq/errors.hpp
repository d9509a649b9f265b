#pragma once

#include <stdexcept>
#include <string>

namespace coldseq {

// Demand exceeds what the fleet (or plan) can deliver.
class infeasible_error : public std::runtime_error {
 public:
  infeasible_error(const std::string& msg, double shortfall_kw, long stage = -1)
      : std::runtime_error(msg), shortfall_kw(shortfall_kw), stage(stage) {}

  double shortfall_kw = 0.0;
  // Stage index where infeasibility was detected, -1 if not stage-specific.
  long stage = -1;
};

// Malformed input file or JSON payload.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& msg, long row = -1)
      : std::runtime_error(msg), row(row) {}

  // 1-based row number in the offending file, -1 if not row-specific.
  long row = -1;
};

// Requested computation exceeds a built-in size guard.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coldseq
