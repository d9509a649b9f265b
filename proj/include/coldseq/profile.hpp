#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coldseq/errors.hpp"

namespace coldseq {

// Uniformly sampled cooling-load series (kW per stage).
struct LoadProfile {
  double step_minutes = 1.0;
  std::vector<double> loads_kw;
};

// CSV with header "stage_or_timestamp,load_kw". The first column is either
// a numeric minutes offset or a timestamp "YYYY-MM-DD HH:MM[:SS]" (a 'T'
// separator also works); the step is inferred from consecutive rows and
// must be uniform. Loads must be finite and nonnegative.
LoadProfile load_profile_csv(const std::string& path);
LoadProfile profile_from_csv_text(const std::string& text,
                                  const std::string& origin = "profile CSV");

// Writes header plus "minutes_offset,load_kw" rows with shortest
// round-trip number formatting, so save then load reproduces the profile
// exactly.
void save_profile_csv(const LoadProfile& profile, const std::string& path);
std::string profile_to_csv_text(const LoadProfile& profile);

// Centered moving average over a time window. The window is converted to
// whole stages (window_minutes / step, rounded); even windows take one
// extra stage to the right. Truncated at the ends.
LoadProfile moving_average(const LoadProfile& profile, double window_minutes);

double mean_load(const LoadProfile& profile);

// Recipe for a synthetic plant-load profile: weekday workday plateau at
// peak, nights and early mornings at base, weekends flat, plus Gaussian
// noise (clipped at zero). Day 0 is a Monday.
struct ProfileSpec {
  int horizon_days = 7;
  double step_minutes = 15.0;
  double weekday_peak_kw = 0.0;
  double weekday_base_kw = 0.0;
  double weekend_plateau_kw = 0.0;
  double work_start_hour = 6.0;
  double work_end_hour = 18.0;
  double noise_std_kw = 0.0;
  std::uint64_t seed = 0;
};

ProfileSpec profile_spec_from_json(const std::string& json_text);
LoadProfile synth_profile(const ProfileSpec& spec);

}  // namespace coldseq
