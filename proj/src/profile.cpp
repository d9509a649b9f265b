#include "coldseq/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "text_util.hpp"

namespace coldseq {

using detail::append_shortest;
using detail::parse_double;

namespace {

constexpr double kStepTolMin = 1e-6;

[[noreturn]] void bad_row(const std::string& origin, long row,
                          const std::string& what) {
  std::ostringstream msg;
  msg << origin << ", row " << row << ": " << what;
  throw parse_error(msg.str(), row);
}

// Days since 1970-01-01 for a civil date (proleptic Gregorian).
long long civil_days(long long y, unsigned m, unsigned d) {
  y -= m <= 2;
  const long long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long long>(doe) - 719468;
}

// "YYYY-MM-DD HH:MM[:SS]" or with 'T' separator, to minutes since epoch.
bool parse_timestamp_minutes(const std::string& s, double& out) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
  char sep = 0;
  const int n =
      std::sscanf(s.c_str(), "%d-%d-%d%c%d:%d:%d", &y, &mo, &d, &sep, &h, &mi,
                  &sec);
  if (n < 6 || (sep != ' ' && sep != 'T')) return false;
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 ||
      mi > 59 || sec < 0 || sec > 59)
    return false;
  out = static_cast<double>(civil_days(y, mo, d)) * 1440.0 + h * 60.0 + mi +
        sec / 60.0;
  return true;
}

}  // namespace

LoadProfile profile_from_csv_text(const std::string& text,
                                  const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  long row = 0;
  std::vector<double> minutes;
  std::vector<long> file_rows;
  LoadProfile p;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      bad_row(origin, row, "expected two comma-separated columns");
    const std::string first = line.substr(0, comma);
    const std::string second = line.substr(comma + 1);
    double t = 0.0, load = 0.0;
    if (!parse_double(first, t) && !parse_timestamp_minutes(first, t)) {
      // A header line is allowed before the first data row.
      if (minutes.empty()) continue;
      bad_row(origin, row,
              "first column is neither a minutes offset nor a timestamp");
    }
    if (!parse_double(second, load))
      bad_row(origin, row, "load column is not a number");
    if (!std::isfinite(load) || load < 0.0)
      bad_row(origin, row, "load must be finite and nonnegative");
    minutes.push_back(t);
    file_rows.push_back(row);
    p.loads_kw.push_back(load);
  }
  if (p.loads_kw.empty()) {
    std::ostringstream msg;
    msg << origin << ": no data rows";
    throw parse_error(msg.str());
  }
  if (p.loads_kw.size() == 1) {
    p.step_minutes = 1.0;
    return p;
  }
  const double step = minutes[1] - minutes[0];
  if (!(step > kStepTolMin)) {
    std::ostringstream msg;
    msg << origin << ": time column must be strictly increasing";
    throw parse_error(msg.str());
  }
  for (std::size_t i = 1; i < minutes.size(); ++i) {
    if (std::abs(minutes[i] - minutes[i - 1] - step) > kStepTolMin) {
      bad_row(origin, file_rows[i],
              "nonuniform time step (profiles must be evenly sampled)");
    }
  }
  p.step_minutes = step;
  return p;
}

LoadProfile load_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::ostringstream msg;
    msg << "cannot open profile file " << path;
    throw parse_error(msg.str());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return profile_from_csv_text(buf.str(), path);
}

std::string profile_to_csv_text(const LoadProfile& profile) {
  std::string out = "stage_or_timestamp,load_kw\n";
  for (std::size_t i = 0; i < profile.loads_kw.size(); ++i) {
    append_shortest(out, static_cast<double>(i) * profile.step_minutes);
    out.push_back(',');
    append_shortest(out, profile.loads_kw[i]);
    out.push_back('\n');
  }
  return out;
}

void save_profile_csv(const LoadProfile& profile, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    std::ostringstream msg;
    msg << "cannot write profile file " << path;
    throw parse_error(msg.str());
  }
  out << profile_to_csv_text(profile);
  if (!out) {
    std::ostringstream msg;
    msg << "short write to " << path;
    throw parse_error(msg.str());
  }
}

LoadProfile moving_average(const LoadProfile& profile, double window_minutes) {
  if (window_minutes + 1e-9 < profile.step_minutes) {
    std::ostringstream msg;
    msg << "moving-average window " << window_minutes
        << " min is shorter than the profile step " << profile.step_minutes
        << " min";
    throw parse_error(msg.str());
  }
  const long long w =
      std::max<long long>(1, std::llround(window_minutes /
                                          profile.step_minutes));
  const long long n = static_cast<long long>(profile.loads_kw.size());
  LoadProfile out;
  out.step_minutes = profile.step_minutes;
  out.loads_kw.resize(profile.loads_kw.size());
  std::vector<double> prefix(n + 1, 0.0);
  for (long long i = 0; i < n; ++i)
    prefix[i + 1] = prefix[i] + profile.loads_kw[i];
  for (long long i = 0; i < n; ++i) {
    const long long lo = std::max<long long>(0, i - (w - 1) / 2);
    const long long hi = std::min(n - 1, i + w / 2);
    out.loads_kw[i] = (prefix[hi + 1] - prefix[lo]) / (hi - lo + 1);
  }
  return out;
}

double mean_load(const LoadProfile& profile) {
  if (profile.loads_kw.empty()) return 0.0;
  double s = 0.0;
  for (double x : profile.loads_kw) s += x;
  return s / profile.loads_kw.size();
}

ProfileSpec profile_spec_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    std::ostringstream msg;
    msg << "profile spec JSON: " << e.what();
    throw parse_error(msg.str());
  }
  ProfileSpec s;
  try {
    s.horizon_days = j.at("horizon_days").get<int>();
    s.step_minutes = j.at("step_minutes").get<double>();
    s.weekday_peak_kw = j.at("weekday_peak_kw").get<double>();
    s.weekday_base_kw = j.at("weekday_base_kw").get<double>();
    s.weekend_plateau_kw = j.at("weekend_plateau_kw").get<double>();
    s.work_start_hour = j.at("work_start_hour").get<double>();
    s.work_end_hour = j.at("work_end_hour").get<double>();
    s.noise_std_kw = j.value("noise_std_kw", 0.0);
    s.seed = j.value("seed", std::uint64_t{0});
  } catch (const nlohmann::json::exception& ex) {
    std::ostringstream msg;
    msg << "profile spec JSON: " << ex.what();
    throw parse_error(msg.str());
  }
  std::ostringstream msg;
  if (s.horizon_days < 1) {
    msg << "profile spec: horizon_days must be at least 1, got "
        << s.horizon_days;
    throw parse_error(msg.str());
  }
  if (!(s.step_minutes > 0.0) ||
      std::abs(1440.0 / s.step_minutes -
               std::llround(1440.0 / s.step_minutes)) > 1e-9) {
    msg << "profile spec: step_minutes must divide a day, got "
        << s.step_minutes;
    throw parse_error(msg.str());
  }
  if (s.weekday_base_kw < 0.0 || s.weekday_peak_kw < s.weekday_base_kw) {
    msg << "profile spec: require 0 <= weekday_base_kw <= weekday_peak_kw";
    throw parse_error(msg.str());
  }
  if (s.weekend_plateau_kw < 0.0) {
    msg << "profile spec: weekend_plateau_kw must be nonnegative";
    throw parse_error(msg.str());
  }
  if (s.work_start_hour < 0.0 || s.work_end_hour > 24.0 ||
      !(s.work_start_hour < s.work_end_hour)) {
    msg << "profile spec: require 0 <= work_start_hour < work_end_hour <= 24";
    throw parse_error(msg.str());
  }
  if (s.noise_std_kw < 0.0) {
    msg << "profile spec: noise_std_kw must be nonnegative";
    throw parse_error(msg.str());
  }
  return s;
}

LoadProfile synth_profile(const ProfileSpec& spec) {
  LoadProfile p;
  p.step_minutes = spec.step_minutes;
  const long long per_day = std::llround(1440.0 / spec.step_minutes);
  const long long n = per_day * spec.horizon_days;
  p.loads_kw.reserve(n);
  std::mt19937_64 rng(spec.seed);
  // Box-Muller keeps the stream identical across standard libraries.
  const auto gauss = [&rng]() {
    const double u1 =
        (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    const double u2 =
        (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
  };
  for (long long k = 0; k < n; ++k) {
    const long long day = k / per_day;
    const int weekday = static_cast<int>(day % 7);  // day 0 is a Monday
    const double hour =
        static_cast<double>(k % per_day) * spec.step_minutes / 60.0;
    double level;
    if (weekday >= 5) {
      level = spec.weekend_plateau_kw;
    } else if (hour >= spec.work_start_hour && hour < spec.work_end_hour) {
      level = spec.weekday_peak_kw;
    } else {
      level = spec.weekday_base_kw;
    }
    if (spec.noise_std_kw > 0.0) level += spec.noise_std_kw * gauss();
    p.loads_kw.push_back(std::max(0.0, level));
  }
  return p;
}

}  // namespace coldseq
