// Command-line front end for the compressor-sequencing library. Talks to
// the engine exclusively through the C API in coldseq.h.

#include "coldseq.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace {

void log_line(const char* fmt, const std::string& arg = {}) {
  const char* v = std::getenv("COLDSEQ_LOG");
  if (!v || !*v) return;
  std::fprintf(stderr, "[coldseq] ");
  std::fprintf(stderr, fmt, arg.c_str());
  std::fprintf(stderr, "\n");
}

int exit_code(coldseq_status st) {
  switch (st) {
    case COLDSEQ_OK:
      return 0;
    case COLDSEQ_ERR_INFEASIBLE:
      return 2;
    case COLDSEQ_ERR_PARSE:
      return 3;
    case COLDSEQ_ERR_INVALID:
    case COLDSEQ_ERR_RESOURCE:
    case COLDSEQ_ERR_INTERNAL:
      return 1;
  }
  return 1;
}

int fail(coldseq_status st) {
  std::fprintf(stderr, "error: %s\n", coldseq_last_error());
  return exit_code(st);
}

// Writes text to the --out path, or stdout when no path was given.
int emit(const char* text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text, stdout);
    return 0;
  }
  std::FILE* f = std::fopen(out_path.c_str(), "wb");
  if (!f) {
    std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
    return 3;
  }
  const std::size_t len = std::strlen(text);
  const std::size_t wrote = std::fwrite(text, 1, len, f);
  const bool closed = std::fclose(f) == 0;
  if (wrote != len || !closed) {
    std::fprintf(stderr, "error: short write to %s\n", out_path.c_str());
    return 3;
  }
  log_line("wrote %s", out_path);
  return 0;
}

struct FleetHandle {
  coldseq_fleet* ptr = nullptr;
  ~FleetHandle() { coldseq_fleet_free(ptr); }
};
struct ProfileHandle {
  coldseq_profile* ptr = nullptr;
  ~ProfileHandle() { coldseq_profile_free(ptr); }
};
struct PlanHandle {
  coldseq_plan* ptr = nullptr;
  ~PlanHandle() { coldseq_plan_free(ptr); }
};
struct TextHandle {
  char* ptr = nullptr;
  ~TextHandle() { coldseq_string_free(ptr); }
};

int load_fleet(const std::string& path, FleetHandle& fleet) {
  const coldseq_status st = coldseq_fleet_load(path.c_str(), &fleet.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  log_line("loaded fleet %s", path);
  return 0;
}

int load_profile(const std::string& path, ProfileHandle& profile) {
  const coldseq_status st = coldseq_profile_load(path.c_str(), &profile.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  log_line("loaded profile %s", path);
  return 0;
}

int read_file(const std::string& path, std::string& out) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) {
    std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
    return 3;
  }
  char buf[1 << 14];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  const bool bad = std::ferror(f) != 0;
  std::fclose(f);
  if (bad) {
    std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
    return 3;
  }
  return 0;
}

struct ShiftFlags {
  double surplus_step_kw = 1.0;
  double surplus_cap_hours = 24.0;

  coldseq_shift_options options() const {
    coldseq_shift_options opts;
    coldseq_shift_options_init(&opts);
    opts.surplus_step_kw = surplus_step_kw;
    opts.surplus_cap_hours = surplus_cap_hours;
    return opts;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--surplus-step", surplus_step_kw,
                    "Surplus grid resolution in kW (default 1)");
    cmd->add_option("--surplus-cap-hours", surplus_cap_hours,
                    "Carried-surplus cap in hours of full-fleet output "
                    "(default 24)");
  }
};

int run_compare(const std::string& fleet_path,
                const std::string& profile_path, const ShiftFlags& flags,
                double mean, const std::string& format,
                const std::string& out_path) {
  FleetHandle fleet;
  ProfileHandle profile;
  if (int rc = load_fleet(fleet_path, fleet)) return rc;
  if (int rc = load_profile(profile_path, profile)) return rc;
  const coldseq_shift_options opts = flags.options();
  TextHandle text;
  const coldseq_status st =
      format == "csv"
          ? coldseq_compare_csv(fleet.ptr, profile.ptr, &opts, mean,
                                &text.ptr)
          : coldseq_compare_json(fleet.ptr, profile.ptr, &opts, mean,
                                 &text.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  return emit(text.ptr, out_path);
}

int run_sequence(const std::string& fleet_path, double q_in, bool optimal,
                 const std::string& order, const std::string& format,
                 const std::string& out_path) {
  FleetHandle fleet;
  if (int rc = load_fleet(fleet_path, fleet)) return rc;
  TextHandle text;
  coldseq_status st;
  if (optimal) {
    st = format == "csv"
             ? coldseq_optimal_sequence_csv(fleet.ptr, q_in, &text.ptr)
             : coldseq_optimal_sequence_json(fleet.ptr, q_in, &text.ptr);
  } else {
    const char* order_arg = order.empty() ? nullptr : order.c_str();
    st = format == "csv"
             ? coldseq_sequence_csv(fleet.ptr, order_arg, q_in, &text.ptr)
             : coldseq_sequence_json(fleet.ptr, order_arg, q_in, &text.ptr);
  }
  if (st != COLDSEQ_OK) return fail(st);
  return emit(text.ptr, out_path);
}

int run_shift(const std::string& fleet_path, const std::string& profile_path,
              const ShiftFlags& flags, const std::string& out_path) {
  FleetHandle fleet;
  ProfileHandle profile;
  if (int rc = load_fleet(fleet_path, fleet)) return rc;
  if (int rc = load_profile(profile_path, profile)) return rc;
  const coldseq_shift_options opts = flags.options();
  PlanHandle plan;
  coldseq_status st =
      coldseq_optimal_shift(fleet.ptr, profile.ptr, &opts, &plan.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  TextHandle text;
  st = coldseq_plan_dump_csv(fleet.ptr, plan.ptr, &text.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  return emit(text.ptr, out_path);
}

int run_online(const std::string& fleet_path,
               const std::string& profile_path, double mean,
               const std::string& out_path) {
  FleetHandle fleet;
  ProfileHandle profile;
  if (int rc = load_fleet(fleet_path, fleet)) return rc;
  if (int rc = load_profile(profile_path, profile)) return rc;
  PlanHandle plan;
  coldseq_status st =
      coldseq_online_shift(fleet.ptr, profile.ptr, mean, &plan.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  TextHandle text;
  st = coldseq_plan_dump_csv(fleet.ptr, plan.ptr, &text.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  return emit(text.ptr, out_path);
}

int run_bounds(const std::string& fleet_path, const std::string& format,
               const std::string& out_path) {
  FleetHandle fleet;
  if (int rc = load_fleet(fleet_path, fleet)) return rc;
  TextHandle text;
  const coldseq_status st = format == "csv"
                                ? coldseq_bounds_csv(fleet.ptr, &text.ptr)
                                : coldseq_bounds_json(fleet.ptr, &text.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  return emit(text.ptr, out_path);
}

int run_partition(const std::string& fleet_path, double lo, double hi,
                  double step, const std::string& format,
                  const std::string& out_path) {
  FleetHandle fleet;
  if (int rc = load_fleet(fleet_path, fleet)) return rc;
  TextHandle text;
  const coldseq_status st =
      format == "csv"
          ? coldseq_partition_csv(fleet.ptr, lo, hi, step, &text.ptr)
          : coldseq_partition_json(fleet.ptr, lo, hi, step, &text.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  return emit(text.ptr, out_path);
}

int run_gap(const std::string& fleet_path, double lo, double hi, double step,
            const std::string& format, const std::string& out_path) {
  FleetHandle fleet;
  if (int rc = load_fleet(fleet_path, fleet)) return rc;
  TextHandle text;
  const coldseq_status st =
      format == "csv"
          ? coldseq_gap_sweep_csv(fleet.ptr, lo, hi, step, &text.ptr)
          : coldseq_gap_sweep_json(fleet.ptr, lo, hi, step, &text.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  return emit(text.ptr, out_path);
}

int run_gen(const std::string& spec_path, long long seed,
            const std::string& out_path) {
  std::string spec_json;
  if (int rc = read_file(spec_path, spec_json)) return rc;
  ProfileHandle profile;
  coldseq_status st =
      coldseq_profile_synth(spec_json.c_str(), seed, &profile.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  TextHandle text;
  st = coldseq_profile_dump(profile.ptr, &text.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  return emit(text.ptr, out_path);
}

int run_cdf(const std::string& fleet_path, const std::string& plan_path,
            const std::string& format, const std::string& out_path) {
  FleetHandle fleet;
  if (int rc = load_fleet(fleet_path, fleet)) return rc;
  PlanHandle plan;
  coldseq_status st =
      coldseq_plan_load_csv(fleet.ptr, plan_path.c_str(), &plan.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  TextHandle text;
  st = format == "csv" ? coldseq_capacity_distribution_csv(fleet.ptr,
                                                           plan.ptr, &text.ptr)
                       : coldseq_capacity_distribution_json(
                             fleet.ptr, plan.ptr, &text.ptr);
  if (st != COLDSEQ_OK) return fail(st);
  return emit(text.ptr, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Compressor sequencing and load shifting for industrial "
      "refrigeration fleets"};
  app.require_subcommand(1);

  std::string fleet_path, profile_path, out_path, order, spec_path,
      plan_path;
  std::string format = "json";
  double q_in = 0.0, lo = 0.0, hi = 0.0, step = 1.0, mean = -1.0;
  bool optimal = false;
  long long seed = -1;
  ShiftFlags shift_flags;
  int rc = 0;

  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  const auto add_out = [&out_path](CLI::App* cmd) {
    cmd->add_option("--out", out_path,
                    "Write output to this path instead of stdout");
  };

  CLI::App* compare = app.add_subcommand(
      "compare", "Average power of all five dispatch methods on a profile");
  compare->add_option("--fleet", fleet_path, "Fleet JSON file")->required();
  compare->add_option("--profile", profile_path, "Load profile CSV")
      ->required();
  compare->add_option("--mean", mean,
                      "Mean load the online dispatcher assumes (kW)");
  shift_flags.attach(compare);
  add_format(compare);
  add_out(compare);
  compare->callback([&] {
    rc = run_compare(fleet_path, profile_path, shift_flags, mean, format,
                     out_path);
  });

  CLI::App* sequence = app.add_subcommand(
      "sequence", "Dispatch one demand across the fleet");
  sequence->add_option("--fleet", fleet_path, "Fleet JSON file")->required();
  sequence->add_option("--q", q_in, "Cooling demand in kW")->required();
  sequence->add_option(
      "--order", order,
      "Comma-separated bring-up order (default: efficiency order)");
  sequence->add_flag("--optimal", optimal,
                     "Search all orders for the cheapest dispatch");
  add_format(sequence);
  add_out(sequence);
  sequence->callback([&] {
    rc = run_sequence(fleet_path, q_in, optimal, order, format, out_path);
  });

  CLI::App* shift = app.add_subcommand(
      "shift", "Optimal load-shifted dispatch plan (CSV)");
  shift->add_option("--fleet", fleet_path, "Fleet JSON file")->required();
  shift->add_option("--profile", profile_path, "Load profile CSV")
      ->required();
  shift_flags.attach(shift);
  add_out(shift);
  shift->callback(
      [&] { rc = run_shift(fleet_path, profile_path, shift_flags, out_path); });

  CLI::App* online = app.add_subcommand(
      "online", "Greedy real-time dispatch plan (CSV)");
  online->add_option("--fleet", fleet_path, "Fleet JSON file")->required();
  online->add_option("--profile", profile_path, "Load profile CSV")
      ->required();
  online->add_option("--mean", mean,
                     "Mean load the dispatcher assumes (kW); default: "
                     "profile mean");
  add_out(online);
  online->callback(
      [&] { rc = run_online(fleet_path, profile_path, mean, out_path); });

  CLI::App* bounds = app.add_subcommand(
      "bounds", "Fleet-wide load-shifting savings bound");
  bounds->add_option("--fleet", fleet_path, "Fleet JSON file")->required();
  add_format(bounds);
  add_out(bounds);
  bounds->callback([&] { rc = run_bounds(fleet_path, format, out_path); });

  CLI::App* partition = app.add_subcommand(
      "partition", "Demand intervals sharing an optimal bring-up order");
  partition->add_option("--fleet", fleet_path, "Fleet JSON file")
      ->required();
  partition->add_option("--lo", lo, "Sweep start in kW")->required();
  partition->add_option("--hi", hi, "Sweep end in kW")->required();
  partition->add_option("--step", step, "Sweep step in kW (default 1)");
  add_format(partition);
  add_out(partition);
  partition->callback(
      [&] { rc = run_partition(fleet_path, lo, hi, step, format, out_path); });

  CLI::App* gap = app.add_subcommand(
      "gap", "Best vs worst fixed-order cost across a demand sweep");
  gap->add_option("--fleet", fleet_path, "Fleet JSON file")->required();
  gap->add_option("--lo", lo, "Sweep start in kW")->required();
  gap->add_option("--hi", hi, "Sweep end in kW")->required();
  gap->add_option("--step", step, "Sweep step in kW (default 1)");
  add_format(gap);
  add_out(gap);
  gap->callback(
      [&] { rc = run_gap(fleet_path, lo, hi, step, format, out_path); });

  CLI::App* gen = app.add_subcommand(
      "gen", "Synthesize a load profile CSV from a JSON spec");
  gen->add_option("--spec", spec_path, "Profile spec JSON file")->required();
  gen->add_option("--seed", seed, "Override the spec's noise seed");
  add_out(gen);
  gen->callback([&] { rc = run_gen(spec_path, seed, out_path); });

  CLI::App* cdf = app.add_subcommand(
      "cdf", "Off/trim/full time fractions per compressor in a plan");
  cdf->add_option("--fleet", fleet_path, "Fleet JSON file")->required();
  cdf->add_option("--plan", plan_path, "Plan CSV file")->required();
  add_format(cdf);
  add_out(cdf);
  cdf->callback(
      [&] { rc = run_cdf(fleet_path, plan_path, format, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return rc;
}
