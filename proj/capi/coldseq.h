#ifndef COLDSEQ_H
#define COLDSEQ_H

/* C interface to the compressor-sequencing library. All objects are
 * opaque handles created and destroyed here; every fallible call returns
 * a coldseq_status, and coldseq_last_error() describes the most recent
 * failure on the calling thread. Strings returned through char** are
 * heap-allocated and must be released with coldseq_string_free(). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum coldseq_status {
  COLDSEQ_OK = 0,
  COLDSEQ_ERR_INVALID = 1,    /* bad argument (null handle, bad flag) */
  COLDSEQ_ERR_INFEASIBLE = 2, /* demand the fleet or plan cannot meet */
  COLDSEQ_ERR_PARSE = 3,      /* unreadable file or malformed content */
  COLDSEQ_ERR_RESOURCE = 4,   /* request exceeds a built-in size guard */
  COLDSEQ_ERR_INTERNAL = 5    /* invariant violation; report a bug */
} coldseq_status;

typedef struct coldseq_fleet coldseq_fleet;
typedef struct coldseq_profile coldseq_profile;
typedef struct coldseq_plan coldseq_plan;

/* Message for the calling thread's most recent failure; empty if none. The
 * pointer stays valid until the next library call on this thread. */
const char* coldseq_last_error(void);

void coldseq_string_free(char* text);

/* ---------- fleet ---------- */

coldseq_status coldseq_fleet_load(const char* path, coldseq_fleet** out);
coldseq_status coldseq_fleet_parse(const char* json_text,
                                   coldseq_fleet** out);
coldseq_status coldseq_fleet_dump(const coldseq_fleet* fleet,
                                  char** out_json);
coldseq_status coldseq_fleet_capacity(const coldseq_fleet* fleet,
                                      double* out_kw);
void coldseq_fleet_free(coldseq_fleet* fleet);

/* ---------- load profiles ---------- */

coldseq_status coldseq_profile_load(const char* path, coldseq_profile** out);
coldseq_status coldseq_profile_parse(const char* csv_text,
                                     coldseq_profile** out);
coldseq_status coldseq_profile_dump(const coldseq_profile* profile,
                                    char** out_csv);
/* Builds a synthetic profile from a JSON spec. seed_override >= 0 replaces
 * the spec's seed. */
coldseq_status coldseq_profile_synth(const char* spec_json,
                                     long long seed_override,
                                     coldseq_profile** out);
coldseq_status coldseq_profile_moving_average(const coldseq_profile* profile,
                                              double window_minutes,
                                              coldseq_profile** out);
coldseq_status coldseq_profile_mean(const coldseq_profile* profile,
                                    double* out_kw);
void coldseq_profile_free(coldseq_profile* profile);

/* ---------- single-stage sequencing ---------- */

/* Water-fill dispatch of q_in_kw under the given bring-up order
 * ("C1,C2,..."); order NULL or empty uses the fleet's efficiency order.
 * Output lists per-machine loads and powers plus totals. */
coldseq_status coldseq_sequence_json(const coldseq_fleet* fleet,
                                     const char* order, double q_in_kw,
                                     char** out);
coldseq_status coldseq_sequence_csv(const coldseq_fleet* fleet,
                                    const char* order, double q_in_kw,
                                    char** out);

/* Minimum-power dispatch over all orders; output includes the realizing
 * order. */
coldseq_status coldseq_optimal_sequence_json(const coldseq_fleet* fleet,
                                             double q_in_kw, char** out);
coldseq_status coldseq_optimal_sequence_csv(const coldseq_fleet* fleet,
                                            double q_in_kw, char** out);

/* Fleet-wide savings bound: worst minimum-capacity power rate vs best
 * full-capacity power rate. */
coldseq_status coldseq_bounds_json(const coldseq_fleet* fleet, char** out);
coldseq_status coldseq_bounds_csv(const coldseq_fleet* fleet, char** out);

/* Demand intervals on [lo, hi] (sampled every step) sharing the order that
 * realizes the static optimum. */
coldseq_status coldseq_partition_json(const coldseq_fleet* fleet,
                                      double lo_kw, double hi_kw,
                                      double step_kw, char** out);
coldseq_status coldseq_partition_csv(const coldseq_fleet* fleet,
                                     double lo_kw, double hi_kw,
                                     double step_kw, char** out);

/* Best and worst fixed-order cost at each sampled demand, with the largest
 * relative gap. */
coldseq_status coldseq_gap_sweep_json(const coldseq_fleet* fleet,
                                      double lo_kw, double hi_kw,
                                      double step_kw, char** out);
coldseq_status coldseq_gap_sweep_csv(const coldseq_fleet* fleet,
                                     double lo_kw, double hi_kw,
                                     double step_kw, char** out);

/* ---------- load shifting ---------- */

typedef struct coldseq_shift_options {
  double surplus_step_kw;   /* surplus-grid resolution, default 1 */
  double surplus_cap_hours; /* carried surplus cap, hours of full-fleet
                               output, default 24 */
  double max_table_cells;   /* planner table guard, default 1.2e8 */
} coldseq_shift_options;

void coldseq_shift_options_init(coldseq_shift_options* opts);

coldseq_status coldseq_optimal_shift(const coldseq_fleet* fleet,
                                     const coldseq_profile* profile,
                                     const coldseq_shift_options* opts,
                                     coldseq_plan** out);
coldseq_status coldseq_static_trajectory(const coldseq_fleet* fleet,
                                         const coldseq_profile* profile,
                                         coldseq_plan** out);
/* mean_kw < 0 uses the profile mean. */
coldseq_status coldseq_online_shift(const coldseq_fleet* fleet,
                                    const coldseq_profile* profile,
                                    double mean_kw, coldseq_plan** out);
/* (static avg power - shifted avg power) / shifted avg power; +inf when
 * shifting reaches zero power on a nonzero-power static plan. */
coldseq_status coldseq_savings_gap(const coldseq_fleet* fleet,
                                   const coldseq_profile* profile,
                                   const coldseq_shift_options* opts,
                                   double* out_gap);

coldseq_status coldseq_plan_dump_csv(const coldseq_fleet* fleet,
                                     const coldseq_plan* plan, char** out);
coldseq_status coldseq_plan_load_csv(const coldseq_fleet* fleet,
                                     const char* path, coldseq_plan** out);
coldseq_status coldseq_plan_avg_power(const coldseq_plan* plan,
                                      double* out_kw);
/* Verifies per-stage service, cumulative-cooling dominance, and the stated
 * average power; violations return COLDSEQ_ERR_INTERNAL. */
coldseq_status coldseq_plan_check(const coldseq_fleet* fleet,
                                  const coldseq_plan* plan);
void coldseq_plan_free(coldseq_plan* plan);

/* Fraction of stages each compressor spends off, trimmed, or above 99% of
 * full capacity. */
coldseq_status coldseq_capacity_distribution_json(const coldseq_fleet* fleet,
                                                  const coldseq_plan* plan,
                                                  char** out);
coldseq_status coldseq_capacity_distribution_csv(const coldseq_fleet* fleet,
                                                 const coldseq_plan* plan,
                                                 char** out);

/* ---------- method comparison ---------- */

/* Average power of worst fixed order, best fixed order, static optimum,
 * optimal shift, and online shift, plus savings vs the static baseline.
 * opts NULL uses defaults; mean_kw < 0 uses the profile mean. */
coldseq_status coldseq_compare_json(const coldseq_fleet* fleet,
                                    const coldseq_profile* profile,
                                    const coldseq_shift_options* opts,
                                    double mean_kw, char** out);
coldseq_status coldseq_compare_csv(const coldseq_fleet* fleet,
                                   const coldseq_profile* profile,
                                   const coldseq_shift_options* opts,
                                   double mean_kw, char** out);

#ifdef __cplusplus
}
#endif

#endif /* COLDSEQ_H */
