/*
 * C API for the SS-LbPINN adaptive-control simulator. All state lives behind
 * opaque handles; every call that can fail returns an ss_status, with the
 * message for the most recent failure on the calling thread available from
 * ss_last_error().
 */

#ifndef SSLBPINN_H
#define SSLBPINN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ss_status {
  SS_OK = 0,
  SS_ERR_INVALID_ARGUMENT = 1,
  SS_ERR_PARSE = 2,
  SS_ERR_IO = 3,
  SS_ERR_NUMERIC = 4,
  SS_ERR_INTERNAL = 5
} ss_status;

typedef struct ss_config ss_config;
typedef struct ss_trace ss_trace;
typedef struct ss_report ss_report;

const char* ss_version(void);
/* Message of the last failed call on this thread ("" if none). */
const char* ss_last_error(void);

/* --- configuration ------------------------------------------------- */

ss_status ss_config_create(ss_config** out);                    /* defaults */
ss_status ss_config_load(const char* path, ss_config** out);    /* config file */
ss_status ss_config_set(ss_config* cfg, const char* key, const char* value);
ss_status ss_config_get(const ss_config* cfg, const char* key, char* buf, size_t buf_len);
ss_status ss_config_set_seed(ss_config* cfg, uint64_t seed);
void ss_config_free(ss_config* cfg);

/* --- simulation ---------------------------------------------------- */

ss_status ss_simulate(const ss_config* cfg, ss_trace** out);
size_t ss_trace_rows(const ss_trace* trace);
int ss_trace_aborted(const ss_trace* trace); /* 1 if the run diverged */
/* Metric names: rms_e, rms_tau, rms_f_tilde, rms_err_M, rms_err_C,
 * rms_err_F, rms_E_tilde, max_theta_norm_M/C/F/G, max_q_norm, max_q_dot_norm. */
ss_status ss_trace_metric(const ss_trace* trace, const char* name, double* out);
ss_status ss_trace_export_csv(const ss_trace* trace, const char* path);
ss_status ss_trace_load_csv(const char* path, ss_trace** out);
/* Writes <prefix>_fig1.svg (per-matrix errors) and <prefix>_fig2.svg (||f~||). */
ss_status ss_trace_plot_svg(const ss_trace* trace, const char* prefix);
void ss_trace_free(ss_trace* trace);

/* --- developed vs baseline comparison ------------------------------ */

ss_status ss_compare(const ss_config* cfg, const uint64_t* seeds, size_t n_seeds,
                     ss_report** out);
/* Text table mirroring the RMS comparison layout; returns required length
 * (excluding NUL) through *needed even when buf is too small. */
ss_status ss_report_table(const ss_report* report, char* buf, size_t buf_len, size_t* needed);
ss_status ss_report_export_csv(const ss_report* report, const char* path);
/* arm: "developed" or "baseline"; names as for ss_trace_metric (rms_* only). */
ss_status ss_report_metric(const ss_report* report, const char* arm, const char* name,
                           double* out);
/* name: f_tilde, err_M, err_C, err_F (percent, from arm medians). */
ss_status ss_report_improvement(const ss_report* report, const char* name, double* out);
ss_status ss_report_plot_svg(const ss_report* report, const char* prefix);
void ss_report_free(ss_report* report);

/* --- property suite ------------------------------------------------- */

/* Runs the built-in invariant checks, printing one line per check to stdout.
 * Returns the number of failed checks. */
int ss_self_check(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SSLBPINN_H */
