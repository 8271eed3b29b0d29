#include "sslbpinn.h"

#include <cstring>
#include <iostream>
#include <optional>
#include <string>

#include "sslbpinn/config.hpp"
#include "sslbpinn/csv.hpp"
#include "sslbpinn/metrics.hpp"
#include "sslbpinn/selfcheck.hpp"
#include "sslbpinn/simulator.hpp"
#include "sslbpinn/svg.hpp"

struct ss_config {
  sslb::SimConfig cfg;
};

struct ss_trace {
  sslb::SimTrace trace;
  sslb::ArmMetrics metrics;
};

struct ss_report {
  sslb::ComparisonReport report;
  std::optional<std::pair<sslb::SimTrace, sslb::SimTrace>> sample_traces;
};

namespace {

thread_local std::string g_last_error;

ss_status fail(ss_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
ss_status guarded(Fn&& fn) {
  try {
    fn();
    return SS_OK;
  } catch (const sslb::ConfigError& e) {
    return fail(SS_ERR_PARSE, e.what());
  } catch (const sslb::IoError& e) {
    return fail(SS_ERR_IO, e.what());
  } catch (const sslb::NumericError& e) {
    return fail(SS_ERR_NUMERIC, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SS_ERR_INTERNAL, e.what());
  }
}

ss_status require(bool ok, const char* what) {
  return ok ? SS_OK : fail(SS_ERR_INVALID_ARGUMENT, std::string("null argument: ") + what);
}

ss_trace* wrap_trace(sslb::SimTrace&& trace) {
  auto* out = new ss_trace{std::move(trace), {}};
  out->metrics = sslb::trace_metrics(out->trace);
  return out;
}

bool trace_metric_value(const ss_trace& t, const std::string& name, double& out) {
  const auto& m = t.metrics;
  if (name == "rms_e") out = m.rms_e;
  else if (name == "rms_tau") out = m.rms_tau;
  else if (name == "rms_f_tilde") out = m.rms_f_tilde;
  else if (name == "rms_err_M") out = m.rms_err_M;
  else if (name == "rms_err_C") out = m.rms_err_C;
  else if (name == "rms_err_F") out = m.rms_err_F;
  else if (name == "rms_E_tilde") out = m.rms_E_tilde;
  else if (name == "max_theta_norm_M") out = t.trace.max_theta_norm_M;
  else if (name == "max_theta_norm_C") out = t.trace.max_theta_norm_C;
  else if (name == "max_theta_norm_F") out = t.trace.max_theta_norm_F;
  else if (name == "max_theta_norm_G") out = t.trace.max_theta_norm_G;
  else if (name == "max_q_norm") out = t.trace.max_q_norm;
  else if (name == "max_q_dot_norm") out = t.trace.max_q_dot_norm;
  else return false;
  return true;
}

bool arm_metric_value(const sslb::ArmMetrics& m, const std::string& name, double& out) {
  if (name == "rms_e") out = m.rms_e;
  else if (name == "rms_tau") out = m.rms_tau;
  else if (name == "rms_f_tilde") out = m.rms_f_tilde;
  else if (name == "rms_err_M") out = m.rms_err_M;
  else if (name == "rms_err_C") out = m.rms_err_C;
  else if (name == "rms_err_F") out = m.rms_err_F;
  else if (name == "rms_E_tilde") out = m.rms_E_tilde;
  else return false;
  return true;
}

}  // namespace

extern "C" {

const char* ss_version(void) { return "1.0.0"; }

const char* ss_last_error(void) { return g_last_error.c_str(); }

ss_status ss_config_create(ss_config** out) {
  if (ss_status s = require(out != nullptr, "out"); s != SS_OK) return s;
  return guarded([&] { *out = new ss_config{}; });
}

ss_status ss_config_load(const char* path, ss_config** out) {
  if (ss_status s = require(path && out, "path/out"); s != SS_OK) return s;
  return guarded([&] { *out = new ss_config{sslb::parse_config_file(path)}; });
}

ss_status ss_config_set(ss_config* cfg, const char* key, const char* value) {
  if (ss_status s = require(cfg && key && value, "cfg/key/value"); s != SS_OK) return s;
  return guarded([&] { sslb::apply_config_kv(cfg->cfg, key, value); });
}

ss_status ss_config_get(const ss_config* cfg, const char* key, char* buf, size_t buf_len) {
  if (ss_status s = require(cfg && key && buf, "cfg/key/buf"); s != SS_OK) return s;
  return guarded([&] {
    const std::string value = sslb::config_get(cfg->cfg, key);
    if (value.size() + 1 > buf_len)
      throw std::invalid_argument("ss_config_get: buffer too small");
    std::memcpy(buf, value.c_str(), value.size() + 1);
  });
}

ss_status ss_config_set_seed(ss_config* cfg, uint64_t seed) {
  if (ss_status s = require(cfg != nullptr, "cfg"); s != SS_OK) return s;
  cfg->cfg.seed = seed;
  return SS_OK;
}

void ss_config_free(ss_config* cfg) { delete cfg; }

ss_status ss_simulate(const ss_config* cfg, ss_trace** out) {
  if (ss_status s = require(cfg && out, "cfg/out"); s != SS_OK) return s;
  return guarded([&] {
    sslb::SimTrace trace = sslb::run(cfg->cfg);
    *out = wrap_trace(std::move(trace));
  });
}

size_t ss_trace_rows(const ss_trace* trace) { return trace ? trace->trace.rows.size() : 0; }

int ss_trace_aborted(const ss_trace* trace) {
  return trace && trace->trace.aborted ? 1 : 0;
}

ss_status ss_trace_metric(const ss_trace* trace, const char* name, double* out) {
  if (ss_status s = require(trace && name && out, "trace/name/out"); s != SS_OK) return s;
  if (!trace_metric_value(*trace, name, *out))
    return fail(SS_ERR_INVALID_ARGUMENT, std::string("unknown metric '") + name + "'");
  return SS_OK;
}

ss_status ss_trace_export_csv(const ss_trace* trace, const char* path) {
  if (ss_status s = require(trace && path, "trace/path"); s != SS_OK) return s;
  return guarded([&] { sslb::export_trace_csv(trace->trace, path); });
}

ss_status ss_trace_load_csv(const char* path, ss_trace** out) {
  if (ss_status s = require(path && out, "path/out"); s != SS_OK) return s;
  return guarded([&] { *out = wrap_trace(sslb::parse_trace_csv(path)); });
}

ss_status ss_trace_plot_svg(const ss_trace* trace, const char* prefix) {
  if (ss_status s = require(trace && prefix, "trace/prefix"); s != SS_OK) return s;
  return guarded([&] { sslb::export_trace_plots(trace->trace, prefix); });
}

void ss_trace_free(ss_trace* trace) { delete trace; }

ss_status ss_compare(const ss_config* cfg, const uint64_t* seeds, size_t n_seeds,
                     ss_report** out) {
  if (ss_status s = require(cfg && seeds && out, "cfg/seeds/out"); s != SS_OK) return s;
  if (n_seeds == 0) return fail(SS_ERR_INVALID_ARGUMENT, "ss_compare: need at least one seed");
  return guarded([&] {
    auto* report = new ss_report{};
    try {
      report->report = sslb::compare(cfg->cfg, {seeds, seeds + n_seeds}, 0,
                                     &report->sample_traces);
    } catch (...) {
      delete report;
      throw;
    }
    *out = report;
  });
}

ss_status ss_report_table(const ss_report* report, char* buf, size_t buf_len, size_t* needed) {
  if (ss_status s = require(report != nullptr, "report"); s != SS_OK) return s;
  const std::string table = report->report.table();
  if (needed) *needed = table.size();
  if (!buf) return SS_OK;
  if (buf_len < table.size() + 1)
    return fail(SS_ERR_INVALID_ARGUMENT, "ss_report_table: buffer too small");
  std::memcpy(buf, table.c_str(), table.size() + 1);
  return SS_OK;
}

ss_status ss_report_export_csv(const ss_report* report, const char* path) {
  if (ss_status s = require(report && path, "report/path"); s != SS_OK) return s;
  return guarded([&] { sslb::export_report_csv(report->report, path); });
}

ss_status ss_report_metric(const ss_report* report, const char* arm, const char* name,
                           double* out) {
  if (ss_status s = require(report && arm && name && out, "report/arm/name/out"); s != SS_OK)
    return s;
  const std::string arm_name(arm);
  const sslb::ArmMetrics* metrics = nullptr;
  if (arm_name == "developed") metrics = &report->report.median_developed;
  else if (arm_name == "baseline") metrics = &report->report.median_baseline;
  else return fail(SS_ERR_INVALID_ARGUMENT, "unknown arm '" + arm_name + "'");
  if (!arm_metric_value(*metrics, name, *out))
    return fail(SS_ERR_INVALID_ARGUMENT, std::string("unknown metric '") + name + "'");
  return SS_OK;
}

ss_status ss_report_improvement(const ss_report* report, const char* name, double* out) {
  if (ss_status s = require(report && name && out, "report/name/out"); s != SS_OK) return s;
  const std::string metric(name);
  const auto& r = report->report;
  if (metric == "f_tilde") *out = r.improvement_f_tilde();
  else if (metric == "err_M") *out = r.improvement_err_M();
  else if (metric == "err_C") *out = r.improvement_err_C();
  else if (metric == "err_F") *out = r.improvement_err_F();
  else return fail(SS_ERR_INVALID_ARGUMENT, "unknown improvement metric '" + metric + "'");
  return SS_OK;
}

ss_status ss_report_plot_svg(const ss_report* report, const char* prefix) {
  if (ss_status s = require(report && prefix, "report/prefix"); s != SS_OK) return s;
  if (!report->sample_traces)
    return fail(SS_ERR_INVALID_ARGUMENT, "report holds no sample traces to plot");
  return guarded([&] {
    sslb::export_comparison_plots(report->sample_traces->first, report->sample_traces->second,
                                  prefix);
  });
}

void ss_report_free(ss_report* report) { delete report; }

int ss_self_check(void) { return sslb::self_check(std::cout); }

}  // extern "C"
