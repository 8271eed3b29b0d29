#include "sslbpinn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "sslbpinn/simulator.hpp"
#include "sslbpinn/tensor_ops.hpp"

namespace sslb {

double rms(const std::vector<double>& series) {
  if (series.empty()) throw DimensionError("rms: empty series");
  double sum = 0.0;
  for (double x : series) sum += x * x;
  return std::sqrt(sum / static_cast<double>(series.size()));
}

double rms(const std::vector<Vec>& series) {
  if (series.empty()) throw DimensionError("rms: empty series");
  double sum = 0.0;
  for (const Vec& x : series) sum += x.squaredNorm();
  return std::sqrt(sum / static_cast<double>(series.size()));
}

Vec f_tilde(const Mat& M_true, const Mat& C_true, const Vec& F_true, const Vec& phi_M,
            const Vec& phi_C, const Vec& phi_F, const Vec& q_ddot, const Vec& q_dot) {
  const Eigen::Index n = F_true.size();
  return (M_true - unvec(phi_M, n, n)) * q_ddot + (C_true - unvec(phi_C, n, n)) * q_dot +
         (F_true - phi_F);
}

double matrix_error(const Mat& truth, const Vec& estimate_vec) {
  return (truth - unvec(estimate_vec, truth.rows(), truth.cols())).norm();
}

double vector_error(const Vec& truth, const Vec& estimate) {
  if (truth.size() != estimate.size()) throw DimensionError("vector_error: size mismatch");
  return (truth - estimate).norm();
}

double percent_improvement(double baseline, double developed) {
  if (!(baseline > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return 100.0 * (baseline - developed) / baseline;
}

double median(std::vector<double> values) {
  if (values.empty()) throw DimensionError("median: empty input");
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

ArmMetrics trace_metrics(const SimTrace& trace) {
  ArmMetrics m;
  m.aborted = trace.aborted;
  if (trace.rows.empty()) {
    m.aborted = true;
    return m;
  }
  double f = 0, eM = 0, eC = 0, eF = 0, Et = 0, e = 0, tau = 0;
  for (const TraceRow& row : trace.rows) {
    f += row.f_tilde_norm * row.f_tilde_norm;
    eM += row.err_M * row.err_M;
    eC += row.err_C * row.err_C;
    eF += row.err_F * row.err_F;
    Et += row.E_tilde * row.E_tilde;
    e += row.e.squaredNorm();
    tau += row.tau.squaredNorm();
  }
  const double inv = 1.0 / static_cast<double>(trace.rows.size());
  m.rms_f_tilde = std::sqrt(f * inv);
  m.rms_err_M = std::sqrt(eM * inv);
  m.rms_err_C = std::sqrt(eC * inv);
  m.rms_err_F = std::sqrt(eF * inv);
  m.rms_E_tilde = std::sqrt(Et * inv);
  m.rms_e = std::sqrt(e * inv);
  m.rms_tau = std::sqrt(tau * inv);
  return m;
}

double ComparisonReport::improvement_f_tilde() const {
  return percent_improvement(median_baseline.rms_f_tilde, median_developed.rms_f_tilde);
}
double ComparisonReport::improvement_err_M() const {
  return percent_improvement(median_baseline.rms_err_M, median_developed.rms_err_M);
}
double ComparisonReport::improvement_err_C() const {
  return percent_improvement(median_baseline.rms_err_C, median_developed.rms_err_C);
}
double ComparisonReport::improvement_err_F() const {
  return percent_improvement(median_baseline.rms_err_F, median_developed.rms_err_F);
}

std::vector<double> ComparisonReport::per_seed_f_tilde_improvements() const {
  std::vector<double> out;
  for (const SeedComparison& sc : seeds) {
    if (sc.developed.aborted || sc.baseline.aborted) continue;
    out.push_back(percent_improvement(sc.baseline.rms_f_tilde, sc.developed.rms_f_tilde));
  }
  return out;
}

double ComparisonReport::median_f_tilde_improvement() const {
  const auto imps = per_seed_f_tilde_improvements();
  return imps.empty() ? std::numeric_limits<double>::quiet_NaN() : median(imps);
}

namespace {

std::string num(double v, int prec = 4) {
  if (std::isnan(v)) return "-";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
  return buf;
}

void table_line(std::string& out, const std::string& label, const ArmMetrics& m,
                bool show_E_tilde) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-18s %12s %14s %14s %14s %12s %10s %10s\n", label.c_str(),
                num(m.rms_f_tilde).c_str(), num(m.rms_err_M).c_str(), num(m.rms_err_C).c_str(),
                num(m.rms_err_F).c_str(),
                show_E_tilde ? num(m.rms_E_tilde).c_str() : "-", num(m.rms_e).c_str(),
                num(m.rms_tau).c_str());
  out += buf;
}

}  // namespace

std::string ComparisonReport::table() const {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-18s %12s %14s %14s %14s %12s %10s %10s\n",
                "RMS (median)", "||f~|| [Nm]", "M err [kgm2]", "C err [kgm2/s]", "F err [Nm]",
                "|E~| [kgm2/s]", "e [rad]", "tau [Nm]");
  out += buf;
  table_line(out, "Baseline", median_baseline, false);
  table_line(out, "Developed", median_developed, true);
  std::snprintf(buf, sizeof(buf), "%-18s %12s %14s %14s %14s %12s %10s %10s\n", "Improvement [%]",
                num(improvement_f_tilde(), 2).c_str(), num(improvement_err_M(), 2).c_str(),
                num(improvement_err_C(), 2).c_str(), num(improvement_err_F(), 2).c_str(), "-",
                "-", "-");
  out += buf;
  std::snprintf(buf, sizeof(buf),
                "seeds: %zu (excluded: %zu), median per-seed ||f~|| improvement: %s%%\n",
                seeds.size(), excluded_seeds, num(median_f_tilde_improvement(), 2).c_str());
  out += buf;
  return out;
}

}  // namespace sslb
