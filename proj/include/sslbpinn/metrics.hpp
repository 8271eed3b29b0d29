#pragma once

// RMS metrics, the overall function approximation error, and the
// developed-vs-baseline comparison report.

#include <cstdint>
#include <string>
#include <vector>

#include "sslbpinn/common.hpp"

namespace sslb {

struct SimTrace;

// sqrt of the mean squared value / squared Euclidean norm. Throws on empty input.
double rms(const std::vector<double>& series);
double rms(const std::vector<Vec>& series);

// (M - Phi_M) qddot + (C - Phi_C) qdot + (F - Phi_F), all estimates vectorized.
Vec f_tilde(const Mat& M_true, const Mat& C_true, const Vec& F_true, const Vec& phi_M,
            const Vec& phi_C, const Vec& phi_F, const Vec& q_ddot, const Vec& q_dot);

// Frobenius norm of (truth - unvec(estimate)).
double matrix_error(const Mat& truth, const Vec& estimate_vec);
// Euclidean norm of (truth - estimate), used for the F and G vectors.
double vector_error(const Vec& truth, const Vec& estimate);

// 100 * (baseline - developed) / baseline; NaN when baseline <= 0.
double percent_improvement(double baseline, double developed);

double median(std::vector<double> values);  // throws on empty input

// Per-run RMS summary, one per simulation arm.
struct ArmMetrics {
  double rms_f_tilde = 0.0;
  double rms_err_M = 0.0;
  double rms_err_C = 0.0;
  double rms_err_F = 0.0;
  double rms_E_tilde = 0.0;
  double rms_e = 0.0;
  double rms_tau = 0.0;
  bool aborted = false;
};

ArmMetrics trace_metrics(const SimTrace& trace);

struct SeedComparison {
  std::uint64_t seed = 0;
  ArmMetrics developed;
  ArmMetrics baseline;
};

struct ComparisonReport {
  std::vector<SeedComparison> seeds;
  // Medians over seeds where neither arm aborted.
  ArmMetrics median_developed;
  ArmMetrics median_baseline;
  std::string config_hash;
  size_t excluded_seeds = 0;

  // Improvements recomputed from the stored medians (never cached).
  double improvement_f_tilde() const;
  double improvement_err_M() const;
  double improvement_err_C() const;
  double improvement_err_F() const;
  // Per-seed f_tilde improvements (non-aborted seeds only) and their median.
  std::vector<double> per_seed_f_tilde_improvements() const;
  double median_f_tilde_improvement() const;

  std::string table() const;  // text table mirroring the RMS comparison layout
};

}  // namespace sslb
