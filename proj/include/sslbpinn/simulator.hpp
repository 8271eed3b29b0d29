#pragma once

// Closed-loop fixed-step RK4 integration of plant + controller + adaptation
// + skew observer. Measurement noise is sampled once per step and held
// across the RK substeps; the controller and adaptation laws consume the
// noisy measurements while recorded metrics use the true state.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sslbpinn/adaptation.hpp"
#include "sslbpinn/controller.hpp"
#include "sslbpinn/dnn.hpp"
#include "sslbpinn/metrics.hpp"
#include "sslbpinn/plant.hpp"
#include "sslbpinn/skew_observer.hpp"

namespace sslb {

enum class SimMode { Developed, Baseline, OracleFeedforward };
enum class SkewForm { Literal, Simplified };

struct DnnConfig {
  int hidden_layers = 4;
  int hidden_width = 7;
  Activation activation = Activation::Tanh;
};

struct AdaptationConfig {
  double gamma_M = 1.1;
  double gamma_C = 11.5;
  double gamma_F = 9.0;
  double gamma_G = 9.0;
  double theta_bound_M = 20.0;
  double theta_bound_C = 20.0;
  double theta_bound_F = 20.0;
  double theta_bound_G = 20.0;
  double proj_delta = 0.05;
};

struct SkewConfig {
  bool enabled = true;  // false forces the baseline arm
  SkewForm form = SkewForm::Simplified;
  SkewGains gains;
};

struct SimConfig {
  double duration_s = 50.0;
  double dt_s = 1e-3;
  std::uint64_t seed = 1;
  bool noise_enabled = true;
  double snr_db = 60.0;
  SimMode mode = SimMode::Developed;
  TrajectoryMode trajectory = TrajectoryMode::Literal;
  double abort_threshold = 1e6;
  double input_radius = 10.0;  // compact-set monitor for the network inputs
  Eigen::Vector2d q0{0.4, -0.3};
  Eigen::Vector2d q_dot0{0.0, 0.0};
  RobotParams plant;
  ControlGains gains;
  DnnConfig dnn;
  AdaptationConfig adaptation;
  SkewConfig skew;

  void validate() const;  // throws ConfigError
  bool baseline_arm() const { return mode == SimMode::Baseline || !skew.enabled; }
};

struct TraceRow {
  double t = 0.0;
  Eigen::Vector2d q, q_dot, q_d, e, r, tau;  // e, r from the true state
  double E_hat = 0.0, E_tilde = 0.0;
  double err_M = 0.0, err_C = 0.0, err_F = 0.0;
  double f_tilde_norm = 0.0;
};

struct SimTrace {
  std::vector<TraceRow> rows;
  std::uint64_t seed = 0;
  std::string config_hash;
  bool aborted = false;
  std::string abort_reason;
  // Run-wide monitors.
  double max_q_norm = 0.0;
  double max_q_dot_norm = 0.0;
  bool input_radius_exceeded = false;
  double max_theta_norm_M = 0.0;
  double max_theta_norm_C = 0.0;
  double max_theta_norm_F = 0.0;
  double max_theta_norm_G = 0.0;
};

// sigma = signal_rms * 10^(-snr_db / 20).
double noise_std(double snr_db, double signal_rms);

SimTrace run(const SimConfig& config);

// Runs developed and baseline arms per seed with identical initial weights
// and noise streams. max_threads = 0 picks the hardware concurrency.
// keep_sample_traces retains the first seed's pair for plotting.
ComparisonReport compare(const SimConfig& config, const std::vector<std::uint64_t>& seeds,
                         int max_threads = 0);
ComparisonReport compare(const SimConfig& config, const std::vector<std::uint64_t>& seeds,
                         int max_threads, std::optional<std::pair<SimTrace, SimTrace>>* sample_traces);

}  // namespace sslb
