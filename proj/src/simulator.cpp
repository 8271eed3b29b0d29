#include "sslbpinn/simulator.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "sslbpinn/config.hpp"
#include "sslbpinn/tensor_ops.hpp"

namespace sslb {

void SimConfig::validate() const {
  if (!(dt_s > 0.0)) throw ConfigError("config: sim.dt_s must be > 0");
  if (!(duration_s >= dt_s)) throw ConfigError("config: sim.duration_s must be >= sim.dt_s");
  if (noise_enabled && !(snr_db > 0.0))
    throw ConfigError("config: sim.snr_db must be > 0 when noise is enabled");
  if (!(abort_threshold > 0.0)) throw ConfigError("config: sim.abort_threshold must be > 0");
  if (!(input_radius > 0.0)) throw ConfigError("config: sim.input_radius must be > 0");

  if (!(gains.alpha > 0.0) || !(gains.k1 > 0.0) || !(gains.k2 > 0.0) || !(gains.k3 > 0.0) ||
      !(gains.k4 > 0.0))
    throw ConfigError("config: gains.alpha and gains.k1..k4 must be > 0");
  if (gains.sgn_smoothing < 0.0)
    throw ConfigError("config: controller.sgn_smoothing must be >= 0");

  if (!(plant.m1 > 0.0) || !(plant.m2 > 0.0) || !(plant.l1 > 0.0) || !(plant.l2 > 0.0) ||
      !(plant.p1 > 0.0) || !(plant.p2 > 0.0) || !(plant.p3 > 0.0))
    throw ConfigError("config: plant masses, lengths and inertia constants must be > 0");
  if (plant.fd1 < 0.0 || plant.fd2 < 0.0 || plant.fs1 < 0.0 || plant.fs2 < 0.0 ||
      plant.kappa_s < 0.0)
    throw ConfigError("config: plant friction coefficients must be >= 0");

  if (!(adaptation.gamma_M > 0.0) || !(adaptation.gamma_C > 0.0) ||
      !(adaptation.gamma_F > 0.0) || !(adaptation.gamma_G > 0.0))
    throw ConfigError("config: adaptation gains must be > 0");
  if (!(adaptation.theta_bound_M > 0.0) || !(adaptation.theta_bound_C > 0.0) ||
      !(adaptation.theta_bound_F > 0.0) || !(adaptation.theta_bound_G > 0.0))
    throw ConfigError("config: adaptation theta bounds must be > 0");
  if (!(adaptation.proj_delta > 0.0) || !(adaptation.proj_delta < 1.0))
    throw ConfigError("config: adaptation.proj_delta must be in (0, 1)");

  if (dnn.hidden_layers < 0) throw ConfigError("config: dnn.hidden_layers must be >= 0");
  if (dnn.hidden_layers > 0 && dnn.hidden_width < 1)
    throw ConfigError("config: dnn.hidden_width must be >= 1");

  if (!(skew.gains.gamma1 > 0.0) || !(skew.gains.gamma2 > 0.0) || !(skew.gains.gamma3 > 0.0) ||
      !(skew.gains.gamma4 > 0.0))
    throw ConfigError("config: skew.gamma1..4 must be > 0");
  if (skew.gains.xi.size() != 2 || !(skew.gains.xi.minCoeff() > 0.0))
    throw ConfigError("config: skew.xi entries must be > 0");
}

double noise_std(double snr_db, double signal_rms) {
  return signal_rms * std::pow(10.0, -snr_db / 20.0);
}

namespace {

constexpr int kDof = 2;

struct NetSet {
  DnnArch M, C, F;
  std::optional<DnnArch> G;
};

NetSet make_nets(const SimConfig& cfg) {
  NetSet nets;
  nets.M = DnnArch::mlp(kDof, kDof * kDof, cfg.dnn.hidden_layers, cfg.dnn.hidden_width,
                        cfg.dnn.activation);
  nets.C = DnnArch::mlp(2 * kDof, kDof * kDof, cfg.dnn.hidden_layers, cfg.dnn.hidden_width,
                        cfg.dnn.activation);
  nets.F = DnnArch::mlp(kDof, kDof, cfg.dnn.hidden_layers, cfg.dnn.hidden_width,
                        cfg.dnn.activation);
  if (cfg.plant.gravity_on)
    nets.G = DnnArch::mlp(kDof, kDof, cfg.dnn.hidden_layers, cfg.dnn.hidden_width,
                          cfg.dnn.activation);
  return nets;
}

// Offsets of [q, q_dot, theta_M, theta_C, theta_F, (theta_G), E_hat] in the
// flat integration state.
struct Layout {
  Eigen::Index q = 0, q_dot = kDof;
  Eigen::Index th_M, th_C, th_F, th_G;
  Eigen::Index n_M, n_C, n_F, n_G;
  Eigen::Index e_hat, total;

  explicit Layout(const NetSet& nets) {
    n_M = nets.M.param_count();
    n_C = nets.C.param_count();
    n_F = nets.F.param_count();
    n_G = nets.G ? nets.G->param_count() : 0;
    th_M = 2 * kDof;
    th_C = th_M + n_M;
    th_F = th_C + n_C;
    th_G = th_F + n_F;
    e_hat = th_G + n_G;
    total = e_hat + 1;
  }
};

struct StageExtras {
  Eigen::Vector2d tau;
  Eigen::Vector2d q_ddot;
  Vec phi_M, phi_C, phi_F;
};

struct Engine {
  const SimConfig& cfg;
  NetSet nets;
  Layout lay;
  Vec xi_kron;
  bool baseline, oracle;

  explicit Engine(const SimConfig& c)
      : cfg(c),
        nets(make_nets(c)),
        lay(nets),
        xi_kron(kron_vec(c.skew.gains.xi, c.skew.gains.xi)),
        baseline(c.baseline_arm()),
        oracle(c.mode == SimMode::OracleFeedforward) {}

  Vec rhs(double t, const Vec& z, const Eigen::Vector4d& noise, const Vec& lag_rate,
          StageExtras* extras) const {
    const Eigen::Vector2d q = z.segment<kDof>(lay.q);
    const Eigen::Vector2d q_dot = z.segment<kDof>(lay.q_dot);
    const double e_hat = z(lay.e_hat);

    const Eigen::Vector2d q_meas = q + noise.head<kDof>();
    const Eigen::Vector2d q_dot_meas = q_dot + noise.tail<kDof>();

    const DesiredPoint des = desired_trajectory(t, cfg.trajectory);
    const ErrorState errors = tracking_errors(q_meas, q_dot_meas, des, cfg.gains.alpha);

    const Vec theta_M = z.segment(lay.th_M, lay.n_M);
    const Vec theta_C = z.segment(lay.th_C, lay.n_C);
    const Vec theta_F = z.segment(lay.th_F, lay.n_F);

    Vec x_C(2 * kDof);
    x_C << q_meas, q_dot_meas;

    DnnOutputs outputs;
    std::optional<ForwardPass> fp_M, fp_C, fp_F, fp_G;
    if (oracle) {
      outputs.phi_M = vec(inertia(cfg.plant, q_meas));
      outputs.phi_C = vec(coriolis(cfg.plant, q_meas, q_dot_meas));
      outputs.phi_F = friction(cfg.plant, q_dot_meas);
      if (cfg.plant.gravity_on) outputs.phi_G = gravity_vec(cfg.plant, q_meas);
    } else {
      fp_M.emplace(forward_pass(nets.M, theta_M, q_meas));
      fp_C.emplace(forward_pass(nets.C, theta_C, x_C));
      fp_F.emplace(forward_pass(nets.F, theta_F, q_dot_meas));
      outputs.phi_M = fp_M->output();
      outputs.phi_C = fp_C->output();
      outputs.phi_F = fp_F->output();
      if (nets.G) {
        fp_G.emplace(forward_pass(*nets.G, z.segment(lay.th_G, lay.n_G), q_meas));
        outputs.phi_G = fp_G->output();
      }
    }

    const Vec tau = control_input(errors, des, outputs, cfg.gains);
    const PlantState true_state{q, q_dot};
    const Eigen::Vector2d q_ddot = forward_dynamics(cfg.plant, true_state, tau);

    Vec dz = Vec::Zero(lay.total);
    dz.segment<kDof>(lay.q) = q_dot;
    dz.segment<kDof>(lay.q_dot) = q_ddot;

    if (!oracle) {
      const Vec w_M = des.q_d_ddot - cfg.gains.alpha * errors.e_dot;
      const Vec w_C = des.q_d_dot - cfg.gains.alpha * errors.e;
      const double E_tilde = baseline ? 0.0 : e_tilde(e_hat);
      const auto& ad = cfg.adaptation;

      Mat jac_M, jac_M_rate;
      if (baseline) {
        jac_M = weight_jacobian(nets.M, theta_M, *fp_M);
      } else {
        std::tie(jac_M, jac_M_rate) =
            weight_jacobian_and_rate(nets.M, theta_M, *fp_M, q_dot_meas, lag_rate);
      }
      const Mat jac_C = weight_jacobian(nets.C, theta_C, *fp_C);
      const Mat jac_F = weight_jacobian(nets.F, theta_F, *fp_F);

      dz.segment(lay.th_M, lay.n_M) =
          theta_M_rate(jac_M, jac_M_rate, xi_kron, E_tilde, w_M, errors.r, ad.gamma_M, theta_M,
                       ad.theta_bound_M, ad.proj_delta, !baseline);
      dz.segment(lay.th_C, lay.n_C) =
          theta_C_rate(jac_C, xi_kron, E_tilde, w_C, errors.r, ad.gamma_C, theta_C,
                       ad.theta_bound_C, ad.proj_delta, !baseline);
      dz.segment(lay.th_F, lay.n_F) =
          theta_FG_rate(jac_F, errors.r, ad.gamma_F, theta_F, ad.theta_bound_F, ad.proj_delta);
      if (nets.G) {
        const Mat jac_G = weight_jacobian(*nets.G, z.segment(lay.th_G, lay.n_G), *fp_G);
        dz.segment(lay.th_G, lay.n_G) =
            theta_FG_rate(jac_G, errors.r, ad.gamma_G, z.segment(lay.th_G, lay.n_G),
                          ad.theta_bound_G, ad.proj_delta);
      }

      if (!baseline) {
        const Mat in_jac_M = input_jacobian(nets.M, theta_M, *fp_M);
        dz(lay.e_hat) =
            cfg.skew.form == SkewForm::Literal
                ? e_hat_rate_literal(jac_M, in_jac_M, lag_rate, q_dot_meas, outputs.phi_C, e_hat,
                                     cfg.skew.gains)
                : e_hat_rate_simplified(in_jac_M, q_dot_meas, outputs.phi_C, e_hat,
                                        cfg.skew.gains);
      }
    }

    if (extras) {
      extras->tau = tau;
      extras->q_ddot = q_ddot;
      extras->phi_M = outputs.phi_M;
      extras->phi_C = outputs.phi_C;
      extras->phi_F = outputs.phi_F;
    }
    return dz;
  }
};

TraceRow make_row(const SimConfig& cfg, const Layout& lay, double t, const Vec& z,
                  const DesiredPoint& des, const StageExtras& ex) {
  TraceRow row;
  row.t = t;
  row.q = z.segment<kDof>(lay.q);
  row.q_dot = z.segment<kDof>(lay.q_dot);
  row.q_d = des.q_d;
  row.e = row.q - des.q_d;
  row.r = (row.q_dot - des.q_d_dot) + cfg.gains.alpha * row.e;
  row.tau = ex.tau;
  row.E_hat = z(lay.e_hat);
  row.E_tilde = e_tilde(row.E_hat);

  const Eigen::Matrix2d M_true = inertia(cfg.plant, row.q);
  const Eigen::Matrix2d C_true = coriolis(cfg.plant, row.q, row.q_dot);
  const Eigen::Vector2d F_true = friction(cfg.plant, row.q_dot);
  row.err_M = matrix_error(M_true, ex.phi_M);
  row.err_C = matrix_error(C_true, ex.phi_C);
  row.err_F = vector_error(F_true, ex.phi_F);
  row.f_tilde_norm =
      f_tilde(M_true, C_true, F_true, ex.phi_M, ex.phi_C, ex.phi_F, ex.q_ddot, row.q_dot).norm();
  return row;
}

// Per-channel measurement RMS from the analytic desired trajectory.
Eigen::Vector4d noise_sigmas(const SimConfig& cfg, Eigen::Index steps) {
  if (!cfg.noise_enabled) return Eigen::Vector4d::Zero();
  Eigen::Vector4d sum_sq = Eigen::Vector4d::Zero();
  for (Eigen::Index i = 0; i <= steps; ++i) {
    const DesiredPoint d = desired_trajectory(static_cast<double>(i) * cfg.dt_s, cfg.trajectory);
    sum_sq(0) += d.q_d(0) * d.q_d(0);
    sum_sq(1) += d.q_d(1) * d.q_d(1);
    sum_sq(2) += d.q_d_dot(0) * d.q_d_dot(0);
    sum_sq(3) += d.q_d_dot(1) * d.q_d_dot(1);
  }
  const Eigen::Vector4d rms = (sum_sq / static_cast<double>(steps + 1)).cwiseSqrt();
  return rms.unaryExpr([&](double s) { return noise_std(cfg.snr_db, s); });
}

}  // namespace

SimTrace run(const SimConfig& cfg) {
  cfg.validate();
  const Engine engine(cfg);
  const Layout& lay = engine.lay;

  SimTrace trace;
  trace.seed = cfg.seed;
  trace.config_hash = config_hash(cfg);

  const auto steps = static_cast<Eigen::Index>(std::llround(cfg.duration_s / cfg.dt_s));
  const double dt = cfg.dt_s;
  trace.rows.reserve(static_cast<size_t>(steps) + 1);

  // Weight init and measurement noise use independent streams off the seed,
  // so both comparison arms see identical draws.
  Rng weight_rng(cfg.seed);
  Rng noise_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  const Eigen::Vector4d sigmas = noise_sigmas(cfg, steps);

  Vec z = Vec::Zero(lay.total);
  z.segment<kDof>(lay.q) = cfg.q0;
  z.segment<kDof>(lay.q_dot) = cfg.q_dot0;
  z.segment(lay.th_M, lay.n_M) =
      init_weights(engine.nets.M, cfg.adaptation.theta_bound_M, weight_rng).theta;
  z.segment(lay.th_C, lay.n_C) =
      init_weights(engine.nets.C, cfg.adaptation.theta_bound_C, weight_rng).theta;
  z.segment(lay.th_F, lay.n_F) =
      init_weights(engine.nets.F, cfg.adaptation.theta_bound_F, weight_rng).theta;
  if (engine.nets.G)
    z.segment(lay.th_G, lay.n_G) =
        init_weights(*engine.nets.G, cfg.adaptation.theta_bound_G, weight_rng).theta;

  Vec lag_rate = Vec::Zero(lay.n_M);  // committed theta_M rate of the previous step

  for (Eigen::Index step = 0; step <= steps; ++step) {
    const double t = static_cast<double>(step) * dt;

    if (!z.allFinite() || z.cwiseAbs().maxCoeff() > cfg.abort_threshold) {
      trace.aborted = true;
      trace.abort_reason = "state exceeded abort threshold at t = " + std::to_string(t);
      break;
    }

    Eigen::Vector4d noise;
    for (int i = 0; i < 4; ++i) noise(i) = sigmas(i) * noise_rng.gaussian();

    StageExtras extras;
    Vec k1;
    try {
      k1 = engine.rhs(t, z, noise, lag_rate, &extras);
      trace.rows.push_back(
          make_row(cfg, lay, t, z, desired_trajectory(t, cfg.trajectory), extras));

      const double qn = trace.rows.back().q.norm();
      const double qdn = trace.rows.back().q_dot.norm();
      trace.max_q_norm = std::max(trace.max_q_norm, qn);
      trace.max_q_dot_norm = std::max(trace.max_q_dot_norm, qdn);
      if (std::sqrt(qn * qn + qdn * qdn) > cfg.input_radius) trace.input_radius_exceeded = true;
      trace.max_theta_norm_M =
          std::max(trace.max_theta_norm_M, z.segment(lay.th_M, lay.n_M).norm());
      trace.max_theta_norm_C =
          std::max(trace.max_theta_norm_C, z.segment(lay.th_C, lay.n_C).norm());
      trace.max_theta_norm_F =
          std::max(trace.max_theta_norm_F, z.segment(lay.th_F, lay.n_F).norm());
      if (lay.n_G > 0)
        trace.max_theta_norm_G =
            std::max(trace.max_theta_norm_G, z.segment(lay.th_G, lay.n_G).norm());

      if (step == steps) break;

      const Vec k2 = engine.rhs(t + 0.5 * dt, z + (0.5 * dt) * k1, noise, lag_rate, nullptr);
      const Vec k3 = engine.rhs(t + 0.5 * dt, z + (0.5 * dt) * k2, noise, lag_rate, nullptr);
      const Vec k4 = engine.rhs(t + dt, z + dt * k3, noise, lag_rate, nullptr);
      z += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      lag_rate = k1.segment(lay.th_M, lay.n_M);
    } catch (const NumericError& err) {
      trace.aborted = true;
      trace.abort_reason = std::string(err.what()) + " at t = " + std::to_string(t);
      break;
    }
  }
  return trace;
}

ComparisonReport compare(const SimConfig& config, const std::vector<std::uint64_t>& seeds,
                         int max_threads) {
  return compare(config, seeds, max_threads, nullptr);
}

ComparisonReport compare(const SimConfig& config, const std::vector<std::uint64_t>& seeds,
                         int max_threads,
                         std::optional<std::pair<SimTrace, SimTrace>>* sample_traces) {
  if (seeds.empty()) throw ConfigError("compare: need at least one seed");
  config.validate();

  struct Job {
    SimConfig cfg;
    SimTrace trace;
  };
  std::vector<Job> jobs;
  jobs.reserve(2 * seeds.size());
  for (const auto seed : seeds) {
    SimConfig developed = config;
    developed.seed = seed;
    developed.mode = SimMode::Developed;
    developed.skew.enabled = true;
    SimConfig baseline = config;
    baseline.seed = seed;
    baseline.mode = SimMode::Baseline;
    jobs.push_back({developed, {}});
    jobs.push_back({baseline, {}});
  }

  unsigned n_threads = max_threads > 0 ? static_cast<unsigned>(max_threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(jobs.size()));

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      jobs[i].trace = run(jobs[i].cfg);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  ComparisonReport report;
  report.config_hash = config_hash(config);

  std::vector<ArmMetrics> dev_ok, base_ok;
  for (size_t s = 0; s < seeds.size(); ++s) {
    SeedComparison sc;
    sc.seed = seeds[s];
    sc.developed = trace_metrics(jobs[2 * s].trace);
    sc.baseline = trace_metrics(jobs[2 * s + 1].trace);
    if (!sc.developed.aborted && !sc.baseline.aborted) {
      dev_ok.push_back(sc.developed);
      base_ok.push_back(sc.baseline);
    } else {
      ++report.excluded_seeds;
    }
    report.seeds.push_back(std::move(sc));
  }

  auto median_of = [](const std::vector<ArmMetrics>& arms, double ArmMetrics::* field) {
    std::vector<double> vals;
    vals.reserve(arms.size());
    for (const auto& a : arms) vals.push_back(a.*field);
    return vals.empty() ? std::numeric_limits<double>::quiet_NaN() : median(vals);
  };
  for (auto field : {&ArmMetrics::rms_f_tilde, &ArmMetrics::rms_err_M, &ArmMetrics::rms_err_C,
                     &ArmMetrics::rms_err_F, &ArmMetrics::rms_E_tilde, &ArmMetrics::rms_e,
                     &ArmMetrics::rms_tau}) {
    report.median_developed.*field = median_of(dev_ok, field);
    report.median_baseline.*field = median_of(base_ok, field);
  }

  if (sample_traces)
    *sample_traces = std::make_pair(std::move(jobs[0].trace), std::move(jobs[1].trace));
  return report;
}

}  // namespace sslb
