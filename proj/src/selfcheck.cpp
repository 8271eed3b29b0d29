#include "sslbpinn/selfcheck.hpp"

#include <cmath>
#include <functional>

#include "sslbpinn/adaptation.hpp"
#include "sslbpinn/config.hpp"
#include "sslbpinn/controller.hpp"
#include "sslbpinn/csv.hpp"
#include "sslbpinn/dnn.hpp"
#include "sslbpinn/plant.hpp"
#include "sslbpinn/rng.hpp"
#include "sslbpinn/simulator.hpp"
#include "sslbpinn/tensor_ops.hpp"

namespace sslb {

namespace {

Mat random_mat(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.uniform_sym();
  return m;
}

Vec random_vec(Rng& rng, Eigen::Index n) {
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.uniform_sym();
  return v;
}

double jacobian_fd_error(const DnnArch& arch, const Vec& theta, const Vec& x) {
  const Mat jac = weight_jacobian(arch, theta, x);
  const double h = 1e-6;
  double max_err = 0.0;
  for (Eigen::Index c = 0; c < theta.size(); ++c) {
    Vec tp = theta, tm = theta;
    tp(c) += h;
    tm(c) -= h;
    const Vec fd = (forward(arch, tp, x) - forward(arch, tm, x)) / (2.0 * h);
    max_err = std::max(max_err, (fd - jac.col(c)).cwiseAbs().maxCoeff());
  }
  return max_err / std::max(1.0, jac.cwiseAbs().maxCoeff());
}

}  // namespace

int self_check(std::ostream& out) {
  int failures = 0;
  auto check = [&](const char* name, const std::function<bool()>& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      out << "FAIL  " << name << " (exception: " << e.what() << ")\n";
      ++failures;
      return;
    }
    out << (ok ? "ok    " : "FAIL  ") << name << "\n";
    if (!ok) ++failures;
  };

  check("vec/unvec round trip", [] {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
      const auto rows = static_cast<Eigen::Index>(1 + rng.uniform01() * 5);
      const auto cols = static_cast<Eigen::Index>(1 + rng.uniform01() * 5);
      const Mat a = random_mat(rng, rows, cols);
      if (unvec(vec(a), rows, cols) != a) return false;
    }
    return true;
  });

  check("kron identity vec(ABC) = (C^T (x) A) vec(B)", [] {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
      const Mat a = random_mat(rng, 3, 4), b = random_mat(rng, 4, 2), c = random_mat(rng, 2, 5);
      const Vec lhs = vec(a * b * c);
      const Vec rhs = kron(c.transpose(), a) * vec(b);
      if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-12) return false;
    }
    return true;
  });

  check("regressor identity regressor(v) vec(A) = A v", [] {
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
      const Mat a = random_mat(rng, 2, 2);
      const Vec v = random_vec(rng, 2);
      if (((regressor(v) * vec(a)) - a * v).cwiseAbs().maxCoeff() > 1e-13) return false;
    }
    return true;
  });

  check("DNN weight Jacobian vs finite differences", [] {
    Rng rng(14);
    const DnnArch arch = DnnArch::mlp(2, 4, 2, 5);
    for (int i = 0; i < 3; ++i) {
      const Vec theta = random_vec(rng, arch.param_count());
      const Vec x = random_vec(rng, 2);
      if (jacobian_fd_error(arch, theta, x) > 1e-5) return false;
    }
    return true;
  });

  check("DNN weight Jacobian rate vs finite differences in time", [] {
    Rng rng(15);
    const DnnArch arch = DnnArch::mlp(2, 4, 2, 5);
    const Vec theta = random_vec(rng, arch.param_count());
    const Vec x = random_vec(rng, 2);
    const Vec x_dot = random_vec(rng, 2);
    const Vec theta_dot = random_vec(rng, arch.param_count());
    const Mat rate = weight_jacobian_rate(arch, theta, x, x_dot, theta_dot);
    const double h = 1e-6;
    const Mat fd = (weight_jacobian(arch, Vec(theta + h * theta_dot), Vec(x + h * x_dot)) -
                    weight_jacobian(arch, Vec(theta - h * theta_dot), Vec(x - h * x_dot))) /
                   (2.0 * h);
    const double rel =
        (fd - rate).cwiseAbs().maxCoeff() / std::max(1.0, rate.cwiseAbs().maxCoeff());
    return rel <= 1e-4;
  });

  check("plant skew symmetry (Mdot - 2C antisymmetric)", [] {
    Rng rng(16);
    const RobotParams plant;
    for (int i = 0; i < 1000; ++i) {
      const Eigen::Vector2d q = 3.0 * Eigen::Vector2d(rng.uniform_sym(), rng.uniform_sym());
      const Eigen::Vector2d qd = 3.0 * Eigen::Vector2d(rng.uniform_sym(), rng.uniform_sym());
      const Eigen::Matrix2d s = inertia_rate(plant, q, qd) - 2.0 * coriolis(plant, q, qd);
      if ((s + s.transpose()).norm() > 1e-10) return false;
    }
    return true;
  });

  check("projection keeps the weight ball invariant", [] {
    Vec theta = Vec::Zero(3);
    Vec c(3);
    c << 0.8, 0.5, -0.2;
    const double dt = 1e-3;
    for (int i = 0; i < 5000; ++i) {
      auto f = [&](const Vec& th) { return proj(c, th, 1.0); };
      const Vec k1 = f(theta);
      const Vec k2 = f(theta + 0.5 * dt * k1);
      const Vec k3 = f(theta + 0.5 * dt * k2);
      const Vec k4 = f(theta + dt * k3);
      theta += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      if (theta.norm() > 1.0 + 1e-9) return false;
    }
    return true;
  });

  check("skew observer literal and simplified forms agree", [] {
    SimConfig cfg;
    cfg.duration_s = 1.0;
    cfg.noise_enabled = false;
    cfg.skew.form = SkewForm::Literal;
    const SimTrace literal = run(cfg);
    cfg.skew.form = SkewForm::Simplified;
    const SimTrace simplified = run(cfg);
    if (literal.rows.size() != simplified.rows.size()) return false;
    double max_diff = 0.0;
    for (size_t i = 0; i < literal.rows.size(); ++i)
      max_diff = std::max(max_diff, std::abs(literal.rows[i].E_hat - simplified.rows[i].E_hat));
    return max_diff <= 1e-8;
  });

  check("oracle feedforward holds zero tracking error", [] {
    SimConfig cfg;
    cfg.mode = SimMode::OracleFeedforward;
    cfg.duration_s = 5.0;
    cfg.noise_enabled = false;
    cfg.q0.setZero();
    const SimTrace trace = run(cfg);
    return !trace.aborted && trace_metrics(trace).rms_e <= 1e-3;
  });

  return failures;
}

}  // namespace sslb
