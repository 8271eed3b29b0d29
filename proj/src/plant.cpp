#include "sslbpinn/plant.hpp"

#include <cmath>

namespace sslb {

Eigen::Matrix2d inertia(const RobotParams& p, const Eigen::Vector2d& q) {
  const double c2 = std::cos(q(1));
  Eigen::Matrix2d M;
  M << p.p1 + 2.0 * p.p3 * c2, p.p2 + p.p3 * c2,
       p.p2 + p.p3 * c2, p.p2;
  return M;
}

Eigen::Matrix2d inertia_rate(const RobotParams& p, const Eigen::Vector2d& q,
                             const Eigen::Vector2d& q_dot) {
  // dM/dt = (dM/dq2) * qd2; only q2 enters M.
  const double s2 = std::sin(q(1));
  const double d = -p.p3 * s2 * q_dot(1);
  Eigen::Matrix2d Md;
  Md << 2.0 * d, d,
        d, 0.0;
  return Md;
}

Eigen::Matrix2d coriolis(const RobotParams& p, const Eigen::Vector2d& q,
                         const Eigen::Vector2d& q_dot) {
  const double s2 = std::sin(q(1));
  Eigen::Matrix2d C;
  C << -p.p3 * s2 * q_dot(1), -p.p3 * s2 * (q_dot(0) + q_dot(1)),
       p.p3 * s2 * q_dot(0), 0.0;
  return C;
}

Eigen::Vector2d friction(const RobotParams& p, const Eigen::Vector2d& q_dot) {
  return {p.fd1 * q_dot(0) + p.fs1 * std::tanh(p.kappa_s * q_dot(0)),
          p.fd2 * q_dot(1) + p.fs2 * std::tanh(p.kappa_s * q_dot(1))};
}

Eigen::Vector2d gravity_vec(const RobotParams& p, const Eigen::Vector2d& q) {
  if (!p.gravity_on) return Eigen::Vector2d::Zero();
  const double a = (p.m1 * p.l1 / 2.0 + p.m2 * p.l1) * p.g;
  const double b = p.m2 * p.l2 / 2.0 * p.g;
  const double c1 = std::cos(q(0));
  const double c12 = std::cos(q(0) + q(1));
  return {a * c1 + b * c12, b * c12};
}

Eigen::Vector2d forward_dynamics(const RobotParams& p, const PlantState& s,
                                 const Eigen::Vector2d& tau) {
  if (!tau.allFinite()) throw NumericError("forward_dynamics: non-finite torque");
  const Eigen::Vector2d rhs =
      tau - coriolis(p, s.q, s.q_dot) * s.q_dot - gravity_vec(p, s.q) - friction(p, s.q_dot);
  return inertia(p, s.q).ldlt().solve(rhs);
}

DesiredPoint desired_trajectory(double t, TrajectoryMode mode) {
  const double amp = 3.0 * M_PI / 8.0;
  const double w = M_PI / 2.0;
  const double s = std::sin(w * t);
  const double c = std::cos(w * t);

  double f, fd, fdd;  // prefactor and its derivatives
  if (mode == TrajectoryMode::Literal) {
    f = 1.0 - std::exp(-0.1);
    fd = 0.0;
    fdd = 0.0;
  } else {
    const double e = std::exp(-0.1 * t);
    f = 1.0 - e;
    fd = 0.1 * e;
    fdd = -0.01 * e;
  }

  DesiredPoint d;
  const double pos = amp * f * s;
  const double vel = amp * (fd * s + f * w * c);
  const double acc = amp * (fdd * s + 2.0 * fd * w * c - f * w * w * s);
  d.q_d = Eigen::Vector2d::Constant(pos);
  d.q_d_dot = Eigen::Vector2d::Constant(vel);
  d.q_d_ddot = Eigen::Vector2d::Constant(acc);
  return d;
}

}  // namespace sslb
