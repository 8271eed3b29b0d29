#pragma once

// Ground-truth two-link planar revolute robot and the desired trajectory.
// The inertia/Coriolis terms use the standard lumped-constant form
//   M(q)  = [p1 + 2 p3 c2,  p2 + p3 c2;  p2 + p3 c2,  p2]
//   C(q,qd) = [-p3 s2 qd2,  -p3 s2 (qd1 + qd2);  p3 s2 qd1,  0]
// (Christoffel convention, so Mdot - 2C is skew-symmetric), with smoothed
// Coulomb-plus-viscous friction. Gravity is off for the planar configuration
// but a standard-form vector is available for tests that enable it.

#include "sslbpinn/common.hpp"

namespace sslb {

struct RobotParams {
  double m1 = 2.0, m2 = 2.0;    // link masses [kg]
  double l1 = 0.5, l2 = 0.5;    // link lengths [m]
  double p1 = 3.473;            // lumped inertia constants [kg m^2]
  double p2 = 0.196;
  double p3 = 0.242;
  double fd1 = 5.3, fd2 = 1.1;      // viscous friction [N m s/rad]
  double fs1 = 8.45, fs2 = 2.35;    // static friction [N m]
  double kappa_s = 100.0;           // static-friction smoothing slope [s/rad]
  bool gravity_on = false;
  double g = 9.81;
};

struct PlantState {
  Eigen::Vector2d q = Eigen::Vector2d::Zero();
  Eigen::Vector2d q_dot = Eigen::Vector2d::Zero();
};

enum class TrajectoryMode { Literal, Ramp };

struct DesiredPoint {
  Eigen::Vector2d q_d, q_d_dot, q_d_ddot;
};

Eigen::Matrix2d inertia(const RobotParams& p, const Eigen::Vector2d& q);
Eigen::Matrix2d inertia_rate(const RobotParams& p, const Eigen::Vector2d& q,
                             const Eigen::Vector2d& q_dot);
Eigen::Matrix2d coriolis(const RobotParams& p, const Eigen::Vector2d& q,
                         const Eigen::Vector2d& q_dot);
Eigen::Vector2d friction(const RobotParams& p, const Eigen::Vector2d& q_dot);
Eigen::Vector2d gravity_vec(const RobotParams& p, const Eigen::Vector2d& q);

// qddot = M^{-1} (tau - C qdot - G - F); throws NumericError on non-finite tau.
Eigen::Vector2d forward_dynamics(const RobotParams& p, const PlantState& s,
                                 const Eigen::Vector2d& tau);

// q_d(t) = pref * (3*pi/8) sin(pi t / 2) * [1; 1].
// Literal keeps the constant prefactor (1 - exp(-0.1)); Ramp uses the
// time-dependent (1 - exp(-0.1 t)) with exact analytic derivatives.
DesiredPoint desired_trajectory(double t, TrajectoryMode mode);

}  // namespace sslb
