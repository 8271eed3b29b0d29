#pragma once

// Tracking-error signals and the adaptive control input. The vectorized
// network outputs enter the torque through the regressor (v^T (x) I_n),
// whose defining identity regressor(v) * vec(A) = A v ties them back to the
// matrix products of the dynamics.

#include "sslbpinn/common.hpp"
#include "sslbpinn/plant.hpp"

namespace sslb {

struct ErrorState {
  Vec e;      // q - q_d
  Vec e_dot;  // qdot - q_d_dot
  Vec r;      // e_dot + alpha e
};

struct ControlGains {
  double alpha = 3.8;
  double k1 = 15.1;
  double k2 = 0.5;
  double k3 = 0.5;
  double k4 = 0.3;
  // 0 keeps sgn(r) discontinuous; kappa > 0 substitutes tanh(kappa r).
  double sgn_smoothing = 0.0;
};

ErrorState tracking_errors(const Vec& q, const Vec& q_dot, const DesiredPoint& desired,
                           double alpha);

// (v^T (x) I_n), n = v.size().
Mat regressor(const Vec& v);

// Vectorized estimates as consumed by the control law. phi_G may be empty
// (gravity disabled); it is then treated as zeros.
struct DnnOutputs {
  Vec phi_M;  // length n^2
  Vec phi_C;  // length n^2
  Vec phi_F;  // length n
  Vec phi_G;  // length n or empty
};

// tau = regressor(qd_dot - alpha e) phi_C + phi_G + phi_F - k1 r - e
//       + regressor(qd_ddot - alpha e_dot) phi_M
//       - sgn(r) (k2 + k3 ||qd_dot - alpha e|| + k4 ||qd_ddot - alpha e_dot||),
// using ||(v^T (x) I_n)||_2 = ||v||_2 for the robust-gain norms.
// Throws NumericError when the network outputs are non-finite.
Vec control_input(const ErrorState& errors, const DesiredPoint& desired,
                  const DnnOutputs& outputs, const ControlGains& gains);

}  // namespace sslb
