#pragma once

// Skew-symmetric prediction error. The true integral E of xi^T (Mdot - 2C) xi
// vanishes identically, so E_tilde = -E_hat and only E_hat is integrated.
// E_hat_dot contracts (xi (x) xi) against d/dt Phi_M - 2 Phi_C plus the mu
// correction. Scalar terms inside mu broadcast onto the normalized
// (xi (x) xi) direction; the simplified form carries them outside the
// contraction as ||xi (x) xi||-weighted scalars. Both forms agree when they
// share the same (lagged) theta_M rate.

#include "sslbpinn/common.hpp"

namespace sslb {

struct SkewGains {
  double gamma1 = 186.1;
  double gamma2 = 1.2;
  double gamma3 = 6.5;
  double gamma4 = 2.7;
  Vec xi = Vec::Constant(2, 0.4);
};

inline double e_tilde(double E_hat) { return -E_hat; }

// gamma1 E~ + (gamma2 + gamma3 + gamma4 ||x_M_dot||) sgn(E~)
double skew_robust_scalar(double E_tilde, const Vec& x_M_dot, const SkewGains& gains);

// mu = -Phi'_M theta_M_rate_prev + robust_scalar * (xi (x) xi)/||xi (x) xi||.
Vec mu(const Mat& jac_M, const Vec& theta_M_rate_prev, double E_tilde, const Vec& x_M_dot,
       const SkewGains& gains);

// Literal form of E_hat_dot:
//   (xi (x) xi)^T ( input_jac_M x_M_dot + Phi'_M theta_M_rate_prev - 2 phi_C + mu ).
double e_hat_rate_literal(const Mat& jac_M, const Mat& input_jac_M, const Vec& theta_M_rate_prev,
                          const Vec& x_M_dot, const Vec& phi_C, double E_hat,
                          const SkewGains& gains);

// Simplified form after the Phi'_M theta_M_rate cancellation:
//   (xi (x) xi)^T ( input_jac_M x_M_dot - 2 phi_C ) + ||xi (x) xi|| robust_scalar.
double e_hat_rate_simplified(const Mat& input_jac_M, const Vec& x_M_dot, const Vec& phi_C,
                             double E_hat, const SkewGains& gains);

}  // namespace sslb
