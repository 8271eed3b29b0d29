#include "sslbpinn/skew_observer.hpp"

#include "sslbpinn/tensor_ops.hpp"

namespace sslb {

double skew_robust_scalar(double E_tilde, const Vec& x_M_dot, const SkewGains& gains) {
  return gains.gamma1 * E_tilde +
         (gains.gamma2 + gains.gamma3 + gains.gamma4 * x_M_dot.norm()) * sgn(E_tilde);
}

Vec mu(const Mat& jac_M, const Vec& theta_M_rate_prev, double E_tilde, const Vec& x_M_dot,
       const SkewGains& gains) {
  const Vec xi_kron = kron_vec(gains.xi, gains.xi);
  Vec out = -(jac_M * theta_M_rate_prev);
  out += (skew_robust_scalar(E_tilde, x_M_dot, gains) / xi_kron.norm()) * xi_kron;
  return out;
}

double e_hat_rate_literal(const Mat& jac_M, const Mat& input_jac_M, const Vec& theta_M_rate_prev,
                          const Vec& x_M_dot, const Vec& phi_C, double E_hat,
                          const SkewGains& gains) {
  const Vec xi_kron = kron_vec(gains.xi, gains.xi);
  const Vec phi_M_dot = input_jac_M * x_M_dot + jac_M * theta_M_rate_prev;
  const Vec inner =
      phi_M_dot - 2.0 * phi_C + mu(jac_M, theta_M_rate_prev, e_tilde(E_hat), x_M_dot, gains);
  const double rate = xi_kron.dot(inner);
  if (!std::isfinite(rate)) throw NumericError("e_hat_rate: non-finite");
  return rate;
}

double e_hat_rate_simplified(const Mat& input_jac_M, const Vec& x_M_dot, const Vec& phi_C,
                             double E_hat, const SkewGains& gains) {
  const Vec xi_kron = kron_vec(gains.xi, gains.xi);
  const double rate = xi_kron.dot(input_jac_M * x_M_dot - 2.0 * phi_C) +
                      xi_kron.norm() * skew_robust_scalar(e_tilde(E_hat), x_M_dot, gains);
  if (!std::isfinite(rate)) throw NumericError("e_hat_rate: non-finite");
  return rate;
}

}  // namespace sslb
