#include "sslbpinn/controller.hpp"

#include <cmath>

#include "sslbpinn/tensor_ops.hpp"

namespace sslb {

ErrorState tracking_errors(const Vec& q, const Vec& q_dot, const DesiredPoint& desired,
                           double alpha) {
  ErrorState es;
  es.e = q - desired.q_d;
  es.e_dot = q_dot - desired.q_d_dot;
  es.r = es.e_dot + alpha * es.e;
  return es;
}

Mat regressor(const Vec& v) {
  const Eigen::Index n = v.size();
  Mat out = Mat::Zero(n, n * n);
  for (Eigen::Index j = 0; j < n; ++j)
    out.block(0, j * n, n, n) = v(j) * Mat::Identity(n, n);
  return out;
}

namespace {

Vec switching_term(const Vec& r, double smoothing) {
  if (smoothing > 0.0)
    return r.unaryExpr([smoothing](double x) { return std::tanh(smoothing * x); });
  return sgn_vec(r);
}

}  // namespace

Vec control_input(const ErrorState& errors, const DesiredPoint& desired,
                  const DnnOutputs& outputs, const ControlGains& gains) {
  const Eigen::Index n = errors.e.size();
  if (!outputs.phi_M.allFinite() || !outputs.phi_C.allFinite() || !outputs.phi_F.allFinite() ||
      (outputs.phi_G.size() > 0 && !outputs.phi_G.allFinite()))
    throw NumericError("control_input: non-finite network output");
  if (outputs.phi_M.size() != n * n || outputs.phi_C.size() != n * n ||
      outputs.phi_F.size() != n || (outputs.phi_G.size() != 0 && outputs.phi_G.size() != n))
    throw DimensionError("control_input: network output dimension mismatch");

  const Vec w_c = desired.q_d_dot - gains.alpha * errors.e;
  const Vec w_m = desired.q_d_ddot - gains.alpha * errors.e_dot;

  Vec tau = regressor(w_c) * outputs.phi_C + outputs.phi_F - gains.k1 * errors.r - errors.e +
            regressor(w_m) * outputs.phi_M;
  if (outputs.phi_G.size() > 0) tau += outputs.phi_G;

  // ||(w^T (x) I_n)||_2 reduces to ||w||_2.
  const double robust_gain = gains.k2 + gains.k3 * w_c.norm() + gains.k4 * w_m.norm();
  tau -= switching_term(errors.r, gains.sgn_smoothing) * robust_gain;
  return tau;
}

}  // namespace sslb
