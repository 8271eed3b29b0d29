#include "sslbpinn/adaptation.hpp"

namespace sslb {

Vec proj(const Vec& rate, const Vec& theta, double bound, double delta) {
  const double norm = theta.norm();
  if (norm > bound + 1e-9)
    throw NumericError("proj: theta outside its bound (" + std::to_string(norm) + " > " +
                       std::to_string(bound) + ")");

  const double inner = (1.0 - delta) * bound;
  if (norm < inner || norm == 0.0) return rate;
  const double radial = theta.dot(rate);
  if (radial <= 0.0) return rate;

  double scale = (norm - inner) / (delta * bound);
  if (scale > 1.0) scale = 1.0;
  return rate - (scale * radial / (norm * norm)) * theta;
}

namespace {

// Phi'^T (regressor(w)^T r) without forming the n x n^2 regressor:
// regressor(w)^T r = vec(r w^T).
Vec tracking_term(const Mat& jac, const Vec& w, const Vec& r) {
  const Eigen::Index n = r.size();
  Vec rw(n * n);
  for (Eigen::Index j = 0; j < n; ++j) rw.segment(j * n, n) = w(j) * r;
  return jac.transpose() * rw;
}

}  // namespace

Vec theta_M_rate(const Mat& jac, const Mat& jac_rate, const Vec& xi_kron, double E_tilde,
                 const Vec& w_M, const Vec& r, double gamma, const Vec& theta, double bound,
                 double delta, bool include_skew) {
  Vec inner = -tracking_term(jac, w_M, r);
  if (include_skew) inner += jac_rate.transpose() * (xi_kron * E_tilde);
  return proj(gamma * inner, theta, bound, delta);
}

Vec theta_C_rate(const Mat& jac, const Vec& xi_kron, double E_tilde, const Vec& w_C, const Vec& r,
                 double gamma, const Vec& theta, double bound, double delta, bool include_skew) {
  Vec inner = -tracking_term(jac, w_C, r);
  if (include_skew) inner += jac.transpose() * (xi_kron * (-2.0 * E_tilde));
  return proj(gamma * inner, theta, bound, delta);
}

Vec theta_FG_rate(const Mat& jac, const Vec& r, double gamma, const Vec& theta, double bound,
                  double delta) {
  return proj(-gamma * (jac.transpose() * r), theta, bound, delta);
}

}  // namespace sslb
