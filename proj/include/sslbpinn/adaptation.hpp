#pragma once

// Real-time weight update laws with the continuous ball projection. The
// inertia and Coriolis laws carry the skew-symmetric prediction-error term;
// dropping it (include_skew = false, or E_tilde identically zero) recovers
// the tracking-error-only baseline laws.

#include "sslbpinn/common.hpp"

namespace sslb {

// Continuous projection onto the ball ||theta|| <= bound. Inside the inner
// ball (1 - delta) * bound, or when the rate points inward, the rate passes
// through; in the boundary layer the outward radial component is scaled off
// linearly so it vanishes at the boundary. Throws NumericError if theta
// already sits outside the ball (beyond 1e-9).
Vec proj(const Vec& rate, const Vec& theta, double bound, double delta = 0.05);

// Law for theta_M:
//   proj(Gamma ((d/dt Phi'_M)^T (xi (x) xi) E_tilde - Phi'_M^T regressor(w_M)^T r))
// with w_M = qd_ddot - alpha e_dot; the skew term is dropped when
// include_skew is false.
Vec theta_M_rate(const Mat& jac, const Mat& jac_rate, const Vec& xi_kron, double E_tilde,
                 const Vec& w_M, const Vec& r, double gamma, const Vec& theta, double bound,
                 double delta, bool include_skew);

// Law for theta_C:
//   proj(Gamma (-2 Phi'_C^T (xi (x) xi) E_tilde - Phi'_C^T regressor(w_C)^T r))
// with w_C = qd_dot - alpha e.
Vec theta_C_rate(const Mat& jac, const Vec& xi_kron, double E_tilde, const Vec& w_C, const Vec& r,
                 double gamma, const Vec& theta, double bound, double delta, bool include_skew);

// Shared law for theta_F and theta_G: proj(-Gamma Phi'^T r).
Vec theta_FG_rate(const Mat& jac, const Vec& r, double gamma, const Vec& theta, double bound,
                  double delta);

}  // namespace sslb
