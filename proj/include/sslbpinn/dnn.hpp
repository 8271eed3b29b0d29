#pragma once

// Fully-connected feedforward network with analytic evaluation only: forward
// pass, Jacobian w.r.t. the packed weight vector, Jacobian w.r.t. the input,
// and the time derivative of the weight Jacobian along (x(t), theta(t)).
//
// Layer convention: widths[0] = input_dim + 1 (augmented input [x; 1] folds
// the biases into the first weight matrix), widths[k+1] = output_dim, and
// layer matrix j has shape widths[j] x widths[j+1]. The packed weight vector
// theta concatenates vec(v_0), ..., vec(v_k) column-major.
//
// Pre-activations propagate as
//   pre_0 = v_0^T [x; 1],   pre_j = v_j^T act(pre_{j-1})   j = 1..k,
// and the network output is pre_k. The weight Jacobian blocks are
//   d(out)/d vec(v_j) = S_j (I (x) b_j^T),
// where b_0 = [x; 1], b_j = act(pre_{j-1}), and S_j is the right-to-left
// product of v_l^T diag(act'(pre_{l-1})) over l = j+1..k (identity if empty).

#include <cstdint>
#include <utility>
#include <vector>

#include "sslbpinn/common.hpp"
#include "sslbpinn/rng.hpp"

namespace sslb {

enum class Activation { Tanh, Logistic };

// phi, phi', phi'' at a scalar pre-activation.
struct ActEval {
  double f, d1, d2;
};
ActEval activation(Activation kind, double y);

struct DnnArch {
  int input_dim = 0;
  int output_dim = 0;
  std::vector<int> widths;  // widths[0..k+1], widths[0] = input_dim + 1
  Activation act = Activation::Tanh;

  // k hidden layers of a common width.
  static DnnArch mlp(int input_dim, int output_dim, int hidden_layers, int hidden_width,
                     Activation act = Activation::Tanh);

  int hidden_layers() const { return static_cast<int>(widths.size()) - 2; }
  Eigen::Index layer_rows(int j) const { return widths[static_cast<size_t>(j)]; }
  Eigen::Index layer_cols(int j) const { return widths[static_cast<size_t>(j) + 1]; }
  Eigen::Index layer_offset(int j) const;  // start of vec(v_j) within theta
  Eigen::Index param_count() const;
  void validate() const;  // throws DimensionError on malformed widths
};

struct DnnParams {
  Vec theta;
  double theta_bound = 0.0;  // radius of the admissible ball
};

// View of layer matrix j inside the packed weight vector (no copy).
Eigen::Map<const Mat> layer_view(const DnnArch& arch, const Vec& theta, int j);

// Everything the Jacobians reuse from one forward evaluation.
struct ForwardPass {
  Vec x_aug;                 // [x; 1]
  std::vector<Vec> pre;      // pre[j], j = 0..k
  std::vector<Vec> act;      // act[j] = phi(pre[j-1]), j = 1..k (act[0] empty)
  std::vector<Vec> act_d1;   // phi'(pre[j-1])
  std::vector<Vec> act_d2;   // phi''(pre[j-1])
  const Vec& output() const { return pre.back(); }
};

ForwardPass forward_pass(const DnnArch& arch, const Vec& theta, const Vec& x);
Vec forward(const DnnArch& arch, const Vec& theta, const Vec& x);

Mat weight_jacobian(const DnnArch& arch, const Vec& theta, const ForwardPass& fp);
Mat weight_jacobian(const DnnArch& arch, const Vec& theta, const Vec& x);

Mat input_jacobian(const DnnArch& arch, const Vec& theta, const ForwardPass& fp);
Mat input_jacobian(const DnnArch& arch, const Vec& theta, const Vec& x);

// d/dt of the weight Jacobian along x(t) = x + t*x_dot, theta(t) = theta + t*theta_dot.
// Returns {weight_jacobian, its rate}; the combined form shares the suffix products.
std::pair<Mat, Mat> weight_jacobian_and_rate(const DnnArch& arch, const Vec& theta,
                                             const ForwardPass& fp, const Vec& x_dot,
                                             const Vec& theta_dot);
Mat weight_jacobian_rate(const DnnArch& arch, const Vec& theta, const ForwardPass& fp,
                         const Vec& x_dot, const Vec& theta_dot);
Mat weight_jacobian_rate(const DnnArch& arch, const Vec& theta, const Vec& x,
                         const Vec& x_dot, const Vec& theta_dot);

// i.i.d. U(-1,1) entries; rescaled onto the ball boundary if the draw lands outside.
DnnParams init_weights(const DnnArch& arch, double theta_bound, Rng& rng);
DnnParams init_weights(const DnnArch& arch, double theta_bound, std::uint64_t seed);

}  // namespace sslb
