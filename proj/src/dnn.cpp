#include "sslbpinn/dnn.hpp"

#include <cmath>

namespace sslb {

ActEval activation(Activation kind, double y) {
  switch (kind) {
    case Activation::Tanh: {
      const double t = std::tanh(y);
      const double d1 = 1.0 - t * t;
      return {t, d1, -2.0 * t * d1};
    }
    case Activation::Logistic: {
      const double s = 1.0 / (1.0 + std::exp(-y));
      const double d1 = s * (1.0 - s);
      return {s, d1, d1 * (1.0 - 2.0 * s)};
    }
  }
  throw std::invalid_argument("activation: unknown kind");
}

namespace {

void eval_activation(Activation kind, const Vec& y, Vec& f, Vec& d1, Vec& d2) {
  f.resize(y.size());
  d1.resize(y.size());
  d2.resize(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const ActEval a = activation(kind, y(i));
    f(i) = a.f;
    d1(i) = a.d1;
    d2(i) = a.d2;
  }
}

}  // namespace

DnnArch DnnArch::mlp(int input_dim, int output_dim, int hidden_layers, int hidden_width,
                     Activation act) {
  DnnArch arch;
  arch.input_dim = input_dim;
  arch.output_dim = output_dim;
  arch.act = act;
  arch.widths.resize(static_cast<size_t>(hidden_layers) + 2);
  arch.widths.front() = input_dim + 1;
  for (int j = 1; j <= hidden_layers; ++j) arch.widths[static_cast<size_t>(j)] = hidden_width;
  arch.widths.back() = output_dim;
  arch.validate();
  return arch;
}

void DnnArch::validate() const {
  if (widths.size() < 2) throw DimensionError("DnnArch: need at least input and output widths");
  if (widths.front() != input_dim + 1)
    throw DimensionError("DnnArch: widths[0] must equal input_dim + 1");
  if (widths.back() != output_dim)
    throw DimensionError("DnnArch: widths[k+1] must equal output_dim");
  for (int w : widths)
    if (w < 1) throw DimensionError("DnnArch: all layer widths must be >= 1");
}

Eigen::Index DnnArch::layer_offset(int j) const {
  Eigen::Index off = 0;
  for (int l = 0; l < j; ++l) off += layer_rows(l) * layer_cols(l);
  return off;
}

Eigen::Index DnnArch::param_count() const {
  return layer_offset(hidden_layers() + 1);
}

Eigen::Map<const Mat> layer_view(const DnnArch& arch, const Vec& theta, int j) {
  return {theta.data() + arch.layer_offset(j), arch.layer_rows(j), arch.layer_cols(j)};
}

ForwardPass forward_pass(const DnnArch& arch, const Vec& theta, const Vec& x) {
  if (x.size() != arch.input_dim) throw DimensionError("forward: input dimension mismatch");
  if (theta.size() != arch.param_count()) throw DimensionError("forward: theta size mismatch");

  const int k = arch.hidden_layers();
  ForwardPass fp;
  fp.x_aug.resize(x.size() + 1);
  fp.x_aug << x, 1.0;
  fp.pre.resize(static_cast<size_t>(k) + 1);
  fp.act.resize(static_cast<size_t>(k) + 1);
  fp.act_d1.resize(static_cast<size_t>(k) + 1);
  fp.act_d2.resize(static_cast<size_t>(k) + 1);

  fp.pre[0] = layer_view(arch, theta, 0).transpose() * fp.x_aug;
  for (int j = 1; j <= k; ++j) {
    const auto ju = static_cast<size_t>(j);
    eval_activation(arch.act, fp.pre[ju - 1], fp.act[ju], fp.act_d1[ju], fp.act_d2[ju]);
    fp.pre[ju] = layer_view(arch, theta, j).transpose() * fp.act[ju];
  }
  return fp;
}

Vec forward(const DnnArch& arch, const Vec& theta, const Vec& x) {
  return forward_pass(arch, theta, x).output();
}

Mat weight_jacobian(const DnnArch& arch, const Vec& theta, const ForwardPass& fp) {
  const int k = arch.hidden_layers();
  const Eigen::Index n_out = arch.output_dim;
  Mat jac(n_out, arch.param_count());

  // Walk layers top-down carrying the suffix product S_j.
  Mat suffix = Mat::Identity(n_out, n_out);
  for (int j = k; j >= 0; --j) {
    const Vec& b = (j == 0) ? fp.x_aug : fp.act[static_cast<size_t>(j)];
    const Eigen::Index off = arch.layer_offset(j);
    const Eigen::Index rows = arch.layer_rows(j);
    for (Eigen::Index m = 0; m < arch.layer_cols(j); ++m)
      jac.block(0, off + m * rows, n_out, rows) = suffix.col(m) * b.transpose();
    if (j >= 1) {
      suffix = suffix * (layer_view(arch, theta, j).transpose() *
                         fp.act_d1[static_cast<size_t>(j)].asDiagonal());
    }
  }
  return jac;
}

Mat weight_jacobian(const DnnArch& arch, const Vec& theta, const Vec& x) {
  return weight_jacobian(arch, theta, forward_pass(arch, theta, x));
}

Mat input_jacobian(const DnnArch& arch, const Vec& theta, const ForwardPass& fp) {
  const int k = arch.hidden_layers();
  Mat suffix = Mat::Identity(arch.output_dim, arch.output_dim);
  for (int j = k; j >= 1; --j) {
    suffix = suffix * (layer_view(arch, theta, j).transpose() *
                       fp.act_d1[static_cast<size_t>(j)].asDiagonal());
  }
  // Bias row of the augmented input does not move with x.
  return suffix * layer_view(arch, theta, 0).topRows(arch.input_dim).transpose();
}

Mat input_jacobian(const DnnArch& arch, const Vec& theta, const Vec& x) {
  return input_jacobian(arch, theta, forward_pass(arch, theta, x));
}

std::pair<Mat, Mat> weight_jacobian_and_rate(const DnnArch& arch, const Vec& theta,
                                             const ForwardPass& fp, const Vec& x_dot,
                                             const Vec& theta_dot) {
  if (x_dot.size() != arch.input_dim)
    throw DimensionError("weight_jacobian_rate: x_dot dimension mismatch");
  if (theta_dot.size() != theta.size())
    throw DimensionError("weight_jacobian_rate: theta_dot size mismatch");

  const int k = arch.hidden_layers();
  const Eigen::Index n_out = arch.output_dim;

  Vec x_aug_dot(fp.x_aug.size());
  x_aug_dot << x_dot, 0.0;

  // Propagate pre-activation rates, then act rates and act' rates:
  //   pre_dot_0 = v0_dot^T x_a + v0^T x_a_dot
  //   pre_dot_j = vj_dot^T act_j + vj^T (act'_j .* pre_dot_{j-1})
  std::vector<Vec> pre_dot(static_cast<size_t>(k) + 1);
  std::vector<Vec> act_dot(static_cast<size_t>(k) + 1);
  std::vector<Vec> act_d1_dot(static_cast<size_t>(k) + 1);
  pre_dot[0] = layer_view(arch, theta_dot, 0).transpose() * fp.x_aug +
               layer_view(arch, theta, 0).transpose() * x_aug_dot;
  for (int j = 1; j <= k; ++j) {
    const auto ju = static_cast<size_t>(j);
    act_dot[ju] = fp.act_d1[ju].cwiseProduct(pre_dot[ju - 1]);
    act_d1_dot[ju] = fp.act_d2[ju].cwiseProduct(pre_dot[ju - 1]);
    pre_dot[ju] = layer_view(arch, theta_dot, j).transpose() * fp.act[ju] +
                  layer_view(arch, theta, j).transpose() * act_dot[ju];
  }

  Mat jac(n_out, arch.param_count());
  Mat jac_rate(n_out, arch.param_count());
  Mat suffix = Mat::Identity(n_out, n_out);
  Mat suffix_dot = Mat::Zero(n_out, n_out);
  for (int j = k; j >= 0; --j) {
    const auto ju = static_cast<size_t>(j);
    const Vec& b = (j == 0) ? fp.x_aug : fp.act[ju];
    const Vec& b_dot = (j == 0) ? x_aug_dot : act_dot[ju];
    const Eigen::Index off = arch.layer_offset(j);
    const Eigen::Index rows = arch.layer_rows(j);
    for (Eigen::Index m = 0; m < arch.layer_cols(j); ++m) {
      jac.block(0, off + m * rows, n_out, rows) = suffix.col(m) * b.transpose();
      jac_rate.block(0, off + m * rows, n_out, rows) =
          suffix_dot.col(m) * b.transpose() + suffix.col(m) * b_dot.transpose();
    }
    if (j >= 1) {
      const Mat step = layer_view(arch, theta, j).transpose() * fp.act_d1[ju].asDiagonal();
      const Mat step_dot = layer_view(arch, theta_dot, j).transpose() * fp.act_d1[ju].asDiagonal() +
                           layer_view(arch, theta, j).transpose() * act_d1_dot[ju].asDiagonal();
      suffix_dot = suffix_dot * step + suffix * step_dot;
      suffix = suffix * step;
    }
  }
  return {std::move(jac), std::move(jac_rate)};
}

Mat weight_jacobian_rate(const DnnArch& arch, const Vec& theta, const ForwardPass& fp,
                         const Vec& x_dot, const Vec& theta_dot) {
  return weight_jacobian_and_rate(arch, theta, fp, x_dot, theta_dot).second;
}

Mat weight_jacobian_rate(const DnnArch& arch, const Vec& theta, const Vec& x, const Vec& x_dot,
                         const Vec& theta_dot) {
  return weight_jacobian_rate(arch, theta, forward_pass(arch, theta, x), x_dot, theta_dot);
}

DnnParams init_weights(const DnnArch& arch, double theta_bound, Rng& rng) {
  DnnParams params;
  params.theta_bound = theta_bound;
  params.theta.resize(arch.param_count());
  for (Eigen::Index i = 0; i < params.theta.size(); ++i) params.theta(i) = rng.uniform_sym();
  const double norm = params.theta.norm();
  if (norm > theta_bound) params.theta *= theta_bound / norm;
  return params;
}

DnnParams init_weights(const DnnArch& arch, double theta_bound, std::uint64_t seed) {
  Rng rng(seed);
  return init_weights(arch, theta_bound, rng);
}

}  // namespace sslb
