#include "sslbpinn/tensor_ops.hpp"

namespace sslb {

Vec vec(const Mat& A) {
  return Eigen::Map<const Vec>(A.data(), A.size());
}

Mat unvec(const Vec& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) {
    throw DimensionError("unvec: vector length " + std::to_string(v.size()) +
                         " != " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  return Eigen::Map<const Mat>(v.data(), rows, cols);
}

Mat kron(const Mat& A, const Mat& B) {
  Mat out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

double sgn(double x) {
  if (x > 0.0) return 1.0;
  if (x < 0.0) return -1.0;
  return 0.0;
}

Vec sgn_vec(const Vec& v) {
  return v.unaryExpr([](double x) { return sgn(x); });
}

}  // namespace sslb
