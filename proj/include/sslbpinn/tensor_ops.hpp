#pragma once

// Vectorization, Kronecker product and sign utilities shared by every
// other module. vec() stacks columns, so vec(ABC) = (C^T (x) A) vec(B).

#include "sslbpinn/common.hpp"

namespace sslb {

// Column-major stacking: vec(A)[(j)*rows + i] = A(i,j).
Vec vec(const Mat& A);

// Inverse of vec(); throws DimensionError if v.size() != rows*cols.
Mat unvec(const Vec& v, Eigen::Index rows, Eigen::Index cols);

// Kronecker product, block structure [a_ij * B].
Mat kron(const Mat& A, const Mat& B);

// Convenience for vectors treated as single-column matrices.
Vec kron_vec(const Vec& a, const Vec& b);

// sgn(x): 1 if x > 0, 0 if x == 0 (including -0.0), -1 if x < 0.
double sgn(double x);

// Element-wise sgn.
Vec sgn_vec(const Vec& v);

}  // namespace sslb
