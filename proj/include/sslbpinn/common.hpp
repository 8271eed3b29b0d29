#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace sslb {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Bad config file or key/value that fails schema validation.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File read/write failure.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimension mismatch between caller data and a module contract.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Non-finite value where the math requires finiteness (usually divergence).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool all_finite(const Vec& v) { return v.allFinite(); }
inline bool all_finite(const Mat& m) { return m.allFinite(); }

}  // namespace sslb
