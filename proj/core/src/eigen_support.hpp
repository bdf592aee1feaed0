#pragma once

// Internal bridge between ComplexMatrix and Eigen. Eigen stays out of
// the public headers; only the implementation files include this.

#include <Eigen/Dense>

#include "netconv/types.hpp"

namespace netconv::detail {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
    }
  }
  return out;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()),
                    static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
    }
  }
  return out;
}

/// Reciprocal condition number from the singular value spectrum.
inline double rcond(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0.0;
  return sv(sv.size() - 1) / sv(0);
}

inline double rcond(const ComplexMatrix& m) { return rcond(to_eigen(m)); }

}  // namespace netconv::detail
