#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "netconv/errors.hpp"

namespace netconv {

using Complex = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense complex matrix with row-major storage. The carrier for every
/// parameter set and for the transformation matrices and their blocks.
///
/// Constructors reject non-finite entries so that singular intermediate
/// results surface as typed errors instead of propagating NaNs.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// rows x cols zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

  /// From row-major entries; throws NonFiniteValue / Error on bad input.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw Error("ComplexMatrix: entry count does not match rows*cols");
    }
    check_finite();
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
  }

  /// Row-wise literal, e.g. ComplexMatrix::from_rows({{1, 0}, {0, 1}}).
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  /// Copy of the nr x nc block whose top-left corner is (r0, c0).
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                      std::size_t nc) const;

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(Complex scalar) const;

  /// Largest entry magnitude (0 for an empty matrix).
  double max_abs() const;

  /// Throws NonFiniteValue if any entry is NaN or infinite.
  void check_finite() const;

  bool operator==(const ComplexMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

inline ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) {
  return m * scalar;
}

/// max_ij |a_ij - b_ij|; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_abs_diff normalized by max(|b|, floor); the relative deviation
/// used throughout the verification machinery.
double rel_deviation(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace netconv
