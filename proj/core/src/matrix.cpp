#include "netconv/types.hpp"

#include <algorithm>

namespace netconv {

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(nr * nc);
  for (const auto& row : rows) {
    if (row.size() != nc) {
      throw Error("ComplexMatrix::from_rows: ragged rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(nr, nc, std::move(entries));
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0,
                                   std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error("ComplexMatrix::block: out of range");
  }
  ComplexMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) {
      out(r, c) = (*this)(r0 + r, c0 + c);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw Error("ComplexMatrix: shape mismatch in multiply");
  }
  ComplexMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex x = (*this)(r, k);
      if (x == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        out(r, c) += x * rhs(k, c);
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error("ComplexMatrix: shape mismatch in add");
  }
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) {
    out.entries_[i] += rhs.entries_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error("ComplexMatrix: shape mismatch in subtract");
  }
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) {
    out.entries_[i] -= rhs.entries_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
  ComplexMatrix out = *this;
  for (auto& e : out.entries_) e *= scalar;
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

void ComplexMatrix::check_finite() const {
  for (const auto& e : entries_) {
    if (!is_finite(e)) {
      throw NonFiniteValue("ComplexMatrix: non-finite entry");
    }
  }
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
    }
  }
  return m;
}

double rel_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double scale = std::max(b.max_abs(), 1e-300);
  return max_abs_diff(a, b) / scale;
}

}  // namespace netconv
