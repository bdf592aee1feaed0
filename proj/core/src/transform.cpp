#include "netconv/transform.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "eigen_support.hpp"

namespace netconv::transform {

namespace {

constexpr double kSingularRcond = 1e-13;

std::string pair_label(Representation from, Representation to) {
  return to_string(from) + "->" + to_string(to);
}

}  // namespace

TransformMatrix::TransformMatrix(ComplexMatrix p) : p_(std::move(p)) {
  if (!p_.is_square() || p_.rows() == 0 || p_.rows() % 2 != 0) {
    throw Error("TransformMatrix: expected a square 2Nx2N matrix");
  }
  p_.check_finite();
}

TransformMatrix TransformMatrix::identity(int n_ports) {
  return TransformMatrix(ComplexMatrix::identity(2 * static_cast<std::size_t>(n_ports)));
}

ComplexMatrix TransformMatrix::p11() const {
  const std::size_t n = p_.rows() / 2;
  return p_.block(0, 0, n, n);
}
ComplexMatrix TransformMatrix::p12() const {
  const std::size_t n = p_.rows() / 2;
  return p_.block(0, n, n, n);
}
ComplexMatrix TransformMatrix::p21() const {
  const std::size_t n = p_.rows() / 2;
  return p_.block(n, 0, n, n);
}
ComplexMatrix TransformMatrix::p22() const {
  const std::size_t n = p_.rows() / 2;
  return p_.block(n, n, n, n);
}

ComplexMatrix stacking_matrix(Representation rep, const PortNormalization& norm,
                              const WaveConvention& convention) {
  const int n = norm.ports();
  require_port_count(rep, n);
  const RepresentationDescriptor desc = descriptor(rep, n);

  std::vector<Complex> k(n);
  for (int p = 1; p <= n; ++p) {
    k[p - 1] = wave_k(convention, norm.z0_of_port(p));
  }

  // Basis columns: [V1..VN, I1..IN].
  ComplexMatrix m(2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n));
  std::size_t row = 0;
  auto emit = [&](const SignalRef& ref) {
    const std::size_t vcol = static_cast<std::size_t>(ref.port - 1);
    const std::size_t icol = vcol + static_cast<std::size_t>(n);
    const Complex sign{static_cast<double>(ref.sign), 0.0};
    const Complex z0 = norm.z0_of_port(ref.port);
    const Complex kp = k[ref.port - 1];
    switch (ref.kind) {
      case SignalKind::Voltage:
        m(row, vcol) = sign;
        break;
      case SignalKind::Current:
        m(row, icol) = sign;
        break;
      case SignalKind::IncidentWave:
        m(row, vcol) = sign * kp;
        m(row, icol) = sign * kp * z0;
        break;
      case SignalKind::ReflectedWave:
        m(row, vcol) = sign * kp;
        m(row, icol) = -sign * kp * z0;
        break;
    }
    ++row;
  };
  for (const auto& ref : desc.outputs) emit(ref);
  for (const auto& ref : desc.inputs) emit(ref);
  return m;
}

TransformMatrix build_p(Representation from, Representation to,
                        const PortNormalization& norm,
                        const WaveConvention& convention) {
  const int n = norm.ports();
  require_port_count(from, n);
  require_port_count(to, n);
  if (from == to) return TransformMatrix::identity(n);

  const ComplexMatrix m_from = stacking_matrix(from, norm, convention);
  const ComplexMatrix m_to = stacking_matrix(to, norm, convention);

  // P solves P * M_from = M_to. M_from maps a complete signal basis, so
  // it cannot be singular for a valid descriptor; treat failure as a
  // logic error rather than a recoverable condition.
  const Eigen::MatrixXcd ef = detail::to_eigen(m_from);
  if (detail::rcond(ef) < 1e-10) {
    throw std::logic_error("build_p: stacking matrix unexpectedly singular for " +
                           pair_label(from, to));
  }
  const Eigen::MatrixXcd et = detail::to_eigen(m_to);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(ef.transpose());
  Eigen::MatrixXcd p_t = lu.solve(et.transpose());
  return TransformMatrix(detail::from_eigen(p_t.transpose()));
}

ComplexMatrix moebius(const TransformMatrix& p, const ComplexMatrix& r) {
  const std::size_t n = static_cast<std::size_t>(p.half());
  if (!r.is_square() || r.rows() != n) {
    throw Error("moebius: R must be NxN with N matching the transform");
  }
  const Eigen::MatrixXcd er = detail::to_eigen(r);
  const Eigen::MatrixXcd num =
      detail::to_eigen(p.p11()) * er + detail::to_eigen(p.p12());
  const Eigen::MatrixXcd den =
      detail::to_eigen(p.p21()) * er + detail::to_eigen(p.p22());

  const double rc = detail::rcond(den);
  if (rc < kSingularRcond) {
    std::ostringstream msg;
    msg << "target representation does not exist for this network "
        << "(denominator reciprocal condition " << rc << ")";
    throw SingularConversion(msg.str());
  }

  // Solve den^T X^T = num^T instead of forming den^-1.
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(den.transpose());
  Eigen::MatrixXcd result_t = lu.solve(num.transpose());
  ComplexMatrix result = detail::from_eigen(result_t.transpose());
  result.check_finite();
  return result;
}

NetworkPoint convert(const NetworkPoint& point, Representation target) {
  require_port_count(target, point.ports());
  if (target == point.rep) return point;
  const TransformMatrix p = build_p(point.rep, target, point.norm, point.convention);
  ComplexMatrix converted = moebius(p, point.matrix);
  return NetworkPoint(point.frequency_hz, target, std::move(converted),
                      point.norm, point.convention);
}

NetworkSweep convert(const NetworkSweep& sweep, Representation target) {
  NetworkSweep out;
  for (const auto& point : sweep) {
    try {
      out.append(convert(point, target));
    } catch (const SingularConversion& e) {
      std::ostringstream msg;
      msg << pair_label(point.rep, target) << " at " << point.frequency_hz
          << " Hz: " << e.what();
      throw SingularConversion(msg.str());
    }
  }
  return out;
}

ComplexMatrix a_to_b(const ComplexMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw Error("a_to_b: expected a 2x2 chain matrix");
  }
  a.check_finite();
  const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const double scale = a.max_abs();
  if (std::abs(det) <= kSingularRcond * std::max(scale * scale, 1e-300)) {
    throw SingularConversion("a_to_b: chain matrix is singular");
  }
  ComplexMatrix inv(2, 2);
  inv(0, 0) = a(1, 1) / det;
  inv(0, 1) = -a(0, 1) / det;
  inv(1, 0) = -a(1, 0) / det;
  inv(1, 1) = a(0, 0) / det;
  return inv;
}

NetworkPoint cascade(const NetworkPoint& first, const NetworkPoint& second) {
  if (first.ports() != 2 || second.ports() != 2) {
    throw PortCountMismatch("cascade: both operands must be 2-ports");
  }
  const double f1 = first.frequency_hz;
  const double f2 = second.frequency_hz;
  if (std::abs(f1 - f2) > 1e-9 * std::max({std::abs(f1), std::abs(f2), 1.0})) {
    throw SweepMismatch("cascade: operand frequencies differ");
  }
  if (first.norm != second.norm || first.convention != second.convention) {
    throw SweepMismatch("cascade: operands must share normalization and convention");
  }
  const NetworkPoint a1 = convert(first, Representation::A);
  const NetworkPoint a2 = convert(second, Representation::A);
  return NetworkPoint(first.frequency_hz, Representation::A,
                      a1.matrix * a2.matrix, first.norm, first.convention);
}

NetworkSweep cascade(const NetworkSweep& first, const NetworkSweep& second) {
  if (first.size() != second.size()) {
    throw SweepMismatch("cascade: sweeps have different lengths");
  }
  NetworkSweep out;
  for (std::size_t i = 0; i < first.size(); ++i) {
    out.append(cascade(first[i], second[i]));
  }
  return out;
}

}  // namespace netconv::transform
