#include "netconv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eigen_support.hpp"

namespace netconv::oracle {

// splitmix64; chosen over std distributions so that identical seeds
// give bit-identical streams on every platform.
std::uint64_t SampleRng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SampleRng::canonical() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Complex SampleRng::unit_complex() {
  const double angle = 2.0 * std::numbers::pi * canonical();
  return {std::cos(angle), std::sin(angle)};
}

Complex SampleRng::box_complex() {
  const double re = 2.0 * canonical() - 1.0;
  const double im = 2.0 * canonical() - 1.0;
  return {re, im};
}

namespace {

struct PortSlots {
  bool has_v = false, has_i = false, has_a = false, has_b = false;
  Complex v, i, a, b;
};

void assign(PortSlots& slot, SignalKind kind, Complex signal) {
  switch (kind) {
    case SignalKind::Voltage: slot.v = signal; slot.has_v = true; break;
    case SignalKind::Current: slot.i = signal; slot.has_i = true; break;
    case SignalKind::IncidentWave: slot.a = signal; slot.has_a = true; break;
    case SignalKind::ReflectedWave: slot.b = signal; slot.has_b = true; break;
  }
}

Complex signal_of(const PortSignalSample& s, const SignalRef& ref) {
  const std::size_t p = static_cast<std::size_t>(ref.port - 1);
  Complex value{};
  switch (ref.kind) {
    case SignalKind::Voltage: value = s.v[p]; break;
    case SignalKind::Current: value = s.i[p]; break;
    case SignalKind::IncidentWave: value = s.a[p]; break;
    case SignalKind::ReflectedWave: value = s.b[p]; break;
  }
  return static_cast<double>(ref.sign) * value;
}

}  // namespace

std::vector<PortSignalSample> sample_network(Representation rep,
                                             const ComplexMatrix& r,
                                             const PortNormalization& norm,
                                             const WaveConvention& convention,
                                             std::uint64_t seed) {
  const int n = norm.ports();
  require_port_count(rep, n);
  if (!r.is_square() || r.rows() != static_cast<std::size_t>(n)) {
    throw Error("sample_network: matrix shape does not match port count");
  }
  r.check_finite();

  const RepresentationDescriptor desc = descriptor(rep, n);
  std::vector<Complex> k(n);
  for (int p = 1; p <= n; ++p) k[p - 1] = wave_k(convention, norm.z0_of_port(p));

  SampleRng rng(seed);
  const int sample_count = 2 * n;  // twice the minimum, to expose inconsistency
  std::vector<PortSignalSample> samples;
  samples.reserve(sample_count);

  for (int s = 0; s < sample_count; ++s) {
    std::vector<Complex> u(n);
    for (auto& e : u) e = rng.unit_complex();
    std::vector<Complex> o(n, Complex{0.0, 0.0});
    for (int row = 0; row < n; ++row) {
      for (int col = 0; col < n; ++col) {
        o[row] += r(row, col) * u[col];
      }
    }

    // Slot value = sign * signal, so signal = sign * slot value.
    std::vector<PortSlots> slots(n);
    for (int idx = 0; idx < n; ++idx) {
      const SignalRef& oref = desc.outputs[idx];
      assign(slots[oref.port - 1], oref.kind, static_cast<double>(oref.sign) * o[idx]);
      const SignalRef& uref = desc.inputs[idx];
      assign(slots[uref.port - 1], uref.kind, static_cast<double>(uref.sign) * u[idx]);
    }

    PortSignalSample rec;
    rec.v.resize(n); rec.i.resize(n); rec.a.resize(n); rec.b.resize(n);
    for (int p = 0; p < n; ++p) {
      const Complex z0 = norm.z0_of_port(p + 1);
      const Complex kp = k[p];
      if (slots[p].has_v && slots[p].has_i) {
        rec.v[p] = slots[p].v;
        rec.i[p] = slots[p].i;
        const WavePair w = vi_to_waves(rec.v[p], rec.i[p], z0, kp);
        rec.a[p] = w.a;
        rec.b[p] = w.b;
      } else if (slots[p].has_a && slots[p].has_b) {
        rec.a[p] = slots[p].a;
        rec.b[p] = slots[p].b;
        const VoltageCurrent vi = waves_to_vi(rec.a[p], rec.b[p], z0, kp);
        rec.v[p] = vi.v;
        rec.i[p] = vi.i;
      } else {
        throw std::logic_error("sample_network: descriptor leaves a port underdetermined");
      }

      // Constructed consistency: (a, b) must reproduce from (v, i).
      const WavePair check = vi_to_waves(rec.v[p], rec.i[p], z0, kp);
      const double scale = std::max({std::abs(rec.a[p]), std::abs(rec.b[p]), 1.0});
      if (std::abs(check.a - rec.a[p]) > 1e-12 * scale ||
          std::abs(check.b - rec.b[p]) > 1e-12 * scale) {
        throw std::logic_error("sample_network: inconsistent port record");
      }
    }
    samples.push_back(std::move(rec));
  }
  return samples;
}

FitResult fit_representation(const std::vector<PortSignalSample>& samples,
                             Representation target,
                             const PortNormalization& norm,
                             const WaveConvention& convention) {
  (void)convention;  // the samples already carry consistent waves
  const int n = norm.ports();
  require_port_count(target, n);
  const int m = static_cast<int>(samples.size());
  if (m < n) {
    throw Error("fit_representation: need at least N samples");
  }
  const RepresentationDescriptor desc = descriptor(target, n);

  Eigen::MatrixXcd inputs(n, m);
  Eigen::MatrixXcd outputs(n, m);
  for (int col = 0; col < m; ++col) {
    const PortSignalSample& s = samples[col];
    if (static_cast<int>(s.v.size()) != n || static_cast<int>(s.i.size()) != n ||
        static_cast<int>(s.a.size()) != n || static_cast<int>(s.b.size()) != n) {
      throw Error("fit_representation: sample port count mismatch");
    }
    for (int row = 0; row < n; ++row) {
      outputs(row, col) = signal_of(s, desc.outputs[row]);
      inputs(row, col) = signal_of(s, desc.inputs[row]);
    }
  }

  // Least squares for R' in outputs = R' * inputs, via inputs^T R'^T = outputs^T.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(inputs.transpose(),
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double rc = (sv.size() == 0 || sv(0) == 0.0) ? 0.0 : sv(sv.size() - 1) / sv(0);
  if (rc < 1e-10) {
    throw RankDeficient(
        "fit_representation: target inputs are rank deficient; the " +
        to_string(target) + " representation does not exist for these samples");
  }
  Eigen::MatrixXcd fitted_t = svd.solve(outputs.transpose());
  Eigen::MatrixXcd fitted = fitted_t.transpose();

  const double out_norm = outputs.norm();
  const double residual =
      (outputs - fitted * inputs).norm() / std::max(out_norm, 1e-300);
  if (residual > 1e-6) {
    // Never hand back a matrix that does not actually reproduce the samples.
    throw RankDeficient("fit_representation: fit residual " + std::to_string(residual) +
                        " exceeds 1e-6; samples are inconsistent with " +
                        to_string(target));
  }
  return {detail::from_eigen(fitted), residual};
}

namespace {

ComplexMatrix checked_inverse(const ComplexMatrix& m, const char* what) {
  const Eigen::MatrixXcd em = detail::to_eigen(m);
  if (detail::rcond(em) < 1e-13) {
    throw SingularConversion(std::string(what) + ": matrix is singular");
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(em);
  return detail::from_eigen(lu.solve(Eigen::MatrixXcd::Identity(em.rows(), em.cols())));
}

}  // namespace

ComplexMatrix closed_form_convert(Representation from, Representation to,
                                  const ComplexMatrix& m, double z0) {
  if (!(z0 > 0.0) || !std::isfinite(z0)) {
    throw NonPositiveRealPart("closed_form_convert: z0 must be real positive");
  }
  if (!m.is_square() || m.rows() == 0) {
    throw Error("closed_form_convert: matrix must be square");
  }
  m.check_finite();
  const std::size_t n = m.rows();
  const ComplexMatrix ident = ComplexMatrix::identity(n);
  const Complex z{z0, 0.0};

  using enum Representation;
  if ((from == Z && to == Y) || (from == Y && to == Z)) {
    return checked_inverse(m, "closed_form_convert Z<->Y");
  }
  if (from == Z && to == S) {
    // S = (Z - z0 I)(Z + z0 I)^-1
    return (m - ident * z) * checked_inverse(m + ident * z, "closed_form_convert Z->S");
  }
  if (from == S && to == Z) {
    // Z = z0 (I + S)(I - S)^-1
    return z * ((ident + m) * checked_inverse(ident - m, "closed_form_convert S->Z"));
  }
  if (from == S && to == T) {
    if (n != 2) throw PortCountMismatch("closed_form_convert S->T: two ports only");
    const Complex s11 = m(0, 0), s12 = m(0, 1), s21 = m(1, 0), s22 = m(1, 1);
    if (std::abs(s21) <= 1e-13 * std::max(m.max_abs(), 1.0)) {
      throw SingularConversion("closed_form_convert S->T: S21 is zero");
    }
    ComplexMatrix t(2, 2);
    t(0, 0) = 1.0 / s21;
    t(0, 1) = -s22 / s21;
    t(1, 0) = s11 / s21;
    t(1, 1) = (s12 * s21 - s11 * s22) / s21;
    return t;
  }
  if (from == T && to == S) {
    if (n != 2) throw PortCountMismatch("closed_form_convert T->S: two ports only");
    const Complex t11 = m(0, 0), t12 = m(0, 1), t21 = m(1, 0), t22 = m(1, 1);
    if (std::abs(t11) <= 1e-13 * std::max(m.max_abs(), 1.0)) {
      throw SingularConversion("closed_form_convert T->S: T11 is zero");
    }
    ComplexMatrix s(2, 2);
    s(0, 0) = t21 / t11;
    s(0, 1) = (t11 * t22 - t12 * t21) / t11;
    s(1, 0) = 1.0 / t11;
    s(1, 1) = -t12 / t11;
    return s;
  }
  throw UnsupportedRepresentation("closed_form_convert: unsupported pair " +
                                  to_string(from) + "->" + to_string(to));
}

}  // namespace netconv::oracle
