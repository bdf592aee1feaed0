#include "netconv/wave.hpp"

#include <cmath>

namespace netconv {

WaveConvention::WaveConvention(WaveKind k, Complex a) : kind(k), alpha(a) {
  if (!is_finite(alpha)) {
    throw NonFiniteValue("WaveConvention: alpha must be finite");
  }
  if (std::abs(std::abs(alpha) - 1.0) > 1e-12) {
    throw Error("WaveConvention: alpha must have modulus 1");
  }
}

PortNormalization::PortNormalization(std::vector<Complex> z0)
    : z0_(std::move(z0)) {
  if (z0_.empty()) {
    throw Error("PortNormalization: at least one port required");
  }
  for (const auto& z : z0_) {
    if (!is_finite(z)) {
      throw NonFiniteValue("PortNormalization: non-finite z0");
    }
    if (z.real() <= 0.0) {
      throw NonPositiveRealPart("PortNormalization: Re{z0} must be > 0");
    }
  }
}

PortNormalization PortNormalization::uniform(int n_ports, Complex z0) {
  if (n_ports < 1) {
    throw Error("PortNormalization: at least one port required");
  }
  return PortNormalization(std::vector<Complex>(n_ports, z0));
}

bool PortNormalization::is_uniform_real() const {
  for (const auto& z : z0_) {
    if (z.imag() != 0.0 || z != z0_.front()) return false;
  }
  return true;
}

Complex wave_k(const WaveConvention& convention, Complex z0) {
  if (!is_finite(z0)) {
    throw NonFiniteValue("wave_k: non-finite z0");
  }
  if (z0.real() <= 0.0) {
    throw NonPositiveRealPart("wave_k: Re{z0} must be > 0");
  }
  const double sqrt_re = std::sqrt(z0.real());
  switch (convention.kind) {
    case WaveKind::Kurokawa:
      return Complex{1.0 / (2.0 * sqrt_re), 0.0};
    case WaveKind::Traveling:
      return convention.alpha * (sqrt_re / (2.0 * std::abs(z0)));
  }
  throw Error("wave_k: unknown convention");
}

WavePair vi_to_waves(Complex v, Complex i, Complex z0, Complex k) {
  if (!is_finite(v) || !is_finite(i) || !is_finite(z0) || !is_finite(k)) {
    throw NonFiniteValue("vi_to_waves: non-finite input");
  }
  return {k * (v + z0 * i), k * (v - z0 * i)};
}

VoltageCurrent waves_to_vi(Complex a, Complex b, Complex z0, Complex k) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(z0) || !is_finite(k)) {
    throw NonFiniteValue("waves_to_vi: non-finite input");
  }
  if (k == Complex{0.0, 0.0}) {
    throw ZeroK("waves_to_vi: k must be nonzero");
  }
  if (z0 == Complex{0.0, 0.0}) {
    throw Error("waves_to_vi: z0 must be nonzero");
  }
  const Complex y0 = Complex{1.0, 0.0} / z0;
  const Complex two_k = 2.0 * k;
  return {(a + b) / two_k, (y0 * a - y0 * b) / two_k};
}

}  // namespace netconv
