#pragma once

#include <vector>

#include "netconv/types.hpp"

namespace netconv {

/// The two wave scaling conventions found in practice:
///   Kurokawa:  k = 1 / (2 sqrt(Re{Z0}))
///   Traveling: k = alpha * sqrt(Re{Z0}) / (2 |Z0|)
/// alpha is a free phase of modulus 1 and is used by Traveling only.
/// Both give the same k for real Z0 with alpha = 1.
enum class WaveKind { Kurokawa, Traveling };

struct WaveConvention {
  WaveKind kind = WaveKind::Kurokawa;
  Complex alpha{1.0, 0.0};

  WaveConvention() = default;
  WaveConvention(WaveKind k, Complex a = Complex{1.0, 0.0});

  bool operator==(const WaveConvention&) const = default;
};

/// Per-port reference impedances. Every entry must be finite with a
/// strictly positive real part.
class PortNormalization {
 public:
  explicit PortNormalization(std::vector<Complex> z0);

  static PortNormalization uniform(int n_ports, Complex z0);

  int ports() const { return static_cast<int>(z0_.size()); }

  /// Reference impedance of a port, numbered from 1.
  Complex z0_of_port(int port) const { return z0_[port - 1]; }

  const std::vector<Complex>& values() const { return z0_; }

  /// True when every port shares the same purely real z0.
  bool is_uniform_real() const;

  bool operator==(const PortNormalization&) const = default;

 private:
  std::vector<Complex> z0_;
};

/// Wave scaling constant for one port. Throws NonPositiveRealPart when
/// Re{z0} <= 0.
Complex wave_k(const WaveConvention& convention, Complex z0);

struct WavePair {
  Complex a;  // incident
  Complex b;  // reflected
};

struct VoltageCurrent {
  Complex v;
  Complex i;
};

/// a = k (v + z0 i), b = k (v - z0 i). No conjugation of z0 anywhere.
WavePair vi_to_waves(Complex v, Complex i, Complex z0, Complex k);

/// Exact inverse of vi_to_waves:
///   v = (a + b) / (2k),  i = (a - b) / (2 k z0).
/// Throws ZeroK when k = 0; z0 must be nonzero.
VoltageCurrent waves_to_vi(Complex a, Complex b, Complex z0, Complex k);

}  // namespace netconv
