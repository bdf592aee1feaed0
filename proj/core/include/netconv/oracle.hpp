#pragma once

#include <cstdint>
#include <vector>

#include "netconv/network.hpp"
#include "netconv/representation.hpp"
#include "netconv/types.hpp"
#include "netconv/wave.hpp"

namespace netconv::oracle {

/// One consistent assignment of all four port signals at every port.
/// Per port, (a, b) equals vi_to_waves(v, i, z0, k) by construction.
struct PortSignalSample {
  std::vector<Complex> v;
  std::vector<Complex> i;
  std::vector<Complex> a;
  std::vector<Complex> b;
};

/// Deterministic generator used by the sampling oracle. Draws do not
/// depend on platform library details, so identical seeds give
/// bit-identical samples.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform in [0, 1).
  double canonical();

  /// Uniform on the unit circle.
  Complex unit_complex();

  /// Real and imaginary parts uniform in [-1, 1].
  Complex box_complex();

 private:
  std::uint64_t state_;
};

/// Generates 2N consistent signal samples of the network described by
/// r in the given representation: each sample draws a random input
/// vector with unit-magnitude entries, computes outputs = r * inputs,
/// and expands the pair into the full (v, i, a, b) port record using
/// the representation's signal lists and the wave transform pair.
/// Never inverts anything; r is used exactly as given.
std::vector<PortSignalSample> sample_network(Representation rep,
                                             const ComplexMatrix& r,
                                             const PortNormalization& norm,
                                             const WaveConvention& convention,
                                             std::uint64_t seed);

struct FitResult {
  ComplexMatrix matrix;
  double residual;  // relative Frobenius residual of the fit
};

/// Recovers the target representation directly from signal samples by
/// least squares, without any transformation matrix: assembles the
/// target's stacked outputs O' and inputs U' per sample and solves
/// min ||O' - R' U'||. Throws RankDeficient when the input sample
/// matrix has reciprocal condition below 1e-10 (the target does not
/// exist for this network) or when the residual exceeds 1e-6.
FitResult fit_representation(const std::vector<PortSignalSample>& samples,
                             Representation target,
                             const PortNormalization& norm,
                             const WaveConvention& convention);

/// Textbook spot-check formulas for uniform real z0, used by tests to
/// triangulate the transform engine and the sampling oracle:
///   Y = Z^-1 and its inverse,
///   S = (Z - z0 I)(Z + z0 I)^-1 and its inverse,
///   S <-> T for two ports.
/// Throws UnsupportedRepresentation for any other pair and
/// SingularConversion on the structural nonexistence cases.
ComplexMatrix closed_form_convert(Representation from, Representation to,
                                  const ComplexMatrix& m, double z0);

}  // namespace netconv::oracle
