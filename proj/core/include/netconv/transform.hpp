#pragma once

#include "netconv/network.hpp"
#include "netconv/representation.hpp"
#include "netconv/types.hpp"
#include "netconv/wave.hpp"

namespace netconv::transform {

/// The 2N x 2N matrix mapping one representation's stacked
/// [outputs; inputs] vector onto another's. Always invertible, since it
/// relates two complete signal bases.
class TransformMatrix {
 public:
  explicit TransformMatrix(ComplexMatrix p);

  static TransformMatrix identity(int n_ports);

  const ComplexMatrix& p() const { return p_; }

  /// Port count N (half the transform dimension).
  int half() const { return static_cast<int>(p_.rows() / 2); }

  // Quadrants, laid out as [[p11, p12], [p21, p22]].
  ComplexMatrix p11() const;
  ComplexMatrix p12() const;
  ComplexMatrix p21() const;
  ComplexMatrix p22() const;

 private:
  ComplexMatrix p_;
};

/// Matrix expressing a representation's stacked signal vector
/// [outputs; inputs] over the canonical basis [V1..VN, I1..IN].
/// Voltage/current entries become signed unit rows; wave entries become
///   A_i: k_i (e_{V_i} + z0_i e_{I_i}),  B_i: k_i (e_{V_i} - z0_i e_{I_i}).
/// The result is invertible for every representation.
ComplexMatrix stacking_matrix(Representation rep, const PortNormalization& norm,
                              const WaveConvention& convention);

/// P = M_to * M_from^-1, the map satisfying
/// [outputs'; inputs'] = P [outputs; inputs] for every consistent signal
/// assignment. build_p(rep, rep, ...) is the exact identity.
TransformMatrix build_p(Representation from, Representation to,
                        const PortNormalization& norm,
                        const WaveConvention& convention);

/// R' = (P11 R + P12) (P21 R + P22)^-1, computed with a factorization
/// based solve rather than an explicit inverse. Scaling P by any nonzero
/// scalar leaves the result unchanged.
/// Throws SingularConversion when the reciprocal condition number of
/// (P21 R + P22) falls below 1e-13, which signals that the target
/// representation does not exist for this network.
ComplexMatrix moebius(const TransformMatrix& p, const ComplexMatrix& r);

/// Whole-point conversion; carries frequency, normalization and
/// convention through unchanged. convert(point, point.rep) is the
/// identity.
NetworkPoint convert(const NetworkPoint& point, Representation target);

/// Per-point conversion of a sweep. On failure the SingularConversion
/// message names the first offending frequency.
NetworkSweep convert(const NetworkSweep& sweep, Representation target);

/// B = A^-1 for 2x2 chain matrices. Throws SingularConversion when the
/// determinant vanishes relative to the matrix scale.
ComplexMatrix a_to_b(const ComplexMatrix& a);

/// Chain composition of two 2-port networks sharing frequency,
/// normalization and convention: both are converted to A and the
/// ordered product A_first * A_second is returned in A representation.
NetworkPoint cascade(const NetworkPoint& first, const NetworkPoint& second);

/// Pointwise cascade of two sweeps on identical frequency grids.
NetworkSweep cascade(const NetworkSweep& first, const NetworkSweep& second);

}  // namespace netconv::transform
