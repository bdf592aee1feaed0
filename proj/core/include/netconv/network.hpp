#pragma once

#include <vector>

#include "netconv/representation.hpp"
#include "netconv/types.hpp"
#include "netconv/wave.hpp"

namespace netconv {

/// One frequency sample of a network in some representation.
/// Immutable value; the constructor validates shape, port count and
/// finiteness.
struct NetworkPoint {
  double frequency_hz;
  Representation rep;
  ComplexMatrix matrix;
  PortNormalization norm;
  WaveConvention convention;

  NetworkPoint(double frequency_hz, Representation rep, ComplexMatrix matrix,
               PortNormalization norm, WaveConvention convention = {});

  int ports() const { return norm.ports(); }
};

/// An ordered frequency sweep. Frequencies are strictly increasing and
/// every point shares the same port count, representation,
/// normalization and wave convention.
class NetworkSweep {
 public:
  NetworkSweep() = default;
  explicit NetworkSweep(std::vector<NetworkPoint> points);

  /// Validates the point against the sweep invariants before adding.
  void append(NetworkPoint point);

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  const NetworkPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<NetworkPoint>& points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  int ports() const;
  Representation rep() const;

 private:
  std::vector<NetworkPoint> points_;
};

}  // namespace netconv
