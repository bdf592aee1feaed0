#include "netconv/network.hpp"

namespace netconv {

NetworkPoint::NetworkPoint(double frequency_hz_, Representation rep_,
                           ComplexMatrix matrix_, PortNormalization norm_,
                           WaveConvention convention_)
    : frequency_hz(frequency_hz_),
      rep(rep_),
      matrix(std::move(matrix_)),
      norm(std::move(norm_)),
      convention(convention_) {
  if (!is_finite(frequency_hz) || frequency_hz < 0.0) {
    throw Error("NetworkPoint: frequency must be finite and >= 0");
  }
  const int n = norm.ports();
  require_port_count(rep, n);
  if (matrix.rows() != static_cast<std::size_t>(n) ||
      matrix.cols() != static_cast<std::size_t>(n)) {
    throw Error("NetworkPoint: matrix shape does not match port count");
  }
  matrix.check_finite();
}

NetworkSweep::NetworkSweep(std::vector<NetworkPoint> points) {
  for (auto& p : points) append(std::move(p));
}

void NetworkSweep::append(NetworkPoint point) {
  if (!points_.empty()) {
    const NetworkPoint& last = points_.back();
    if (point.frequency_hz <= last.frequency_hz) {
      throw NonMonotonicFrequency("NetworkSweep: frequencies must be strictly increasing");
    }
    if (point.rep != last.rep || point.norm != last.norm ||
        point.convention != last.convention ||
        point.matrix.rows() != last.matrix.rows()) {
      throw SweepMismatch("NetworkSweep: all points must share representation, size, normalization and convention");
    }
  }
  points_.push_back(std::move(point));
}

int NetworkSweep::ports() const {
  if (points_.empty()) throw Error("NetworkSweep: empty sweep has no port count");
  return points_.front().ports();
}

Representation NetworkSweep::rep() const {
  if (points_.empty()) throw Error("NetworkSweep: empty sweep has no representation");
  return points_.front().rep;
}

}  // namespace netconv
