#pragma once

#include <stdexcept>
#include <string>

namespace netconv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A NaN or infinity reached a constructor or operation argument.
class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

/// A normalization impedance with Re{z0} <= 0 was supplied.
class NonPositiveRealPart : public Error {
 public:
  using Error::Error;
};

/// The wave scaling constant k is zero, so voltages and currents
/// cannot be recovered from the waves.
class ZeroK : public Error {
 public:
  using Error::Error;
};

/// A representation was requested for a port count it does not support.
class PortCountMismatch : public Error {
 public:
  using Error::Error;
};

/// The target representation does not exist for the given network
/// (the conversion denominator is singular).
class SingularConversion : public Error {
 public:
  using Error::Error;
};

/// The sampled input system is rank deficient, so no matrix of the
/// target representation reproduces the samples.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

/// Two sweeps that must share a frequency grid, normalization and
/// wave convention do not.
class SweepMismatch : public Error {
 public:
  using Error::Error;
};

// ---- Touchstone ----

class MalformedOptionLine : public Error {
 public:
  using Error::Error;
};

class MalformedDataLine : public Error {
 public:
  using Error::Error;
};

class NonMonotonicFrequency : public Error {
 public:
  using Error::Error;
};

class DataCountMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedVersionKeyword : public Error {
 public:
  using Error::Error;
};

class UnsupportedRepresentation : public Error {
 public:
  using Error::Error;
};

/// Sweep normalization is incompatible with the requested file format
/// (Touchstone v1 carries a single real reference resistance).
class NormalizationMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace netconv
