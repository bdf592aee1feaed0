#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netconv/representation.hpp"
#include "netconv/types.hpp"
#include "netconv/wave.hpp"

namespace netconv::oracle {

/// Outcome of comparing a generated transformation matrix against the
/// corresponding entry of the published conversion table bundled as a
/// verification fixture.
///   Match        entries agree, including the overall prefactor
///   ScalarMatch  entries agree only up to an overall scalar
///   Mismatch     no scalar reconciles the two
///   Unlisted     the pair has no published entry
enum class Verdict { Match, ScalarMatch, Mismatch, Unlisted };

std::string to_string(Verdict v);

/// The published table entry for one ordered pair, evaluated at a real
/// reference impedance and wave convention. Returns nullopt for pairs
/// the table does not list (anything involving B).
std::optional<ComplexMatrix> reference_table_p(Representation from,
                                               Representation to, double z0,
                                               const WaveConvention& convention = {});

/// The worked Z->G permutation printed alongside the table; identical
/// to the table entry and used as an exact fixture.
ComplexMatrix reference_example_p_zg();

/// The worked S->Y matrix printed in the source text, which lacks the
/// minus signs carried by the table entry. Kept as a fixture so the
/// verification run can flag it as inconsistent.
ComplexMatrix reference_example_p_sy_intext(double z0,
                                            const WaveConvention& convention = {});

struct VerificationEntry {
  Representation from;
  Representation to;
  int ports = 2;
  int trials_requested = 0;
  int trials_run = 0;
  int trials_skipped = 0;  // draws rejected by the conditioning filter
  double max_deviation = 0.0;  // convert vs. oracle fit, relative
  Verdict verdict = Verdict::Unlisted;
  double table_residual = 0.0;  // after best-fit overall scalar
  Complex table_scale{1.0, 0.0};
  std::vector<std::string> notes;
};

struct VerificationConfig {
  int trials = 100;
  std::uint64_t seed = 1;
  double z0 = 50.0;
  WaveConvention convention{};
  double oracle_tolerance = 1e-9;
};

struct VerificationReport {
  VerificationConfig config;
  std::vector<VerificationEntry> entries;

  double max_oracle_deviation() const;
  bool oracle_ok() const;

  /// Human-readable table plus an errata section for every published
  /// entry that is not an exact match.
  std::string text() const;

  /// Line-oriented: "from to verdict max_deviation skipped ports trials".
  std::string machine() const;
};

/// Compares the transform engine against the sampling oracle over
/// random well-conditioned trials for one ordered pair (two ports), and
/// grades the generated P against the published table entry.
VerificationEntry verify_pair(Representation from, Representation to, int ports,
                              const VerificationConfig& config);

/// Single-pair report at two ports.
VerificationReport verify_table_entry(Representation from, Representation to,
                                      int trials, std::uint64_t seed);

/// The full verification suite: all 56 ordered pairs of the eight
/// representations at two ports, plus the Z/Y/S pairs at three and four
/// ports.
VerificationReport verify_all(const VerificationConfig& config);

}  // namespace netconv::oracle
