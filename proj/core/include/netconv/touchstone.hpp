#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "netconv/network.hpp"
#include "netconv/representation.hpp"

namespace netconv::touchstone {

enum class FreqUnit { Hz, kHz, MHz, GHz };

double unit_multiplier(FreqUnit unit);
std::string to_string(FreqUnit unit);

enum class NumberFormat { RI, MA, DB };

std::string to_string(NumberFormat format);

/// Touchstone v1 option line state. Defaults: # HZ S MA R 50.
struct TouchstoneOptions {
  FreqUnit freq_unit = FreqUnit::Hz;
  Representation param = Representation::S;
  NumberFormat format = NumberFormat::MA;
  double resistance = 50.0;
};

struct ParseResult {
  NetworkSweep sweep;
  TouchstoneOptions options;
};

/// Parses Touchstone v1 text. The port count comes from the caller
/// (the .sNp extension digit). Comment text after '!' is ignored; the
/// option line accepts its tokens case-insensitively in any order; the
/// two-port data ordering quirk (N11 N21 N12 N22) is undone; files with
/// three or more ports are row-major with line wrapping.
/// Fails loudly: MalformedOptionLine, MalformedDataLine,
/// NonMonotonicFrequency, DataCountMismatch, UnsupportedVersionKeyword.
ParseResult parse(std::string_view text, int n_ports);
ParseResult parse(std::istream& in, int n_ports);

/// Canonical Touchstone v1 output: one generator comment, one option
/// line, then one frequency point per line group with the two-port
/// ordering quirk applied and at least ten significant digits.
/// The sweep must be in a Touchstone-v1 representation (S, Y, Z, G, H;
/// otherwise UnsupportedRepresentation) with uniform real z0 equal to
/// options.resistance (otherwise NormalizationMismatch).
std::string write(const NetworkSweep& sweep, const TouchstoneOptions& options);

/// Generic CSV carrier for sweeps Touchstone v1 cannot hold (A, B, T):
/// "freq_hz,rep,re_1_1,im_1_1,..." row-major, one line per frequency.
std::string write_csv(const NetworkSweep& sweep);

/// Reads write_csv output back. The CSV format does not carry port
/// normalization or wave convention, so the caller supplies them; by
/// default a uniform real 50 ohm reference is assumed.
NetworkSweep read_csv(std::string_view text, double z0 = 50.0,
                      const WaveConvention& convention = {});

}  // namespace netconv::touchstone
