#include "netconv/touchstone.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <numbers>
#include <sstream>
#include <vector>

namespace netconv::touchstone {

double unit_multiplier(FreqUnit unit) {
  switch (unit) {
    case FreqUnit::Hz: return 1.0;
    case FreqUnit::kHz: return 1e3;
    case FreqUnit::MHz: return 1e6;
    case FreqUnit::GHz: return 1e9;
  }
  return 1.0;
}

std::string to_string(FreqUnit unit) {
  switch (unit) {
    case FreqUnit::Hz: return "HZ";
    case FreqUnit::kHz: return "KHZ";
    case FreqUnit::MHz: return "MHZ";
    case FreqUnit::GHz: return "GHZ";
  }
  return "?";
}

std::string to_string(NumberFormat format) {
  switch (format) {
    case NumberFormat::RI: return "RI";
    case NumberFormat::MA: return "MA";
    case NumberFormat::DB: return "DB";
  }
  return "?";
}

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;
// dB floor written in place of log10(0); parses back as numerically zero.
constexpr double kDbFloor = -400.0;

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

bool parse_number(const std::string& token, double& out) {
  if (token.empty()) return false;
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return end == token.c_str() + token.size();
}

Complex decode(NumberFormat format, double first, double second) {
  switch (format) {
    case NumberFormat::RI:
      return {first, second};
    case NumberFormat::MA: {
      const double angle = second * kDegToRad;
      return {first * std::cos(angle), first * std::sin(angle)};
    }
    case NumberFormat::DB: {
      const double mag = std::pow(10.0, first / 20.0);
      const double angle = second * kDegToRad;
      return {mag * std::cos(angle), mag * std::sin(angle)};
    }
  }
  return {};
}

std::pair<double, double> encode(NumberFormat format, Complex value) {
  switch (format) {
    case NumberFormat::RI:
      return {value.real(), value.imag()};
    case NumberFormat::MA:
      return {std::abs(value), std::arg(value) * kRadToDeg};
    case NumberFormat::DB: {
      const double mag = std::abs(value);
      const double db = mag > 0.0 ? 20.0 * std::log10(mag) : kDbFloor;
      return {db, std::arg(value) * kRadToDeg};
    }
  }
  return {};
}

// File position of matrix entry (row, col): two-port files use the
// historical N11 N21 N12 N22 ordering, everything else is row-major.
std::pair<std::size_t, std::size_t> entry_position(int n_ports, std::size_t flat) {
  if (n_ports == 2) {
    static constexpr std::pair<std::size_t, std::size_t> order[4] = {
        {0, 0}, {1, 0}, {0, 1}, {1, 1}};
    return order[flat];
  }
  const std::size_t n = static_cast<std::size_t>(n_ports);
  return {flat / n, flat % n};
}

void apply_option_tokens(const std::vector<std::string>& tokens,
                         TouchstoneOptions& options, int line_no) {
  bool seen_unit = false, seen_param = false, seen_format = false, seen_r = false;
  const std::string where = "option line (line " + std::to_string(line_no) + "): ";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string tok = upper(tokens[i]);
    if (tok == "HZ" || tok == "KHZ" || tok == "MHZ" || tok == "GHZ") {
      if (seen_unit) throw MalformedOptionLine(where + "duplicate frequency unit");
      seen_unit = true;
      options.freq_unit = tok == "HZ"    ? FreqUnit::Hz
                          : tok == "KHZ" ? FreqUnit::kHz
                          : tok == "MHZ" ? FreqUnit::MHz
                                         : FreqUnit::GHz;
    } else if (tok == "S" || tok == "Y" || tok == "Z" || tok == "G" || tok == "H") {
      if (seen_param) throw MalformedOptionLine(where + "duplicate parameter type");
      seen_param = true;
      options.param = *representation_from_string(tok);
    } else if (tok == "RI" || tok == "MA" || tok == "DB") {
      if (seen_format) throw MalformedOptionLine(where + "duplicate number format");
      seen_format = true;
      options.format = tok == "RI"   ? NumberFormat::RI
                       : tok == "MA" ? NumberFormat::MA
                                     : NumberFormat::DB;
    } else if (tok == "R") {
      if (seen_r) throw MalformedOptionLine(where + "duplicate reference resistance");
      seen_r = true;
      if (i + 1 >= tokens.size()) {
        throw MalformedOptionLine(where + "R must be followed by a resistance value");
      }
      double r = 0.0;
      if (!parse_number(tokens[++i], r) || !(r > 0.0) || !std::isfinite(r)) {
        throw MalformedOptionLine(where + "bad resistance value '" + tokens[i] + "'");
      }
      options.resistance = r;
    } else {
      throw MalformedOptionLine(where + "unknown token '" + tokens[i] + "'");
    }
  }
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// %.12g, then make sure the token still reads as a floating value.
std::string format_value(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  std::string s = buf;
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string format_frequency(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string format_csv(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

}  // namespace

ParseResult parse(std::string_view text, int n_ports) {
  if (n_ports < 1) throw Error("touchstone::parse: port count must be >= 1");

  TouchstoneOptions options;  // defaults: HZ S MA R 50
  bool have_option_line = false;
  bool have_data = false;
  std::vector<double> values;

  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (const auto bang = raw.find('!'); bang != std::string::npos) {
      raw.erase(bang);
    }
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      throw UnsupportedVersionKeyword("line " + std::to_string(line_no) +
                                      ": Touchstone v2 keyword is not supported: " + line);
    }
    if (line.front() == '#') {
      if (have_option_line) {
        throw MalformedOptionLine("line " + std::to_string(line_no) +
                                  ": more than one option line");
      }
      if (have_data) {
        throw MalformedOptionLine("line " + std::to_string(line_no) +
                                  ": option line after data");
      }
      std::istringstream ls(line.substr(1));
      std::vector<std::string> tokens;
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      apply_option_tokens(tokens, options, line_no);
      have_option_line = true;
      continue;
    }

    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      double v = 0.0;
      if (!parse_number(tok, v)) {
        throw MalformedDataLine("line " + std::to_string(line_no) +
                                ": expected a number, got '" + tok + "'");
      }
      values.push_back(v);
      have_data = true;
    }
  }

  if (!have_data) throw DataCountMismatch("file contains no data values");

  const std::size_t n = static_cast<std::size_t>(n_ports);
  const std::size_t per_point = 1 + 2 * n * n;
  if (values.size() % per_point != 0) {
    throw DataCountMismatch("expected " + std::to_string(2 * n * n) +
                            " values per frequency for " + std::to_string(n_ports) +
                            " ports; total count " + std::to_string(values.size()) +
                            " is not a multiple of " + std::to_string(per_point));
  }

  const double mult = unit_multiplier(options.freq_unit);
  const PortNormalization norm =
      PortNormalization::uniform(n_ports, Complex{options.resistance, 0.0});
  NetworkSweep sweep;
  for (std::size_t base = 0; base < values.size(); base += per_point) {
    const double freq_hz = values[base] * mult;
    ComplexMatrix m(n, n);
    for (std::size_t flat = 0; flat < n * n; ++flat) {
      const auto [row, col] = entry_position(n_ports, flat);
      m(row, col) =
          decode(options.format, values[base + 1 + 2 * flat], values[base + 2 + 2 * flat]);
    }
    sweep.append(NetworkPoint(freq_hz, options.param, std::move(m), norm));
  }
  return {std::move(sweep), options};
}

ParseResult parse(std::istream& in, int n_ports) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), n_ports);
}

std::string write(const NetworkSweep& sweep, const TouchstoneOptions& options) {
  if (!(options.resistance > 0.0)) {
    throw Error("touchstone::write: resistance must be > 0");
  }
  Representation param = options.param;
  if (!sweep.empty()) {
    param = sweep.rep();
    switch (param) {
      case Representation::S:
      case Representation::Y:
      case Representation::Z:
      case Representation::G:
      case Representation::H:
        break;
      default:
        throw UnsupportedRepresentation("Touchstone v1 cannot carry " +
                                        to_string(param) +
                                        " parameters; use the CSV writer");
    }
    const PortNormalization& norm = sweep[0].norm;
    if (!norm.is_uniform_real() ||
        std::abs(norm.z0_of_port(1).real() - options.resistance) >
            1e-9 * options.resistance) {
      throw NormalizationMismatch(
          "Touchstone v1 requires a uniform real z0 equal to the option line R");
    }
  }

  std::ostringstream out;
  out << "! generated by netconv\n";
  out << "# " << to_string(options.freq_unit) << " " << to_string(param) << " "
      << to_string(options.format) << " R " << format_frequency(options.resistance)
      << "\n";

  const double mult = unit_multiplier(options.freq_unit);
  for (const auto& point : sweep) {
    const int n_ports = point.ports();
    const std::size_t n = static_cast<std::size_t>(n_ports);
    out << format_frequency(point.frequency_hz / mult);
    std::size_t pairs_on_line = 0;
    for (std::size_t flat = 0; flat < n * n; ++flat) {
      const auto [row, col] = entry_position(n_ports, flat);
      const auto [x, y] = encode(options.format, point.matrix(row, col));
      // Keep two-port points on one line; wrap larger matrices one row
      // per line with at most four pairs each.
      const bool wrap = n_ports > 2 && flat > 0 &&
                        (flat % n == 0 || pairs_on_line == 4);
      if (wrap) {
        out << "\n ";
        pairs_on_line = 0;
      }
      out << " " << format_value(x) << " " << format_value(y);
      ++pairs_on_line;
    }
    out << "\n";
  }
  return out.str();
}

std::string write_csv(const NetworkSweep& sweep) {
  std::ostringstream out;
  out << "freq_hz,rep";
  if (!sweep.empty()) {
    const int n = sweep.ports();
    for (int r = 1; r <= n; ++r) {
      for (int c = 1; c <= n; ++c) {
        out << ",re_" << r << "_" << c << ",im_" << r << "_" << c;
      }
    }
  }
  out << "\n";
  for (const auto& point : sweep) {
    out << format_csv(point.frequency_hz) << "," << to_char(point.rep);
    const std::size_t n = point.matrix.rows();
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const Complex e = point.matrix(r, c);
        out << "," << format_csv(e.real()) << "," << format_csv(e.imag());
      }
    }
    out << "\n";
  }
  return out.str();
}

NetworkSweep read_csv(std::string_view text, double z0,
                      const WaveConvention& convention) {
  std::istringstream stream{std::string(text)};
  std::string line;
  if (!std::getline(stream, line)) {
    throw MalformedDataLine("csv: empty input");
  }
  std::vector<std::string> header;
  {
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) header.push_back(trim(cell));
  }
  if (header.size() < 2 || header[0] != "freq_hz" || header[1] != "rep") {
    throw MalformedDataLine("csv: expected header starting with freq_hz,rep");
  }
  NetworkSweep sweep;
  int line_no = 1;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(trimmed);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(trim(cell));
    if (cells.size() < 2 || (cells.size() - 2) % 2 != 0) {
      throw MalformedDataLine("csv line " + std::to_string(line_no) +
                              ": bad cell count");
    }
    const std::size_t entry_count = (cells.size() - 2) / 2;
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(
        static_cast<double>(entry_count))));
    if (n * n != entry_count || n == 0) {
      throw MalformedDataLine("csv line " + std::to_string(line_no) +
                              ": entry count is not a square");
    }
    double freq = 0.0;
    if (!parse_number(cells[0], freq)) {
      throw MalformedDataLine("csv line " + std::to_string(line_no) +
                              ": bad frequency '" + cells[0] + "'");
    }
    const auto rep = representation_from_string(cells[1]);
    if (!rep.has_value()) {
      throw MalformedDataLine("csv line " + std::to_string(line_no) +
                              ": bad representation '" + cells[1] + "'");
    }
    ComplexMatrix m(n, n);
    for (std::size_t flat = 0; flat < entry_count; ++flat) {
      double re = 0.0, im = 0.0;
      if (!parse_number(cells[2 + 2 * flat], re) ||
          !parse_number(cells[3 + 2 * flat], im)) {
        throw MalformedDataLine("csv line " + std::to_string(line_no) +
                                ": bad matrix entry");
      }
      m(flat / n, flat % n) = Complex{re, im};
    }
    sweep.append(NetworkPoint(freq, *rep, std::move(m),
                              PortNormalization::uniform(static_cast<int>(n),
                                                         Complex{z0, 0.0}),
                              convention));
  }
  return sweep;
}

}  // namespace netconv::touchstone
