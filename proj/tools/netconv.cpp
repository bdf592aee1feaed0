// netconv: convert electrical N-port network files between Z, Y, G, H,
// A, B, S and T representations, cascade 2-ports, and run the built-in
// verification suite.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 conversion does not
// exist (singular) or incompatible inputs, 3 selftest failed.

#include <CLI11.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "netconv/netconv.hpp"

namespace {

using namespace netconv;

struct LoadedSweep {
  NetworkSweep sweep;
  touchstone::TouchstoneOptions options;  // meaningful for .sNp inputs
};

/// Accepts "50", "50+50j", "50-10j", "-3j", "j" style complex literals.
Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw Error("empty complex literal");

  auto to_double = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) {
      throw Error("bad complex literal component '" + t + "'");
    }
    return v;
  };

  const bool has_j = s.back() == 'j' || s.back() == 'J';
  if (!has_j) return {to_double(s), 0.0};

  s.pop_back();  // drop the j
  // Split at the sign that separates real and imaginary parts, if any.
  for (std::size_t pos = s.size(); pos-- > 1;) {
    if ((s[pos] == '+' || s[pos] == '-') &&
        s[pos - 1] != 'e' && s[pos - 1] != 'E') {
      return {to_double(s.substr(0, pos)), to_double(s.substr(pos))};
    }
  }
  return {0.0, to_double(s)};
}

std::vector<Complex> parse_z0_list(const std::string& text) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  if (out.empty()) throw Error("empty z0 list");
  return out;
}

std::optional<int> ports_from_extension(const std::filesystem::path& path) {
  static const std::regex snp_re(R"(\.s([0-9]+)p$)", std::regex::icase);
  std::smatch m;
  const std::string name = path.filename().string();
  if (std::regex_search(name, m, snp_re)) return std::stoi(m[1]);
  return std::nullopt;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw Error("failed writing " + path.string());
}

Representation parse_rep_flag(const std::string& flag) {
  const auto rep = representation_from_string(flag);
  if (!rep.has_value()) {
    throw Error("unknown representation '" + flag + "' (use z y g h a b s t)");
  }
  return *rep;
}

WaveConvention parse_convention(const std::string& kind, const std::string& alpha) {
  WaveKind k;
  if (kind == "kurokawa") {
    k = WaveKind::Kurokawa;
  } else if (kind == "traveling") {
    k = WaveKind::Traveling;
  } else {
    throw Error("unknown convention '" + kind + "' (use kurokawa or traveling)");
  }
  return WaveConvention(k, parse_complex(alpha));
}

/// Re-stamps normalization / convention metadata onto every point.
/// This reinterprets the stored matrices, it does not renormalize them.
NetworkSweep with_metadata(const NetworkSweep& sweep,
                           const std::optional<std::vector<Complex>>& z0,
                           const WaveConvention& convention) {
  NetworkSweep out;
  for (const auto& p : sweep) {
    PortNormalization norm = p.norm;
    if (z0.has_value()) {
      if (z0->size() == 1) {
        norm = PortNormalization::uniform(p.ports(), z0->front());
      } else if (static_cast<int>(z0->size()) == p.ports()) {
        norm = PortNormalization(*z0);
      } else {
        throw Error("--z0 needs 1 entry or one entry per port");
      }
    }
    out.append(NetworkPoint(p.frequency_hz, p.rep, p.matrix, norm, convention));
  }
  return out;
}

LoadedSweep load_sweep(const std::string& path_str,
                       const std::optional<std::vector<Complex>>& z0,
                       const WaveConvention& convention) {
  const std::filesystem::path path(path_str);
  const std::string text = read_file(path);
  LoadedSweep loaded;
  try {
    if (const auto ports = ports_from_extension(path); ports.has_value()) {
      auto result = touchstone::parse(text, *ports);
      loaded.sweep = std::move(result.sweep);
      loaded.options = result.options;
    } else if (path.extension() == ".csv") {
      const double z0_default =
          z0.has_value() && z0->size() == 1 ? z0->front().real() : 50.0;
      loaded.sweep = touchstone::read_csv(text, z0_default);
    } else {
      throw Error("cannot tell the format from the extension (expected .sNp or .csv)");
    }
  } catch (const Error& e) {
    throw Error(path_str + ": " + e.what());
  }
  if (loaded.sweep.empty()) {
    throw Error(path_str + ": no data points");
  }
  loaded.sweep = with_metadata(loaded.sweep, z0, convention);
  return loaded;
}

bool touchstone_compatible(const NetworkSweep& sweep) {
  switch (sweep.rep()) {
    case Representation::S:
    case Representation::Y:
    case Representation::Z:
    case Representation::G:
    case Representation::H:
      break;
    default:
      return false;
  }
  return sweep[0].norm.is_uniform_real();
}

void write_converted(const NetworkSweep& sweep, const std::string& out_path,
                     const touchstone::TouchstoneOptions& input_options,
                     const std::string& format_flag) {
  const bool csv_name = std::filesystem::path(out_path).extension() == ".csv";
  if (!touchstone_compatible(sweep)) {
    if (!csv_name) {
      std::cerr << "warning: " << to_string(sweep.rep())
                << " parameters (or non-real z0) do not fit Touchstone v1; "
                << "writing CSV to " << out_path << "\n";
    }
    write_file(out_path, touchstone::write_csv(sweep));
    return;
  }
  if (csv_name) {
    write_file(out_path, touchstone::write_csv(sweep));
    return;
  }
  touchstone::TouchstoneOptions options = input_options;
  options.param = sweep.rep();
  options.resistance = sweep[0].norm.z0_of_port(1).real();
  if (!format_flag.empty()) {
    if (format_flag == "ri") options.format = touchstone::NumberFormat::RI;
    else if (format_flag == "ma") options.format = touchstone::NumberFormat::MA;
    else if (format_flag == "db") options.format = touchstone::NumberFormat::DB;
    else throw Error("unknown --format '" + format_flag + "' (use ri, ma or db)");
  }
  write_file(out_path, touchstone::write(sweep, options));
}

struct ConvertArgs {
  std::string input;
  std::string output;
  std::string to;
  std::string z0;
  std::string convention = "kurokawa";
  std::string alpha = "1";
  std::string format;
};

int cmd_convert(const ConvertArgs& args) {
  const Representation target = parse_rep_flag(args.to);
  std::optional<std::vector<Complex>> z0;
  if (!args.z0.empty()) z0 = parse_z0_list(args.z0);
  const WaveConvention convention = parse_convention(args.convention, args.alpha);

  const LoadedSweep loaded = load_sweep(args.input, z0, convention);
  NetworkSweep converted;
  try {
    converted = transform::convert(loaded.sweep, target);
  } catch (const SingularConversion& e) {
    std::cerr << "error: singular: " << args.input << ": " << e.what() << "\n";
    return 2;
  }
  write_converted(converted, args.output, loaded.options, args.format);
  return 0;
}

struct ShowArgs {
  std::string input;
  std::string rep;
  std::string z0;
  std::string convention = "kurokawa";
  std::string alpha = "1";
};

int cmd_show(const ShowArgs& args) {
  std::optional<std::vector<Complex>> z0;
  if (!args.z0.empty()) z0 = parse_z0_list(args.z0);
  const WaveConvention convention = parse_convention(args.convention, args.alpha);
  LoadedSweep loaded = load_sweep(args.input, z0, convention);

  NetworkSweep sweep = std::move(loaded.sweep);
  if (!args.rep.empty()) {
    const Representation target = parse_rep_flag(args.rep);
    try {
      sweep = transform::convert(sweep, target);
    } catch (const SingularConversion& e) {
      std::cerr << "error: singular: " << args.input << ": " << e.what() << "\n";
      return 2;
    }
  }

  const char rep_char = to_char(sweep.rep());
  for (const auto& point : sweep) {
    std::printf("f = %.10g Hz  (%c parameters, %d ports)\n", point.frequency_hz,
                rep_char, point.ports());
    for (std::size_t r = 0; r < point.matrix.rows(); ++r) {
      for (std::size_t c = 0; c < point.matrix.cols(); ++c) {
        const Complex e = point.matrix(r, c);
        std::printf("  %c%zu%zu = %.6g %+.6gj  (mag %.6g, ang %.4g deg)\n",
                    rep_char, r + 1, c + 1, e.real(), e.imag(), std::abs(e),
                    std::arg(e) * 180.0 / 3.14159265358979323846);
      }
    }
  }
  return 0;
}

struct CascadeArgs {
  std::vector<std::string> inputs;
  std::string output;
  std::string to = "a";
  std::string z0;
  std::string convention = "kurokawa";
  std::string alpha = "1";
  std::string format;
};

int cmd_cascade(const CascadeArgs& args) {
  const Representation target = parse_rep_flag(args.to);
  std::optional<std::vector<Complex>> z0;
  if (!args.z0.empty()) z0 = parse_z0_list(args.z0);
  const WaveConvention convention = parse_convention(args.convention, args.alpha);

  std::vector<LoadedSweep> loaded;
  for (const auto& input : args.inputs) {
    loaded.push_back(load_sweep(input, z0, convention));
  }
  try {
    NetworkSweep composite = loaded.front().sweep;
    for (std::size_t i = 1; i < loaded.size(); ++i) {
      composite = transform::cascade(composite, loaded[i].sweep);
    }
    composite = transform::convert(composite, target);
    write_converted(composite, args.output, loaded.front().options, args.format);
  } catch (const SingularConversion& e) {
    std::cerr << "error: singular: " << e.what() << "\n";
    return 2;
  } catch (const SweepMismatch& e) {
    std::cerr << "error: incompatible: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

struct SelftestArgs {
  std::uint64_t seed = 1;
  int trials = 100;
  std::string pairs;
  bool machine = false;
};

int cmd_selftest(const SelftestArgs& args) {
  oracle::VerificationConfig config;
  config.seed = args.seed;
  config.trials = args.trials;

  oracle::VerificationReport report;
  report.config = config;
  if (args.pairs.empty()) {
    report = oracle::verify_all(config);
  } else {
    std::stringstream ss(args.pairs);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) {
        throw Error("--pairs entries look like from:to, e.g. z:g");
      }
      const Representation from = parse_rep_flag(item.substr(0, colon));
      const Representation to = parse_rep_flag(item.substr(colon + 1));
      report.entries.push_back(oracle::verify_pair(from, to, 2, config));
    }
  }

  std::cout << (args.machine ? report.machine() : report.text());
  if (!report.oracle_ok()) {
    std::cerr << "error: selftest: generated conversions disagree with the "
                 "sampling oracle (max deviation "
              << report.max_oracle_deviation() << ")\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netconv: electrical N-port network representation converter"};
  app.require_subcommand(1);

  ConvertArgs convert_args;
  CLI::App* convert = app.add_subcommand(
      "convert", "Convert a network file to another representation");
  convert->add_option("input", convert_args.input, "Input file (.sNp or .csv)")
      ->required();
  convert->add_option("-o,--output", convert_args.output, "Output file")->required();
  convert->add_option("--to", convert_args.to, "Target representation (z y g h a b s t)")
      ->required();
  convert->add_option("--z0", convert_args.z0,
                      "Reference impedance override, comma separated per port; "
                      "complex as re+imj");
  convert->add_option("--convention", convert_args.convention,
                      "Wave convention: kurokawa or traveling");
  convert->add_option("--alpha", convert_args.alpha,
                      "Unit-modulus phase for the traveling convention");
  convert->add_option("--format", convert_args.format,
                      "Touchstone number format: ri, ma or db");

  ShowArgs show_args;
  CLI::App* show = app.add_subcommand("show", "Print a network file");
  show->add_option("input", show_args.input, "Input file (.sNp or .csv)")->required();
  show->add_option("--rep", show_args.rep, "Display in this representation");
  show->add_option("--z0", show_args.z0, "Reference impedance override");
  show->add_option("--convention", show_args.convention,
                   "Wave convention: kurokawa or traveling");
  show->add_option("--alpha", show_args.alpha,
                   "Unit-modulus phase for the traveling convention");

  CascadeArgs cascade_args;
  CLI::App* cascade = app.add_subcommand(
      "cascade", "Chain two or more 2-port files on a shared frequency grid");
  cascade->add_option("inputs", cascade_args.inputs, "Input files in chain order")
      ->required()
      ->expected(2, -1);
  cascade->add_option("-o,--output", cascade_args.output, "Output file")->required();
  cascade->add_option("--to", cascade_args.to, "Output representation (default a)");
  cascade->add_option("--z0", cascade_args.z0, "Reference impedance override");
  cascade->add_option("--convention", cascade_args.convention,
                      "Wave convention: kurokawa or traveling");
  cascade->add_option("--alpha", cascade_args.alpha,
                      "Unit-modulus phase for the traveling convention");
  cascade->add_option("--format", cascade_args.format,
                      "Touchstone number format: ri, ma or db");

  SelftestArgs selftest_args;
  CLI::App* selftest = app.add_subcommand(
      "selftest", "Verify generated conversions against the sampling oracle "
                  "and the published table");
  selftest->add_option("--seed", selftest_args.seed, "Random seed");
  selftest->add_option("--trials", selftest_args.trials, "Trials per pair")
      ->check(CLI::PositiveNumber);
  selftest->add_option("--pairs", selftest_args.pairs,
                       "Comma separated from:to pairs, e.g. z:g,s:y");
  selftest->add_flag("--machine", selftest_args.machine,
                     "Print the machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 1;
  }

  try {
    if (convert->parsed()) return cmd_convert(convert_args);
    if (show->parsed()) return cmd_show(show_args);
    if (cascade->parsed()) return cmd_cascade(cascade_args);
    if (selftest->parsed()) return cmd_selftest(selftest_args);
  } catch (const PortCountMismatch& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 1;
  } catch (const SingularConversion& e) {
    std::cerr << "error: singular: " << e.what() << "\n";
    return 2;
  } catch (const SweepMismatch& e) {
    std::cerr << "error: incompatible: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
