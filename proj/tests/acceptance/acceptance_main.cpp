// Acceptance suite: end-to-end checks of the conversion engine, the
// sampling oracle, the file formats and the CLI. Prints one PASS/FAIL
// line per criterion; the exit status is the number of failures.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "netconv/netconv.hpp"
#include "../support/devices.hpp"

using namespace netconv;
using namespace netconv::testing;
namespace fs = std::filesystem;

namespace {

struct Check {
  std::string name;
  std::function<void(std::string&)> run;  // throws or appends detail on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

ComplexMatrix random_box(int n, oracle::SampleRng& rng) {
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = rng.box_complex();
    }
  }
  return m;
}

// ---- criterion 1: oracle equivalence over all pairs ----

void c1_table_verification(std::string& detail) {
  oracle::VerificationConfig config;
  config.trials = 100;
  config.seed = 1;
  const auto report = oracle::verify_all(config);
  require(report.entries.size() == 68,
          "expected 68 entries (56 pairs at N=2 plus Z/Y/S at N=3,4)");
  for (const auto& e : report.entries) {
    require(e.trials_run == config.trials,
            to_string(e.from) + "->" + to_string(e.to) + ": only " +
                std::to_string(e.trials_run) + " trials ran");
    require(e.max_deviation < 1e-9,
            to_string(e.from) + "->" + to_string(e.to) + " deviates " +
                format_double(e.max_deviation));
  }
  detail = "68 pair/size combinations, max deviation " +
           format_double(report.max_oracle_deviation());
}

// ---- criterion 2: published-table reconciliation and errata ----

void c2_table_reconciliation(std::string& detail) {
  // The worked Z->G permutation must be reproduced exactly.
  const auto p_zg =
      transform::build_p(Representation::Z, Representation::G, norm50(), {});
  require(max_abs_diff(p_zg.p(), oracle::reference_example_p_zg()) == 0.0,
          "generated Z->G is not exactly the published permutation");

  // The generated S->Y must equal the signed table entry up to a scalar
  // (it is in fact an exact match).
  const auto p_sy =
      transform::build_p(Representation::S, Representation::Y, norm50(), {});
  const auto table_sy = oracle::reference_table_p(Representation::S,
                                                  Representation::Y, 50.0);
  require(table_sy.has_value(), "S->Y missing from the reference table");
  require(max_abs_diff(p_sy.p(), *table_sy) < 1e-12,
          "generated S->Y does not match the signed table entry");

  // The verification run must flag the inconsistent published entries.
  oracle::VerificationConfig config;
  config.trials = 50;
  config.seed = 1;
  const auto report = oracle::verify_all(config);
  int mismatches = 0, scalar_matches = 0, matches = 0;
  bool st_flagged = false, ts_flagged = false, intext_flagged = false;
  for (const auto& e : report.entries) {
    if (e.ports != 2) continue;
    if (e.verdict == oracle::Verdict::Mismatch) {
      ++mismatches;
      require(!e.notes.empty(), "mismatch entry carries no erratum note");
      if (e.from == Representation::S && e.to == Representation::T) st_flagged = true;
      if (e.from == Representation::T && e.to == Representation::S) ts_flagged = true;
    }
    if (e.verdict == oracle::Verdict::ScalarMatch) ++scalar_matches;
    if (e.verdict == oracle::Verdict::Match) ++matches;
    for (const auto& note : e.notes) {
      if (note.find("in-text") != std::string::npos) intext_flagged = true;
    }
  }
  require(st_flagged && ts_flagged, "S<->T mismatches were not reported as errata");
  require(intext_flagged, "the in-text S->Y worked example was not flagged");
  require(report.oracle_ok(), "oracle disagreement while grading the table");
  const std::string text = report.text();
  require(text.find("errata") != std::string::npos, "report lacks an errata section");
  detail = std::to_string(matches) + " match, " + std::to_string(scalar_matches) +
           " scalar-match, " + std::to_string(mismatches) +
           " mismatch entries reported as errata";
}

// ---- criterion 3: round trips ----

void c3_round_trips(std::string& detail) {
  oracle::SampleRng rng(2024);
  const PortNormalization norm = norm50();
  int checked = 0;
  double worst = 0.0;
  for (Representation a : kAllRepresentations) {
    for (Representation b : kAllRepresentations) {
      if (a == b) continue;
      int done = 0, attempts = 0;
      while (done < 100 && attempts < 100000) {
        ++attempts;
        const ComplexMatrix r = random_box(2, rng);
        try {
          const NetworkPoint x(1e9, a, r, norm);
          const NetworkPoint back =
              transform::convert(transform::convert(x, b), a);
          const double dev = rel_deviation(back.matrix, r);
          worst = std::max(worst, dev);
          require(dev < 1e-10, to_string(a) + "->" + to_string(b) + "->" +
                                   to_string(a) + " deviates " + format_double(dev));
          ++done;
          ++checked;
        } catch (const SingularConversion&) {
          continue;
        }
      }
      require(done == 100, to_string(a) + "<->" + to_string(b) +
                               ": draw budget exhausted");
    }
  }
  detail = std::to_string(checked) + " round trips, worst deviation " +
           format_double(worst);
}

// ---- criterion 4: known devices ----

void c4_known_devices(std::string& detail) {
  const double tol = 1e-10;

  // Series 50 ohm element.
  const NetworkPoint series = series_element_y_point();
  require(max_abs_diff(transform::convert(series, Representation::S).matrix,
                       series_element_s()) < tol,
          "series S mismatch");
  ComplexMatrix y_expected(2, 2);
  y_expected(0, 0) = Complex{0.02, 0};
  y_expected(0, 1) = Complex{-0.02, 0};
  y_expected(1, 0) = Complex{-0.02, 0};
  y_expected(1, 1) = Complex{0.02, 0};
  require(max_abs_diff(series.matrix, y_expected) == 0.0, "series Y fixture wrong");
  require(max_abs_diff(transform::convert(series, Representation::H).matrix,
                       ComplexMatrix::from_rows({{Complex{50, 0}, Complex{1, 0}},
                                                 {Complex{-1, 0}, Complex{0, 0}}})) <
              tol,
          "series H mismatch");
  require(max_abs_diff(transform::convert(series, Representation::A).matrix,
                       ComplexMatrix::from_rows({{Complex{1, 0}, Complex{50, 0}},
                                                 {Complex{0, 0}, Complex{1, 0}}})) <
              tol,
          "series A mismatch");
  require(max_abs_diff(transform::convert(series, Representation::T).matrix,
                       ComplexMatrix::from_rows({{Complex{1.5, 0}, Complex{-0.5, 0}},
                                                 {Complex{0.5, 0}, Complex{0.5, 0}}})) <
              tol,
          "series T mismatch");
  bool threw = false;
  try {
    transform::convert(series, Representation::Z);
  } catch (const SingularConversion&) {
    threw = true;
  }
  require(threw, "series element must have no Z representation");

  // Shunt 0.05 S element.
  const NetworkPoint shunt = shunt_element_z_point(0.05);
  require(max_abs_diff(transform::convert(shunt, Representation::A).matrix,
                       ComplexMatrix::from_rows({{Complex{1, 0}, Complex{0, 0}},
                                                 {Complex{0.05, 0}, Complex{1, 0}}})) <
              tol,
          "shunt A mismatch");
  threw = false;
  try {
    transform::convert(shunt, Representation::Y);
  } catch (const SingularConversion&) {
    threw = true;
  }
  require(threw, "shunt element must have no Y representation");

  // Ideal through.
  const NetworkPoint through = through_s_point();
  require(max_abs_diff(transform::convert(through, Representation::A).matrix,
                       ComplexMatrix::identity(2)) < tol,
          "through A mismatch");
  threw = false;
  try {
    transform::convert(through, Representation::Z);
  } catch (const SingularConversion&) {
    threw = true;
  }
  require(threw, "through must have no Z representation");
  detail = "series/shunt/through vectors reproduced at 1e-10";
}

// ---- criterion 5: convention invariance ----

void c5_convention_invariance(std::string& detail) {
  oracle::SampleRng rng(999);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix z = random_box(2, rng) * Complex{40.0, 0.0};

    const NetworkPoint p_kuro(1e9, Representation::Z, z, norm50(), WaveConvention{});
    const NetworkPoint p_trav(1e9, Representation::Z, z, norm50(),
                              WaveConvention(WaveKind::Traveling));
    const ComplexMatrix s_kuro = transform::convert(p_kuro, Representation::S).matrix;
    const ComplexMatrix s_trav = transform::convert(p_trav, Representation::S).matrix;
    const double dev_real = rel_deviation(s_trav, s_kuro);
    worst = std::max(worst, dev_real);
    require(dev_real < 1e-12, "real z0: conventions disagree by " +
                                  format_double(dev_real));

    const PortNormalization complex_norm =
        PortNormalization::uniform(2, Complex{50.0, 50.0});
    const ComplexMatrix s_base =
        transform::convert(NetworkPoint(1e9, Representation::Z, z, complex_norm),
                           Representation::S)
            .matrix;
    for (int m = 0; m < 8; ++m) {
      const double angle = 2.0 * 3.14159265358979323846 * m / 8.0;
      const WaveConvention conv(WaveKind::Traveling,
                                Complex{std::cos(angle), std::sin(angle)});
      const ComplexMatrix s_alpha =
          transform::convert(
              NetworkPoint(1e9, Representation::Z, z, complex_norm, conv),
              Representation::S)
              .matrix;
      const double dev = rel_deviation(s_alpha, s_base);
      worst = std::max(worst, dev);
      require(dev < 1e-12, "alpha sweep: deviation " + format_double(dev));
    }
  }
  detail = "worst deviation " + format_double(worst) + " across conventions and alpha";
}

// ---- criterion 6: wave round trip ----

void c6_wave_round_trip(std::string& detail) {
  oracle::SampleRng rng(4242);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex v = 10.0 * rng.box_complex();
    const Complex i = rng.box_complex();
    const Complex z0{0.5 + 400.0 * rng.canonical(),
                     200.0 * (2.0 * rng.canonical() - 1.0)};
    Complex k = rng.box_complex();
    if (std::abs(k) < 1e-3) k = Complex{0.25, -0.5};
    const WavePair w = vi_to_waves(v, i, z0, k);
    const VoltageCurrent vi = waves_to_vi(w.a, w.b, z0, k);
    const double scale = std::max({std::abs(v), std::abs(i), 1.0});
    const double dev = std::max(std::abs(vi.v - v), std::abs(vi.i - i)) / scale;
    worst = std::max(worst, dev);
    require(dev < 1e-12, "round trip deviates " + format_double(dev));
  }
  detail = "1000 tuples, worst deviation " + format_double(worst);
}

// ---- criterion 7: touchstone ----

void c7_touchstone(std::string& detail) {
  namespace ts = netconv::touchstone;
  oracle::SampleRng rng(31337);
  double worst = 0.0;
  for (Representation rep : {Representation::S, Representation::Y, Representation::Z,
                             Representation::G, Representation::H}) {
    NetworkSweep sweep;
    for (int p = 0; p < 3; ++p) {
      sweep.append(NetworkPoint(1e9 * (p + 1), rep, random_box(2, rng), norm50()));
    }
    for (ts::NumberFormat format :
         {ts::NumberFormat::RI, ts::NumberFormat::MA, ts::NumberFormat::DB}) {
      ts::TouchstoneOptions options;
      options.format = format;
      options.resistance = 50.0;
      const auto parsed = ts::parse(ts::write(sweep, options), 2);
      for (std::size_t i = 0; i < sweep.size(); ++i) {
        const double dev = rel_deviation(parsed.sweep[i].matrix, sweep[i].matrix);
        worst = std::max(worst, dev);
        require(dev < 1e-9, to_string(rep) + "/" + ts::to_string(format) +
                                " round trip deviates " + format_double(dev));
      }
    }
  }

  // Asymmetric ordering fixture: S21 = 0.9, S12 = 0.1.
  ComplexMatrix s(2, 2);
  s(1, 0) = Complex{0.9, 0.0};
  s(0, 1) = Complex{0.1, 0.0};
  NetworkSweep asym;
  asym.append(NetworkPoint(1e9, Representation::S, s, norm50()));
  ts::TouchstoneOptions options;
  options.format = ts::NumberFormat::RI;
  const auto parsed = ts::parse(ts::write(asym, options), 2);
  require(std::abs(parsed.sweep[0].matrix(1, 0).real() - 0.9) < 1e-12 &&
              std::abs(parsed.sweep[0].matrix(0, 1).real() - 0.1) < 1e-12,
          "two-port ordering quirk swapped S12/S21");
  detail = "RI/MA/DB x S/Y/Z/G/H identity, worst deviation " + format_double(worst);
}

// ---- criteria 8 and 9: the CLI ----

struct CliRunner {
  std::string binary;
  fs::path dir;

  int run(const std::string& args, const std::string& tag) const {
    const fs::path out = dir / (tag + ".out");
    const fs::path err = dir / (tag + ".err");
    const std::string cmd = "\"" + binary + "\" " + args + " > \"" + out.string() +
                            "\" 2> \"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    if (status == -1) throw Failure("failed to launch: " + cmd);
    return WEXITSTATUS(status);
  }

  std::string slurp(const std::string& tag, const char* kind) const {
    std::ifstream in(dir / (tag + std::string(".") + kind), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
};

CliRunner make_runner() {
  const char* bin = std::getenv("NETCONV_BIN");
  if (bin == nullptr || *bin == '\0') {
    throw Failure("NETCONV_BIN is not set; cannot exercise the CLI");
  }
  CliRunner runner;
  runner.binary = bin;
  runner.dir = fs::temp_directory_path() /
               ("netconv-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(runner.dir);
  return runner;
}

void write_series_fixture(const fs::path& path) {
  // Series 50 ohm element at three frequencies, full double precision.
  std::ofstream out(path);
  out << "! series 50 ohm element\n";
  out << "# HZ S RI R 50\n";
  char line[256];
  for (double f : {1e9, 2e9, 3e9}) {
    std::snprintf(line, sizeof(line),
                  "%.17g %.17g 0 %.17g 0 %.17g 0 %.17g 0\n", f, 1.0 / 3.0,
                  2.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0);
    out << line;
  }
}

void c8_cli_end_to_end(std::string& detail) {
  namespace ts = netconv::touchstone;
  const CliRunner cli = make_runner();
  const fs::path series = cli.dir / "series.s2p";
  write_series_fixture(series);

  // 1) No Z representation exists: exit 2 with a singular message.
  int code = cli.run("convert --to z --z0 50 \"" + series.string() + "\" -o \"" +
                         (cli.dir / "series_z.s2p").string() + "\"",
                     "to_z");
  require(code == 2, "convert --to z: expected exit 2, got " + std::to_string(code));
  const std::string err = cli.slurp("to_z", "err");
  require(err.find("error: singular:") != std::string::npos,
          "convert --to z: missing greppable singular prefix");
  require(err.find("1e+09") != std::string::npos || err.find("1000000000") != std::string::npos,
          "convert --to z: message does not name the frequency");

  // 2) Y conversion of the series element.
  const fs::path y_out = cli.dir / "series_y.s2p";
  code = cli.run("convert --to y --z0 50 \"" + series.string() + "\" -o \"" +
                     y_out.string() + "\"",
                 "to_y");
  require(code == 0, "convert --to y: expected exit 0, got " + std::to_string(code));
  {
    std::ifstream in(y_out);
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto parsed = ts::parse(buf.str(), 2);
    require(parsed.sweep.rep() == Representation::Y, "output is not Y parameters");
    ComplexMatrix expected(2, 2);
    expected(0, 0) = Complex{0.02, 0};
    expected(0, 1) = Complex{-0.02, 0};
    expected(1, 0) = Complex{-0.02, 0};
    expected(1, 1) = Complex{0.02, 0};
    for (const auto& point : parsed.sweep) {
      require(max_abs_diff(point.matrix, expected) < 1e-9,
              "Y output wrong at " + std::to_string(point.frequency_hz));
    }
  }

  // 3) T conversion routed to CSV.
  const fs::path t_out = cli.dir / "series_t.csv";
  code = cli.run("convert --to t --z0 50 \"" + series.string() + "\" -o \"" +
                     t_out.string() + "\"",
                 "to_t");
  require(code == 0, "convert --to t: expected exit 0, got " + std::to_string(code));
  {
    std::ifstream in(t_out);
    std::ostringstream buf;
    buf << in.rdbuf();
    const NetworkSweep sweep = ts::read_csv(buf.str(), 50.0);
    const ComplexMatrix expected = ComplexMatrix::from_rows(
        {{Complex{1.5, 0}, Complex{-0.5, 0}}, {Complex{0.5, 0}, Complex{0.5, 0}}});
    require(sweep.rep() == Representation::T, "CSV is not T parameters");
    for (const auto& point : sweep) {
      require(max_abs_diff(point.matrix, expected) < 1e-9, "T CSV values wrong");
    }
  }

  // 4) Cascade of two series elements in A representation.
  const fs::path casc_out = cli.dir / "cascade_a.csv";
  code = cli.run("cascade \"" + series.string() + "\" \"" + series.string() +
                     "\" --to a -o \"" + casc_out.string() + "\"",
                 "cascade");
  require(code == 0, "cascade: expected exit 0, got " + std::to_string(code));
  {
    std::ifstream in(casc_out);
    std::ostringstream buf;
    buf << in.rdbuf();
    const NetworkSweep sweep = ts::read_csv(buf.str(), 50.0);
    const ComplexMatrix expected = ComplexMatrix::from_rows(
        {{Complex{1, 0}, Complex{100, 0}}, {Complex{0, 0}, Complex{1, 0}}});
    for (const auto& point : sweep) {
      require(rel_deviation(point.matrix, expected) < 1e-9, "cascade A values wrong");
    }
  }
  detail = "convert z/y/t and cascade reproduce stated outputs and exit codes";
}

void c9_selftest_determinism(std::string& detail) {
  const CliRunner cli = make_runner();
  const int code1 = cli.run("selftest --seed 7 --trials 40", "selftest1");
  const int code2 = cli.run("selftest --seed 7 --trials 40", "selftest2");
  require(code1 == 0 && code2 == 0, "selftest did not exit 0");
  const std::string r1 = cli.slurp("selftest1", "out");
  const std::string r2 = cli.slurp("selftest2", "out");
  require(!r1.empty(), "selftest produced no report");
  require(r1 == r2, "reports differ between identically seeded runs");
  detail = "two seeded runs produced byte-identical " +
           std::to_string(r1.size()) + "-byte reports";
}

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {"1 table verification (oracle equivalence, 56 pairs + multiport)",
       c1_table_verification},
      {"2 published-table reconciliation and errata", c2_table_reconciliation},
      {"3 round-trip suite (1e-10)", c3_round_trips},
      {"4 known-device vectors (1e-10)", c4_known_devices},
      {"5 convention invariance (1e-12)", c5_convention_invariance},
      {"6 wave-transform round trip (1e-12)", c6_wave_round_trip},
      {"7 touchstone identity and ordering quirk (1e-9)", c7_touchstone},
      {"8 CLI end-to-end", c8_cli_end_to_end},
      {"9 selftest determinism", c9_selftest_determinism},
  };

  int failures = 0;
  for (const auto& check : checks) {
    std::string detail;
    try {
      check.run(detail);
      std::printf("[PASS] criterion %s%s%s\n", check.name.c_str(),
                  detail.empty() ? "" : " -- ", detail.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] criterion %s -- %s\n", check.name.c_str(), e.what());
    }
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", checks.size());
  } else {
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, checks.size());
  }
  return failures;
}
