#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pattern_io.hpp"
#include "weakhash/approx.hpp"
#include "weakhash/error.hpp"
#include "weakhash/format.hpp"
#include "weakhash/prohorov.hpp"
#include "weakhash/weakhash.hpp"

namespace weakhash::cli {

namespace {

constexpr double kOracleTolerance = 1e-9;

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(const std::string& s, std::string_view what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    throw InputError(std::string(what) + ": '" + s + "' is not a finite number");
  }
  return v;
}

Point parse_point(const std::string& s, std::string_view what) {
  std::vector<double> coords;
  for (const std::string& part : split(s, ',')) coords.push_back(parse_number(part, what));
  return Point(std::move(coords));
}

void write_profile_file(const std::string& path, const StepProfile& profile) {
  std::ofstream csv(path);
  if (!csv) throw InputError(path + ": cannot open for writing");
  write_profile_csv(csv, profile);
}

struct PairArgs {
  std::string a;
  std::string b;
};

void add_pair(CLI::App* cmd, PairArgs& args) {
  cmd->add_option("A", args.a, "first pattern file")->required();
  cmd->add_option("B", args.b, "second pattern file")->required();
}

int cmd_prohorov(const PairArgs& files, bool oracle, std::ostream& out, std::ostream& err) {
  const CountingMeasure mu = load_pattern(files.a);
  const CountingMeasure nu = load_pattern(files.b);
  const double d = prohorov_distance(mu, nu);
  out << format_real(d) << '\n';
  if (oracle) {
    if (mu.size() + nu.size() > kOracleMaxAtoms) {
      err << "oracle skipped: " << mu.size() + nu.size() << " atoms exceed the limit of "
          << kOracleMaxAtoms << '\n';
    } else {
      const double o = prohorov_oracle(mu, nu);
      if (!(std::abs(o - d) <= kOracleTolerance)) {
        err << "oracle mismatch: flow " << format_real(d) << ", oracle " << format_real(o)
            << '\n';
        return kOracleMismatch;
      }
    }
  }
  return kOk;
}

int cmd_weakhash(const PairArgs& files, std::optional<double> truncate,
                 const std::string& profile_path, std::ostream& out) {
  const CountingMeasure mu = load_pattern(files.a);
  const CountingMeasure nu = load_pattern(files.b);
  const StepProfile profile = prohorov_profile(mu, nu);
  const double value =
      truncate ? truncated_weak_hash(profile, *truncate) : weak_hash_distance(profile);
  out << format_real(value) << '\n';
  if (!profile_path.empty()) write_profile_file(profile_path, profile);
  return kOk;
}

int cmd_profile(const PairArgs& files, const std::string& path, std::ostream& out) {
  const CountingMeasure mu = load_pattern(files.a);
  const CountingMeasure nu = load_pattern(files.b);
  const StepProfile profile = prohorov_profile(mu, nu);
  if (path.empty()) {
    write_profile_csv(out, profile);
  } else {
    write_profile_file(path, profile);
    out << format_real(weak_hash_distance(profile)) << '\n';
  }
  return kOk;
}

struct ConvergeArgs {
  std::string target;
  std::vector<std::string> sequence;
  double tol = 0.05;
  std::string radii = "auto";
  std::string sets;
  std::string funcs;
};

int cmd_converge(const ConvergeArgs& args, std::ostream& out) {
  const CountingMeasure target = load_pattern(args.target);
  std::vector<CountingMeasure> terms;
  for (const std::string& f : args.sequence) terms.push_back(load_pattern(f));
  const MeasureSequence seq(std::move(terms), target);

  std::vector<double> radii;
  if (args.radii == "auto") {
    double reach = 0.0;
    for (const CountingMeasure* m : {&seq.target(), &seq.last()}) {
      for (double r : m->radii()) reach = std::max(reach, r);
    }
    // One radius per unit shell, covering every atom of the target and the
    // last term.
    const auto count = static_cast<std::size_t>(std::floor(reach)) + 1;
    radii = select_continuity_radii(seq.target(), count, static_cast<double>(count));
  } else {
    for (const std::string& r : split(args.radii, ',')) {
      radii.push_back(parse_number(r, "--radii"));
    }
  }

  std::vector<TestFunction> funcs;
  if (args.funcs.empty()) {
    std::vector<Point> centres;
    for (const CountingMeasure* m : {&seq.target(), &seq.last()}) {
      for (const Atom& a : m->atoms()) centres.push_back(a.point);
    }
    std::sort(centres.begin(), centres.end());
    centres.erase(std::unique(centres.begin(), centres.end()), centres.end());
    for (Point& c : centres) funcs.push_back(TestFunction::tent(std::move(c), 1.0));
  } else {
    funcs = parse_function_list(args.funcs);
  }

  std::vector<PointSet> sets;
  if (args.sets.empty()) {
    for (double r : radii) {
      sets.push_back(PointSet::closed_ball(seq.target().context().origin(), r));
    }
  } else {
    sets = parse_set_list(args.sets);
  }

  const std::vector<ConvergenceVerdict> verdicts{
      check_criterion_weakhash(seq, args.tol),
      check_criterion_integrals(seq, funcs, args.tol),
      check_criterion_restrictions(seq, radii, args.tol),
      check_criterion_sets(seq, sets, args.tol),
  };
  write_verdict_table(out, verdicts);
  const bool first = verdicts.front().converged;
  const bool agree = std::all_of(verdicts.begin(), verdicts.end(),
                                 [first](const auto& v) { return v.converged == first; });
  out << (agree ? "criteria agree: " : "criteria DISAGREE: ")
      << (agree ? (first ? "converged" : "not converged") : "see table") << '\n';
  return agree ? kOk : kCriteriaDisagree;
}

struct ApproxArgs {
  std::string file;
  double radius = 0.0;
  double eps = 0.0;
  std::optional<double> grid;
  std::string output;
};

int cmd_approx(const ApproxArgs& args, std::ostream& out) {
  const CountingMeasure mu = load_pattern(args.file);
  std::optional<GridSpec> grid;
  if (args.grid) grid = GridSpec(*args.grid, mu.context().origin());
  const CertifiedApproximation result = approximate(mu, args.radius, args.eps, grid);
  out << format_real(result.certified_error) << '\n';
  if (args.output.empty()) {
    out << serialize_pattern(result.approximant);
  } else {
    save_pattern(args.output, result.approximant);
  }
  return result.certified_error <= args.eps ? kOk : kFailure;
}

}  // namespace

std::vector<PointSet> parse_set_list(std::string_view spec) {
  std::vector<PointSet> sets;
  for (const std::string& item : split(spec, ';')) {
    const std::vector<std::string> f = split(item, ':');
    if (f.size() == 3 && f[0] == "ball") {
      sets.push_back(PointSet::closed_ball(parse_point(f[1], "ball centre"),
                                           parse_number(f[2], "ball radius")));
    } else if (f.size() == 3 && f[0] == "box") {
      sets.push_back(PointSet::box(parse_point(f[1], "box lo"), parse_point(f[2], "box hi")));
    } else {
      throw InputError("bad set '" + item + "': expected ball:c:r or box:lo:hi");
    }
  }
  return sets;
}

std::vector<TestFunction> parse_function_list(std::string_view spec) {
  std::vector<TestFunction> funcs;
  for (const std::string& item : split(spec, ';')) {
    const std::vector<std::string> f = split(item, ':');
    if ((f.size() == 3 || f.size() == 4) && (f[0] == "tent" || f[0] == "bump")) {
      Point c = parse_point(f[1], "function centre");
      const double radius = parse_number(f[2], "function radius");
      const double height = f.size() == 4 ? parse_number(f[3], "function height") : 1.0;
      funcs.push_back(f[0] == "tent" ? TestFunction::tent(std::move(c), radius, height)
                                     : TestFunction::bump(std::move(c), radius, height));
    } else {
      throw InputError("bad function '" + item + "': expected tent|bump:c:radius[:height]");
    }
  }
  return funcs;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Prohorov and weak-hash distances between counting measures", "weakhash"};
  app.require_subcommand(1);

  PairArgs pair;
  bool oracle = false;
  auto* prohorov = app.add_subcommand("prohorov", "Prohorov distance d(A, B)");
  add_pair(prohorov, pair);
  prohorov->add_flag("--oracle", oracle, "cross-check against subset enumeration");

  std::optional<double> truncate;
  std::string profile_path;
  auto* weakhash = app.add_subcommand("weakhash", "weak-hash distance d#(A, B)");
  add_pair(weakhash, pair);
  weakhash->add_option("--truncate", truncate, "integrate over [0, R] only")
      ->check(CLI::PositiveNumber);
  weakhash->add_option("--profile", profile_path, "write the step profile as CSV");

  std::string profile_out;
  auto* profile = app.add_subcommand("profile", "step profile of r -> d(A^(r), B^(r))");
  add_pair(profile, pair);
  profile->add_option("-o,--output", profile_out, "CSV destination (default stdout)");

  ConvergeArgs conv;
  auto* converge = app.add_subcommand("converge", "convergence diagnostics");
  converge->add_option("TARGET", conv.target, "limit pattern")->required();
  converge->add_option("SEQUENCE", conv.sequence, "sequence patterns in order")->required();
  converge->add_option("--tol", conv.tol, "tolerance")->check(CLI::PositiveNumber);
  converge->add_option("--radii", conv.radii, "'auto' or comma-separated radii");
  converge->add_option("--sets", conv.sets, "ball:c:r / box:lo:hi list separated by ';'");
  converge->add_option("--funcs", conv.funcs, "tent|bump:c:radius[:height] list");

  ApproxArgs approx_args;
  auto* approx = app.add_subcommand("approx", "certified grid approximation");
  approx->add_option("FILE", approx_args.file, "pattern file")->required();
  approx->add_option("--radius", approx_args.radius, "window R")
      ->required()->check(CLI::PositiveNumber);
  approx->add_option("--eps", approx_args.eps, "error budget")
      ->required()->check(CLI::PositiveNumber);
  approx->add_option("--grid", approx_args.grid, "initial spacing (default 1)")
      ->check(CLI::PositiveNumber);
  approx->add_option("-o,--output", approx_args.output, "approximant destination");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (prohorov->parsed()) return cmd_prohorov(pair, oracle, out, err);
    if (weakhash->parsed()) return cmd_weakhash(pair, truncate, profile_path, out);
    if (profile->parsed()) return cmd_profile(pair, profile_out, out);
    if (converge->parsed()) return cmd_converge(conv, out);
    if (approx->parsed()) return cmd_approx(approx_args, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const IterationCapError& e) {
    err << "error: " << e.what() << '\n';
    return kIterationCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace weakhash::cli
