#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hydromom/errors.hpp"
#include "hydromom/export.hpp"
#include "hydromom/grid.hpp"
#include "hydromom/oracle.hpp"
#include "hydromom/paraboloidal.hpp"
#include "hydromom/spherical.hpp"
#include "hydromom/verify.hpp"

namespace hydromom::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::array<int, 3> parse_triple(const std::string& text) {
  std::array<int, 3> v{};
  std::istringstream ss(text);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 3) throw UsageError("--state takes three comma-separated integers");
    try {
      std::size_t used = 0;
      v[k] = std::stoi(item, &used);
      if (used != item.size()) throw UsageError("");
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "' in --state");
    }
    ++k;
  }
  if (k != 3) throw UsageError("--state takes three comma-separated integers");
  return v;
}

std::string fmt_g(double v) { return fmt::format("{:.17g}", v); }

struct Globals {
  double charge = 1.0;
  std::optional<double> tolerance;
  std::uint64_t seed = verify::VerifyOptions{}.seed;
};

int do_eval(const std::string& system, const std::string& state, const std::string& grid_text,
            const std::string& out_path, const std::string& format, const Globals& g, std::ostream& out) {
  const auto q = parse_triple(state);
  const GridSpec grid = parse_grid(grid_text);
  GridSample sample;
  Metadata meta;
  if (system == "parab") {
    const auto s = parabolic::parabolic_numbers(q[0], q[1], q[2], g.charge);
    const auto wf = parabolic::wavefunction_parabolic(s);
    sample = evaluate_grid(wf, grid);
    meta = {{"system", "paraboloidal"},
            {"state", "n1,n2,m = " + s.label()},
            {"n", std::to_string(s.n)},
            {"Z", fmt_g(s.Z)},
            {"energy", fmt_g(parabolic::energy_parabolic(s))},
            {"delta", wf.delta.label() + " factor not included in values"}};
  } else {
    const auto s = spherical::make_state(q[0], q[1], q[2], g.charge);
    const auto wf = spherical::wavefunction_spherical(s);
    sample = evaluate_grid(wf, grid);
    meta = {{"system", "spherical"},
            {"state", fmt::format("n,l,m = {},{},{}", s.n, s.l, s.m)},
            {"n", std::to_string(s.n)},
            {"Z", fmt_g(s.Z)},
            {"energy", fmt_g(spherical::energy(s))},
            {"delta", wf.delta.label() + " factor not included in values"}};
  }
  meta.emplace_back("units", "hartree atomic units");
  meta.emplace_back("grid", fmt::format("{}:{}:{}", fmt_g(grid.p_min), fmt_g(grid.p_max), grid.steps));

  auto emit = [&](std::ostream& os) {
    if (format == "json") {
      write_json(os, sample, meta);
    } else {
      write_csv(os, sample, meta);
    }
  };
  if (out_path.empty() || out_path == "-") {
    emit(out);
  } else {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot open '" + out_path + "' for writing");
    emit(f);
    if (!f) throw UsageError("write to '" + out_path + "' failed");
  }
  return 0;
}

int do_spectrum(int n_max, const Globals& g, std::ostream& out) {
  if (n_max < 1) throw UsageError("--n-max must be >= 1");
  for (int n = 1; n <= n_max; ++n) {
    const auto shell = parabolic::enumerate_shell(n, g.charge);
    out << fmt::format("shell {}: {} state{}, E = {} hartree\n", n, shell.size(), shell.size() == 1 ? "" : "s",
                       parabolic::energy_parabolic(shell.front()));
    std::string labels;
    for (const auto& s : shell) labels += (labels.empty() ? "" : " ") + ("(" + s.label() + ")");
    out << "  " << labels << '\n';
  }
  return 0;
}

oracle::Operator parse_operator(const std::string& name) {
  if (name == "norm") return oracle::Operator::identity;
  if (name == "position") return oracle::Operator::position;
  return oracle::Operator::inverse_position;
}

int do_expect(const std::string& system, const std::string& state, const std::string& op_name, const Globals& g,
              std::ostream& out) {
  const auto q = parse_triple(state);
  const auto op = parse_operator(op_name);
  auto line = [&](const std::string& what, double momentum, double position) {
    out << fmt::format("{:<10} momentum {:>22.15g}  position {:>22.15g}  rel.diff {:.3g}\n", what, momentum,
                       position, std::abs(momentum - position) / std::max(std::abs(position), 1e-300));
  };
  if (system == "parab") {
    const auto s = parabolic::parabolic_numbers(q[0], q[1], q[2], g.charge);
    out << fmt::format("paraboloidal ({}), operator {}\n", s.label(), op_name);
    for (auto ax : {parabolic::Axis::u, parabolic::Axis::v}) {
      const auto f = parabolic::alpha_parabolic(s, ax);
      const double mom = op == oracle::Operator::identity
                             ? oracle::expectation(f, op).real()
                             : oracle::normalized_expectation(f, op, parabolic::kCoordinateScale);
      line(ax == parabolic::Axis::u ? "u factor" : "v factor", mom,
           oracle::position_expectation_parabolic(s, ax, op));
    }
  } else {
    const auto s = spherical::make_state(q[0], q[1], q[2], g.charge);
    out << fmt::format("spherical ({},{},{}), operator {}\n", s.n, s.l, s.m, op_name);
    const auto a = spherical::alpha_radial(s);
    const double mom =
        op == oracle::Operator::identity ? oracle::expectation(a, op).real() : oracle::normalized_expectation(a, op);
    line("radial", mom, oracle::position_expectation_radial(s.n, s.l, s.p0(), op));
  }
  return 0;
}

int do_verify(const std::string& suite, const Globals& g, std::ostream& out) {
  verify::VerifyOptions o;
  o.charge = g.charge;
  o.tolerance = g.tolerance;
  o.seed = g.seed;
  const auto results = verify::run_suite(suite, o);
  bool all = true;
  out << fmt::format("{:<3} {:<32} {:<6} {:>11} {:>11}  {}\n", "#", "criterion", "result", "measured", "tolerance",
                     "detail");
  for (const auto& r : results) {
    all = all && r.passed;
    out << fmt::format("{:<3} {:<32} {:<6} {:>11.3g} {:>11.3g}  {}\n", r.criterion, r.name,
                       r.passed ? "PASS" : "FAIL", r.measured, r.tolerance, r.detail);
  }
  out << (all ? "all checks passed\n" : "verification FAILED\n");
  return all ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Momentum-representation hydrogen eigenfunctions: evaluation, spectra, verification", "hydromom"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--charge", g.charge, "Nuclear charge Z")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", g.tolerance, "Override every verification tolerance");
  app.add_option("--seed", g.seed, "Seed for the randomized algebra checks");

  const std::vector<std::string> systems = {"parab", "spherical"};

  std::string system = "parab", state, grid_text = "-3:3:61", out_path = "-", format = "csv";
  auto* eval = app.add_subcommand("eval", "Evaluate a state on a grid and write CSV or JSON");
  eval->add_option("--system", system, "parab or spherical")->check(CLI::IsMember(systems));
  eval->add_option("--state", state, "n1,n2,m (parab) or n,l,m (spherical)")->required();
  eval->add_option("--grid", grid_text, "MIN:MAX:STEPS per axis");
  eval->add_option("--out", out_path, "Output file, - for stdout");
  eval->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  int n_max = 3;
  auto* spectrum = app.add_subcommand("spectrum", "Print shells, energies and degeneracies");
  spectrum->add_option("--n-max", n_max, "Highest shell")->required();

  std::string op = "norm";
  auto* expect = app.add_subcommand("expect", "Compare momentum- and position-side expectation values");
  expect->add_option("--system", system, "parab or spherical")->check(CLI::IsMember(systems));
  expect->add_option("--state", state, "n1,n2,m (parab) or n,l,m (spherical)")->required();
  expect->add_option("--operator", op, "norm, position or inverse-position")
      ->check(CLI::IsMember({"norm", "position", "inverse-position"}));

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run acceptance suites");
  ver->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(verify::suite_names()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*eval) return do_eval(system, state, grid_text, out_path, format, g, out);
    if (*spectrum) return do_spectrum(n_max, g, out);
    if (*expect) return do_expect(system, state, op, g, out);
    if (*ver) return do_verify(suite, g, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace hydromom::cli
