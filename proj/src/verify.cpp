#include "hydromom/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "hydromom/errors.hpp"
#include "hydromom/oracle.hpp"
#include "hydromom/paraboloidal.hpp"
#include "hydromom/residue.hpp"
#include "hydromom/spherical.hpp"

namespace hydromom::verify {

namespace {

using parabolic::Axis;

// Worst-case bookkeeping for one criterion.
class Tracker {
 public:
  Tracker(int criterion, std::string name, double pinned, const VerifyOptions& o)
      : criterion_(criterion), name_(std::move(name)), tol_(o.tolerance.value_or(pinned)) {}

  double tolerance() const { return tol_; }

  void record(const std::string& label, double deviation, double tol_scale = 1.0) {
    const double limit = tol_ * tol_scale;
    const bool ok = std::isfinite(deviation) && deviation <= limit;
    double ratio = INFINITY;
    if (std::isfinite(deviation)) ratio = limit > 0.0 ? deviation / limit : (deviation == 0.0 ? 0.0 : INFINITY);
    if (ratio > worst_ratio_ || worst_label_.empty()) {
      worst_ratio_ = ratio;
      worst_ = deviation;
      worst_label_ = label;
    }
    if (!ok) failures_.push_back(fmt::format("{} ({:.3g})", label, deviation));
  }

  void fail(const std::string& label, const std::string& why) {
    failures_.push_back(label + ": " + why);
    worst_ = INFINITY;
    worst_ratio_ = INFINITY;
    worst_label_ = label;
  }

  CheckResult result() const {
    CheckResult r;
    r.criterion = criterion_;
    r.name = name_;
    r.passed = failures_.empty();
    r.measured = worst_;
    r.tolerance = tol_;
    if (failures_.empty()) {
      r.detail = "worst: " + worst_label_;
    } else {
      r.detail = "failed: ";
      for (std::size_t k = 0; k < failures_.size(); ++k) {
        if (k > 0) r.detail += "; ";
        if (k == 6) {
          r.detail += fmt::format("... {} more", failures_.size() - k);
          break;
        }
        r.detail += failures_[k];
      }
    }
    return r;
  }

 private:
  int criterion_;
  std::string name_;
  double tol_;
  double worst_ = 0.0;
  double worst_ratio_ = 0.0;
  std::string worst_label_;
  std::vector<std::string> failures_;
};

template <class F>
void guarded(Tracker& t, const std::string& label, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    t.fail(label, e.what());
  }
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = a + (b - a) * k / (n - 1);
  return out;
}

std::vector<Complex> evaluate_on(const PoleSum& f, const std::vector<double>& ps) {
  std::vector<Complex> out;
  for (double p : ps) out.push_back(f(Complex(p, 0.0)));
  return out;
}

const char* axis_name(Axis a) { return a == Axis::u ? "u" : "v"; }

}  // namespace

CheckResult check_energy_spectrum(const VerifyOptions& o) {
  Tracker t(1, "energy spectrum", 1e-15, o);
  for (double Z : {1.0, 2.0}) {
    for (int n = 1; n <= 10; ++n) {
      const double exact = -(Z * Z) / (2.0 * n * n);
      const double sph = spherical::energy(spherical::make_state(n, 0, 0, Z));
      t.record(fmt::format("spherical n={} Z={}", n, Z), std::abs(sph - exact));
      for (const auto& s : parabolic::enumerate_shell(n, Z)) {
        t.record(fmt::format("parabolic ({}) Z={}", s.label(), Z),
                 std::abs(parabolic::energy_parabolic(s) - exact));
      }
    }
  }
  return t.result();
}

CheckResult check_degeneracy(const VerifyOptions& o) {
  Tracker t(2, "shell degeneracy", 0.0, o);
  for (int n = 1; n <= 10; ++n) {
    const auto shell = parabolic::enumerate_shell(n, o.charge);
    double dev = std::abs(static_cast<double>(shell.size()) - n * n);
    for (const auto& s : shell) {
      if (s.n != n) dev = std::max(dev, 1.0);
    }
    t.record(fmt::format("n={} count={}", n, shell.size()), dev);
  }
  return t.result();
}

CheckResult check_tabulated_forms(const VerifyOptions& o) {
  Tracker t(3, "tabulated n=1,2 closed forms", 1e-10, o);
  const std::vector<std::array<int, 3>> states = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, -1}};
  const auto axis = linspace(-3.0, 3.0, 10);
  for (const auto& [n1, n2, m] : states) {
    const auto s = parabolic::parabolic_numbers(n1, n2, m, o.charge);
    guarded(t, s.label(), [&] {
      const auto wf = parabolic::wavefunction_parabolic(s);
      std::vector<Complex> ratios;
      for (double pu : axis) {
        for (double pv : axis) ratios.push_back(wf(pu, pv) / parabolic::tabulated_closed_form(s, pu, pv));
      }
      const Complex c = ratios.front();
      double spread = 0.0;
      for (const auto& r : ratios) spread = std::max(spread, std::abs(r - c) / std::abs(c));
      const double modulus = std::abs(std::abs(c) - 1.0);
      t.record(fmt::format("({}) ratio spread", s.label()), spread);
      t.record(fmt::format("({}) |constant|-1", s.label()), modulus);
    });
  }
  return t.result();
}

CheckResult check_normalization(const VerifyOptions& o) {
  Tracker t(4, "normalization", 1e-8, o);
  const double residue_scale = 1e-10 / 1e-8;
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l < n; ++l) {
      const std::string label = fmt::format("radial n={} l={}", n, l);
      guarded(t, label, [&] {
        const auto a = spherical::alpha_radial(spherical::make_state(n, l, 0, o.charge));
        const auto ac = conjugate_on_real_axis(a);
        t.record(label + " quadrature", std::abs(integrate_product_quadrature(ac, a) - 1.0));
        t.record(label + " residue", std::abs(integrate_product_contour(ac, a) - 1.0), residue_scale);
      });
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : parabolic::enumerate_shell(n, o.charge)) {
      for (Axis ax : {Axis::u, Axis::v}) {
        const std::string label = fmt::format("parabolic ({}) {}", s.label(), axis_name(ax));
        guarded(t, label, [&] {
          const auto f = parabolic::alpha_parabolic(s, ax);
          const auto fc = conjugate_on_real_axis(f);
          t.record(label + " quadrature", std::abs(integrate_product_quadrature(fc, f) - 1.0));
          if (all_integer_exponents(f)) {
            t.record(label + " residue", std::abs(integrate_product_contour(fc, f) - 1.0), residue_scale);
          }
        });
      }
    }
  }
  return t.result();
}

namespace {

PoleSum random_pole_sum(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> height(0.3, 2.0);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> power(2, 4);
  std::bernoulli_distribution coin(0.5);
  std::vector<Complex> locs;
  const int k = count(rng);
  for (int j = 0; j < k; ++j) {
    const double y = height(rng) * (coin(rng) ? 1.0 : -1.0);
    locs.emplace_back(unit(rng), y);
  }
  std::vector<PoleTerm> terms;
  for (const auto& s : locs) {
    const int terms_here = count(rng);
    for (int j = 0; j < terms_here; ++j) {
      terms.push_back({Complex(unit(rng), unit(rng)), s, HalfInt(power(rng))});
    }
  }
  if (locs.size() >= 2 && coin(rng)) {
    // simple poles whose residues cancel keep 1/p^2 decay
    const Complex c(unit(rng), unit(rng));
    terms.push_back({c, locs[0], HalfInt(1)});
    terms.push_back({-c, locs[1], HalfInt(1)});
  }
  return PoleSum(std::move(terms));
}

}  // namespace

CheckResult check_residue_engine(const VerifyOptions& o) {
  Tracker t(5, "residue engine vs quadrature", 1e-8, o);
  std::mt19937_64 rng(o.seed);
  for (int k = 0; k < 30; ++k) {
    const PoleSum f = random_pole_sum(rng);
    const std::string label = fmt::format("random #{} ({} terms)", k, f.size());
    guarded(t, label, [&] {
      const Complex contour = integrate_real_line_contour(f);
      const Complex quad = integrate_real_line_quadrature(f);
      t.record(label, std::abs(contour - quad) / (1.0 + std::abs(contour)));
    });
  }
  const Complex i(0.0, 1.0);
  guarded(t, "1/(p^2+1)", [&] {
    const auto f = product(PoleSum::single(1.0, i, 1), PoleSum::single(1.0, -i, 1));
    t.record("1/(p^2+1)", std::abs(integrate_real_line(f) - std::numbers::pi) / std::numbers::pi);
  });
  for (double a : {0.5, 1.3}) {
    const std::string l1 = fmt::format("(p^2+a^2)^-3/2 a={}", a);
    guarded(t, l1, [&] {
      const auto f = PoleSum::single(1.0, i * a, HalfInt::from_twice(3));
      const Complex v = integrate_product_real_line(f, conjugate_on_real_axis(f));
      const double exact = 2.0 / (a * a);
      t.record(l1, std::abs(v - exact) / exact);
    });
    const std::string l2 = fmt::format("(p^2+a^2)^-2 a={}", a);
    guarded(t, l2, [&] {
      const auto f = product(PoleSum::single(1.0, i * a, 2), PoleSum::single(1.0, -i * a, 2));
      const double exact = std::numbers::pi / (2.0 * a * a * a);
      t.record(l2, std::abs(integrate_real_line(f) - exact) / exact);
    });
  }
  return t.result();
}

CheckResult check_transform_oracle(const VerifyOptions& o) {
  Tracker t(6, "transform oracle", 1e-6, o);
  const double p0 = o.charge;
  const auto p_grid = linspace(-4.0 * p0, 4.0 * p0, 41);
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l < n; ++l) {
      const std::string label = fmt::format("radial n={} l={}", n, l);
      guarded(t, label, [&] {
        const auto numeric = oracle::conjugate_transform(oracle::radial_samples(n, l, p0), -1, p_grid);
        const auto closed = evaluate_on(spherical::alpha_radial(spherical::make_state(n, l, 0, p0)), p_grid);
        t.record(label, oracle::fit_proportionality(numeric, closed).max_rel_err);
      });
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (const auto& s : parabolic::enumerate_shell(n, o.charge)) {
      if (s.m < 0) continue;  // same factors as +m
      for (Axis ax : {Axis::u, Axis::v}) {
        const std::string label = fmt::format("parabolic ({}) {}", s.label(), axis_name(ax));
        guarded(t, label, [&] {
          const auto numeric = oracle::conjugate_transform(oracle::parabolic_samples(s, ax), -1, p_grid);
          const auto closed = evaluate_on(parabolic::alpha_parabolic(s, ax), p_grid);
          t.record(label, oracle::fit_proportionality(numeric, closed).max_rel_err);
        });
      }
    }
  }
  const auto theta_grid = linspace(0.1, 20.0, 60);
  for (int l = 0; l <= 3; ++l) {
    for (int m = 0; m <= l; ++m) {
      const std::string label = fmt::format("beta l={} m={}", l, m);
      guarded(t, label, [&] {
        const auto numeric = oracle::conjugate_transform(oracle::angular_samples(l, m), -1, theta_grid);
        const auto beta = spherical::beta_angular_function(l, m);
        std::vector<Complex> closed;
        for (double p : theta_grid) closed.push_back(beta(p));
        t.record(label, oracle::fit_proportionality(numeric, closed).max_rel_err);
      });
    }
  }
  return t.result();
}

CheckResult check_expectations(const VerifyOptions& o) {
  Tracker t(7, "two-sided expectation values", 1e-6, o);
  const double p0 = o.charge;
  using oracle::Operator;
  for (int n = 1; n <= 3; ++n) {
    const std::string label = fmt::format("<1/r> n={}", n);
    guarded(t, label, [&] {
      const auto a = spherical::alpha_radial(spherical::make_state(n, 0, 0, p0));
      const double momentum = oracle::normalized_expectation(a, Operator::inverse_position);
      const double position = oracle::position_expectation_radial(n, 0, p0, Operator::inverse_position);
      const double exact = p0 / (n * n);
      t.record(label + " momentum vs position", std::abs(momentum - position) / std::abs(position));
      t.record(label + " momentum vs p0/n^2", std::abs(momentum - exact) / exact);
    });
  }
  for (int n = 1; n <= 2; ++n) {
    for (const auto& s : parabolic::enumerate_shell(n, o.charge)) {
      for (Axis ax : {Axis::u, Axis::v}) {
        for (Operator op : {Operator::position, Operator::inverse_position}) {
          const std::string label = fmt::format("<{}> ({}) {}", op == Operator::position ? "u" : "1/u",
                                                s.label(), axis_name(ax));
          guarded(t, label, [&] {
            const auto f = parabolic::alpha_parabolic(s, ax);
            const double momentum = oracle::normalized_expectation(f, op, parabolic::kCoordinateScale);
            const double position = oracle::position_expectation_parabolic(s, ax, op);
            t.record(label, std::abs(momentum - position) / std::abs(position));
          });
        }
      }
    }
  }
  return t.result();
}

CheckResult check_structure(const VerifyOptions& o) {
  Tracker t(8, "structural invariants", 1e-12, o);
  const double p0 = o.charge;
  std::vector<std::pair<std::string, std::pair<PoleSum, int>>> factors;
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l < n; ++l) {
      factors.push_back({fmt::format("radial n={} l={}", n, l),
                         {spherical::alpha_radial(spherical::make_state(n, l, 0, p0)), n}});
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : parabolic::enumerate_shell(n, o.charge)) {
      for (Axis ax : {Axis::u, Axis::v}) {
        factors.push_back({fmt::format("parabolic ({}) {}", s.label(), axis_name(ax)),
                           {parabolic::alpha_parabolic(s, ax), n}});
      }
    }
  }
  const auto pts = linspace(0.05, 6.0, 50);
  for (const auto& [label, entry] : factors) {
    const auto& [f, n] = entry;
    // exact comparison, independent of the tolerance
    const bool on_axis = std::all_of(f.terms().begin(), f.terms().end(),
                                     [&, n = n](const PoleTerm& term) { return term.location == Complex(0.0, p0 / n); });
    if (!on_axis) t.fail(label, "pole location not exactly i p0/n");
    double even = 0.0;
    for (double p : pts) {
      const double a = std::abs(f(Complex(p, 0.0)));
      const double b = std::abs(f(Complex(-p, 0.0)));
      even = std::max(even, std::abs(a - b) / std::max(a, b));
    }
    t.record(label + " |f(-p)| = |f(p)|", even);
  }
  const auto axis = linspace(-3.0, 3.0, 13);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : parabolic::enumerate_shell(n, o.charge)) {
      const auto a = parabolic::wavefunction_parabolic(s);
      const auto b = parabolic::wavefunction_parabolic(parabolic::parabolic_numbers(s.n2, s.n1, s.m, s.Z));
      bool exact = true;
      for (double pu : axis) {
        for (double pv : axis) exact = exact && a(pu, pv) == b(pv, pu);
      }
      if (!exact) t.fail(fmt::format("({}) u<->v exchange", s.label()), "not bitwise symmetric");
    }
  }
  return t.result();
}

CheckResult check_orthogonality(const VerifyOptions& o) {
  Tracker t(9, "orthogonality", 1e-8, o);
  const double p0 = o.charge;
  for (int l = 0; l <= 4; ++l) {
    for (int n = l + 1; n <= 5; ++n) {
      for (int np = n + 1; np <= 5; ++np) {
        const std::string label = fmt::format("radial l={} n={} n'={}", l, n, np);
        guarded(t, label, [&] {
          const auto a = spherical::alpha_radial(spherical::make_state(n, l, 0, p0));
          const auto b = spherical::alpha_radial(spherical::make_state(np, l, 0, p0));
          t.record(label, std::abs(integrate_product_real_line(conjugate_on_real_axis(b), a)));
        });
      }
    }
  }
  for (int m = 0; m <= 3; ++m) {
    for (int l = m; l <= 3; ++l) {
      for (int lp = l + 1; lp <= 3; ++lp) {
        const std::string label = fmt::format("beta m={} l={} l'={}", m, l, lp);
        guarded(t, label, [&] {
          const auto a = spherical::beta_angular_function(l, m);
          const auto b = spherical::beta_angular_function(lp, m);
          t.record(label, std::abs(spherical::angular_overlap(a, b)), 1e-6 / 1e-8);
        });
      }
    }
  }
  return t.result();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "spectrum", "golden", "normalization", "algebra", "oracle"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& o) {
  using Check = CheckResult (*)(const VerifyOptions&);
  static const std::map<std::string, std::vector<Check>> suites = {
      {"all",
       {check_energy_spectrum, check_degeneracy, check_tabulated_forms, check_normalization, check_residue_engine,
        check_transform_oracle, check_expectations, check_structure, check_orthogonality}},
      {"spectrum", {check_energy_spectrum, check_degeneracy}},
      {"golden", {check_tabulated_forms}},
      {"normalization", {check_normalization}},
      {"algebra", {check_residue_engine, check_structure}},
      {"oracle", {check_transform_oracle, check_expectations, check_orthogonality}},
  };
  const auto it = suites.find(suite);
  if (it == suites.end()) throw DomainError("unknown verify suite '" + suite + "'");
  std::vector<CheckResult> out;
  for (Check c : it->second) out.push_back(c(o));
  return out;
}

}  // namespace hydromom::verify
