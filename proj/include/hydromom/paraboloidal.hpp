#pragma once

#include <string>
#include <vector>

#include "hydromom/delta.hpp"
#include "hydromom/half_int.hpp"
#include "hydromom/pole_sum.hpp"

namespace hydromom::parabolic {

/// The momentum variables p_u, p_v are conjugate to s = u / kCoordinateScale (and likewise
/// for v), which puts the factor poles at i p0 / n.
inline constexpr double kCoordinateScale = 2.0;

struct ParabolicState {
  int n1 = 0;
  int n2 = 0;
  int m = 0;
  double Z = 1.0;
  // derived
  int n = 1;
  HalfInt l_eff;   // (|m| - 1) / 2
  HalfInt n_eff1;  // n1 + (|m| + 1) / 2 = n Z1 / Z
  HalfInt n_eff2;
  double Z1 = 0.5;
  double Z2 = 0.5;
  double p0 = 1.0;

  std::string label() const;
  friend bool operator==(const ParabolicState&, const ParabolicState&) = default;
};

/// Throws DomainError for negative n1, n2 or non-positive Z.
ParabolicState parabolic_numbers(int n1, int n2, int m, double Z = 1.0);

enum class Axis { u, v };

/// Closed-form S of the normalization written with Gamma functions, evaluated at the
/// effective principal number n' and l_eff. Reported for comparison only.
double closed_form_s_sum(HalfInt n_eff, HalfInt l);
/// 2^(l+1) / (Gamma(n' - l) sqrt(pi S)) sqrt(n / p0).
double closed_form_normalization(const ParabolicState& s, Axis which);

/// Un-normalized template: coefficients C(n_i, k) 2^k Gamma(l+k+2) / Gamma(2l+k+2) a^(l+k+2)
/// at a = i p0 / n with exponents l_eff + k + 2, k = 0 ... n_i, scaled by the closed-form N.
PoleSum alpha_parabolic_closed_form(const ParabolicState& s, Axis which);

/// Factor for the u (n1) or v (n2) coordinate, rescaled so that its squared norm over the
/// real line is 1 (computed by integration).
PoleSum alpha_parabolic(const ParabolicState& s, Axis which);

/// Integral of |f|^2 over the real line at tolerance 1e-13.
double norm_squared(const PoleSum& f);

struct MomentumWavefunction {
  ParabolicState state;
  PoleSum u_factor;
  PoleSum v_factor;
  DeltaFactor delta;

  /// u_factor(p_u) v_factor(p_v); the delta factor is not evaluated.
  Complex operator()(double p_u, double p_v) const;
};

MomentumWavefunction wavefunction_parabolic(const ParabolicState& s);

double energy_parabolic(const ParabolicState& s);

/// All states of shell n: |m| ascending, n1 descending, +m before -m. Length n^2.
std::vector<ParabolicState> enumerate_shell(int n, double Z = 1.0);

/// The four n = 1, 2 closed forms exactly as printed in the reference table, for
/// (n1, n2, m) in {(0,0,0), (1,0,0), (0,1,0), (0,0,+-1)}. DomainError otherwise.
Complex tabulated_closed_form(const ParabolicState& s, double p_u, double p_v);
bool has_tabulated_closed_form(const ParabolicState& s);

}  // namespace hydromom::parabolic
