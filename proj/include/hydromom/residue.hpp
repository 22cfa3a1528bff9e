#pragma once

#include <span>

#include "hydromom/pole_sum.hpp"
#include "hydromom/quadrature.hpp"

namespace hydromom {

/// Coefficient of (p - at)^(-1) in the Laurent expansion of f about `at`.
///
/// Throws BranchPointError if a term at `at` has a half-integer exponent and NotAPoleError
/// if no term sits at `at`.
Complex residue(const PoleSum& f, Complex at);

/// Residue of the pointwise product of the factors at `at`, without expanding the product
/// into partial fractions. Same errors as residue().
Complex residue_of_product(std::span<const PoleSum> factors, Complex at);

/// Integral of f over the real line. All-integer exponents close the contour in the upper
/// half plane; otherwise adaptive quadrature. Throws DivergentIntegralError when f has a
/// location on the real axis or decays no faster than 1/|p|.
Complex integrate_real_line(const PoleSum& f);
Complex integrate_real_line_contour(const PoleSum& f);
Complex integrate_real_line_quadrature(const PoleSum& f, const QuadratureOptions& opts = {});

/// Integral of f(p) g(p) over the real line, evaluated on the unexpanded product so
/// half-integer exponents at distinct locations are allowed (quadrature route).
Complex integrate_product_real_line(const PoleSum& f, const PoleSum& g);
Complex integrate_product_contour(const PoleSum& f, const PoleSum& g);
Complex integrate_product_quadrature(const PoleSum& f, const PoleSum& g,
                                     const QuadratureOptions& opts = {});

/// Length scale of the pole pattern: 4 max |location|, used to split the quadrature range.
double pole_scale(const PoleSum& f);

}  // namespace hydromom
