#pragma once

#include <optional>

#include "clmath/params.hpp"
#include "clmath/types.hpp"

namespace clmath {

// Target of a translation. `anchor` only matters for the natural form.
struct FormTag {
  Form form = Form::bancor_v2;
  Anchor anchor = Anchor::asymptotes;

  friend bool operator==(const FormTag&, const FormTag&) = default;
};

FormTag form_tag_of(const ValidatedSpec& spec);

struct TranslationReport {
  FormTag source;
  FormTag target;
  double max_rel_deviation = 0.0;  // over all CurveGeometry fields
};

struct Translation {
  ValidatedSpec spec;
  TranslationReport report;
};

// Re-expresses the same real curve in another parameterization. Translating
// to the source's own form returns the source unchanged. A reference curve
// cannot be translated to or from a bounded form (DomainError).
Translation translate_with_report(const ValidatedSpec& spec, FormTag target);

inline ValidatedSpec translate(const ValidatedSpec& spec, FormTag target) {
  return translate_with_report(spec, target).spec;
}

// Largest relative difference between two specs of the same form and anchor;
// +inf when the forms differ.
double params_rel_deviation(const CurveSpec& a, const CurveSpec& b);

// (x - x0)^2 (y - y0)^2 / (x y - x0 y0)^2. Indeterminate (nullopt) when
// x y == x0 y0, which on the curve happens only at the center.
std::optional<double> natural_invariant_center(PoolState s, double x0, double y0);

// (x_int - x)(y_int - y) / (x y). Indeterminate at either intercept.
std::optional<double> natural_invariant_intercepts(PoolState s, double x_int, double y_int);

// (x - x_asym)(y - y_asym) / (x_asym y_asym). Defined everywhere on the curve.
double natural_invariant_asymptotes(PoolState s, double x_asym, double y_asym);

// Geometric center (x0, y0) recovered from geometry: x0 = x_int / (sqrt(c) + 1).
PoolState center_from_geometry(const CurveGeometry& g);

// The center and intercept forms lose precision near their singular points:
// the center form's denominator vanishes quadratically and the intercept form
// subtracts nearly equal balances. These report whether a state is far
// enough away (relative distance 1e-4) for double evaluation to resolve c.
inline constexpr double kSingularNeighborhood = 1e-4;
bool center_form_resolvable(PoolState s, double x0, double y0);
bool intercept_form_resolvable(PoolState s, double x_int, double y_int);

// True when every resolvable natural invariant at `s` equals g.c to `rel_tol`.
bool equality_of_three(PoolState s, const CurveGeometry& g, double rel_tol = 1e-9);

}  // namespace clmath
