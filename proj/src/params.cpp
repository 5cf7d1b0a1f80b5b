#include "clmath/params.hpp"

#include <array>
#include <cmath>
#include <string>

#include "clmath/bancor_v2.hpp"
#include "clmath/carbon.hpp"
#include "clmath/errors.hpp"
#include "clmath/natural.hpp"
#include "clmath/numeric.hpp"
#include "clmath/reference.hpp"
#include "clmath/uniswap_v3.hpp"

namespace clmath {

namespace {

constexpr std::array<std::pair<Form, std::string_view>, 5> kFormNames{{
    {Form::reference, "reference"},
    {Form::bancor_v2, "bancor_v2"},
    {Form::uniswap_v3, "uniswap_v3"},
    {Form::carbon, "carbon"},
    {Form::natural, "natural"},
}};

constexpr std::array<std::pair<Anchor, std::string_view>, 3> kAnchorNames{{
    {Anchor::center, "center"},
    {Anchor::intercepts, "intercepts"},
    {Anchor::asymptotes, "asymptotes"},
}};

void require_finite(std::string_view field, double v) {
  if (!std::isfinite(v)) throw DomainError(std::string(field), "must be finite");
}

void require_positive(std::string_view field, double v) {
  require_finite(field, v);
  if (!(v > 0.0)) throw DomainError(std::string(field), "must be > 0");
}

void require_negative(std::string_view field, double v) {
  require_finite(field, v);
  if (!(v < 0.0)) throw DomainError(std::string(field), "must be < 0");
}

void check(const ReferenceParams& p) {
  require_positive("x0", p.x0);
  require_positive("y0", p.y0);
  const double k = p.x0 * p.y0;
  if (!std::isfinite(k) || !(k > 0.0)) throw DomainError("k", "x0 * y0 must be finite and > 0");
}

void check(const BancorV2Params& p) {
  require_positive("x0", p.x0);
  require_positive("y0", p.y0);
  require_finite("A", p.A);
  if (!(p.A > 1.0)) throw DomainError("A", "must exceed 1");
}

void check(const UniswapV3Params& p) {
  require_positive("L", p.L);
  require_positive("p_high", p.p_high);
  require_positive("p_low", p.p_low);
  if (!(p.p_low < p.p_high)) throw DomainError("p_low", "must be < p_high");
}

void check(const CarbonParams& p) {
  require_positive("a", p.a);
  require_positive("b", p.b);
  require_positive("z", p.z);
}

void check(const NaturalParams& p) {
  require_finite("c", p.c);
  if (!(p.c > 1.0)) throw DomainError("c", "must exceed 1");
  const auto names = anchor_field_names(p.anchor);
  if (p.anchor == Anchor::asymptotes) {
    require_negative(names.x, p.anchor_x);
    require_negative(names.y, p.anchor_y);
  } else {
    require_positive(names.x, p.anchor_x);
    require_positive(names.y, p.anchor_y);
  }
}

CurveGeometry geometry_of(const ReferenceParams& p) { return reference_geometry(p); }
CurveGeometry geometry_of(const BancorV2Params& p) { return bancor_geometry(p); }
CurveGeometry geometry_of(const UniswapV3Params& p) { return uniswap_geometry(p); }
CurveGeometry geometry_of(const CarbonParams& p) { return carbon_geometry(p); }
CurveGeometry geometry_of(const NaturalParams& p) { return natural_geometry(p); }

bool all_finite(const CurveGeometry& g) {
  for (double v : {g.x_int, g.y_int, g.x_asym, g.y_asym, g.p_high, g.p_low, g.p0, g.c, g.phi}) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

std::string_view form_name(Form f) {
  for (const auto& [form, name] : kFormNames) {
    if (form == f) return name;
  }
  return "unknown";
}

std::optional<Form> parse_form(std::string_view name) {
  for (const auto& [form, n] : kFormNames) {
    if (n == name) return form;
  }
  return std::nullopt;
}

std::string_view anchor_name(Anchor a) {
  for (const auto& [anchor, name] : kAnchorNames) {
    if (anchor == a) return name;
  }
  return "unknown";
}

std::optional<Anchor> parse_anchor(std::string_view name) {
  for (const auto& [anchor, n] : kAnchorNames) {
    if (n == name) return anchor;
  }
  return std::nullopt;
}

AnchorFieldNames anchor_field_names(Anchor a) {
  switch (a) {
    case Anchor::center:
      return {"x0", "y0"};
    case Anchor::intercepts:
      return {"x_int", "y_int"};
    case Anchor::asymptotes:
      break;
  }
  return {"x_asym", "y_asym"};
}

Form form_of(const CurveSpec& spec) {
  return std::visit(
      [](const auto& p) -> Form {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ReferenceParams>) return Form::reference;
        else if constexpr (std::is_same_v<P, BancorV2Params>) return Form::bancor_v2;
        else if constexpr (std::is_same_v<P, UniswapV3Params>) return Form::uniswap_v3;
        else if constexpr (std::is_same_v<P, CarbonParams>) return Form::carbon;
        else return Form::natural;
      },
      spec);
}

ValidatedSpec validate(const CurveSpec& spec) {
  return std::visit(
      [&](const auto& p) {
        check(p);
        const CurveGeometry g = geometry_of(p);
        if (form_of(spec) != Form::reference && !all_finite(g)) {
          throw DomainError("spec", "derived geometry is not finite");
        }
        return ValidatedSpec(spec, g);
      },
      spec);
}

double max_rel_deviation(const CurveGeometry& a, const CurveGeometry& b) {
  const std::array<double, 9> lhs{a.x_int, a.y_int, a.x_asym, a.y_asym, a.p_high,
                                  a.p_low, a.p0,    a.c,      a.phi};
  const std::array<double, 9> rhs{b.x_int, b.y_int, b.x_asym, b.y_asym, b.p_high,
                                  b.p_low, b.p0,    b.c,      b.phi};
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) worst = std::max(worst, rel_diff(lhs[i], rhs[i]));
  return worst;
}

}  // namespace clmath
