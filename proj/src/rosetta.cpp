#include "clmath/rosetta.hpp"

#include <cmath>
#include <limits>

#include "clmath/bancor_v2.hpp"
#include "clmath/carbon.hpp"
#include "clmath/errors.hpp"
#include "clmath/natural.hpp"
#include "clmath/numeric.hpp"
#include "clmath/uniswap_v3.hpp"

namespace clmath {

namespace {

constexpr double kTranslationTol = 1e-9;

BancorV2Params to_bancor(const UniswapV3Params& p) {
  const auto center = u3_center(p);
  return {center.x0, center.y0, u3_amplification(p)};
}

BancorV2Params to_bancor(const CarbonParams& p) {
  const auto center = carbon_center_and_reference(p);
  return {center.x0, center.y0, center.A};
}

UniswapV3Params to_uniswap(const BancorV2Params& p) {
  const auto prices = price_bounds(p);
  return {p.A * std::sqrt(p.x0) * std::sqrt(p.y0), prices.p_high, prices.p_low};
}

UniswapV3Params to_uniswap(const CarbonParams& p) {
  const double apb = p.a + p.b;
  return {p.z / p.a, apb * apb, p.b * p.b};
}

CarbonParams to_carbon(const UniswapV3Params& p) {
  const double sh = std::sqrt(p.p_high);
  const double sl = std::sqrt(p.p_low);
  return {sh - sl, sl, p.L * (sh - sl)};
}

CarbonParams to_carbon(const BancorV2Params& p) {
  const double am1 = p.A - 1.0;
  const double two_am1 = 2.0 * p.A - 1.0;
  const double sp0 = std::sqrt(p.y0 / p.x0);
  return {sp0 * two_am1 / (p.A * am1), sp0 * am1 / p.A, p.y0 * two_am1 / am1};
}

// Bounded forms reached from a geometry alone (used for the natural form).
BancorV2Params bancor_from_geometry(const CurveGeometry& g) {
  const auto center = center_from_geometry(g);
  return {center.x, center.y, amplification_from_c(g.c)};
}

UniswapV3Params uniswap_from_geometry(const CurveGeometry& g) {
  return {-g.y_asym / std::sqrt(g.p_low), g.p_high, g.p_low};
}

CarbonParams carbon_from_geometry(const CurveGeometry& g) {
  const double b = std::sqrt(g.p_low);
  return {b * (g.c - 1.0), b, g.y_int};
}

NaturalParams natural_from_geometry(const CurveGeometry& g, Anchor anchor) {
  switch (anchor) {
    case Anchor::center: {
      const auto center = center_from_geometry(g);
      return {anchor, center.x, center.y, g.c};
    }
    case Anchor::intercepts:
      return {anchor, g.x_int, g.y_int, g.c};
    case Anchor::asymptotes:
      break;
  }
  return {anchor, g.x_asym, g.y_asym, g.c};
}

CurveSpec convert(const ValidatedSpec& src, FormTag target) {
  const auto& g = src.geometry();
  if (target.form == Form::natural) return natural_from_geometry(g, target.anchor);

  switch (src.form()) {
    case Form::bancor_v2: {
      const auto& p = src.as<BancorV2Params>();
      if (target.form == Form::uniswap_v3) return to_uniswap(p);
      return to_carbon(p);
    }
    case Form::uniswap_v3: {
      const auto& p = src.as<UniswapV3Params>();
      if (target.form == Form::bancor_v2) return to_bancor(p);
      return to_carbon(p);
    }
    case Form::carbon: {
      const auto& p = src.as<CarbonParams>();
      if (target.form == Form::bancor_v2) return to_bancor(p);
      return to_uniswap(p);
    }
    case Form::natural:
      if (target.form == Form::bancor_v2) return bancor_from_geometry(g);
      if (target.form == Form::uniswap_v3) return uniswap_from_geometry(g);
      return carbon_from_geometry(g);
    case Form::reference:
      break;
  }
  throw DomainError("form", "unreachable translation");
}

}  // namespace

FormTag form_tag_of(const ValidatedSpec& spec) {
  FormTag tag{spec.form(), Anchor::asymptotes};
  if (spec.form() == Form::natural) tag.anchor = spec.as<NaturalParams>().anchor;
  return tag;
}

Translation translate_with_report(const ValidatedSpec& spec, FormTag target) {
  const FormTag source = form_tag_of(spec);
  if (source == target || (source.form == target.form && target.form != Form::natural)) {
    return {spec, {source, source, 0.0}};
  }
  if (source.form == Form::reference || target.form == Form::reference) {
    throw DomainError("to", "the reference curve has no price bounds; it cannot be translated "
                            "to or from a concentrated form");
  }
  ValidatedSpec out = validate(convert(spec, target));
  const double dev = max_rel_deviation(spec.geometry(), out.geometry());
  if (!(dev <= kTranslationTol)) {
    throw DomainError("spec", "translation deviates from the source geometry beyond 1e-9");
  }
  return {std::move(out), {source, target, dev}};
}

double params_rel_deviation(const CurveSpec& a, const CurveSpec& b) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (a.index() != b.index()) return inf;
  return std::visit(
      [&](const auto& pa) -> double {
        using P = std::decay_t<decltype(pa)>;
        const auto& pb = std::get<P>(b);
        if constexpr (std::is_same_v<P, ReferenceParams>) {
          return std::max(rel_diff(pa.x0, pb.x0), rel_diff(pa.y0, pb.y0));
        } else if constexpr (std::is_same_v<P, BancorV2Params>) {
          return std::max({rel_diff(pa.x0, pb.x0), rel_diff(pa.y0, pb.y0), rel_diff(pa.A, pb.A)});
        } else if constexpr (std::is_same_v<P, UniswapV3Params>) {
          return std::max({rel_diff(pa.L, pb.L), rel_diff(pa.p_high, pb.p_high),
                           rel_diff(pa.p_low, pb.p_low)});
        } else if constexpr (std::is_same_v<P, CarbonParams>) {
          return std::max({rel_diff(pa.a, pb.a), rel_diff(pa.b, pb.b), rel_diff(pa.z, pb.z)});
        } else {
          if (pa.anchor != pb.anchor) return inf;
          return std::max({rel_diff(pa.anchor_x, pb.anchor_x), rel_diff(pa.anchor_y, pb.anchor_y),
                           rel_diff(pa.c, pb.c)});
        }
      },
      a);
}

std::optional<double> natural_invariant_center(PoolState s, double x0, double y0) {
  const double den = s.x * s.y - x0 * y0;
  if (den == 0.0) return std::nullopt;
  const double dx = s.x - x0;
  const double dy = s.y - y0;
  const double ratio = dx * dy / den;
  return ratio * ratio;
}

std::optional<double> natural_invariant_intercepts(PoolState s, double x_int, double y_int) {
  const double den = s.x * s.y;
  if (den == 0.0) return std::nullopt;
  return (x_int - s.x) * (y_int - s.y) / den;
}

double natural_invariant_asymptotes(PoolState s, double x_asym, double y_asym) {
  return (s.x - x_asym) * (s.y - y_asym) / (x_asym * y_asym);
}

PoolState center_from_geometry(const CurveGeometry& g) {
  const double f = std::sqrt(g.c) + 1.0;
  return {g.x_int / f, g.y_int / f};
}

bool center_form_resolvable(PoolState s, double x0, double y0) {
  const double k = x0 * y0;
  return std::abs(s.x * s.y - k) >= kSingularNeighborhood * k;
}

bool intercept_form_resolvable(PoolState s, double x_int, double y_int) {
  return s.x >= kSingularNeighborhood * x_int && s.y >= kSingularNeighborhood * y_int;
}

bool equality_of_three(PoolState s, const CurveGeometry& g, double rel_tol) {
  const auto center = center_from_geometry(g);
  const auto close = [&](double v) { return rel_close(v, g.c, rel_tol, 0.0); };
  if (center_form_resolvable(s, center.x, center.y)) {
    if (auto v = natural_invariant_center(s, center.x, center.y); v && !close(*v)) return false;
  }
  if (intercept_form_resolvable(s, g.x_int, g.y_int)) {
    if (auto v = natural_invariant_intercepts(s, g.x_int, g.y_int); v && !close(*v)) return false;
  }
  return close(natural_invariant_asymptotes(s, g.x_asym, g.y_asym));
}

}  // namespace clmath
