#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "clmath/types.hpp"

namespace clmath {

// Unshifted curve x * y = x0 * y0.
struct ReferenceParams {
  double x0 = 0.0;
  double y0 = 0.0;
};

// Bancor v2 amplified pool: center (x0, y0) and amplification A > 1.
struct BancorV2Params {
  double x0 = 0.0;
  double y0 = 0.0;
  double A = 0.0;
};

// Uniswap v3 position: liquidity L over the price range [p_low, p_high].
struct UniswapV3Params {
  double L = 0.0;
  double p_high = 0.0;
  double p_low = 0.0;
};

// Carbon DeFi order: a = sqrt(p_high) - sqrt(p_low), b = sqrt(p_low), z = y_int.
struct CarbonParams {
  double a = 0.0;
  double b = 0.0;
  double z = 0.0;
};

enum class Anchor { center, intercepts, asymptotes };

// Concentration constant c plus one anchor point. The meaning of
// (anchor_x, anchor_y) follows `anchor`: (x0, y0), (x_int, y_int) or
// (x_asym, y_asym).
struct NaturalParams {
  Anchor anchor = Anchor::asymptotes;
  double anchor_x = 0.0;
  double anchor_y = 0.0;
  double c = 0.0;
};

using CurveSpec =
    std::variant<ReferenceParams, BancorV2Params, UniswapV3Params, CarbonParams, NaturalParams>;

enum class Form { reference, bancor_v2, uniswap_v3, carbon, natural };

std::string_view form_name(Form f);
std::optional<Form> parse_form(std::string_view name);
std::string_view anchor_name(Anchor a);
std::optional<Anchor> parse_anchor(std::string_view name);

Form form_of(const CurveSpec& spec);

// A CurveSpec whose invariants have been checked, with its geometry computed
// once at construction. Only `validate` creates one.
class ValidatedSpec {
 public:
  const CurveSpec& spec() const noexcept { return spec_; }
  Form form() const noexcept { return form_of(spec_); }
  const CurveGeometry& geometry() const noexcept { return geometry_; }
  bool bounded() const noexcept { return form() != Form::reference; }

  template <class P>
  const P& as() const {
    return std::get<P>(spec_);
  }

 private:
  friend ValidatedSpec validate(const CurveSpec& spec);
  ValidatedSpec(CurveSpec spec, CurveGeometry geometry)
      : spec_(std::move(spec)), geometry_(geometry) {}

  CurveSpec spec_;
  CurveGeometry geometry_;
};

// Throws DomainError naming the first offending field.
ValidatedSpec validate(const CurveSpec& spec);

inline const CurveGeometry& geometry(const ValidatedSpec& spec) { return spec.geometry(); }

}  // namespace clmath

namespace clmath {

struct AnchorFieldNames {
  std::string_view x;
  std::string_view y;
};

// JSON field names for a natural anchor, e.g. {"x_asym", "y_asym"}.
AnchorFieldNames anchor_field_names(Anchor a);

}  // namespace clmath
