#include "clmath/spec_json.hpp"

#include <cmath>
#include <string>

#include "clmath/errors.hpp"

namespace clmath {

namespace {

double field(const Json& j, std::string_view name) {
  const auto it = j.find(std::string(name));
  if (it == j.end()) throw DomainError(std::string(name), "missing");
  if (!it->is_number()) throw DomainError(std::string(name), "must be a number");
  return it->get<double>();
}

}  // namespace

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json spec_to_json(const CurveSpec& spec) {
  Json j;
  j["form"] = std::string(form_name(form_of(spec)));
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ReferenceParams>) {
          j["x0"] = p.x0;
          j["y0"] = p.y0;
        } else if constexpr (std::is_same_v<P, BancorV2Params>) {
          j["x0"] = p.x0;
          j["y0"] = p.y0;
          j["A"] = p.A;
        } else if constexpr (std::is_same_v<P, UniswapV3Params>) {
          j["L"] = p.L;
          j["p_high"] = p.p_high;
          j["p_low"] = p.p_low;
        } else if constexpr (std::is_same_v<P, CarbonParams>) {
          j["a"] = p.a;
          j["b"] = p.b;
          j["z"] = p.z;
        } else {
          const auto names = anchor_field_names(p.anchor);
          j["anchor"] = std::string(anchor_name(p.anchor));
          j[std::string(names.x)] = p.anchor_x;
          j[std::string(names.y)] = p.anchor_y;
          j["c"] = p.c;
        }
      },
      spec);
  return j;
}

CurveSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("spec", "must be a JSON object");
  const auto it = j.find("form");
  if (it == j.end() || !it->is_string()) throw DomainError("form", "missing");
  const auto form = parse_form(it->get<std::string>());
  if (!form) throw DomainError("form", "unknown form '" + it->get<std::string>() + "'");
  switch (*form) {
    case Form::reference:
      return ReferenceParams{field(j, "x0"), field(j, "y0")};
    case Form::bancor_v2:
      return BancorV2Params{field(j, "x0"), field(j, "y0"), field(j, "A")};
    case Form::uniswap_v3:
      return UniswapV3Params{field(j, "L"), field(j, "p_high"), field(j, "p_low")};
    case Form::carbon:
      return CarbonParams{field(j, "a"), field(j, "b"), field(j, "z")};
    case Form::natural:
      break;
  }
  const auto anchor_it = j.find("anchor");
  if (anchor_it == j.end() || !anchor_it->is_string()) throw DomainError("anchor", "missing");
  const auto anchor = parse_anchor(anchor_it->get<std::string>());
  if (!anchor) throw DomainError("anchor", "unknown anchor '" + anchor_it->get<std::string>() + "'");
  const auto names = anchor_field_names(*anchor);
  return NaturalParams{*anchor, field(j, names.x), field(j, names.y), field(j, "c")};
}

Json geometry_to_json(const CurveGeometry& g) {
  Json j;
  j["x_int"] = number_or_null(g.x_int);
  j["y_int"] = number_or_null(g.y_int);
  j["x_asym"] = number_or_null(g.x_asym);
  j["y_asym"] = number_or_null(g.y_asym);
  j["p_high"] = number_or_null(g.p_high);
  j["p_low"] = number_or_null(g.p_low);
  j["p0"] = number_or_null(g.p0);
  j["c"] = number_or_null(g.c);
  j["phi"] = number_or_null(g.phi);
  return j;
}

Json form_tag_to_json(const FormTag& tag) {
  Json j = std::string(form_name(tag.form));
  if (tag.form == Form::natural) {
    j = std::string(form_name(tag.form)) + ":" + std::string(anchor_name(tag.anchor));
  }
  return j;
}

Json report_to_json(const TranslationReport& report) {
  Json j;
  j["source"] = form_tag_to_json(report.source);
  j["target"] = form_tag_to_json(report.target);
  j["max_rel_deviation"] = report.max_rel_deviation;
  return j;
}

}  // namespace clmath
