// clmath: quote, translate and inspect concentrated-liquidity curves.
//
// Exit codes: 0 success, 1 verification failure, 2 input or domain error.
// Errors are reported on stderr as a single JSON object.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "clmath/curve.hpp"
#include "clmath/errors.hpp"
#include "clmath/hyper_trig.hpp"
#include "clmath/kernels.hpp"
#include "clmath/quadrature.hpp"
#include "clmath/rosetta.hpp"
#include "clmath/sampling.hpp"
#include "clmath/spec_json.hpp"

namespace {

using namespace clmath;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct Globals {
  std::string spec_path;
  std::optional<double> tolerance;
  std::string output = "json";
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void emit_error(const std::string& kind, const std::string& message,
                const std::string* field = nullptr) {
  Json j;
  j["error"] = kind;
  if (field) j["field"] = *field;
  j["message"] = message;
  std::cerr << j.dump() << '\n';
}

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

ValidatedSpec load_spec(const Globals& g) {
  if (g.spec_path.empty()) throw DomainError("spec", "--spec is required");
  std::ifstream in(g.spec_path);
  if (!in) throw DomainError("spec", "cannot open " + g.spec_path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("spec", std::string("invalid JSON: ") + e.what());
  }
  return validate(spec_from_json(j));
}

// Starting state for a quote: whatever the user gave, completed from the curve.
PoolState quote_state(const Curve& curve, std::optional<double> x, std::optional<double> y) {
  if (x && y) return {*x, *y};
  if (x) return {*x, curve.y_at(*x)};
  if (y) return {curve.x_at(*y), *y};
  if (curve.form() == Form::reference) {
    const auto& p = std::get<ReferenceCurve>(curve.impl()).params();
    return {p.x0, p.y0};
  }
  return center_from_geometry(curve.geometry());
}

int cmd_quote(const Globals& g, std::optional<double> x, std::optional<double> y,
              std::optional<double> dx, std::optional<double> dy) {
  if (dx.has_value() == dy.has_value()) throw DomainError("dx", "give exactly one of --dx, --dy");
  const auto spec = load_spec(g);
  const Curve curve(spec);
  const PoolState s = quote_state(curve, x, y);
  check_state(curve, s, g.tolerance.value_or(1e-9));
  const SwapDelta d = dx ? curve.swap_given_dx(s, *dx) : curve.swap_given_dy(s, *dy);

  Json out;
  out["dx"] = d.dx;
  out["dy"] = d.dy;
  if (d.dx != 0.0) out["effective_price"] = effective_price(d);
  out["marginal_before"] = curve.marginal_price(s);
  out["marginal_after"] = curve.marginal_price(apply(s, d));
  emit(out);
  return kExitOk;
}

int cmd_translate(const Globals& g, const std::string& to, const std::string& anchor) {
  const auto form = parse_form(to);
  if (!form) throw DomainError("to", "unknown form '" + to + "'");
  const auto a = parse_anchor(anchor);
  if (!a) throw DomainError("anchor", "unknown anchor '" + anchor + "'");
  const auto spec = load_spec(g);
  const auto t = translate_with_report(spec, FormTag{*form, *a});
  if (g.tolerance && t.report.max_rel_deviation > *g.tolerance) {
    throw DomainError("to", "translation deviates by " + fmt(t.report.max_rel_deviation));
  }
  Json out;
  out["spec"] = spec_to_json(t.spec.spec());
  out["report"] = report_to_json(t.report);
  emit(out);
  return kExitOk;
}

int cmd_geometry(const Globals& g) {
  const auto spec = load_spec(g);
  Json out;
  out["form"] = form_tag_to_json(form_tag_of(spec));
  const Json geo = geometry_to_json(spec.geometry());
  for (const auto& [k, v] : geo.items()) out[k] = v;
  emit(out);
  return kExitOk;
}

int cmd_sweep(const Globals& g, std::size_t points, const std::string& axis) {
  kernels::SweepAxis ax;
  if (axis == "x") {
    ax = kernels::SweepAxis::x;
  } else if (axis == "price") {
    ax = kernels::SweepAxis::price;
  } else {
    throw DomainError("axis", "must be x or price");
  }
  const Curve curve(load_spec(g));
  const auto rows = kernels::serial::sweep(curve, ax, points);

  if (g.output == "csv") {
    std::cout << "x,y,marginal_price,t_hat,u_hat\n";
    for (const auto& r : rows) {
      std::cout << fmt(r.x) << ',' << fmt(r.y) << ',' << fmt(r.marginal_price) << ','
                << fmt(r.t_hat) << ',' << fmt(r.u_hat) << '\n';
    }
    return kExitOk;
  }
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["x"] = r.x;
    row["y"] = r.y;
    row["marginal_price"] = r.marginal_price;
    row["t_hat"] = r.t_hat;
    row["u_hat"] = r.u_hat;
    out.push_back(std::move(row));
  }
  emit(out);
  return kExitOk;
}

int cmd_angle(const Globals& g, std::optional<double> p_high, std::optional<double> p_low) {
  double ph, pl;
  if (p_high || p_low) {
    if (!p_high || !p_low) throw DomainError("p_high", "give both --p-high and --p-low");
    ph = *p_high;
    pl = *p_low;
  } else {
    const auto spec = load_spec(g);
    if (!spec.bounded()) throw DomainError("spec", "reference curve has no price range");
    ph = spec.geometry().p_high;
    pl = spec.geometry().p_low;
  }
  const auto angle = hyperbolic_angle(ph, pl);
  const auto trig = trig_identities_from_prices(ph, pl);
  Json out;
  out["phi"] = angle.phi;
  out["sinh"] = trig.sinh;
  out["cosh"] = trig.cosh;
  out["tanh"] = trig.tanh;
  out["c"] = std::sqrt(ph / pl);
  emit(out);
  return kExitOk;
}

struct Tally {
  std::size_t cases = 0;
  std::size_t passed = 0;
  double worst = 0.0;

  void add(bool ok, double dev) {
    ++cases;
    if (ok) ++passed;
    if (!(dev <= worst)) worst = dev;  // also latches NaN
  }
  bool ok() const { return passed == cases; }
  Json json() const {
    Json j;
    j["cases"] = cases;
    j["passed"] = passed;
    j["max_rel_deviation"] = number_or_null(worst);
    return j;
  }
};

Tally run_oracle(std::span<const kernels::OracleCase> cases, const OracleOptions& opts) {
  Tally t;
  for (const auto& r : kernels::serial::oracle_battery(cases, opts)) {
    t.add(r.pass, r.converged ? r.rel_deviation : INFINITY);
  }
  return t;
}

int verify_spec(const Globals& g, OracleOptions opts) {
  const auto spec = load_spec(g);
  const Curve curve(spec);
  const auto& geo = curve.geometry();

  // Fixed grid of states and trade sizes across the curve.
  std::vector<PoolState> states;
  for (int i = 1; i <= 9; ++i) {
    const double x = spec.bounded() ? geo.x_int * i / 10.0
                                    : std::get<ReferenceCurve>(curve.impl()).params().x0 * i / 3.0;
    states.push_back(curve.state_at_x(x));
  }
  std::vector<kernels::OracleCase> cases;
  for (const auto& s : states) {
    const double room = spec.bounded() ? geo.x_int - s.x : 10.0 * s.x;
    for (double f : {1e-3, 0.1, 0.5, 0.9}) {
      cases.push_back({spec, s, f * room});
      cases.push_back({spec, s, -f * s.x});
    }
  }
  const Tally oracle = run_oracle(cases, opts);

  Tally invariants;
  Tally round_trip;
  if (spec.bounded()) {
    const double tol = g.tolerance.value_or(1e-9);
    for (const auto& s : states) {
      const double dev = std::abs(natural_invariant_asymptotes(s, geo.x_asym, geo.y_asym) / geo.c - 1);
      invariants.add(equality_of_three(s, geo, tol), dev);
    }
    const FormTag source = form_tag_of(spec);
    for (const FormTag target : {FormTag{Form::bancor_v2}, FormTag{Form::uniswap_v3},
                                 FormTag{Form::carbon}, FormTag{Form::natural, Anchor::center},
                                 FormTag{Form::natural, Anchor::intercepts},
                                 FormTag{Form::natural, Anchor::asymptotes}}) {
      const auto back = translate(translate(spec, target), source);
      const double dev = params_rel_deviation(spec.spec(), back.spec());
      round_trip.add(dev <= tol, dev);
    }
  }

  const bool ok = oracle.ok() && invariants.ok() && round_trip.ok();
  Json out;
  out["oracle"] = oracle.json();
  out["invariants"] = invariants.json();
  out["round_trip"] = round_trip.json();
  out["pass"] = ok;
  emit(out);
  return ok ? kExitOk : kExitVerifyFailed;
}

int verify_battery(std::size_t count, std::uint64_t seed, const OracleOptions& opts) {
  const auto cases = sampling::random_oracle_cases(count, seed);
  const Tally t = run_oracle(cases, opts);
  Json out;
  out["oracle"] = t.json();
  out["seed"] = seed;
  out["pass"] = t.ok();
  emit(out);
  return t.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const Globals& g, std::size_t count, std::uint64_t seed) {
  OracleOptions opts;
  if (g.tolerance) opts.pass_rel_tol = *g.tolerance;
  return g.spec_path.empty() ? verify_battery(count, seed, opts) : verify_spec(g, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concentrated-liquidity bonding curve calculator"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--spec", g.spec_path, "CurveSpec JSON file");
  app.add_option("--tolerance", g.tolerance, "Relative tolerance")->check(CLI::PositiveNumber);
  app.add_option("--output", g.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::optional<double> x, y, dx, dy;
  auto* quote = app.add_subcommand("quote", "Swap quote at a state");
  quote->add_option("--x", x, "Current x balance");
  quote->add_option("--y", y, "Current y balance");
  quote->add_option("--dx", dx, "Change in x (pool frame)");
  quote->add_option("--dy", dy, "Change in y (pool frame)");

  std::string to, anchor = "asymptotes";
  auto* translate_cmd = app.add_subcommand("translate", "Convert a spec to another form");
  translate_cmd->add_option("--to", to, "Target form")->required();
  translate_cmd->add_option("--anchor", anchor, "Anchor for natural targets");

  std::size_t points = 50;
  std::string axis = "x";
  auto* sweep = app.add_subcommand("sweep", "Evenly spaced points along the curve");
  sweep->add_option("--points", points, "Number of rows (>= 2)");
  sweep->add_option("--axis", axis, "x or price");

  std::optional<double> p_high, p_low;
  auto* angle = app.add_subcommand("angle", "Hyperbolic angle of a price range");
  angle->add_option("--p-high", p_high);
  angle->add_option("--p-low", p_low);

  std::size_t count = 200;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Quadrature oracle and invariant checks");
  verify->add_option("--count", count, "Random cases when no --spec is given");
  verify->add_option("--seed", seed);

  auto* geometry = app.add_subcommand("geometry", "Intercepts, asymptotes and price bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("ParseError", e.what());
    return kExitInputError;
  }

  try {
    if (*quote) return cmd_quote(g, x, y, dx, dy);
    if (*translate_cmd) return cmd_translate(g, to, anchor);
    if (*sweep) return cmd_sweep(g, points, axis);
    if (*angle) return cmd_angle(g, p_high, p_low);
    if (*verify) return cmd_verify(g, count, seed);
    if (*geometry) return cmd_geometry(g);
  } catch (const DomainError& e) {
    emit_error(e.kind(), e.reason(), &e.field());
  } catch (const Error& e) {
    emit_error(e.kind(), e.what());
  } catch (const std::exception& e) {
    emit_error("Error", e.what());
  }
  return kExitInputError;
}
