#include "halfpoint/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <json.hpp>

#include "halfpoint/errors.hpp"
#include "halfpoint/galois.hpp"
#include "halfpoint/oracle.hpp"
#include "halfpoint/quartic.hpp"
#include "halfpoint/two_division.hpp"
#include "halfpoint/weierstrass.hpp"

namespace halfpoint {

namespace {

using json = nlohmann::ordered_json;

struct Request {
  std::string field;
  bool json = false;
  std::string curve, point, quartic, eps;
  bool homogeneous = false;
  std::string type, params, element;
  bool algebra = false;
  std::string sweep;
  std::vector<std::int64_t> primes;
  std::string convention = "minus-e";
  bool serial = false;
};

json vals(const std::vector<FieldValue>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

json point_json(const CubicPoint& p) {
  if (p.is_infinity()) return "inf";
  return json::array({p.x().to_string(), p.y().to_string()});
}

json curve_json(const WeierstrassCubic& c) { return vals({c.a(), c.b(), c.c()}); }

json quartic_json(const MonicQuartic& q) {
  return {{"coefficients", vals(q.coefficients())}, {"text", q.to_string()}};
}

json hquartic_json(const HomogeneousQuartic& h) {
  const auto& c = h.coefficients();
  return {{"coefficients", vals({c.begin(), c.end()})}, {"text", h.to_string()}};
}

json invariants_json(const MonicQuartic& q) {
  const FieldValue e = invariant_e(q);
  return {{"a_q", invariant_a(q).to_string()},
          {"e_q", e.to_string()},
          {"minus_e_square", !e.is_zero() && (-e).is_square()},
          {"e_square", !e.is_zero() && e.is_square()}};
}

json arises_json(const MonicQuartic& q) {
  return {{"minus-e", arises_from_division(q, SignConvention::MinusE)},
          {"plus-e", arises_from_division(q, SignConvention::PlusE)}};
}

json class_json(const GeometricClass& c) {
  return {{"kind", geometric_kind_name(c.kind)}, {"three_torsion", c.three_torsion}};
}

// A bad descriptor is a usage error, not a domain error.
Field field_of(const Request& req, const std::string& fallback = "q") {
  try {
    return Field::parse(req.field.empty() ? fallback : req.field);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

WeierstrassCubic parse_curve(const Field& k, const std::string& text) {
  if (text.empty()) throw ParseError("--curve a,b,c is required");
  const auto v = parse_value_list(k, text);
  if (v.size() != 3) throw ParseError("a curve needs three coefficients a,b,c");
  return WeierstrassCubic(v[0], v[1], v[2]);
}

CubicPoint parse_point(const WeierstrassCubic& c, const std::string& text) {
  if (text.empty()) throw ParseError("--point x,y or --point inf is required");
  if (text == "inf") return CubicPoint::infinity();
  const auto v = parse_value_list(c.field(), text);
  if (v.size() != 2) throw ParseError("a point needs two coordinates x,y");
  return c.point(v[0], v[1]);
}

// Reads --quartic; with --homogeneous it holds five coefficients d4..d0.
std::variant<MonicQuartic, HomogeneousQuartic> parse_quartic(const Field& k, const Request& req) {
  if (req.quartic.empty()) throw ParseError("--quartic is required");
  if (!req.homogeneous) return MonicQuartic::parse(k, req.quartic);
  const HomogeneousQuartic h = HomogeneousQuartic::parse(k, req.quartic);
  if (auto q = dehomogenize(h)) return *q;
  return h;
}

json infinity_json(json r, const InfinityDivision& div, const HomogeneousQuartic& h) {
  r["outcome"] = "POINT_AT_INFINITY";
  r["hquartic"] = hquartic_json(h);
  r["curve"] = curve_json(div.curve);
  r["point"] = "inf";
  r["singularity"] = singularity_name(div.singularity);
  return r;
}

json header(const std::string& verb, const Field& k) { return {{"verb", verb}, {"outcome", ""}, {"field", k.to_string()}}; }

json do_divide(const Request& req) {
  const Field k = field_of(req);
  const WeierstrassCubic curve = parse_curve(k, req.curve);
  const CubicPoint p2 = parse_point(curve, req.point);
  json r = header("divide", k);
  r["outcome"] = p2.is_infinity() ? "POINT_AT_INFINITY" : "QUARTIC";
  r["curve"] = curve_json(curve);
  r["point"] = point_json(p2);
  if (p2.is_infinity() || req.homogeneous) {
    r["hquartic"] = hquartic_json(forward_quartic_homogeneous(curve, p2));
    if (p2.is_infinity()) r["singularity"] = singularity_name(curve.singularity_type());
    return r;
  }
  const MonicQuartic q = forward_quartic(curve, p2);
  r["quartic"] = quartic_json(q);
  r["invariants"] = invariants_json(q);
  r["profile"] = multiplicity_profile(q).to_string();
  return r;
}

json do_reconstruct(const Request& req) {
  const Field k = field_of(req);
  json r = header("reconstruct", k);
  const auto parsed = parse_quartic(k, req);
  if (const auto* h = std::get_if<HomogeneousQuartic>(&parsed)) return infinity_json(r, classify_homogeneous(*h), *h);
  const MonicQuartic& q = std::get<MonicQuartic>(parsed);
  const DivisionOutcome outcome = reconstruct(q);
  r["outcome"] = outcome_tag(outcome);
  r["quartic"] = quartic_json(q);
  r["invariants"] = invariants_json(q);
  r["arises"] = arises_json(q);
  r["profile"] = multiplicity_profile(q).to_string();
  if (const auto* pair = std::get_if<UniquePair>(&outcome)) {
    r["curve"] = curve_json(pair->curve);
    const auto pts = pair->points();
    r["points"] = json::array({point_json(pts[0]), point_json(pts[1])});
    r["singularity"] = singularity_name(pair->singularity);
  } else if (const auto* ext = std::get_if<NeedsExtension>(&outcome)) {
    r["curve"] = curve_json(ext->curve);
    r["x2"] = ext->x2.to_string();
    r["minus_e"] = ext->minus_e.to_string();
    if (k.kind() != Field::Kind::QuadraticExtension) r["extension"] = "qext:" + k.to_string() + ":" + ext->minus_e.to_string();
  } else if (const auto* fam = std::get_if<Family>(&outcome)) {
    r["x2"] = fam->x2.to_string();
    r["b_of_a"] = vals({fam->b_of_a.constant, fam->b_of_a.slope});
    r["c_of_a"] = vals({fam->c_of_a.constant, fam->c_of_a.slope});
    r["smooth_members_exist"] = fam->smooth_members_exist;
    r["point"] = json::array({fam->x2.to_string(), k.zero().to_string()});
  } else {
    const auto& nd = std::get<NotADivision>(outcome);
    r["e"] = nd.e.to_string();
    r["a_q"] = nd.a_q.to_string();
    return r;
  }
  r["class"] = class_json(classify(q, outcome));
  return r;
}

json do_classify(const Request& req) {
  const Field k = field_of(req);
  json r = header("classify", k);
  if (!req.curve.empty()) {
    const WeierstrassCubic curve = parse_curve(k, req.curve);
    const CubicPoint p2 = parse_point(curve, req.point);
    if (p2.is_infinity()) {
      const HomogeneousQuartic h = forward_quartic_homogeneous(curve, p2);
      return infinity_json(r, classify_homogeneous(h), h);
    }
    const MonicQuartic q = forward_quartic(curve, p2);
    const GeometricClass geometric = classify(curve, p2);
    const GeometricClass from_quartic = classify(q, reconstruct(q));
    r["outcome"] = "CLASSIFIED";
    r["curve"] = curve_json(curve);
    r["point"] = point_json(p2);
    r["quartic"] = quartic_json(q);
    r["profile"] = multiplicity_profile(q).to_string();
    r["class"] = class_json(geometric);
    r["class_from_quartic"] = class_json(from_quartic);
    r["agree"] = geometric == from_quartic;
    return r;
  }
  const auto parsed = parse_quartic(k, req);
  if (const auto* h = std::get_if<HomogeneousQuartic>(&parsed)) return infinity_json(r, classify_homogeneous(*h), *h);
  const MonicQuartic& q = std::get<MonicQuartic>(parsed);
  const GeometricClass cls = classify(q, reconstruct(q));
  r["outcome"] = "CLASSIFIED";
  r["quartic"] = quartic_json(q);
  r["profile"] = multiplicity_profile(q).to_string();
  r["class"] = class_json(cls);
  return r;
}

json do_halves(const Request& req) {
  const Field k = field_of(req);
  const WeierstrassCubic curve = parse_curve(k, req.curve);
  const CubicPoint p2 = parse_point(curve, req.point);
  const Halves h = halves(curve, p2);
  json r = header("halves", k);
  r["outcome"] = "HALVES";
  r["curve"] = curve_json(curve);
  r["point"] = point_json(p2);
  r["quartic"] = quartic_json(forward_quartic(curve, p2));
  json pts = json::array();
  for (const auto& p : h.points) pts.push_back(point_json(p));
  r["halves"] = pts;
  r["roots_outside_field"] = h.roots_outside_field;
  return r;
}

json do_invariants(const Request& req) {
  const Field k = field_of(req);
  const MonicQuartic q = MonicQuartic::parse(k, req.quartic.empty() ? throw ParseError("--quartic is required") : req.quartic);
  const RootProfile profile = multiplicity_profile(q);
  json r = header("invariants", k);
  r["outcome"] = "INVARIANTS";
  r["quartic"] = quartic_json(q);
  r["invariants"] = invariants_json(q);
  r["arises"] = arises_json(q);
  r["profile"] = profile.to_string();
  r["repeated_roots"] = vals(profile.repeated_roots);
  r["three_torsion"] = three_torsion_test(q);
  return r;
}

json do_rescale(const Request& req) {
  const Field k = field_of(req);
  if (req.quartic.empty()) throw ParseError("--quartic is required");
  const MonicQuartic q = MonicQuartic::parse(k, req.quartic);
  FieldValue eps = k.zero();
  MonicQuartic rescaled = q;
  if (req.eps.empty()) {
    std::tie(eps, rescaled) = rescale_to_square(q);
  } else {
    eps = k.parse_value(req.eps);
    rescaled = rescale_roots(q, eps);
  }
  const FieldValue e = invariant_e(q);
  const FieldValue e2 = invariant_e(rescaled);
  json r = header("rescale", k);
  r["outcome"] = "RESCALED";
  r["eps"] = eps.to_string();
  r["quartic"] = quartic_json(rescaled);
  r["e_original"] = e.to_string();
  r["e_rescaled"] = e2.to_string();
  r["scaling_law"] = e2 == eps * eps * eps * e;
  r["e_rescaled_square"] = !e2.is_zero() && e2.is_square();
  return r;
}

json do_galois(const Request& req) {
  if (req.type != "biquadratic" && req.type != "cyclic") throw ParseError("--type must be biquadratic or cyclic");
  const Field k = field_of(req, req.type == "cyclic" ? "qext:q:-1" : "q");
  const auto params = parse_value_list(k, req.params);
  json r = header("galois", k);
  std::optional<QuarticExtension> ext;
  if (req.type == "biquadratic") {
    if (params.size() != 2) throw ParseError("biquadratic needs --params A,B");
    ext = req.algebra ? BiquadraticExtension::algebra(params[0], params[1])
                      : BiquadraticExtension::create(params[0], params[1]);
  } else {
    if (params.size() != 1) throw ParseError("cyclic needs --params k");
    ext = CyclicQuarticExtension::create(params[0]);
  }
  const ExtElement s =
      req.element.empty() ? find_good_primitive_element(*ext) : make_element(k, parse_value_list(k, req.element));
  const bool primitive = is_primitive(*ext, s);
  const MonicQuartic m = orbit_polynomial(*ext, s);
  r["outcome"] = primitive ? "MINIMAL_POLYNOMIAL" : "NOT_PRIMITIVE";
  r["extension"] = std::visit([](const auto& e) { return e.to_string(); }, *ext);
  if (const auto* bq = std::get_if<BiquadraticExtension>(&*ext)) r["is_field"] = bq->is_field();
  r["element"] = vals({s.begin(), s.end()});
  json orbit = json::array();
  for (const auto& g : galois_orbit(*ext, s)) orbit.push_back(vals({g.begin(), g.end()}));
  r["orbit"] = orbit;
  r["primitive"] = primitive;
  r[primitive ? "minimal_polynomial" : "orbit_polynomial"] = quartic_json(m);
  const FieldValue e = invariant_e(m);
  r["e_invariant"] = e.to_string();
  r["e_closed_form"] = e_closed_form(*ext, s).to_string();
  r["e_closed_form_printed"] = e_closed_form_printed(*ext, s).to_string();
  r["closed_form_agrees"] = e == e_closed_form(*ext, s);
  return r;
}

json do_stats(const Request& req) {
  const Field k = field_of(req);
  const WeierstrassCubic curve = parse_curve(k, req.curve);
  const CubicPoint p2 = parse_point(curve, req.point);
  const Halves h = halves(curve, p2);
  if (h.points.size() != 4)
    throw DomainError("only " + std::to_string(h.points.size()) + " of the four halves are K-rational");
  const StatisticsReport s = statistics_identity_check(curve, p2, h.points);
  json r = header("stats-check", k);
  r["outcome"] = "STATISTICS";
  r["curve"] = curve_json(curve);
  r["point"] = point_json(p2);
  json pts = json::array();
  for (const auto& p : h.points) pts.push_back(point_json(p));
  r["halves"] = pts;
  r["mean_x"] = s.mean_x.to_string();
  r["mean_y"] = s.mean_y.to_string();
  r["mean_slope"] = s.mean_slope.to_string();
  r["covariance"] = s.covariance.to_string();
  r["corrected_y2"] = s.corrected_y2.to_string();
  r["printed_y2"] = s.printed_y2.to_string();
  r["x2_is_mean"] = s.x2_is_mean;
  r["corrected_holds"] = s.corrected_holds;
  r["printed_holds"] = s.printed_holds;
  return r;
}

json report_json(const SweepReport& rep, const std::string& convention, bool informational) {
  json d = json::array();
  for (const auto& x : rep.discrepancies)
    d.push_back({{"check", x.check}, {"inputs", x.inputs}, {"expected", x.expected}, {"observed", x.observed}});
  json counters = json::object();
  for (const auto& [key, n] : rep.counters) counters[key] = n;
  return {{"sweep", rep.sweep},           {"prime", rep.prime}, {"convention", convention},
          {"passed", rep.passed()},       {"informational", informational},
          {"counters", counters},         {"discrepancy_count", rep.discrepancies.size()},
          {"discrepancies", d}};
}

// Returns the response and whether a binding report failed.
std::pair<json, bool> do_oracle(const Request& req) {
  const Execution exec = req.serial ? Execution::Serial : Execution::Parallel;
  std::vector<std::pair<SignConvention, bool>> conventions;  // convention, informational
  if (req.convention == "minus-e")
    conventions = {{SignConvention::MinusE, false}};
  else if (req.convention == "plus-e")
    conventions = {{SignConvention::PlusE, false}};
  else if (req.convention == "both")
    conventions = {{SignConvention::MinusE, false}, {SignConvention::PlusE, true}};
  else
    throw ParseError("--sign-convention must be minus-e, plus-e or both");
  if (req.sweep != "gate") conventions.resize(1);
  const std::vector<std::int64_t> primes = req.primes.empty() ? default_oracle_primes() : req.primes;
  json reports = json::array();
  bool failed = false;
  for (std::int64_t p : primes)
    for (const auto& [conv, informational] : conventions) {
      const SweepReport rep = run_sweep(req.sweep, p, conv, exec);
      const std::string name = req.sweep == "gate" ? convention_name(conv) : "";
      reports.push_back(report_json(rep, name, informational));
      if (!rep.passed() && !informational) failed = true;
    }
  json r = {{"verb", "oracle"}, {"outcome", failed ? "FAIL" : "PASS"}, {"sweep", req.sweep}, {"reports", reports}};
  return {r, failed};
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) flatten(v, prefix.empty() ? key : prefix + "." + key, rows);
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); });
    if (flat) {
      std::string s;
      for (const auto& v : j) s += (s.empty() ? "" : ",") + scalar(v);
      rows.emplace_back(prefix, s);
    } else {
      std::string s;
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
    }
  } else {
    rows.emplace_back(prefix, scalar(j));
  }
}

void print_text(const json& r, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(r, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
}

void print_oracle_text(const json& r, std::ostream& out) {
  for (const auto& rep : r["reports"]) {
    out << rep["sweep"].get<std::string>() << " p=" << rep["prime"].get<std::int64_t>();
    if (!rep["convention"].get<std::string>().empty()) out << " [" << rep["convention"].get<std::string>() << "]";
    out << "  " << (rep["passed"].get<bool>() ? "PASS" : "FAIL") << "  discrepancies=" << rep["discrepancy_count"];
    if (rep["informational"].get<bool>()) out << "  (informational)";
    out << '\n';
    for (const auto& [key, n] : rep["counters"].items()) out << "    " << key << " = " << n << '\n';
    std::size_t shown = 0;
    for (const auto& d : rep["discrepancies"]) {
      if (shown++ == 10) {
        out << "    ...\n";
        break;
      }
      out << "    " << d["check"].get<std::string>() << ": " << d["inputs"].get<std::string>()
          << " expected " << d["expected"].get<std::string>() << ", observed " << d["observed"].get<std::string>()
          << '\n';
    }
  }
  out << "outcome  " << r["outcome"].get<std::string>() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Exact 2-division quartics on Weierstrass cubics", "halfpoint"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", req.field, "q, fp:<p> or qext:<base>:<d> (default q; galois cyclic: qext:q:-1)");
  app.add_flag("--json", req.json, "emit JSON instead of aligned text");

  auto* divide = app.add_subcommand("divide", "2-division quartic of a point");
  auto* recon = app.add_subcommand("reconstruct", "curve and point from a quartic");
  auto* classify_cmd = app.add_subcommand("classify", "geometric class of a division");
  auto* halves_cmd = app.add_subcommand("halves", "K-rational halves of a point");
  auto* invariants = app.add_subcommand("invariants", "a(q), e(q) and root profile");
  auto* rescale = app.add_subcommand("rescale", "rescale roots so e becomes a square");
  auto* galois = app.add_subcommand("galois", "Galois orbits in abelian quartic extensions");
  auto* oracle = app.add_subcommand("oracle", "exhaustive sweeps over small prime fields");
  auto* stats = app.add_subcommand("stats-check", "mean/covariance form of the duplication law");

  for (auto* sub : {divide, classify_cmd, halves_cmd, stats}) {
    sub->add_option("--curve", req.curve, "a,b,c of y^2 = x^3 + ax^2 + bx + c");
    sub->add_option("--point", req.point, "x,y or inf");
  }
  divide->add_flag("--homogeneous", req.homogeneous, "emit the homogeneous quartic");
  for (auto* sub : {recon, classify_cmd, invariants, rescale})
    sub->add_option("--quartic", req.quartic, "d3,d2,d1,d0 (with --homogeneous: d4,d3,d2,d1,d0)");
  for (auto* sub : {recon, classify_cmd}) sub->add_flag("--homogeneous", req.homogeneous, "--quartic is d4,...,d0");
  rescale->add_option("--eps", req.eps, "scale factor (default e(q))");
  galois->add_option("--type", req.type, "biquadratic or cyclic")->required();
  galois->add_option("--params", req.params, "A,B or k")->required();
  galois->add_option("--element", req.element, "coordinates a,b,c,d (default: the witness element)");
  galois->add_flag("--algebra", req.algebra, "biquadratic: allow the non-field algebra");
  oracle->add_option("sweep", req.sweep, "sweep name")->required()->check(CLI::IsMember(sweep_names()));
  oracle->add_option("--prime", req.primes, "primes to sweep (default 3,5,7,11,13)");
  oracle->add_option("--sign-convention", req.convention, "minus-e, plus-e or both")
      ->check(CLI::IsMember({"minus-e", "plus-e", "both"}));
  oracle->add_flag("--serial", req.serial, "run the serial reference");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    json r;
    int status = kExitOk;
    if (*divide) r = do_divide(req);
    else if (*recon) r = do_reconstruct(req);
    else if (*classify_cmd) r = do_classify(req);
    else if (*halves_cmd) r = do_halves(req);
    else if (*invariants) r = do_invariants(req);
    else if (*rescale) r = do_rescale(req);
    else if (*galois) r = do_galois(req);
    else if (*stats) r = do_stats(req);
    else {
      auto [result, failed] = do_oracle(req);
      r = std::move(result);
      if (failed) status = kExitDiscrepancy;
      if (!req.json) {
        print_oracle_text(r, out);
        return status;
      }
    }
    if (req.json)
      out << r.dump(2) << '\n';
    else
      print_text(r, out);
    return status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace halfpoint
