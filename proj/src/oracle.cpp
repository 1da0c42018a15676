#include "halfpoint/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <optional>
#include <set>

#include "halfpoint/errors.hpp"
#include "halfpoint/quartic.hpp"

namespace halfpoint {

std::int64_t max_oracle_prime() {
  const char* env = std::getenv("HALFPOINT_MAX_PRIME");
  if (!env || !*env) return 13;
  try {
    std::size_t used = 0;
    const long long bound = std::stoll(env, &used);
    if (used != std::string(env).size() || bound < 3) throw ParseError("");
    return bound;
  } catch (const std::exception&) {
    throw ParseError(std::string("HALFPOINT_MAX_PRIME must be an integer >= 3, got '") + env + "'");
  }
}

std::vector<std::int64_t> default_oracle_primes() {
  std::vector<std::int64_t> out;
  for (std::int64_t p : {3, 5, 7, 11, 13})
    if (p <= max_oracle_prime()) out.push_back(p);
  return out;
}

namespace {

struct Partial {
  std::map<std::string, std::uint64_t> counters;
  std::vector<Discrepancy> discrepancies;

  void count(const std::string& key, std::uint64_t n = 1) { counters[key] += n; }
  void check(bool ok, std::string name, std::string inputs, std::string expected, std::string observed) {
    count(name);
    if (!ok) discrepancies.push_back({std::move(name), std::move(inputs), std::move(expected), std::move(observed)});
  }
};

// Runs fn(i) for i in [0, n); per-index results are merged in index order.
template <class Fn>
std::vector<Partial> map_indices(std::uint64_t n, Execution exec, Fn fn) {
  std::vector<Partial> out(n);
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4) if (exec == Execution::Parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::uint64_t>(i));
    } catch (...) {
#pragma omp critical(halfpoint_oracle_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

SweepReport merge(std::string name, std::int64_t p, std::vector<Partial>&& parts, Partial head = {}) {
  SweepReport report{std::move(name), p, std::move(head.counters), std::move(head.discrepancies)};
  for (auto& part : parts) {
    for (const auto& [key, n] : part.counters) report.counters[key] += n;
    for (auto& d : part.discrepancies) report.discrepancies.push_back(std::move(d));
  }
  return report;
}

Field sweep_field(std::int64_t p) {
  if (p > max_oracle_prime())
    throw DomainError("prime " + std::to_string(p) + " exceeds the oracle bound " +
                      std::to_string(max_oracle_prime()) + " (raise HALFPOINT_MAX_PRIME)");
  return Field::prime(p);
}

WeierstrassCubic curve_at(const Field& k, std::uint64_t index) {
  const std::uint64_t p = k.size();
  return WeierstrassCubic(k.element_at(index % p), k.element_at(index / p % p), k.element_at(index / p / p));
}

std::uint64_t curve_count(const Field& k) { return k.size() * k.size() * k.size(); }

// Singular point found by scanning F(x) = F'(x) = 0; cusp when F''(x) = 0 too.
struct Geometry {
  std::optional<FieldValue> singular_x;
  bool cusp = false;

  bool smooth() const { return !singular_x; }
  std::string name() const { return smooth() ? "smooth" : cusp ? "cusp" : "node"; }
  bool is_singular(const CubicPoint& p) const {
    return singular_x && !p.is_infinity() && p.x() == *singular_x && p.y().is_zero();
  }
};

Geometry scan_geometry(const WeierstrassCubic& c) {
  Geometry g;
  for (const auto& x : c.field().elements())
    if (c.rhs(x).is_zero() && c.rhs_derivative(x).is_zero()) {
      g.singular_x = x;
      g.cusp = (x * 6 + c.a() * 2).is_zero();
      break;
    }
  return g;
}

std::uint64_t quartic_index(const MonicQuartic& q) {
  const Field& k = q.field();
  const std::uint64_t p = k.size();
  return k.index_of(q.d3) + p * (k.index_of(q.d2) + p * (k.index_of(q.d1) + p * k.index_of(q.d0)));
}

MonicQuartic quartic_at(const Field& k, std::uint64_t index) {
  const std::uint64_t p = k.size();
  return {k.element_at(index % p), k.element_at(index / p % p), k.element_at(index / p / p % p),
          k.element_at(index / p / p / p)};
}

std::string describe(const WeierstrassCubic& c, const CubicPoint& p) {
  return "C=" + c.to_string() + " P2=" + p.to_string();
}

std::string describe(const MonicQuartic& q) { return "q=" + join_values(q.coefficients()); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

Field lift_field(const Field& k) {
  for (const auto& d : k.elements())
    if (!d.is_zero() && !d.is_square()) return Field::quadratic(k, d);
  throw std::logic_error("no nonresidue in " + k.to_string());
}

std::vector<FieldValue> halves_in(const WeierstrassCubic& curve, const Field& lift, const CubicPoint& p2) {
  const WeierstrassCubic lifted = curve.base_change(lift);
  const CubicPoint target =
      p2.is_infinity() ? CubicPoint::infinity() : lifted.point(lift.embed(p2.x()), lift.embed(p2.y()));
  std::vector<FieldValue> out;
  for (const auto& x : curve.field().elements()) {
    const FieldValue lx = lift.embed(x);
    const auto roots = lift.embed(curve.rhs(x)).sqrt();
    std::vector<FieldValue> ys{roots->first};
    if (!roots->first.is_zero()) ys.push_back(roots->second);
    for (const auto& y : ys) {
      const CubicPoint half = lifted.point(lx, y);
      if (lifted.is_singular_point(half)) continue;
      if (lifted.double_point(half) == target) out.push_back(x);
    }
  }
  return out;
}

}  // namespace

std::vector<FieldValue> halves_by_enumeration(const WeierstrassCubic& curve, const CubicPoint& p2) {
  const Field& k = curve.field();
  if (!k.is_finite() || k.kind() != Field::Kind::PrimeField)
    throw DomainError("halves_by_enumeration needs a prime field");
  if (!p2.is_infinity() && !curve.contains(p2.x(), p2.y()))
    throw DomainError("(" + p2.to_string() + ") is not on the cubic");
  return halves_in(curve, lift_field(k), p2);
}

SweepReport gate_sweep(std::int64_t p, SignConvention convention, Execution exec) {
  const Field k = sweep_field(p);
  const std::uint64_t n_quartics = k.size() * k.size() * k.size() * k.size();

  // ground truth: every quartic reached by some (C, P2), and by some smooth C
  struct Hits {
    std::vector<std::uint64_t> any;
    bool smooth = false;
  };
  std::vector<Hits> hits(curve_count(k));
  std::vector<Partial> enumerated = map_indices(curve_count(k), exec, [&](std::uint64_t i) {
    const WeierstrassCubic c = curve_at(k, i);
    Partial part;
    hits[i].smooth = scan_geometry(c).smooth();
    for (const auto& pt : c.points()) {
      if (pt.is_infinity()) continue;
      hits[i].any.push_back(quartic_index(forward_quartic(c, pt)));
      part.count("points");
    }
    part.count("curves");
    return part;
  });
  std::vector<char> reachable(n_quartics, 0), reachable_smooth(n_quartics, 0);
  for (const auto& h : hits)
    for (auto idx : h.any) {
      reachable[idx] = 1;
      if (h.smooth) reachable_smooth[idx] = 1;
    }

  const std::string gate_check = "gate[" + convention_name(convention) + "]";
  std::vector<Partial> judged = map_indices(n_quartics, exec, [&](std::uint64_t idx) {
    const MonicQuartic q = quartic_at(k, idx);
    Partial part;
    part.count("quartics");
    if (reachable[idx]) part.count("reachable");
    const bool gate = arises_from_division(q, convention);
    part.check(gate == static_cast<bool>(reachable[idx]), gate_check, describe(q),
               "arises=" + yes_no(gate), "enumerated=" + yes_no(reachable[idx]));
    const DivisionOutcome outcome = reconstruct(q);
    const bool elliptic = arises_on_elliptic_curve(outcome);
    part.check(elliptic == static_cast<bool>(reachable_smooth[idx]), "gate-smooth", describe(q),
               "arises=" + yes_no(elliptic), "enumerated=" + yes_no(reachable_smooth[idx]));
    if (const auto* pair = std::get_if<UniquePair>(&outcome)) {
      const FieldValue lhs = pair->curve.rhs(pair->x2);
      const FieldValue rhs = -invariant_e(q) / k.from_int(64);
      part.check(lhs == rhs && lhs == pair->y2 * pair->y2, "eq7", describe(q), "F(-d3/4)=" + rhs.to_string(),
                 "F(-d3/4)=" + lhs.to_string());
    }
    return part;
  });
  SweepReport report = merge("gate", p, std::move(enumerated));
  SweepReport second = merge("gate", p, std::move(judged));
  for (const auto& [key, n] : second.counters) report.counters[key] += n;
  for (auto& d : second.discrepancies) report.discrepancies.push_back(std::move(d));
  return report;
}

SweepReport classification_sweep(std::int64_t p, Execution exec) {
  const Field k = sweep_field(p);
  std::vector<Partial> parts = map_indices(curve_count(k), exec, [&](std::uint64_t i) {
    const WeierstrassCubic c = curve_at(k, i);
    const Geometry g = scan_geometry(c);
    Partial part;
    for (const auto& pt : c.points()) {
      if (pt.is_infinity()) continue;
      GeometricKind truth = GeometricKind::SmoothGeneric;
      if (g.is_singular(pt))
        truth = GeometricKind::SingularPoint;
      else if (g.cusp)
        truth = GeometricKind::CuspidalSmoothPoint;
      else if (pt.y().is_zero())
        truth = GeometricKind::TwoTorsion;
      else if (!g.smooth())
        truth = GeometricKind::NodalSmoothPoint;
      part.count("class:" + geometric_kind_name(truth));

      const MonicQuartic q = forward_quartic(c, pt);
      const GeometricClass from_quartic = classify(q, reconstruct(q));
      part.check(from_quartic.kind == truth, "profile-dictionary", describe(c, pt),
                 geometric_kind_name(from_quartic.kind) + " (profile " + multiplicity_profile(q).to_string() + ")",
                 geometric_kind_name(truth));
      const GeometricClass from_curve = classify(c, pt);
      part.check(from_curve.kind == truth, "geometric-classify", describe(c, pt),
                 geometric_kind_name(from_curve.kind), geometric_kind_name(truth));
      if (truth != GeometricKind::SingularPoint) {
        const bool e_zero = invariant_e(q).is_zero();
        part.check(e_zero == pt.y().is_zero(), "e-zero-iff-two-torsion", describe(c, pt), "e=0: " + yes_no(e_zero),
                   "y2=0: " + yes_no(pt.y().is_zero()));
      }
    }
    part.count("curves");
    return part;
  });

  // the (x - s)^4 families: member (x - s)^2 (x + a + 2s) is a cusp iff a = -3s
  Partial families;
  for (const auto& s : k.elements()) {
    const MonicQuartic q = MonicQuartic::from_roots(s, s, s, s);
    const DivisionOutcome outcome = reconstruct(q);
    const auto* family = std::get_if<Family>(&outcome);
    families.check(family != nullptr, "fourth-power-family", describe(q), "FAMILY", outcome_tag(outcome));
    if (!family) continue;
    families.check(!family->smooth_members_exist, "fourth-power-family", describe(q), "no smooth member",
                   "smooth member reported");
    for (const auto& a : k.elements()) {
      const WeierstrassCubic member = family->member(a);
      const FieldValue b = -(a * s * 2) - s * s * 3;
      const FieldValue c = a * s * s + s * s * s * 2;
      families.check(member == WeierstrassCubic(a, b, c), "fourth-power-member", describe(q) + " a=" + a.to_string(),
                     a.to_string() + "," + b.to_string() + "," + c.to_string(), member.to_string());
      const Geometry g = scan_geometry(member);
      const bool cusp = !g.smooth() && g.cusp;
      families.check(cusp == (a == -(s * 3)), "cusp-iff-a=-3s", describe(q) + " a=" + a.to_string(),
                     "cusp=" + yes_no(a == -(s * 3)), "cusp=" + yes_no(cusp));
      // same condition in the parameter a' = -a of y^2 = (x - s)^2 (x - (a' - 2s))
      const FieldValue a_prime = -a;
      families.check(cusp == (s * 3 == a_prime), "cusp-iff-3s=a'", describe(q) + " a'=" + a_prime.to_string(),
                     "cusp=" + yes_no(s * 3 == a_prime), "cusp=" + yes_no(cusp));
    }
  }
  return merge("classify", p, std::move(parts), std::move(families));
}

SweepReport torsion_sweep(std::int64_t p, Execution exec) {
  const Field k = sweep_field(p);
  std::vector<Partial> parts = map_indices(curve_count(k), exec, [&](std::uint64_t i) {
    const WeierstrassCubic c = curve_at(k, i);
    const Geometry g = scan_geometry(c);
    Partial part;
    std::uint64_t order_three = 0;
    std::set<std::uint64_t> flagged;
    for (const auto& pt : c.points()) {
      if (pt.is_infinity() || g.is_singular(pt)) continue;
      const bool truth = c.multiply(pt, 3).is_infinity();
      const MonicQuartic q = forward_quartic(c, pt);
      const bool flag = three_torsion_test(q);
      part.check(flag == truth, "flag-iff-order-3", describe(c, pt), "flag=" + yes_no(flag), "3P2=O: " + yes_no(truth));
      const bool geometric = classify(c, pt).three_torsion;
      part.check(geometric == truth, "geometric-flag", describe(c, pt), "flag=" + yes_no(geometric),
                 "3P2=O: " + yes_no(truth));
      if (truth) ++order_three;
      if (flag) flagged.insert(quartic_index(q));
    }
    part.count("order-3-points", order_three);
    part.count("flagged-quartics", flagged.size());
    part.check(2 * flagged.size() == order_three, "flagged-quartics-pairing", "C=" + c.to_string(),
               std::to_string(order_three) + " order-3 points", std::to_string(flagged.size()) + " flagged quartics");
    return part;
  });
  return merge("torsion", p, std::move(parts));
}

SweepReport stats_sweep(std::int64_t p, Execution exec) {
  const Field k = sweep_field(p);
  std::vector<Partial> parts = map_indices(curve_count(k), exec, [&](std::uint64_t i) {
    const WeierstrassCubic c = curve_at(k, i);
    Partial part;
    part.count("fully-split", 0);
    if (!scan_geometry(c).smooth()) return part;
    part.count("smooth-curves");
    const std::vector<CubicPoint> pts = c.points();
    std::vector<CubicPoint> doubles;
    doubles.reserve(pts.size());
    for (const auto& pt : pts) doubles.push_back(c.double_point(pt));
    for (const auto& p2 : pts) {
      if (p2.is_infinity() || p2.y().is_zero()) continue;
      std::vector<CubicPoint> found;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (doubles[j] == p2) found.push_back(pts[j]);
      if (found.size() != 4) continue;
      const StatisticsReport r = statistics_identity_check(c, p2, found);
      part.count("fully-split");
      if (r.printed_holds) part.count("printed-form-holds");
      part.check(r.corrected_holds, "y2=cov-mean(y1)", describe(c, p2), "y2=" + p2.y().to_string(),
                 "cov-mean(y1)=" + r.corrected_y2.to_string());
      part.check(r.x2_is_mean, "x2=mean(x1)", describe(c, p2), "x2=" + p2.x().to_string(),
                 "mean(x1)=" + r.mean_x.to_string());
    }
    return part;
  });
  return merge("stats", p, std::move(parts));
}

SweepReport roundtrip_sweep(std::int64_t p, Execution exec) {
  const Field k = sweep_field(p);
  std::vector<Partial> parts = map_indices(curve_count(k), exec, [&](std::uint64_t i) {
    const WeierstrassCubic c = curve_at(k, i);
    const Geometry g = scan_geometry(c);
    Partial part;
    for (const auto& pt : c.points()) {
      if (pt.is_infinity() || g.is_singular(pt)) continue;
      const MonicQuartic q = forward_quartic(c, pt);
      const FieldValue e = invariant_e(q);
      if (e.is_zero()) {
        part.count("e-zero");
        continue;
      }
      const DivisionOutcome outcome = reconstruct(q);
      const auto* pair = std::get_if<UniquePair>(&outcome);
      part.check(pair != nullptr, "roundtrip-outcome", describe(c, pt), "UNIQUE_PAIR", outcome_tag(outcome));
      if (!pair) continue;
      const bool same = pair->curve == c && pair->x2 == pt.x() && (pair->y2 == pt.y() || pair->y2 == -pt.y());
      part.check(same, "roundtrip", describe(c, pt), c.to_string() + " x2=" + pt.x().to_string(),
                 pair->curve.to_string() + " (" + pair->x2.to_string() + ",+-" + pair->y2.to_string() + ")");
      const FieldValue lhs = pair->curve.rhs(pair->x2);
      part.check(lhs == -e / k.from_int(64), "eq7", describe(c, pt), "F(-d3/4)=" + (-e / k.from_int(64)).to_string(),
                 "F(-d3/4)=" + lhs.to_string());
    }
    return part;
  });
  return merge("roundtrip", p, std::move(parts));
}

SweepReport homogeneous_sweep(std::int64_t p, Execution exec) {
  const Field k = sweep_field(p);
  const std::vector<FieldValue> elems = k.elements();
  std::vector<Partial> parts = map_indices(curve_count(k), exec, [&](std::uint64_t i) {
    const WeierstrassCubic c = curve_at(k, i);
    Partial part;
    const HomogeneousQuartic q = forward_quartic_homogeneous(c, CubicPoint::infinity());
    bool equal = true;
    for (const auto& X : elems)
      for (const auto& Z : elems) {
        const FieldValue f_h = ((X + c.a() * Z) * X + c.b() * Z * Z) * X + c.c() * Z * Z * Z;
        if (!(q(X, Z) == Z * f_h)) equal = false;
      }
    part.check(equal, "equals-Z*F_h", "C=" + c.to_string(), "Z*F_h", q.to_string());
    const bool simple = q(k.one(), k.zero()).is_zero() && !q.d3().is_zero();
    part.check(simple, "simple-root-(1:0)", "C=" + c.to_string(), "simple", q.to_string());
    const InfinityDivision div = classify_homogeneous(q);
    const std::string truth = scan_geometry(c).name();
    part.check(div.curve == c && singularity_name(div.singularity) == truth, "classify-homogeneous",
               "C=" + c.to_string(), c.to_string() + " " + truth,
               div.curve.to_string() + " " + singularity_name(div.singularity));
    part.check(singularity_name(c.singularity_type()) == truth, "singularity-type", "C=" + c.to_string(), truth,
               singularity_name(c.singularity_type()));
    part.count("curves");
    return part;
  });
  return merge("homogeneous", p, std::move(parts));
}

SweepReport halves_sweep(std::int64_t p, Execution exec) {
  const Field k = sweep_field(p);
  const Field lift = lift_field(k);
  std::vector<Partial> parts = map_indices(curve_count(k), exec, [&](std::uint64_t i) {
    const WeierstrassCubic c = curve_at(k, i);
    const Geometry g = scan_geometry(c);
    Partial part;
    const std::vector<CubicPoint> pts = c.points();
    for (const auto& p2 : pts) {
      if (p2.is_infinity()) continue;
      part.count("points");
      const std::vector<FieldValue> found = halves_in(c, lift, p2);
      const Polynomial f = forward_quartic(c, p2).polynomial();
      for (const auto& x : k.elements()) {
        const int mult = f(x).is_zero() ? root_multiplicity(f, x) : 0;
        const auto seen = static_cast<int>(std::count(found.begin(), found.end(), x));
        if (g.singular_x && x == *g.singular_x) {
          const int expected = g.is_singular(p2) ? 4 : g.cusp ? 3 : 2;
          part.check(mult == expected && seen == 0, "singular-abscissa", describe(c, p2) + " x1=" + x.to_string(),
                     "multiplicity " + std::to_string(expected), "multiplicity " + std::to_string(mult));
        } else {
          part.check(mult == seen, "halves-multiset", describe(c, p2) + " x1=" + x.to_string(),
                     "multiplicity " + std::to_string(mult), std::to_string(seen) + " halves");
        }
      }
      if (p2.y().is_zero()) continue;
      std::vector<std::string> rational;
      for (const auto& pt : pts)
        if (!pt.is_infinity() && !g.is_singular(pt) && c.double_point(pt) == p2) rational.push_back(pt.to_string());
      std::vector<std::string> computed;
      for (const auto& pt : halves(c, p2).points) computed.push_back(pt.to_string());
      std::sort(rational.begin(), rational.end());
      std::sort(computed.begin(), computed.end());
      auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " ") + ("(" + x + ")");
        return s.empty() ? std::string("none") : s;
      };
      part.check(rational == computed, "rational-halves", describe(c, p2), join(computed), join(rational));
    }
    return part;
  });
  return merge("halves", p, std::move(parts));
}

const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names{"gate", "classify", "torsion", "stats", "roundtrip", "homogeneous",
                                              "halves"};
  return names;
}

SweepReport run_sweep(const std::string& name, std::int64_t p, SignConvention convention, Execution exec) {
  if (name == "gate") return gate_sweep(p, convention, exec);
  if (name == "classify") return classification_sweep(p, exec);
  if (name == "torsion") return torsion_sweep(p, exec);
  if (name == "stats") return stats_sweep(p, exec);
  if (name == "roundtrip") return roundtrip_sweep(p, exec);
  if (name == "homogeneous") return homogeneous_sweep(p, exec);
  if (name == "halves") return halves_sweep(p, exec);
  throw ParseError("unknown sweep '" + name + "'");
}

}  // namespace halfpoint
