#include "halfpoint/two_division.hpp"

#include <stdexcept>

#include "halfpoint/errors.hpp"

namespace halfpoint {

std::string convention_name(SignConvention convention) {
  return convention == SignConvention::MinusE ? "minus-e" : "plus-e";
}

namespace {

void require_on_curve(const WeierstrassCubic& curve, const CubicPoint& p) {
  if (p.is_infinity()) return;
  if (!(p.x().field() == curve.field()) || !curve.contains(p.x(), p.y()))
    throw DomainError("(" + p.to_string() + ") is not on the cubic " + curve.to_string());
}

}  // namespace

MonicQuartic forward_quartic(const WeierstrassCubic& curve, const CubicPoint& p2) {
  if (p2.is_infinity())
    throw DomainError("the affine 2-division quartic is undefined for O; use the homogeneous form");
  require_on_curve(curve, p2);
  const FieldValue& x2 = p2.x();
  const FieldValue& a = curve.a();
  const FieldValue& b = curve.b();
  const FieldValue& c = curve.c();
  return {-(x2 * 4), -(b * 2 + a * x2 * 4), -(c * 8 + b * x2 * 4), b * b - a * c * 4 - c * x2 * 4};
}

HomogeneousQuartic forward_quartic_homogeneous(const WeierstrassCubic& curve, const CubicPoint& p2) {
  if (!p2.is_infinity()) return homogenize(forward_quartic(curve, p2));
  return HomogeneousQuartic({curve.field().zero(), curve.field().one(), curve.a(), curve.b(), curve.c()});
}

std::array<CubicPoint, 2> UniquePair::points() const {
  return {curve.point(x2, y2), curve.point(x2, -y2)};
}

WeierstrassCubic Family::member(const FieldValue& a) const { return WeierstrassCubic(a, b_of_a(a), c_of_a(a)); }

std::string outcome_tag(const DivisionOutcome& outcome) {
  struct {
    std::string operator()(const UniquePair&) const { return "UNIQUE_PAIR"; }
    std::string operator()(const NeedsExtension&) const { return "NEEDS_EXTENSION"; }
    std::string operator()(const Family&) const { return "FAMILY"; }
    std::string operator()(const NotADivision&) const { return "NOT_A_DIVISION"; }
  } visitor;
  return std::visit(visitor, outcome);
}

namespace {

// Scanned exhaustively on small finite fields.  Elsewhere: the discriminant of
// the member cubic is a polynomial of degree <= 4 in a, so five singular
// members force it to vanish identically.  Over infinite fields that happens
// exactly when q is a fourth power.
bool family_has_smooth_member(const Family& family, const MonicQuartic& q) {
  const Field& k = q.field();
  if (!k.is_finite()) return multiplicity_profile(q).partition != RootPartition::Quadruple;
  const std::uint64_t scan = k.size() <= 4096 ? k.size() : 5;
  for (std::uint64_t i = 0; i < scan; ++i)
    if (is_smooth(family.member(k.element_at(i)).singularity_type())) return true;
  return false;
}

}  // namespace

DivisionOutcome reconstruct(const MonicQuartic& q) {
  const Field& k = q.field();
  const FieldValue e = invariant_e(q);
  const FieldValue a_q = invariant_a(q);
  const FieldValue x2 = -q.d3 / k.from_int(4);
  const FieldValue half = k.from_int(2).inverse();
  const FieldValue sixteenth = k.from_int(16).inverse();
  // b = (a d3 - d2)/2, c = (a d3^2 - (2 d1 + d2 d3))/16
  const AffineMap b_of_a{-q.d2 * half, q.d3 * half};
  const AffineMap c_of_a{-(q.d1 * 2 + q.d2 * q.d3) * sixteenth, q.d3 * q.d3 * sixteenth};

  if (!e.is_zero()) {
    const FieldValue a = a_q / e;
    WeierstrassCubic curve(a, b_of_a(a), c_of_a(a));
    const FieldValue minus_e = -e;
    if (auto alpha = minus_e.sqrt()) {
      FieldValue y2 = alpha->first / k.from_int(8);
      SingularityType type = curve.singularity_type();
      return UniquePair{std::move(curve), x2, std::move(y2), std::move(type)};
    }
    return NeedsExtension{std::move(curve), x2, minus_e};
  }
  if (a_q.is_zero()) {
    Family family{x2, b_of_a, c_of_a, false};
    family.smooth_members_exist = family_has_smooth_member(family, q);
    return family;
  }
  return NotADivision{e, a_q};
}

bool arises_from_division(const MonicQuartic& q, SignConvention convention) {
  const FieldValue e = invariant_e(q);
  if (e.is_zero()) return invariant_a(q).is_zero();
  return convention == SignConvention::MinusE ? (-e).is_square() : e.is_square();
}

bool arises_on_elliptic_curve(const DivisionOutcome& outcome) {
  if (const auto* pair = std::get_if<UniquePair>(&outcome)) return is_smooth(pair->singularity);
  if (const auto* family = std::get_if<Family>(&outcome)) return family->smooth_members_exist;
  return false;
}

std::string geometric_kind_name(GeometricKind kind) {
  switch (kind) {
    case GeometricKind::SmoothGeneric:
      return "smooth-generic";
    case GeometricKind::TwoTorsion:
      return "two-torsion";
    case GeometricKind::NodalSmoothPoint:
      return "nodal-smooth-point";
    case GeometricKind::CuspidalSmoothPoint:
      return "cuspidal-smooth-point";
    case GeometricKind::SingularPoint:
      return "singular-point";
  }
  return {};
}

GeometricClass classify(const WeierstrassCubic& curve, const CubicPoint& p2) {
  if (p2.is_infinity()) throw DomainError("O is classified through the homogeneous quartic");
  require_on_curve(curve, p2);
  if (curve.is_singular_point(p2)) return {GeometricKind::SingularPoint, false};
  const bool flag = curve.multiply(p2, 3).is_infinity();
  const SingularityType type = curve.singularity_type();
  if (std::holds_alternative<Cusp>(type)) return {GeometricKind::CuspidalSmoothPoint, flag};
  if (p2.y().is_zero()) return {GeometricKind::TwoTorsion, flag};
  if (std::holds_alternative<Node>(type)) return {GeometricKind::NodalSmoothPoint, flag};
  return {GeometricKind::SmoothGeneric, flag};
}

GeometricClass classify(const MonicQuartic& q, const DivisionOutcome& outcome) {
  if (std::holds_alternative<NotADivision>(outcome))
    throw DomainError("quartic " + q.to_string() + " does not arise from a 2-division");
  const bool flag = three_torsion_test(q);
  switch (multiplicity_profile(q).partition) {
    case RootPartition::Simple:
      return {GeometricKind::SmoothGeneric, flag};
    case RootPartition::TwoDoubles:
      return {GeometricKind::TwoTorsion, flag};
    case RootPartition::OneDouble:
      return {GeometricKind::NodalSmoothPoint, flag};
    case RootPartition::Triple:
      return {GeometricKind::CuspidalSmoothPoint, flag};
    case RootPartition::Quadruple:
      return {GeometricKind::SingularPoint, flag};
  }
  throw std::logic_error("unreachable root partition");
}

bool three_torsion_test(const MonicQuartic& q) {
  const FieldValue x = -q.d3 / q.field().from_int(4);
  const Polynomial f = q.polynomial();
  return f(x).is_zero() && !f.derivative()(x).is_zero();
}

InfinityDivision classify_homogeneous(const HomogeneousQuartic& q) {
  if (!q.d4().is_zero()) throw DomainError("d4 != 0: the affine 2-division quartic applies");
  if (q.d3().is_zero())
    throw DomainError("d3 = 0: (1:0) is not a simple root, so this is not the quartic of O");
  // canonical form has d3 = 1, so q = Z (X^3 + d2 X^2 Z + d1 X Z^2 + d0 Z^3)
  WeierstrassCubic curve(q.d2(), q.d1(), q.d0());
  const Polynomial finite_part(q.field(), {q.d0(), q.d1(), q.d2(), q.field().one()});
  const Polynomial rad = radical(finite_part);
  SingularityType type = Smooth{};
  if (rad.degree() == 2) {
    const FieldValue s = -(finite_part / rad).coefficient(0);
    type = Node{s, -(rad / Polynomial::linear(s)).coefficient(0)};
  } else if (rad.degree() == 1) {
    type = Cusp{-rad.coefficient(0)};
  }
  return {std::move(curve), std::move(type)};
}

Halves halves(const WeierstrassCubic& curve, const CubicPoint& p2) {
  if (p2.is_infinity()) throw DomainError("halves of O are the 2-torsion points; not handled here");
  require_on_curve(curve, p2);
  if (p2.y().is_zero())
    throw DomainError("y2 = 0: halves of a 2-torsion or singular point need a square-root case split");
  const FieldValue& x2 = p2.x();
  const FieldValue& y2 = p2.y();
  const MonicQuartic q = forward_quartic(curve, p2);
  Halves result;
  int rational_roots = 0;
  const FieldValue denom = -(y2 * 2);
  for (const auto& [x1, multiplicity] : roots_in_field(q.polynomial())) {
    rational_roots += multiplicity;
    const FieldValue f = curve.rhs(x1);
    const FieldValue df = curve.rhs_derivative(x1);
    if (f.is_zero() && df.is_zero()) continue;  // singular abscissa
    const FieldValue y1 = (df * (x2 - x1) + f * 2) / denom;
    CubicPoint half = curve.point(x1, y1);
    if (!(curve.double_point(half) == p2))
      throw std::logic_error("half (" + half.to_string() + ") does not double to (" + p2.to_string() + ")");
    result.points.push_back(std::move(half));
  }
  result.roots_outside_field = 4 - rational_roots;
  return result;
}

std::pair<FieldValue, MonicQuartic> rescale_to_square(const MonicQuartic& q) {
  FieldValue eps = invariant_e(q);
  if (eps.is_zero()) throw DomainError("e(q) = 0: rescaling cannot produce a nonzero square");
  MonicQuartic rescaled = rescale_roots(q, eps);
  return {std::move(eps), std::move(rescaled)};
}

StatisticsReport statistics_identity_check(const WeierstrassCubic& curve, const CubicPoint& p2,
                                           std::span<const CubicPoint> four_halves) {
  if (!is_smooth(curve.singularity_type())) throw DomainError("the statistics identity needs a smooth cubic");
  if (p2.is_infinity()) throw DomainError("P2 must be affine");
  require_on_curve(curve, p2);
  if (four_halves.size() != 4) throw DomainError("need exactly four K-rational halves");
  for (std::size_t i = 0; i < 4; ++i) {
    const CubicPoint& h = four_halves[i];
    require_on_curve(curve, h);
    if (h.is_infinity() || h.y().is_zero() || !(curve.double_point(h) == p2))
      throw DomainError("(" + h.to_string() + ") is not a half of (" + p2.to_string() + ")");
    for (std::size_t j = 0; j < i; ++j)
      if (four_halves[j] == h) throw DomainError("halves must be distinct");
  }
  const Field& k = curve.field();
  const FieldValue quarter = k.from_int(4).inverse();
  FieldValue sx = k.zero(), sy = k.zero(), sm = k.zero(), smx = k.zero();
  for (const auto& h : four_halves) {
    const FieldValue m = curve.rhs_derivative(h.x()) / (h.y() * 2);
    sx += h.x();
    sy += h.y();
    sm += m;
    smx += m * h.x();
  }
  StatisticsReport r{sx * quarter, sy * quarter, sm * quarter, smx * quarter,
                     k.zero(),     k.zero(),     k.zero(),     false, false, false};
  r.covariance = r.mean_slope_x - r.mean_slope * r.mean_x;
  r.corrected_y2 = r.covariance - r.mean_y;
  r.printed_y2 = r.mean_y + r.covariance;
  r.x2_is_mean = r.mean_x == p2.x();
  r.corrected_holds = r.corrected_y2 == p2.y();
  r.printed_holds = r.printed_y2 == p2.y();
  return r;
}

StatisticsReport statistics_identity_check(const WeierstrassCubic& curve, const CubicPoint& p2) {
  const Halves h = halves(curve, p2);
  if (h.points.size() != 4)
    throw DomainError("only " + std::to_string(h.points.size()) + " of the four halves are K-rational");
  return statistics_identity_check(curve, p2, h.points);
}

}  // namespace halfpoint
