#pragma once

// The 2-division quartic of a point on a Weierstrass cubic, its inverse, and
// the classification of quartics by the geometry of the division.

#include <array>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "halfpoint/field.hpp"
#include "halfpoint/quartic.hpp"
#include "halfpoint/weierstrass.hpp"

namespace halfpoint {

/// Which squareness test decides whether e(q) != 0 comes from a K-point.
/// MinusE: -e(q) a square (what F(-d3/4) = -e(q)/64 forces).  PlusE: e(q) a
/// square, the sign-flipped reading.  They agree when -1 is a square in K.
enum class SignConvention { MinusE, PlusE };

std::string convention_name(SignConvention convention);

/// x^4 - 4x2 x^3 - (2b + 4a x2) x^2 - (8c + 4b x2) x + (b^2 - 4ac - 4c x2).
/// P2 may be the singular point; DomainError for O.
MonicQuartic forward_quartic(const WeierstrassCubic& curve, const CubicPoint& p2);

/// Homogenised version, defined for O as well: Z F_h(X : Z) = (0 : 1 : a : b : c).
HomogeneousQuartic forward_quartic_homogeneous(const WeierstrassCubic& curve, const CubicPoint& p2);

/// a -> constant + slope * a
struct AffineMap {
  FieldValue constant, slope;
  FieldValue operator()(const FieldValue& a) const { return constant + slope * a; }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// e(q) != 0 and -e(q) = alpha^2: the cubic is unique and the points are (x2, +-alpha/8).
struct UniquePair {
  WeierstrassCubic curve;
  FieldValue x2;
  /// One of the two ordinates; the pair is {y2, -y2} and no sign is preferred.
  FieldValue y2;
  SingularityType singularity;

  std::array<CubicPoint, 2> points() const;
};

/// e(q) != 0 but -e(q) is not a square: the point lives over K(sqrt(-e(q))).
struct NeedsExtension {
  WeierstrassCubic curve;
  FieldValue x2;
  FieldValue minus_e;
};

/// e(q) = a(q) = 0: every a gives a cubic on which (x2, 0) has quartic q.
struct Family {
  FieldValue x2;
  AffineMap b_of_a, c_of_a;
  bool smooth_members_exist;

  WeierstrassCubic member(const FieldValue& a) const;
};

/// e(q) = 0 but a(q) != 0.
struct NotADivision {
  FieldValue e;
  FieldValue a_q;
};

using DivisionOutcome = std::variant<UniquePair, NeedsExtension, Family, NotADivision>;

/// UNIQUE_PAIR, NEEDS_EXTENSION, FAMILY or NOT_A_DIVISION.
std::string outcome_tag(const DivisionOutcome& outcome);

/// Inverts forward_quartic: x2 = -d3/4, a = a(q)/e(q), b = (a d3 - d2)/2,
/// c = (a d3^2 - (2 d1 + d2 d3))/16.
DivisionOutcome reconstruct(const MonicQuartic& q);

/// The gate: does q come from (C, P2) over K with C a plane Weierstrass cubic?
bool arises_from_division(const MonicQuartic& q, SignConvention convention = SignConvention::MinusE);

/// Stricter reading with C smooth: UniquePair on a smooth cubic, or a Family
/// with a smooth member.
bool arises_on_elliptic_curve(const DivisionOutcome& outcome);

enum class GeometricKind { SmoothGeneric, TwoTorsion, NodalSmoothPoint, CuspidalSmoothPoint, SingularPoint };

std::string geometric_kind_name(GeometricKind kind);

struct GeometricClass {
  GeometricKind kind;
  bool three_torsion = false;
  friend bool operator==(const GeometricClass&, const GeometricClass&) = default;
};

/// From the geometry: singularity type of C, whether P2 is singular or 2-torsion,
/// and 3 P2 = O for the flag.
GeometricClass classify(const WeierstrassCubic& curve, const CubicPoint& p2);

/// From the quartic alone: root profile and whether -d3/4 is a simple root.
/// DomainError when the outcome is NotADivision.
GeometricClass classify(const MonicQuartic& q, const DivisionOutcome& outcome);

/// -d3/4 is a simple root of q.
bool three_torsion_test(const MonicQuartic& q);

/// A quartic with d4 = 0, d3 != 0 read as Z F_h: the cubic and its type.  P2 is O.
struct InfinityDivision {
  WeierstrassCubic curve;
  SingularityType singularity;
};

InfinityDivision classify_homogeneous(const HomogeneousQuartic& q);

struct Halves {
  /// Every P1 over K with 2 P1 = P2, in the order of their abscissae.
  std::vector<CubicPoint> points;
  /// Roots of the quartic (with multiplicity) outside K.
  int roots_outside_field = 0;
};

/// y1 = (F'(x1)(x2 - x1) + 2 F(x1)) / (-2 y2) for each K-root x1 of the quartic
/// that is not the singular abscissa.  DomainError when y2 = 0 or P2 is O.
Halves halves(const WeierstrassCubic& curve, const CubicPoint& p2);

/// eps = e(q) and q' = rescale_roots(q, eps), so e(q') = e(q)^4 is a nonzero square.
std::pair<FieldValue, MonicQuartic> rescale_to_square(const MonicQuartic& q);

/// Mean/covariance form of the duplication law over the four halves of P2.
struct StatisticsReport {
  FieldValue mean_x, mean_y, mean_slope, mean_slope_x;
  /// cov(m, x1) = mean(m x1) - mean(m) mean(x1)
  FieldValue covariance;
  /// cov(m, x1) - mean(y1): the ordinate implied by the tangent through -P2.
  FieldValue corrected_y2;
  /// mean(y1) + cov(m, x1), the identity as printed.
  FieldValue printed_y2;
  bool x2_is_mean;
  bool corrected_holds;
  bool printed_holds;
};

/// `four_halves` must be the four K-rational halves of P2 on a smooth cubic.
StatisticsReport statistics_identity_check(const WeierstrassCubic& curve, const CubicPoint& p2,
                                           std::span<const CubicPoint> four_halves);
/// Same, computing the halves with `halves`.
StatisticsReport statistics_identity_check(const WeierstrassCubic& curve, const CubicPoint& p2);

}  // namespace halfpoint
