#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "halfpoint/field.hpp"
#include "halfpoint/polynomial.hpp"

namespace halfpoint {

class WeierstrassCubic;

/// O or an affine point (x, y).  Affine points are only minted by
/// `WeierstrassCubic`, which checks y^2 = F(x).
class CubicPoint {
 public:
  static CubicPoint infinity() { return CubicPoint(); }

  bool is_infinity() const noexcept { return !xy_.has_value(); }
  const FieldValue& x() const;
  const FieldValue& y() const;
  CubicPoint negated() const;
  /// "inf" or "x,y"
  std::string to_string() const;

  friend bool operator==(const CubicPoint& p, const CubicPoint& q) { return p.xy_ == q.xy_; }

 private:
  friend class WeierstrassCubic;
  CubicPoint() = default;
  CubicPoint(FieldValue x, FieldValue y) : xy_(std::pair{std::move(x), std::move(y)}) {}

  std::optional<std::pair<FieldValue, FieldValue>> xy_;
};

/// Point (X : Y : Z) of the projective closure Y^2 Z = F_h(X : Z).
struct ProjectivePoint {
  FieldValue X, Y, Z;

  bool is_infinity() const { return Z.is_zero(); }
  friend bool projectively_equal(const ProjectivePoint& p, const ProjectivePoint& q);
};

struct Smooth {
  friend bool operator==(const Smooth&, const Smooth&) = default;
};
/// F = (x - s)^2 (x - t), s != t; the node is (s, 0).
struct Node {
  FieldValue s, t;
  friend bool operator==(const Node&, const Node&) = default;
};
/// F = (x - s)^3; the cusp is (s, 0).
struct Cusp {
  FieldValue s;
  friend bool operator==(const Cusp&, const Cusp&) = default;
};
using SingularityType = std::variant<Smooth, Node, Cusp>;

bool is_smooth(const SingularityType& type);
/// "smooth", "node" or "cusp"
std::string singularity_name(const SingularityType& type);

/// y^2 = F(x) = x^3 + a x^2 + b x + c over a field of characteristic != 2.
class WeierstrassCubic {
 public:
  WeierstrassCubic(FieldValue a, FieldValue b, FieldValue c);

  const Field& field() const noexcept { return a_.field(); }
  const FieldValue& a() const noexcept { return a_; }
  const FieldValue& b() const noexcept { return b_; }
  const FieldValue& c() const noexcept { return c_; }

  /// F(x)
  FieldValue rhs(const FieldValue& x) const;
  /// F'(x) = 3x^2 + 2ax + b
  FieldValue rhs_derivative(const FieldValue& x) const;
  Polynomial rhs_polynomial() const;

  /// Computed from gcd(F, F') via the square-free part of F.
  SingularityType singularity_type() const;

  bool contains(const FieldValue& x, const FieldValue& y) const;
  /// Checked affine point; DomainError when y^2 != F(x).
  CubicPoint point(const FieldValue& x, const FieldValue& y) const;
  bool contains(const ProjectivePoint& p) const;
  /// True for the affine singular point (s, 0) of a nodal or cuspidal cubic.
  bool is_singular_point(const CubicPoint& p) const;

  /// O followed by every affine point; finite fields only.
  std::vector<CubicPoint> points() const;

  CubicPoint negate(const CubicPoint& p) const;
  /// Chord-and-tangent law on the smooth locus; DomainError on the singular point.
  CubicPoint add(const CubicPoint& p, const CubicPoint& q) const;
  /// Tangent construction: 2P = (m^2 - a - 2x1, -(m x2 + d)), m = F'(x1)/(2 y1).
  CubicPoint double_point(const CubicPoint& p) const;
  /// Double-and-add; n = 0 gives O.
  CubicPoint multiply(const CubicPoint& p, std::uint64_t n) const;

  /// (X : Y : Z) doubled with X2 = 2Y (F'_h^2 - 4 F_h (aZ + 2X)), Z2 = 8 Y F_h Z;
  /// Y2 is taken from the affine law.
  ProjectivePoint double_point(const ProjectivePoint& p) const;
  ProjectivePoint to_projective(const CubicPoint& p) const;
  CubicPoint to_affine(const ProjectivePoint& p) const;

  /// Same equation over an extension (e.g. F_p -> F_{p^2}).
  WeierstrassCubic base_change(const Field& extension) const;

  /// "a,b,c"
  std::string to_string() const;

  friend bool operator==(const WeierstrassCubic&, const WeierstrassCubic&) = default;

 private:
  void require_smooth_point(const CubicPoint& p) const;

  FieldValue a_, b_, c_;
};

}  // namespace halfpoint
