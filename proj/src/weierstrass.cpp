#include "halfpoint/weierstrass.hpp"

#include "halfpoint/errors.hpp"

namespace halfpoint {

const FieldValue& CubicPoint::x() const {
  if (!xy_) throw DomainError("the point at infinity has no affine coordinates");
  return xy_->first;
}

const FieldValue& CubicPoint::y() const {
  if (!xy_) throw DomainError("the point at infinity has no affine coordinates");
  return xy_->second;
}

CubicPoint CubicPoint::negated() const {
  if (!xy_) return *this;
  return CubicPoint(xy_->first, -xy_->second);
}

std::string CubicPoint::to_string() const {
  if (!xy_) return "inf";
  return xy_->first.to_string() + "," + xy_->second.to_string();
}

bool projectively_equal(const ProjectivePoint& p, const ProjectivePoint& q) {
  auto nonzero = [](const ProjectivePoint& r) { return !r.X.is_zero() || !r.Y.is_zero() || !r.Z.is_zero(); };
  if (!nonzero(p) || !nonzero(q)) return false;
  return p.X * q.Y == q.X * p.Y && p.X * q.Z == q.X * p.Z && p.Y * q.Z == q.Y * p.Z;
}

bool is_smooth(const SingularityType& type) { return std::holds_alternative<Smooth>(type); }

std::string singularity_name(const SingularityType& type) {
  if (std::holds_alternative<Node>(type)) return "node";
  if (std::holds_alternative<Cusp>(type)) return "cusp";
  return "smooth";
}

WeierstrassCubic::WeierstrassCubic(FieldValue a, FieldValue b, FieldValue c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (!(a_.field() == b_.field()) || !(a_.field() == c_.field()))
    throw DomainError("curve coefficients must share one field");
  if (a_.field().characteristic() == 2) throw DomainError("characteristic 2 is not supported");
}

FieldValue WeierstrassCubic::rhs(const FieldValue& x) const { return ((x + a_) * x + b_) * x + c_; }

FieldValue WeierstrassCubic::rhs_derivative(const FieldValue& x) const {
  return (x * 3 + a_ * 2) * x + b_;
}

Polynomial WeierstrassCubic::rhs_polynomial() const {
  return Polynomial(field(), {c_, b_, a_, field().one()});
}

SingularityType WeierstrassCubic::singularity_type() const {
  const Polynomial f = rhs_polynomial();
  const Polynomial rad = radical(f);
  switch (rad.degree()) {
    case 3:
      return Smooth{};
    case 2: {
      // f / rad = x - s for the double root s
      const Polynomial extra = f / rad;
      FieldValue s = -extra.coefficient(0);
      FieldValue t = -(rad / Polynomial::linear(s)).coefficient(0);
      return Node{std::move(s), std::move(t)};
    }
    default:
      return Cusp{-rad.coefficient(0)};
  }
}

bool WeierstrassCubic::contains(const FieldValue& x, const FieldValue& y) const { return y * y == rhs(x); }

CubicPoint WeierstrassCubic::point(const FieldValue& x, const FieldValue& y) const {
  if (!(x.field() == field()) || !(y.field() == field()))
    throw DomainError("point coordinates are not in " + field().to_string());
  if (!contains(x, y))
    throw DomainError("(" + x.to_string() + "," + y.to_string() + ") is not on y^2 = x^3 + " + a_.to_string() +
                      "x^2 + " + b_.to_string() + "x + " + c_.to_string());
  return CubicPoint(x, y);
}

bool WeierstrassCubic::contains(const ProjectivePoint& p) const {
  const FieldValue f_h = ((p.X + a_ * p.Z) * p.X + b_ * p.Z * p.Z) * p.X + c_ * p.Z * p.Z * p.Z;
  return p.Y * p.Y * p.Z == f_h && !(p.X.is_zero() && p.Y.is_zero() && p.Z.is_zero());
}

bool WeierstrassCubic::is_singular_point(const CubicPoint& p) const {
  return !p.is_infinity() && p.y().is_zero() && rhs(p.x()).is_zero() && rhs_derivative(p.x()).is_zero();
}

std::vector<CubicPoint> WeierstrassCubic::points() const {
  std::vector<CubicPoint> out{CubicPoint::infinity()};
  const Field& k = field();
  for (const auto& x : k.elements()) {
    auto r = rhs(x).sqrt();
    if (!r) continue;
    if (r->first.is_zero()) {
      out.push_back(CubicPoint(x, r->first));
      continue;
    }
    auto [y0, y1] = *r;
    if (k.index_of(y1) < k.index_of(y0)) std::swap(y0, y1);
    out.push_back(CubicPoint(x, y0));
    out.push_back(CubicPoint(x, y1));
  }
  return out;
}

void WeierstrassCubic::require_smooth_point(const CubicPoint& p) const {
  if (is_singular_point(p))
    throw DomainError("(" + p.to_string() + ") is the singular point of the cubic; the group law is undefined there");
}

CubicPoint WeierstrassCubic::negate(const CubicPoint& p) const {
  require_smooth_point(p);
  return p.negated();
}

CubicPoint WeierstrassCubic::add(const CubicPoint& p, const CubicPoint& q) const {
  require_smooth_point(p);
  require_smooth_point(q);
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.x() == q.x()) {
    if (p.y() == -q.y()) return CubicPoint::infinity();
    return double_point(p);
  }
  const FieldValue m = (q.y() - p.y()) / (q.x() - p.x());
  const FieldValue d = p.y() - m * p.x();
  const FieldValue x3 = m * m - a_ - p.x() - q.x();
  return CubicPoint(x3, -(m * x3 + d));
}

CubicPoint WeierstrassCubic::double_point(const CubicPoint& p) const {
  require_smooth_point(p);
  if (p.is_infinity() || p.y().is_zero()) return CubicPoint::infinity();
  const FieldValue& x1 = p.x();
  const FieldValue& y1 = p.y();
  const FieldValue m = rhs_derivative(x1) / (y1 * 2);
  const FieldValue d = y1 - m * x1;
  const FieldValue x2 = m * m - a_ - x1 * 2;
  return CubicPoint(x2, -(m * x2 + d));
}

CubicPoint WeierstrassCubic::multiply(const CubicPoint& p, std::uint64_t n) const {
  require_smooth_point(p);
  CubicPoint result = CubicPoint::infinity();
  CubicPoint addend = p;
  while (n) {
    if (n & 1) result = add(result, addend);
    n >>= 1;
    if (n) addend = double_point(addend);
  }
  return result;
}

ProjectivePoint WeierstrassCubic::to_projective(const CubicPoint& p) const {
  if (p.is_infinity()) return {field().zero(), field().one(), field().zero()};
  return {p.x(), p.y(), field().one()};
}

CubicPoint WeierstrassCubic::to_affine(const ProjectivePoint& p) const {
  if (!contains(p)) throw DomainError("projective point is not on the cubic");
  if (p.Z.is_zero()) return CubicPoint::infinity();
  const FieldValue z_inv = p.Z.inverse();
  return CubicPoint(p.X * z_inv, p.Y * z_inv);
}

ProjectivePoint WeierstrassCubic::double_point(const ProjectivePoint& p) const {
  const CubicPoint affine = to_affine(p);
  require_smooth_point(affine);
  const ProjectivePoint origin{field().zero(), field().one(), field().zero()};
  if (affine.is_infinity()) return origin;
  const FieldValue& X = p.X;
  const FieldValue& Y = p.Y;
  const FieldValue& Z = p.Z;
  const FieldValue f_h = ((X + a_ * Z) * X + b_ * Z * Z) * X + c_ * Z * Z * Z;
  const FieldValue df_h = (X * 3 + a_ * Z * 2) * X + b_ * Z * Z;
  const FieldValue X2 = Y * 2 * (df_h * df_h - f_h * (a_ * Z + X * 2) * 4);
  const FieldValue Z2 = Y * f_h * Z * 8;
  if (Z2.is_zero()) return origin;
  const CubicPoint doubled = double_point(affine);
  return {X2, doubled.y() * Z2, Z2};
}

WeierstrassCubic WeierstrassCubic::base_change(const Field& extension) const {
  return WeierstrassCubic(extension.embed(a_), extension.embed(b_), extension.embed(c_));
}

std::string WeierstrassCubic::to_string() const {
  return a_.to_string() + "," + b_.to_string() + "," + c_.to_string();
}

}  // namespace halfpoint
