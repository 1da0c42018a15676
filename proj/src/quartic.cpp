#include "halfpoint/quartic.hpp"

#include "halfpoint/errors.hpp"

namespace halfpoint {

MonicQuartic MonicQuartic::from_polynomial(const Polynomial& p) {
  if (p.degree() != 4 || !p.leading().is_one()) throw DomainError("not a monic quartic: " + p.to_string());
  return {p.coefficient(3), p.coefficient(2), p.coefficient(1), p.coefficient(0)};
}

MonicQuartic MonicQuartic::from_roots(const FieldValue& s, const FieldValue& t, const FieldValue& u,
                                      const FieldValue& v) {
  return from_polynomial(Polynomial::linear(s) * Polynomial::linear(t) * Polynomial::linear(u) *
                         Polynomial::linear(v));
}

MonicQuartic MonicQuartic::parse(const Field& field, std::string_view text) {
  auto values = parse_value_list(field, text);
  if (values.size() != 4) throw ParseError("a monic quartic needs four coefficients d3,d2,d1,d0");
  return {values[0], values[1], values[2], values[3]};
}

Polynomial MonicQuartic::polynomial() const { return Polynomial(field(), {d0, d1, d2, d3, field().one()}); }

FieldValue MonicQuartic::operator()(const FieldValue& x) const {
  return (((x + d3) * x + d2) * x + d1) * x + d0;
}

HomogeneousQuartic::HomogeneousQuartic(const std::array<FieldValue, 5>& coefficients) : coeffs_(coefficients) {
  const Field& k = coeffs_[0].field();
  for (const auto& c : coeffs_)
    if (!(c.field() == k)) throw DomainError("homogeneous quartic coefficients must share one field");
  const FieldValue* lead = nullptr;
  for (const auto& c : coeffs_)
    if (!c.is_zero()) {
      lead = &c;
      break;
    }
  if (!lead) throw DomainError("the zero form is not a homogeneous quartic");
  const FieldValue scale = lead->inverse();
  for (auto& c : coeffs_) c *= scale;
}

HomogeneousQuartic HomogeneousQuartic::parse(const Field& field, std::string_view text) {
  auto v = parse_value_list(field, text);
  if (v.size() != 5) throw ParseError("a homogeneous quartic needs five coefficients d4,d3,d2,d1,d0");
  return HomogeneousQuartic({v[0], v[1], v[2], v[3], v[4]});
}

FieldValue HomogeneousQuartic::operator()(const FieldValue& X, const FieldValue& Z) const {
  FieldValue acc = field().zero();
  FieldValue x_power = field().one();
  std::array<FieldValue, 5> z_powers{field().one(), Z, Z * Z, Z * Z * Z, Z * Z * Z * Z};
  // coeffs_[4 - i] multiplies X^i Z^(4 - i)
  for (int i = 0; i <= 4; ++i) {
    acc += coeffs_[static_cast<std::size_t>(4 - i)] * x_power * z_powers[static_cast<std::size_t>(4 - i)];
    x_power *= X;
  }
  return acc;
}

std::string HomogeneousQuartic::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out += (i ? ":" : "") + coeffs_[i].to_string();
  return out + ")";
}

FieldValue invariant_a(const MonicQuartic& q) {
  return q.d0 * 16 - q.d2 * q.d2 * 4 + q.d2 * q.d3 * q.d3 + q.d1 * q.d3 * 2;
}

FieldValue invariant_e(const MonicQuartic& q) { return q.d1 * 8 - q.d2 * q.d3 * 4 + q.d3 * q.d3 * q.d3; }

FieldValue e_from_roots(const FieldValue& s, const FieldValue& t, const FieldValue& u, const FieldValue& v) {
  return -((s + t - u - v) * (s - t + u - v) * (s - t - u + v));
}

std::string partition_name(RootPartition partition) {
  switch (partition) {
    case RootPartition::Simple:
      return "1,1,1,1";
    case RootPartition::OneDouble:
      return "2,1,1";
    case RootPartition::TwoDoubles:
      return "2,2";
    case RootPartition::Triple:
      return "3,1";
    case RootPartition::Quadruple:
      return "4";
  }
  return {};
}

std::string RootProfile::to_string() const { return partition_name(partition); }

RootProfile multiplicity_profile(const MonicQuartic& q) {
  const Polynomial f = q.polynomial();
  const Polynomial rad = radical(f);
  switch (rad.degree()) {
    case 4:
      return {RootPartition::Simple, {}, true};
    case 3: {
      // f / rad = x - s
      return {RootPartition::OneDouble, {-(f / rad).coefficient(0)}, true};
    }
    case 1:
      return {RootPartition::Quadruple, {-rad.coefficient(0)}, true};
    default:
      break;
  }
  const Polynomial rest = f / rad;  // monic quadratic
  if (rest == rad) {
    // (x - s)^2 (x - t)^2 with rad = (x - s)(x - t)
    const FieldValue p = rad.coefficient(1);
    const FieldValue c = rad.coefficient(0);
    auto disc_root = (p * p - c * 4).sqrt();
    if (!disc_root) return {RootPartition::TwoDoubles, {}, false};
    const FieldValue half = q.field().from_int(2).inverse();
    FieldValue s = (-p + disc_root->first) * half;
    FieldValue t = (-p - disc_root->first) * half;
    return {RootPartition::TwoDoubles, {s, t}, true};
  }
  // rest = (x - s)^2 for the triple root s, rad = (x - s)(x - t)
  const FieldValue s = -rest.coefficient(1) / q.field().from_int(2);
  return {RootPartition::Triple, {s}, true};
}

MonicQuartic translate(const MonicQuartic& q, const FieldValue& alpha) {
  return MonicQuartic::from_polynomial(q.polynomial().shifted(alpha));
}

MonicQuartic rescale_roots(const MonicQuartic& q, const FieldValue& eps) {
  if (eps.is_zero()) throw DomainError("rescaling roots by zero");
  const FieldValue e2 = eps * eps;
  return {q.d3 * eps, q.d2 * e2, q.d1 * e2 * eps, q.d0 * e2 * e2};
}

HomogeneousQuartic homogenize(const MonicQuartic& q) {
  return HomogeneousQuartic({q.field().one(), q.d3, q.d2, q.d1, q.d0});
}

std::optional<MonicQuartic> dehomogenize(const HomogeneousQuartic& q) {
  if (q.d4().is_zero()) return std::nullopt;
  const FieldValue inv = q.d4().inverse();
  return MonicQuartic{q.d3() * inv, q.d2() * inv, q.d1() * inv, q.d0() * inv};
}

}  // namespace halfpoint
