#include "halfpoint/galois.hpp"

#include <stdexcept>

#include "halfpoint/errors.hpp"
#include "halfpoint/polynomial.hpp"

namespace halfpoint {

namespace {

void require_base(const Field& k) {
  if (k.kind() == Field::Kind::QuadraticExtension)
    throw DomainError("the biquadratic base must be Q or F_p, not " + k.to_string());
}

ExtElement zero_element(const Field& k) { return {k.zero(), k.zero(), k.zero(), k.zero()}; }
ExtElement one_element(const Field& k) { return {k.one(), k.zero(), k.zero(), k.zero()}; }

ExtElement sub(const ExtElement& x, const ExtElement& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

}  // namespace

BiquadraticExtension BiquadraticExtension::create(const FieldValue& A, const FieldValue& B) {
  if (!(A.field() == B.field())) throw DomainError("A and B must share one base field");
  require_base(A.field());
  if (A.is_zero() || B.is_zero()) throw DomainError("A and B must be nonzero");
  if (A.is_square()) throw DomainError("A = " + A.to_string() + " is a square; the degree drops");
  if (B.is_square()) throw DomainError("B = " + B.to_string() + " is a square; the degree drops");
  if ((A * B).is_square())
    throw DomainError("AB = " + (A * B).to_string() + " is a square; K(sqrt A) = K(sqrt B)");
  return {A, B, true};
}

BiquadraticExtension BiquadraticExtension::algebra(const FieldValue& A, const FieldValue& B) {
  if (!(A.field() == B.field())) throw DomainError("A and B must share one base field");
  require_base(A.field());
  if (A.is_zero() || B.is_zero()) throw DomainError("A and B must be nonzero");
  const bool is_field = !A.is_square() && !B.is_square() && !(A * B).is_square();
  return {A, B, is_field};
}

ExtElement BiquadraticExtension::multiply(const ExtElement& x, const ExtElement& y) const {
  const auto& [a1, b1, c1, d1] = x;
  const auto& [a2, b2, c2, d2] = y;
  return {a1 * a2 + A_ * b1 * b2 + B_ * c1 * c2 + A_ * B_ * d1 * d2,
          a1 * b2 + b1 * a2 + B_ * (c1 * d2 + d1 * c2),
          a1 * c2 + c1 * a2 + A_ * (b1 * d2 + d1 * b2),
          a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2};
}

std::array<ExtElement, 4> BiquadraticExtension::orbit(const ExtElement& s) const {
  const auto& [a, b, c, d] = s;
  return {{{a, b, c, d}, {a, -b, c, -d}, {a, b, -c, -d}, {a, -b, -c, d}}};
}

std::string BiquadraticExtension::to_string() const {
  return "biquadratic(" + base().to_string() + ";A=" + A_.to_string() + ",B=" + B_.to_string() + ")";
}

CyclicQuarticExtension CyclicQuarticExtension::create(const FieldValue& k) {
  const Field& base = k.field();
  auto i = (-base.one()).sqrt();
  if (!i) throw DomainError("the cyclic case needs sqrt(-1) in the base; " + base.to_string() + " lacks it");
  if (k.is_zero()) throw DomainError("k must be nonzero");
  // Capelli: x^4 - k is irreducible iff k is not a square and -4k is not a fourth power.
  if (k.is_square()) throw DomainError("x^4 - k is reducible for k = " + k.to_string() + ": k is a square");
  if (auto r = (k * -4).sqrt(); r && (r->first.is_square() || r->second.is_square()))
    throw DomainError("x^4 - k is reducible for k = " + k.to_string() + ": -4k is a fourth power");
  return {k, i->first};
}

ExtElement CyclicQuarticExtension::multiply(const ExtElement& x, const ExtElement& y) const {
  ExtElement out = zero_element(base());
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t n = 0; n < 4; ++n) {
      const FieldValue term = x[m] * y[n];
      if (m + n < 4)
        out[m + n] += term;
      else
        out[m + n - 4] += term * k_;
    }
  return out;
}

std::array<ExtElement, 4> CyclicQuarticExtension::orbit(const ExtElement& s) const {
  std::array<ExtElement, 4> out{s, s, s, s};
  for (std::size_t j = 0; j < 4; ++j) {
    // i^(jm) on the alpha^m coordinate
    const FieldValue ij = i_.pow(j);
    FieldValue factor = base().one();
    for (std::size_t m = 0; m < 4; ++m) {
      out[j][m] = s[m] * factor;
      factor *= ij;
    }
  }
  return out;
}

std::string CyclicQuarticExtension::to_string() const {
  return "cyclic(" + base().to_string() + ";k=" + k_.to_string() + ",i=" + i_.to_string() + ")";
}

const Field& extension_base(const QuarticExtension& ext) {
  return std::visit([](const auto& e) -> const Field& { return e.base(); }, ext);
}

ExtElement make_element(const Field& base, const std::vector<FieldValue>& coords) {
  if (coords.size() != 4) throw ParseError("an extension element needs four coordinates a,b,c,d");
  for (const auto& c : coords)
    if (!(c.field() == base)) throw DomainError("element coordinates must lie in " + base.to_string());
  return {coords[0], coords[1], coords[2], coords[3]};
}

std::string element_to_string(const ExtElement& s) { return join_values({s[0], s[1], s[2], s[3]}); }

std::array<ExtElement, 4> galois_orbit(const QuarticExtension& ext, const ExtElement& s) {
  for (const auto& c : s)
    if (!(c.field() == extension_base(ext))) throw DomainError("element does not live over the extension's base");
  return std::visit([&](const auto& e) { return e.orbit(s); }, ext);
}

bool is_primitive(const QuarticExtension& ext, const ExtElement& s) {
  const auto orbit = galois_orbit(ext, s);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (orbit[i] == orbit[j]) return false;
  return true;
}

MonicQuartic orbit_polynomial(const QuarticExtension& ext, const ExtElement& s) {
  const Field& k = extension_base(ext);
  const auto orbit = galois_orbit(ext, s);
  auto mul = [&](const ExtElement& x, const ExtElement& y) {
    return std::visit([&](const auto& e) { return e.multiply(x, y); }, ext);
  };
  // coefficients from x^0 upward, each an extension element
  std::vector<ExtElement> poly{one_element(k)};
  for (const auto& root : orbit) {
    std::vector<ExtElement> next(poly.size() + 1, zero_element(k));
    for (std::size_t n = 0; n < poly.size(); ++n) {
      for (std::size_t c = 0; c < 4; ++c) next[n + 1][c] += poly[n][c];
      next[n] = sub(next[n], mul(poly[n], root));
    }
    poly = std::move(next);
  }
  std::array<FieldValue, 5> base_coeffs{k.zero(), k.zero(), k.zero(), k.zero(), k.zero()};
  for (std::size_t n = 0; n < 5; ++n) {
    for (std::size_t c = 1; c < 4; ++c)
      if (!poly[n][c].is_zero())
        throw std::logic_error("orbit product coefficient of x^" + std::to_string(n) + " is not in the base");
    base_coeffs[n] = poly[n][0];
  }
  return MonicQuartic{base_coeffs[3], base_coeffs[2], base_coeffs[1], base_coeffs[0]};
}

MonicQuartic minimal_polynomial(const QuarticExtension& ext, const ExtElement& s) {
  if (!is_primitive(ext, s)) throw DomainError("(" + element_to_string(s) + ") is not primitive: its orbit collides");
  return orbit_polynomial(ext, s);
}

namespace {

FieldValue closed_form(const QuarticExtension& ext, const ExtElement& s, bool printed) {
  const auto& [a, b, c, d] = s;
  (void)a;
  if (const auto* bq = std::get_if<BiquadraticExtension>(&ext)) return b * c * d * bq->A() * bq->B() * -64;
  const auto& cy = std::get<CyclicQuarticExtension>(ext);
  const FieldValue value = c * cy.k() * (b * b + cy.k() * d * d) * 32;
  return printed ? value : -value;
}

}  // namespace

FieldValue e_closed_form(const QuarticExtension& ext, const ExtElement& s) { return closed_form(ext, s, false); }

FieldValue e_closed_form_printed(const QuarticExtension& ext, const ExtElement& s) {
  return closed_form(ext, s, true);
}

ExtElement find_good_primitive_element(const QuarticExtension& ext) {
  const Field& k = extension_base(ext);
  ExtElement s = one_element(k);
  if (std::holds_alternative<BiquadraticExtension>(ext)) {
    s = {k.one(), k.one(), k.one(), k.one()};
  } else {
    const FieldValue minus_k = -std::get<CyclicQuarticExtension>(ext).k();
    std::int64_t l = 1;
    while (k.from_int(l) * k.from_int(l) == minus_k) ++l;
    s = {k.one(), k.from_int(l), k.one(), k.one()};
  }
  if (!is_primitive(ext, s)) throw std::logic_error("witness element is not primitive");
  if (invariant_e(minimal_polynomial(ext, s)).is_zero()) throw std::logic_error("witness element has e = 0");
  return s;
}

bool irreducible_over_finite_base(const MonicQuartic& q) {
  const Field& k = q.field();
  if (!k.is_finite()) throw DomainError("irreducibility test needs a finite base");
  const Polynomial f = q.polynomial();
  const Polynomial x(k, {k.zero(), k.one()});
  const Polynomial xq = powmod(x, k.size(), f);
  if (gcd(f, xq - x).degree() > 0) return false;  // a root
  const Polynomial xq2 = powmod(xq, k.size(), f);
  return gcd(f, xq2 - x).degree() == 0;  // no quadratic factor
}

}  // namespace halfpoint
