#pragma once

// Explicit abelian quartic extensions of a base field, Galois orbits and the
// minimal polynomials they generate.

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "halfpoint/field.hpp"
#include "halfpoint/quartic.hpp"

namespace halfpoint {

/// Coordinates (a, b, c, d) on the extension's basis.
using ExtElement = std::array<FieldValue, 4>;

/// K(alpha, beta) with alpha^2 = A, beta^2 = B; basis {1, alpha, beta, alpha beta}.
class BiquadraticExtension {
 public:
  /// A, B, AB all nonsquares in a rational or prime base.
  static BiquadraticExtension create(const FieldValue& A, const FieldValue& B);
  /// The algebra K[alpha, beta]/(alpha^2 - A, beta^2 - B) for any nonzero A, B.
  /// Over F_p it is never a field, but the same sign matrices act on it.
  static BiquadraticExtension algebra(const FieldValue& A, const FieldValue& B);

  const Field& base() const noexcept { return A_.field(); }
  const FieldValue& A() const noexcept { return A_; }
  const FieldValue& B() const noexcept { return B_; }
  bool is_field() const noexcept { return is_field_; }

  ExtElement multiply(const ExtElement& x, const ExtElement& y) const;
  /// Images under diag(1,1,1,1), diag(1,-1,1,-1), diag(1,1,-1,-1), diag(1,-1,-1,1).
  std::array<ExtElement, 4> orbit(const ExtElement& s) const;
  std::string to_string() const;

 private:
  BiquadraticExtension(FieldValue A, FieldValue B, bool is_field)
      : A_(std::move(A)), B_(std::move(B)), is_field_(is_field) {}
  FieldValue A_, B_;
  bool is_field_;
};

/// K(alpha) with alpha^4 = k, i = sqrt(-1) in K; basis {1, alpha, alpha^2, alpha^3}.
class CyclicQuarticExtension {
 public:
  /// Needs -1 square in the base and x^4 - k irreducible.
  static CyclicQuarticExtension create(const FieldValue& k);

  const Field& base() const noexcept { return k_.field(); }
  const FieldValue& k() const noexcept { return k_; }
  /// The fixed square root of -1 driving alpha -> i alpha.
  const FieldValue& i() const noexcept { return i_; }

  ExtElement multiply(const ExtElement& x, const ExtElement& y) const;
  /// Images under alpha^m -> i^(jm) alpha^m for j = 0..3.
  std::array<ExtElement, 4> orbit(const ExtElement& s) const;
  std::string to_string() const;

 private:
  CyclicQuarticExtension(FieldValue k, FieldValue i) : k_(std::move(k)), i_(std::move(i)) {}
  FieldValue k_, i_;
};

using QuarticExtension = std::variant<BiquadraticExtension, CyclicQuarticExtension>;

const Field& extension_base(const QuarticExtension& ext);

/// Builds an element from base coordinates; ParseError on a wrong count.
ExtElement make_element(const Field& base, const std::vector<FieldValue>& coords);
std::string element_to_string(const ExtElement& s);

std::array<ExtElement, 4> galois_orbit(const QuarticExtension& ext, const ExtElement& s);
/// Orbit has four distinct members.
bool is_primitive(const QuarticExtension& ext, const ExtElement& s);
/// prod over the orbit of (x - g s), coefficients checked to lie in the base.
/// Defined for every s; equals the minimal polynomial only when s is primitive.
MonicQuartic orbit_polynomial(const QuarticExtension& ext, const ExtElement& s);
/// DomainError when s is not primitive.
MonicQuartic minimal_polynomial(const QuarticExtension& ext, const ExtElement& s);

/// Biquadratic: -64 b c d A B.  Cyclic: -32 c k (b^2 + k d^2).
FieldValue e_closed_form(const QuarticExtension& ext, const ExtElement& s);
/// The closed forms as printed: the cyclic one reads +32 c k (b^2 + k d^2).
FieldValue e_closed_form_printed(const QuarticExtension& ext, const ExtElement& s);

/// (1,1,1,1), or 1 + l alpha + alpha^2 + alpha^3 with the least l >= 1 such
/// that l^2 != -k.
ExtElement find_good_primitive_element(const QuarticExtension& ext);

/// Finite bases only: no roots and no quadratic factor over the base.
bool irreducible_over_finite_base(const MonicQuartic& q);

}  // namespace halfpoint
