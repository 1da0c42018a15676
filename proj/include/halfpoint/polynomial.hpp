#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "halfpoint/field.hpp"

namespace halfpoint {

/// Dense univariate polynomial over a `Field`, coefficients stored from the
/// constant term upward with no trailing zeros.
class Polynomial {
 public:
  explicit Polynomial(Field field);
  Polynomial(Field field, std::vector<FieldValue> coefficients);

  static Polynomial constant(const FieldValue& c);
  /// x - root
  static Polynomial linear(const FieldValue& root);
  static Polynomial monomial(const FieldValue& c, int degree);

  const Field& field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  FieldValue coefficient(int i) const;
  FieldValue leading() const;
  const std::vector<FieldValue>& coefficients() const noexcept { return coeffs_; }

  FieldValue operator()(const FieldValue& x) const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial operator*(const FieldValue& c) const;
  Polynomial operator-() const;

  /// Quotient and remainder; throws DomainError on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  friend Polynomial operator/(const Polynomial& f, const Polynomial& g) { return f.divmod(g).first; }
  friend Polynomial operator%(const Polynomial& f, const Polynomial& g) { return f.divmod(g).second; }

  Polynomial derivative() const;
  Polynomial monic() const;
  /// f(x + alpha)
  Polynomial shifted(const FieldValue& alpha) const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

  /// Human form, e.g. "x^4 - 8x^3 - 8x - 8".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  Field field_;
  std::vector<FieldValue> coeffs_;
};

/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// Product of the distinct monic irreducible factors of `f` over the
/// algebraic closure (square-free part), correct in characteristic p too.
Polynomial radical(const Polynomial& f);

/// base^n mod modulus
Polynomial powmod(Polynomial base, std::uint64_t n, const Polynomial& modulus);
/// Multiplicity of `root` as a root of nonzero `f`.
int root_multiplicity(const Polynomial& f, const FieldValue& root);

/// Roots of nonzero `f` lying in its own field, with multiplicities, in a
/// deterministic order.  Finite fields: equal-degree splitting of
/// gcd(f, x^q - x).  Rationals: exact Sturm isolation of the integer roots of
/// a scaled monic integer model.  Quadratic extensions of Q: DomainError.
std::vector<std::pair<FieldValue, int>> roots_in_field(const Polynomial& f);

}  // namespace halfpoint
