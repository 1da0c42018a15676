#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "halfpoint/field.hpp"
#include "halfpoint/polynomial.hpp"

namespace halfpoint {

/// x^4 + d3 x^3 + d2 x^2 + d1 x + d0
struct MonicQuartic {
  FieldValue d3, d2, d1, d0;

  static MonicQuartic from_polynomial(const Polynomial& p);
  /// (x - s)(x - t)(x - u)(x - v)
  static MonicQuartic from_roots(const FieldValue& s, const FieldValue& t, const FieldValue& u,
                                 const FieldValue& v);
  /// From "d3,d2,d1,d0".
  static MonicQuartic parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return d3.field(); }
  Polynomial polynomial() const;
  FieldValue operator()(const FieldValue& x) const;
  /// {d3, d2, d1, d0}
  std::vector<FieldValue> coefficients() const { return {d3, d2, d1, d0}; }
  std::string to_string() const { return polynomial().to_string(); }

  friend bool operator==(const MonicQuartic&, const MonicQuartic&) = default;
};

/// sum d_i X^i Z^(4-i) up to a nonzero scalar; stored with its first nonzero
/// coefficient (in the order d4, d3, ...) scaled to 1.
class HomogeneousQuartic {
 public:
  /// Coefficients in the order d4, d3, d2, d1, d0; not all zero.
  explicit HomogeneousQuartic(const std::array<FieldValue, 5>& coefficients);
  static HomogeneousQuartic parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return coeffs_[0].field(); }
  const FieldValue& d4() const noexcept { return coeffs_[0]; }
  const FieldValue& d3() const noexcept { return coeffs_[1]; }
  const FieldValue& d2() const noexcept { return coeffs_[2]; }
  const FieldValue& d1() const noexcept { return coeffs_[3]; }
  const FieldValue& d0() const noexcept { return coeffs_[4]; }
  const std::array<FieldValue, 5>& coefficients() const noexcept { return coeffs_; }

  /// q(X : Z)
  FieldValue operator()(const FieldValue& X, const FieldValue& Z) const;

  /// "(d4:d3:d2:d1:d0)"
  std::string to_string() const;

  friend bool operator==(const HomogeneousQuartic&, const HomogeneousQuartic&) = default;

 private:
  std::array<FieldValue, 5> coeffs_;
};

/// a(q) = 16 d0 - 4 d2^2 + d2 d3^2 + 2 d1 d3
FieldValue invariant_a(const MonicQuartic& q);
/// e(q) = 8 d1 - 4 d2 d3 + d3^3
FieldValue invariant_e(const MonicQuartic& q);
/// e of (x-s)(x-t)(x-u)(x-v) from its roots: -(s+t-u-v)(s-t+u-v)(s-t-u+v)
FieldValue e_from_roots(const FieldValue& s, const FieldValue& t, const FieldValue& u, const FieldValue& v);

enum class RootPartition { Simple, OneDouble, TwoDoubles, Triple, Quadruple };

/// Root multiplicities over the algebraic closure.
struct RootProfile {
  RootPartition partition;
  /// The repeated roots that lie in the base field, in ascending multiplicity.
  std::vector<FieldValue> repeated_roots;
  /// False only for [2,2] with the two double roots conjugate over K(sqrt D).
  bool repeated_roots_in_field = true;

  /// "1,1,1,1", "2,1,1", "2,2", "3,1" or "4"
  std::string to_string() const;
  friend bool operator==(const RootProfile&, const RootProfile&) = default;
};

std::string partition_name(RootPartition partition);

/// gcd-chain classification (square-free part), exact over every field kind.
RootProfile multiplicity_profile(const MonicQuartic& q);

/// q(x + alpha)
MonicQuartic translate(const MonicQuartic& q, const FieldValue& alpha);
/// eps^4 q(x / eps): roots scaled by eps.  DomainError for eps = 0.
MonicQuartic rescale_roots(const MonicQuartic& q, const FieldValue& eps);

HomogeneousQuartic homogenize(const MonicQuartic& q);
/// Divides through by d4; nullopt when d4 = 0.
std::optional<MonicQuartic> dehomogenize(const HomogeneousQuartic& q);

}  // namespace halfpoint
