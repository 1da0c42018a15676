#pragma once

// Exact fields of characteristic != 2: the rationals, prime fields F_p and a
// single quadratic extension K(sqrt d) of either.  Every other module is
// generic over these through the runtime descriptor `Field`.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace halfpoint {

class FieldValue;

namespace detail {
struct FieldData;
}

/// Runtime field descriptor.  Cheap to copy (shared immutable state).
///
/// Textual forms: `q`, `fp:<p>`, `qext:<base>:<d>` such as `qext:q:2` or
/// `qext:fp:7:3`.
class Field {
 public:
  enum class Kind { Rationals, PrimeField, QuadraticExtension };

  static Field rationals();
  /// Odd prime 3 <= p < 2^31.
  static Field prime(std::int64_t p);
  /// K(sqrt d); `d` must be a nonsquare of a non-extension base.
  static Field quadratic(const Field& base, const FieldValue& d);
  static Field parse(std::string_view text);

  Kind kind() const noexcept;
  /// 0 for the rationals and their extensions.
  std::int64_t characteristic() const noexcept;
  bool is_finite() const noexcept;
  /// Number of elements; throws DomainError for infinite fields.
  std::uint64_t size() const;
  /// For a quadratic extension the base field, otherwise the field itself.
  Field base() const;
  /// The adjoined square d (quadratic extensions only).
  const FieldValue& nonresidue() const;
  std::string to_string() const;

  FieldValue zero() const;
  FieldValue one() const;
  FieldValue from_int(std::int64_t n) const;
  FieldValue from_rational(const mpq_class& q) const;
  /// u + v*r in a quadratic extension, u and v taken from the base.
  FieldValue element(const FieldValue& u, const FieldValue& v) const;
  /// The adjoined root r with r^2 = d.
  FieldValue root() const;
  /// Image of a base-field value (identity when `x` already lives here).
  FieldValue embed(const FieldValue& x) const;
  FieldValue parse_value(std::string_view text) const;

  /// Finite fields only: every element once, in `element_at` order.
  std::vector<FieldValue> elements() const;
  FieldValue element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldValue& x) const;

  bool operator==(const Field& other) const noexcept;

 private:
  friend class FieldValue;
  friend FieldValue operator*(const FieldValue& x, const FieldValue& y);
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  const detail::FieldData& data() const noexcept { return *data_; }

  std::shared_ptr<const detail::FieldData> data_;
};

/// An immutable element of a `Field` in canonical form: reduced fraction,
/// residue in [0, p), or u + v*r with canonical u, v.
class FieldValue {
 public:
  /// One coordinate over the prime subfield: residue or rational.
  using Coord = std::variant<std::int64_t, mpq_class>;

  const Field& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;

  friend FieldValue operator+(const FieldValue& x, const FieldValue& y);
  friend FieldValue operator-(const FieldValue& x, const FieldValue& y);
  friend FieldValue operator*(const FieldValue& x, const FieldValue& y);
  friend FieldValue operator/(const FieldValue& x, const FieldValue& y);
  FieldValue operator-() const;
  FieldValue operator*(std::int64_t k) const;

  FieldValue& operator+=(const FieldValue& y) { return *this = *this + y; }
  FieldValue& operator-=(const FieldValue& y) { return *this = *this - y; }
  FieldValue& operator*=(const FieldValue& y) { return *this = *this * y; }
  FieldValue& operator/=(const FieldValue& y) { return *this = *this / y; }

  /// Throws DomainError on zero.
  FieldValue inverse() const;
  FieldValue pow(std::uint64_t n) const;

  bool is_square() const;
  /// Both roots {r, -r} when x is a square in its own field; no sign is
  /// preferred beyond being deterministic.
  std::optional<std::pair<FieldValue, FieldValue>> sqrt() const;
  /// Inverse Frobenius (p-th root); finite fields only.
  FieldValue frobenius_root() const;
  /// u - v*r in a quadratic extension, identity elsewhere.
  FieldValue conjugate() const;

  /// Coordinates in the base: 0 gives u, 1 gives v (v is 0 outside extensions).
  FieldValue coordinate(int i) const;
  /// Residue of a prime-field element.
  std::int64_t residue() const;
  /// Value of a rational element.
  const mpq_class& rational() const;

  std::string to_string() const;

  friend bool operator==(const FieldValue& x, const FieldValue& y);

 private:
  friend class Field;
  FieldValue(Field field, Coord u, Coord v)
      : field_(std::move(field)), u_(std::move(u)), v_(std::move(v)) {}

  Field field_;
  Coord u_;
  Coord v_;
};

inline FieldValue operator*(std::int64_t k, const FieldValue& x) { return x * k; }

std::ostream& operator<<(std::ostream& os, const FieldValue& x);

/// Parses a comma-separated list of field literals.
std::vector<FieldValue> parse_value_list(const Field& field, std::string_view text);
std::string join_values(const std::vector<FieldValue>& values, std::string_view sep = ",");

}  // namespace halfpoint
