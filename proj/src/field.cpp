#include "halfpoint/field.hpp"

#include <ostream>
#include <regex>
#include <sstream>

#include "halfpoint/errors.hpp"

namespace halfpoint {

namespace detail {

struct FieldData {
  Field::Kind kind = Field::Kind::Rationals;
  std::int64_t p = 0;                  // characteristic, 0 for Q
  std::optional<Field> base;           // quadratic extensions only
  std::optional<FieldValue> d;         // adjoined square, in `base`
  FieldValue::Coord d_coord = std::int64_t{0};
};

}  // namespace detail

namespace {

using Coord = FieldValue::Coord;

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

// p < 2^31, so reduced operands multiply without overflow
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return mod(a, p) * mod(b, p) % p;
}

std::int64_t powmod(std::int64_t a, std::uint64_t n, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod(a, p);
  while (n) {
    if (n & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    n >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod(a, p);
  if (new_r == 0) throw DomainError("division by zero");
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod(t, p);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// Tonelli-Shanks; `a` must be a nonzero quadratic residue mod odd p.
std::int64_t sqrt_mod(std::int64_t a, std::int64_t p) {
  std::int64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::int64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s;
  std::int64_t c = powmod(z, q, p);
  std::int64_t t = powmod(a, q, p);
  std::int64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

// Coordinate arithmetic over the prime subfield; p == 0 means Q.
Coord c_add(std::int64_t p, const Coord& a, const Coord& b) {
  if (p == 0) return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
  std::int64_t r = std::get<std::int64_t>(a) + std::get<std::int64_t>(b);
  return r >= p ? r - p : r;
}

Coord c_neg(std::int64_t p, const Coord& a) {
  if (p == 0) return mpq_class(-std::get<mpq_class>(a));
  std::int64_t x = std::get<std::int64_t>(a);
  return x == 0 ? 0 : p - x;
}

Coord c_sub(std::int64_t p, const Coord& a, const Coord& b) {
  if (p == 0) return mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b));
  std::int64_t r = std::get<std::int64_t>(a) - std::get<std::int64_t>(b);
  return r < 0 ? r + p : r;
}

Coord c_mul(std::int64_t p, const Coord& a, const Coord& b) {
  if (p == 0) return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
  return mulmod(std::get<std::int64_t>(a), std::get<std::int64_t>(b), p);
}

Coord c_inv(std::int64_t p, const Coord& a) {
  if (p == 0) {
    const auto& q = std::get<mpq_class>(a);
    if (q == 0) throw DomainError("division by zero");
    return mpq_class(1 / q);
  }
  return invmod(std::get<std::int64_t>(a), p);
}

bool c_is_zero(const Coord& a) {
  if (const auto* r = std::get_if<std::int64_t>(&a)) return *r == 0;
  return std::get<mpq_class>(a) == 0;
}

bool c_equal(const Coord& a, const Coord& b) {
  if (a.index() != b.index()) return false;
  if (const auto* r = std::get_if<std::int64_t>(&a)) return *r == std::get<std::int64_t>(b);
  return std::get<mpq_class>(a) == std::get<mpq_class>(b);
}

Coord c_from_int(std::int64_t p, std::int64_t n) {
  if (p == 0) return mpq_class(static_cast<long>(n));
  return mod(n, p);
}

Coord c_from_rational(std::int64_t p, const mpq_class& q) {
  if (p == 0) {
    mpq_class r = q;
    r.canonicalize();
    return r;
  }
  mpz_class pz = static_cast<long>(p);
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0) throw DomainError("denominator divisible by the characteristic");
  std::int64_t n = mod(num.get_si(), p);
  return mulmod(n, invmod(den.get_si(), p), p);
}

std::string c_to_string(const Coord& a) {
  if (const auto* r = std::get_if<std::int64_t>(&a)) return std::to_string(*r);
  return std::get<mpq_class>(a).get_str();
}

// sqrt over the prime subfield, nullopt for nonsquares.
std::optional<Coord> c_sqrt(std::int64_t p, const Coord& a) {
  if (p == 0) {
    const auto& q = std::get<mpq_class>(a);
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
      return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    mpq_class r(n, d);
    r.canonicalize();
    return Coord(r);
  }
  std::int64_t x = std::get<std::int64_t>(a);
  if (x == 0) return Coord(std::int64_t{0});
  if (powmod(x, (p - 1) / 2, p) != 1) return std::nullopt;
  return Coord(sqrt_mod(x, p));
}

const std::regex& rational_literal() {
  static const std::regex re(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  return re;
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, rational_literal()))
    throw ParseError("malformed number '" + s + "'");
  std::string num = m[1].str();
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d = m[2].matched ? mpz_class(m[2].str(), 10) : mpz_class(1);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::rationals() {
  static const Field q(std::make_shared<const detail::FieldData>(detail::FieldData{}));
  return q;
}

Field Field::prime(std::int64_t p) {
  if (p == 2) throw DomainError("characteristic 2 is not supported");
  if (p < 3 || p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw DomainError("fp:" + std::to_string(p) + " is not an odd prime below 2^31");
  detail::FieldData data;
  data.kind = Kind::PrimeField;
  data.p = p;
  return Field(std::make_shared<const detail::FieldData>(std::move(data)));
}

Field Field::quadratic(const Field& base, const FieldValue& d) {
  if (base.kind() == Kind::QuadraticExtension)
    throw DomainError("quadratic extensions may only be taken over q or fp:<p>");
  if (!(d.field() == base)) throw DomainError("nonresidue does not belong to the base field");
  if (d.is_zero() || d.is_square())
    throw DomainError(d.to_string() + " is a square in " + base.to_string());
  detail::FieldData data;
  data.kind = Kind::QuadraticExtension;
  data.p = base.characteristic();
  data.base = base;
  data.d = d;
  data.d_coord = d.u_;
  return Field(std::make_shared<const detail::FieldData>(std::move(data)));
}

Field Field::parse(std::string_view text) {
  std::string s = trim(text);
  if (s == "q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    std::string digits = s.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed prime field descriptor '" + s + "'");
    if (digits.size() > 12) throw DomainError("prime in '" + s + "' is too large");
    return prime(std::stoll(digits));
  }
  if (s.rfind("qext:", 0) == 0) {
    std::string rest = s.substr(5);
    auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw ParseError("malformed extension descriptor '" + s + "'");
    Field base = parse(rest.substr(0, colon));
    return quadratic(base, base.parse_value(rest.substr(colon + 1)));
  }
  throw ParseError("unknown field descriptor '" + s + "' (expected q, fp:<p> or qext:<base>:<d>)");
}

Field::Kind Field::kind() const noexcept { return data_->kind; }
std::int64_t Field::characteristic() const noexcept { return data_->p; }
bool Field::is_finite() const noexcept { return data_->p != 0; }

std::uint64_t Field::size() const {
  if (!is_finite()) throw DomainError("the field " + to_string() + " is infinite");
  auto p = static_cast<std::uint64_t>(data_->p);
  return kind() == Kind::QuadraticExtension ? p * p : p;
}

Field Field::base() const { return data_->base ? *data_->base : *this; }

const FieldValue& Field::nonresidue() const {
  if (!data_->d) throw DomainError(to_string() + " is not a quadratic extension");
  return *data_->d;
}

std::string Field::to_string() const {
  switch (kind()) {
    case Kind::Rationals:
      return "q";
    case Kind::PrimeField:
      return "fp:" + std::to_string(data_->p);
    case Kind::QuadraticExtension:
      return "qext:" + data_->base->to_string() + ":" + data_->d->to_string();
  }
  return {};
}

FieldValue Field::zero() const { return from_int(0); }
FieldValue Field::one() const { return from_int(1); }

FieldValue Field::from_int(std::int64_t n) const {
  return FieldValue(*this, c_from_int(data_->p, n), c_from_int(data_->p, 0));
}

FieldValue Field::from_rational(const mpq_class& q) const {
  return FieldValue(*this, c_from_rational(data_->p, q), c_from_int(data_->p, 0));
}

FieldValue Field::element(const FieldValue& u, const FieldValue& v) const {
  if (kind() != Kind::QuadraticExtension) throw DomainError(to_string() + " is not a quadratic extension");
  if (!(u.field() == *data_->base) || !(v.field() == *data_->base))
    throw DomainError("coordinates must lie in " + data_->base->to_string());
  return FieldValue(*this, u.u_, v.u_);
}

FieldValue Field::root() const { return element(base().zero(), base().one()); }

FieldValue Field::embed(const FieldValue& x) const {
  if (x.field() == *this) return x;
  if (kind() == Kind::QuadraticExtension && x.field() == *data_->base)
    return FieldValue(*this, x.u_, c_from_int(data_->p, 0));
  throw DomainError("cannot embed " + x.field().to_string() + " into " + to_string());
}

FieldValue Field::parse_value(std::string_view text) const {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty field literal");
  if (kind() != Kind::QuadraticExtension) {
    if (s.find_first_not_of("+-0123456789/ ") != std::string::npos)
      throw ParseError("malformed literal '" + s + "' for field " + to_string());
    return from_rational(parse_rational(s));
  }
  // u+v*r, u-v*r, v*r, r, or a base literal.
  const Field b = base();
  if (s.back() != 'r') return embed(b.parse_value(s));
  std::string body = trim(s.substr(0, s.size() - 1));
  if (!body.empty() && body.back() == '*') body = trim(body.substr(0, body.size() - 1));
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/') {
      split = i;
      break;
    }
  }
  std::string u_text = split == std::string::npos ? "0" : body.substr(0, split);
  std::string v_text = split == std::string::npos ? body : body.substr(split);
  v_text = trim(v_text);
  if (v_text.empty() || v_text == "+") v_text = "1";
  if (v_text == "-") v_text = "-1";
  return element(b.parse_value(u_text), b.parse_value(v_text));
}

std::vector<FieldValue> Field::elements() const {
  std::vector<FieldValue> out;
  const std::uint64_t n = size();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

FieldValue Field::element_at(std::uint64_t index) const {
  const std::uint64_t n = size();
  if (index >= n) throw DomainError("element index out of range");
  const auto p = static_cast<std::uint64_t>(data_->p);
  if (kind() == Kind::PrimeField) return FieldValue(*this, static_cast<std::int64_t>(index), std::int64_t{0});
  return FieldValue(*this, static_cast<std::int64_t>(index % p), static_cast<std::int64_t>(index / p));
}

std::uint64_t Field::index_of(const FieldValue& x) const {
  if (!(x.field() == *this)) throw DomainError("value does not belong to " + to_string());
  (void)size();
  const auto p = static_cast<std::uint64_t>(data_->p);
  auto u = static_cast<std::uint64_t>(std::get<std::int64_t>(x.u_));
  auto v = static_cast<std::uint64_t>(std::get<std::int64_t>(x.v_));
  return u + p * v;
}

bool Field::operator==(const Field& other) const noexcept {
  if (data_ == other.data_) return true;
  if (kind() != other.kind() || data_->p != other.data_->p) return false;
  if (kind() != Kind::QuadraticExtension) return true;
  return *data_->base == *other.data_->base && c_equal(data_->d_coord, other.data_->d_coord);
}

// ----------------------------------------------------------- FieldValue

namespace {

void require_same(const FieldValue& x, const FieldValue& y) {
  if (!(x.field() == y.field()))
    throw DomainError("descriptor mismatch: " + x.field().to_string() + " vs " + y.field().to_string());
}

}  // namespace

bool FieldValue::is_zero() const { return c_is_zero(u_) && c_is_zero(v_); }

bool FieldValue::is_one() const { return c_equal(u_, c_from_int(field_.characteristic(), 1)) && c_is_zero(v_); }

FieldValue operator+(const FieldValue& x, const FieldValue& y) {
  require_same(x, y);
  const auto p = x.field_.characteristic();
  return FieldValue(x.field_, c_add(p, x.u_, y.u_), c_add(p, x.v_, y.v_));
}

FieldValue operator-(const FieldValue& x, const FieldValue& y) {
  require_same(x, y);
  const auto p = x.field_.characteristic();
  return FieldValue(x.field_, c_sub(p, x.u_, y.u_), c_sub(p, x.v_, y.v_));
}

FieldValue operator*(const FieldValue& x, const FieldValue& y) {
  require_same(x, y);
  const auto p = x.field_.characteristic();
  if (x.field_.kind() != Field::Kind::QuadraticExtension)
    return FieldValue(x.field_, c_mul(p, x.u_, y.u_), x.v_);
  // (u1 + v1 r)(u2 + v2 r) = u1 u2 + d v1 v2 + (u1 v2 + u2 v1) r
  const Coord& d = x.field_.data().d_coord;
  Coord u = c_add(p, c_mul(p, x.u_, y.u_), c_mul(p, d, c_mul(p, x.v_, y.v_)));
  Coord v = c_add(p, c_mul(p, x.u_, y.v_), c_mul(p, x.v_, y.u_));
  return FieldValue(x.field_, std::move(u), std::move(v));
}

FieldValue operator/(const FieldValue& x, const FieldValue& y) {
  require_same(x, y);
  return x * y.inverse();
}

FieldValue FieldValue::operator-() const {
  const auto p = field_.characteristic();
  return FieldValue(field_, c_neg(p, u_), c_neg(p, v_));
}

FieldValue FieldValue::operator*(std::int64_t k) const { return *this * field_.from_int(k); }

FieldValue FieldValue::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  const auto p = field_.characteristic();
  if (field_.kind() != Field::Kind::QuadraticExtension) return FieldValue(field_, c_inv(p, u_), v_);
  // 1/(u + v r) = (u - v r) / (u^2 - d v^2)
  const Coord& d = field_.data().d_coord;
  Coord norm = c_sub(p, c_mul(p, u_, u_), c_mul(p, d, c_mul(p, v_, v_)));
  Coord inv = c_inv(p, norm);
  return FieldValue(field_, c_mul(p, u_, inv), c_neg(p, c_mul(p, v_, inv)));
}

FieldValue FieldValue::pow(std::uint64_t n) const {
  FieldValue result = field_.one();
  FieldValue base = *this;
  while (n) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

bool FieldValue::is_square() const { return sqrt().has_value(); }

std::optional<std::pair<FieldValue, FieldValue>> FieldValue::sqrt() const {
  const auto p = field_.characteristic();
  if (field_.kind() != Field::Kind::QuadraticExtension) {
    auto r = c_sqrt(p, u_);
    if (!r) return std::nullopt;
    FieldValue root(field_, *r, v_);
    return std::pair{root, -root};
  }
  const Field base = field_.base();
  const FieldValue u = coordinate(0);
  const FieldValue v = coordinate(1);
  const FieldValue& d = field_.nonresidue();
  auto make = [&](const FieldValue& a, const FieldValue& b) {
    FieldValue r = field_.element(a, b);
    return std::pair{r, -r};
  };
  if (v.is_zero()) {
    if (auto r = u.sqrt()) return make(r->first, base.zero());
    // u = w^2 d  gives  (w r)^2 = u
    if (auto w = (u / d).sqrt()) return make(base.zero(), w->first);
    return std::nullopt;
  }
  // (a + b r)^2 = a^2 + d b^2 + 2ab r; a^2 = (u +- sqrt(N)) / 2 with N = u^2 - d v^2.
  auto n = (u * u - d * v * v).sqrt();
  if (!n) return std::nullopt;
  const FieldValue half = base.from_int(2).inverse();
  for (const FieldValue& sign_n : {n->first, n->second}) {
    if (auto a = ((u + sign_n) * half).sqrt(); a && !a->first.is_zero()) {
      const FieldValue b = v / (a->first * 2);
      return make(a->first, b);
    }
  }
  return std::nullopt;
}

FieldValue FieldValue::frobenius_root() const {
  if (!field_.is_finite()) throw DomainError("Frobenius is only defined over finite fields");
  // x -> x^p fixes F_p and is the conjugation u + v r -> u - v r on F_{p^2},
  // an involution, so it is its own inverse.
  return conjugate();
}

FieldValue FieldValue::conjugate() const {
  if (field_.kind() != Field::Kind::QuadraticExtension) return *this;
  return FieldValue(field_, u_, c_neg(field_.characteristic(), v_));
}

FieldValue FieldValue::coordinate(int i) const {
  const Field base = field_.base();
  if (field_.kind() != Field::Kind::QuadraticExtension) {
    if (i == 0) return *this;
    return base.zero();
  }
  return FieldValue(base, i == 0 ? u_ : v_, c_from_int(base.characteristic(), 0));
}

std::int64_t FieldValue::residue() const {
  if (field_.kind() != Field::Kind::PrimeField) throw DomainError("not a prime-field element");
  return std::get<std::int64_t>(u_);
}

const mpq_class& FieldValue::rational() const {
  if (field_.kind() != Field::Kind::Rationals) throw DomainError("not a rational element");
  return std::get<mpq_class>(u_);
}

std::string FieldValue::to_string() const {
  if (field_.kind() != Field::Kind::QuadraticExtension) return c_to_string(u_);
  if (c_is_zero(v_)) return c_to_string(u_);
  std::string v = c_to_string(v_);
  std::string out = c_to_string(u_);
  out += v.front() == '-' ? v : "+" + v;
  return out + "*r";
}

bool operator==(const FieldValue& x, const FieldValue& y) {
  return x.field_ == y.field_ && c_equal(x.u_, y.u_) && c_equal(x.v_, y.v_);
}

std::ostream& operator<<(std::ostream& os, const FieldValue& x) { return os << x.to_string(); }

std::vector<FieldValue> parse_value_list(const Field& field, std::string_view text) {
  std::vector<FieldValue> out;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(field.parse_value(item));
  if (!s.empty() && s.back() == ',') throw ParseError("trailing comma in '" + s + "'");
  return out;
}

std::string join_values(const std::vector<FieldValue>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].to_string();
  }
  return out;
}

}  // namespace halfpoint
