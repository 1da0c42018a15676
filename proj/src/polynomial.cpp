#include "halfpoint/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "halfpoint/errors.hpp"

namespace halfpoint {

Polynomial::Polynomial(Field field) : field_(std::move(field)) {}

Polynomial::Polynomial(Field field, std::vector<FieldValue> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == field_)) throw DomainError("polynomial coefficient from a different field");
  trim();
}

Polynomial Polynomial::constant(const FieldValue& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::linear(const FieldValue& root) {
  return Polynomial(root.field(), {-root, root.field().one()});
}

Polynomial Polynomial::monomial(const FieldValue& c, int degree) {
  std::vector<FieldValue> coeffs(static_cast<std::size_t>(degree) + 1, c.field().zero());
  coeffs.back() = c;
  return Polynomial(c.field(), std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldValue Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return field_.zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

FieldValue Polynomial::leading() const { return is_zero() ? field_.zero() : coeffs_.back(); }

FieldValue Polynomial::operator()(const FieldValue& x) const {
  FieldValue acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  const std::size_t n = std::max(f.coeffs_.size(), g.coeffs_.size());
  std::vector<FieldValue> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(f.coefficient(static_cast<int>(i)) + g.coefficient(static_cast<int>(i)));
  return Polynomial(f.field_, std::move(out));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.field_);
  std::vector<FieldValue> out(f.coeffs_.size() + g.coeffs_.size() - 1, f.field_.zero());
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
  return Polynomial(f.field_, std::move(out));
}

Polynomial Polynomial::operator*(const FieldValue& c) const {
  std::vector<FieldValue> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const { return *this * (-field_.one()); }

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<FieldValue> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial(field_), *this};
  std::vector<FieldValue> quot(static_cast<std::size_t>(degree() - dd) + 1, field_.zero());
  const FieldValue lead_inv = divisor.leading().inverse();
  for (int k = degree() - dd; k >= 0; --k) {
    const FieldValue c = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldValue> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<std::int64_t>(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::shifted(const FieldValue& alpha) const {
  // Horner in the ring: acc = acc * (x + alpha) + c
  const Polynomial x_plus_alpha(field_, {alpha, field_.one()});
  Polynomial acc(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x_plus_alpha + constant(*it);
  return acc;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return f.field_ == g.field_ && f.coeffs_ == g.coeffs_;
}

namespace {

bool is_plain_integer(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  return i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos;
}

}  // namespace

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const FieldValue& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string text = c.to_string();
    bool negative = false;
    if (is_plain_integer(text) && text[0] == '-') {
      negative = true;
      text.erase(0, 1);
    } else if (!is_plain_integer(text)) {
      text = "(" + text + ")";
    }
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k > 0 && text == "1") text.clear();
    out += text + mono;
  }
  return out;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial radical(const Polynomial& f) {
  const Field& k = f.field();
  if (f.degree() <= 0) return Polynomial::constant(k.one());
  const Polynomial df = f.derivative();
  if (df.is_zero()) {
    // f = h(x^p) = (h^(1/p)(x))^p over a perfect field
    const auto p = static_cast<int>(k.characteristic());
    std::vector<FieldValue> root_coeffs;
    for (int i = 0; i * p <= f.degree(); ++i) root_coeffs.push_back(f.coefficient(i * p).frobenius_root());
    return radical(Polynomial(k, std::move(root_coeffs)));
  }
  const Polynomial g = gcd(f, df);
  if (g.degree() == 0) return f.monic();
  // f/g keeps each root whose multiplicity is prime to p; roots of g cover the rest.
  const Polynomial h = (f / g).monic();
  const Polynomial r = radical(g);
  return ((h * r) / gcd(h, r)).monic();
}

int root_multiplicity(const Polynomial& f, const FieldValue& root) {
  if (f.is_zero()) throw DomainError("multiplicity of a root of the zero polynomial");
  int m = 0;
  Polynomial g = f;
  const Polynomial lin = Polynomial::linear(root);
  while (g.degree() >= 1) {
    auto [q, r] = g.divmod(lin);
    if (!r.is_zero()) break;
    g = std::move(q);
    ++m;
  }
  return m;
}

Polynomial powmod(Polynomial base, std::uint64_t n, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(modulus.field().one()) % modulus;
  base = base % modulus;
  while (n) {
    if (n & 1) result = (result * base) % modulus;
    base = (base * base) % modulus;
    n >>= 1;
  }
  return result;
}

namespace {

// Cantor-Zassenhaus equal-degree splitting of a product of distinct linear factors.
void split_linear(const Polynomial& g, std::mt19937_64& rng, std::vector<FieldValue>& out) {
  const Field& k = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-(g.coefficient(0) / g.coefficient(1)));
    return;
  }
  const std::uint64_t q = k.size();
  std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
  for (;;) {
    const Polynomial probe(k, {k.element_at(pick(rng)), k.one()});
    Polynomial h = powmod(probe, (q - 1) / 2, g) - Polynomial::constant(k.one());
    Polynomial d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear((g / d).monic(), rng, out);
      return;
    }
  }
}

std::vector<FieldValue> finite_field_roots(const Polynomial& f) {
  const Field& k = f.field();
  const Polynomial x(k, {k.zero(), k.one()});
  const Polynomial frob = powmod(x, k.size(), f.monic()) - x;
  Polynomial g = gcd(f, frob);
  std::vector<FieldValue> roots;
  std::mt19937_64 rng(0x5eed);
  split_linear(g, rng, roots);
  std::sort(roots.begin(), roots.end(),
            [&](const FieldValue& a, const FieldValue& b) { return k.index_of(a) < k.index_of(b); });
  return roots;
}

int sign_of(const mpq_class& q) { return sgn(q); }

// Integer roots of a monic integer polynomial `g` (given over Q) by Sturm
// counting at half-integers, which are never roots of such a polynomial.
std::vector<mpz_class> integer_roots(const Polynomial& g) {
  const Field& q = g.field();
  std::vector<Polynomial> chain{g, g.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  auto variations = [&](const mpq_class& at) {
    const FieldValue x = q.from_rational(at);
    int count = 0, last = 0;
    for (const auto& s : chain) {
      int sg = sign_of(s(x).rational());
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  };
  mpz_class bound = 0;
  for (const auto& c : g.coefficients()) {
    mpz_class a = abs(c.rational().get_num());
    if (a > bound) bound = a;
  }
  bound += 1;
  const mpq_class half(1, 2);
  std::vector<mpz_class> roots;
  std::function<void(const mpz_class&, const mpz_class&, int, int)> isolate =
      [&](const mpz_class& lo, const mpz_class& hi, int v_lo, int v_hi) {
        if (v_lo - v_hi <= 0) return;
        if (hi - lo == 1) {
          if (g(q.from_rational(mpq_class(hi))).is_zero()) roots.push_back(hi);
          return;
        }
        mpz_class mid = lo + (hi - lo) / 2;
        int v_mid = variations(mpq_class(mid) + half);
        isolate(lo, mid, v_lo, v_mid);
        isolate(mid, hi, v_mid, v_hi);
      };
  mpz_class lo = -bound - 1, hi = bound;
  isolate(lo, hi, variations(mpq_class(lo) + half), variations(mpq_class(hi) + half));
  return roots;
}

std::vector<FieldValue> rational_roots(const Polynomial& f) {
  const Field& q = f.field();
  const Polynomial m = f.monic();
  const int n = m.degree();
  mpz_class denom = 1;
  for (const auto& c : m.coefficients()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.rational().get_den_mpz_t());
  // y = denom * x turns m into a monic integer polynomial
  std::vector<FieldValue> scaled;
  mpq_class power = 1;
  for (int k = n; k >= 0; --k) {
    scaled.push_back(q.from_rational(mpq_class(m.coefficient(k).rational() * power)));
    power *= denom;
  }
  std::reverse(scaled.begin(), scaled.end());
  std::vector<FieldValue> roots;
  for (const auto& y : integer_roots(Polynomial(q, std::move(scaled)))) {
    mpq_class x(y, denom);
    x.canonicalize();
    roots.push_back(q.from_rational(x));
  }
  return roots;
}

}  // namespace

std::vector<std::pair<FieldValue, int>> roots_in_field(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<FieldValue> roots;
  if (f.degree() == 0) return {};
  if (f.field().is_finite())
    roots = finite_field_roots(f);
  else if (f.field().kind() == Field::Kind::Rationals)
    roots = rational_roots(f);
  else
    throw DomainError("root search over " + f.field().to_string() +
                      " is not supported (only finite fields and q)");
  std::vector<std::pair<FieldValue, int>> out;
  for (const auto& r : roots) out.emplace_back(r, root_multiplicity(f, r));
  return out;
}

}  // namespace halfpoint
