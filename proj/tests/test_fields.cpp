#include <gtest/gtest.h>

#include "halfpoint/errors.hpp"
#include "halfpoint/field.hpp"
#include "halfpoint/polynomial.hpp"
#include "support.hpp"

namespace halfpoint {
namespace {

using testing::val;

TEST(Field, RationalArithmetic) {
  const Field q = Field::rationals();
  EXPECT_EQ(val(q, "1/2") + val(q, "1/3"), val(q, "5/6"));
  EXPECT_EQ(val(q, "-3/4").inverse(), val(q, "-4/3"));
  EXPECT_EQ((val(q, "6/8")).to_string(), "3/4");
  EXPECT_EQ(val(q, "4/2").to_string(), "2");
}

TEST(Field, PrimeArithmetic) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(val(f7, "5") * val(f7, "4"), val(f7, "6"));
  EXPECT_EQ(val(f7, "6").inverse(), val(f7, "6"));
  EXPECT_EQ(val(f7, "-1").to_string(), "6");
  EXPECT_EQ(val(f7, "1/2"), val(f7, "4"));
  EXPECT_THROW(val(f7, "0").inverse(), DomainError);
}

TEST(Field, QuadraticExtensionArithmetic) {
  const Field k = Field::parse("qext:q:2");
  const FieldValue r = k.root();
  EXPECT_EQ((k.one() + r) * (k.one() - r), val(k, "-1"));
  const Field k3 = Field::parse("qext:q:3");
  const FieldValue x = k3.one() + k3.root();
  EXPECT_EQ(x.inverse(), (k3.root() - k3.one()) / k3.from_int(2));
  EXPECT_EQ(x.inverse() * x, k3.one());
  EXPECT_EQ(val(k3, "1/2-3*r"), k3.element(val(Field::rationals(), "1/2"), val(Field::rationals(), "-3")));
}

TEST(Field, SquareRoots) {
  const Field f7 = Field::prime(7);
  ASSERT_TRUE(val(f7, "2").is_square());
  auto r = val(f7, "2").sqrt();
  ASSERT_TRUE(r);
  std::vector<std::string> roots{r->first.to_string(), r->second.to_string()};
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, (std::vector<std::string>{"3", "4"}));
  EXPECT_FALSE(val(f7, "-1").is_square());

  const Field q = Field::rationals();
  auto s = val(q, "576").sqrt();
  ASSERT_TRUE(s);
  EXPECT_EQ(s->first * s->first, val(q, "576"));
  EXPECT_TRUE(s->first == val(q, "24") || s->first == val(q, "-24"));
  EXPECT_FALSE(val(q, "2").is_square());
  EXPECT_TRUE(val(q, "9/4").is_square());
}

TEST(Field, ExtensionSquareRootsMatchEnumeration) {
  for (const char* text : {"qext:fp:3:2", "qext:fp:7:3", "qext:fp:11:2"}) {
    const Field k = Field::parse(text);
    std::vector<int> squares(k.size(), 0);
    for (const auto& x : k.elements()) squares[k.index_of(x * x)] = 1;
    for (const auto& x : k.elements()) {
      ASSERT_EQ(x.is_square(), static_cast<bool>(squares[k.index_of(x)])) << text << " " << x.to_string();
      if (auto r = x.sqrt()) {
        EXPECT_EQ(r->first * r->first, x);
        EXPECT_EQ(r->second, -r->first);
      }
    }
  }
}

TEST(Field, RationalExtensionSquareRoots) {
  const Field k = Field::parse("qext:q:-1");
  const FieldValue i = k.root();
  const FieldValue z = (k.from_int(3) + i * 2);
  auto r = (z * z).sqrt();
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->first == z || r->first == -z);
  EXPECT_FALSE(k.from_int(2).is_square() && false);
  EXPECT_TRUE((-k.one()).is_square());
  EXPECT_FALSE(k.from_int(3).is_square());
}

TEST(Field, Enumeration) {
  const Field f5 = Field::prime(5);
  std::vector<std::string> names;
  for (const auto& x : f5.elements()) names.push_back(x.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"0", "1", "2", "3", "4"}));
  const Field f9 = Field::parse("qext:fp:3:2");
  EXPECT_EQ(f9.elements().size(), 9u);
  for (std::uint64_t i = 0; i < 9; ++i) EXPECT_EQ(f9.index_of(f9.element_at(i)), i);
  EXPECT_THROW(Field::rationals().elements(), DomainError);
  EXPECT_THROW(Field::rationals().size(), DomainError);
}

TEST(Field, DescriptorValidation) {
  EXPECT_THROW(Field::parse("fp:4"), DomainError);
  EXPECT_THROW(Field::parse("fp:2"), DomainError);
  EXPECT_THROW(Field::parse("qext:q:4"), DomainError);
  EXPECT_THROW(Field::parse("qext:fp:7:2"), DomainError);  // 2 = 3^2 mod 7
  EXPECT_THROW(Field::parse("qext:qext:q:2:3"), std::exception);
  EXPECT_THROW(Field::parse("banana"), ParseError);
  EXPECT_EQ(Field::parse("qext:fp:7:3").to_string(), "qext:fp:7:3");
  EXPECT_EQ(Field::parse("q").characteristic(), 0);
}

TEST(Field, MixedFieldsRejected) {
  EXPECT_THROW(Field::prime(5).one() + Field::prime(7).one(), DomainError);
}

TEST(Field, TextRoundTrip) {
  std::mt19937_64 rng(11);
  for (const char* text : {"q", "fp:13", "qext:q:5", "qext:fp:13:2"}) {
    const Field k = Field::parse(text);
    for (int i = 0; i < 200; ++i) {
      FieldValue x = k.is_finite() ? testing::random_element(k, rng)
                                   : (k.kind() == Field::Kind::Rationals
                                          ? testing::random_rational(rng)
                                          : k.element(testing::random_rational(rng), testing::random_rational(rng)));
      EXPECT_EQ(k.parse_value(x.to_string()), x) << text << " " << x.to_string();
    }
  }
}

TEST(Field, FieldAxiomsOverF13) {
  const Field k = Field::prime(13);
  for (const auto& x : k.elements())
    for (const auto& y : k.elements()) {
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ((x + y) - y, x);
      if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
    }
}

TEST(Field, FrobeniusRootInverts) {
  for (const char* text : {"fp:3", "qext:fp:3:2", "qext:fp:5:2"}) {
    const Field k = Field::parse(text);
    const auto p = static_cast<std::uint64_t>(k.characteristic());
    for (const auto& x : k.elements()) EXPECT_EQ(x.frobenius_root().pow(p), x);
  }
}

TEST(Polynomial, ArithmeticAndText) {
  const Field q = Field::rationals();
  const Polynomial f = Polynomial::linear(val(q, "2")) * Polynomial::linear(val(q, "-3"));
  EXPECT_EQ(f.to_string(), "x^2 + x - 6");
  auto [quot, rem] = f.divmod(Polynomial::linear(val(q, "2")));
  EXPECT_EQ(quot, Polynomial::linear(val(q, "-3")));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(f.derivative().to_string(), "2x + 1");
  EXPECT_EQ(f.shifted(val(q, "1")).to_string(), "x^2 + 3x - 4");
  EXPECT_EQ(Polynomial(q, {val(q, "1/2"), q.one()}).to_string(), "x + (1/2)");
}

TEST(Polynomial, GcdAndRadical) {
  const Field q = Field::rationals();
  const auto l = [&](int r) { return Polynomial::linear(q.from_int(r)); };
  const Polynomial f = l(1) * l(1) * l(2) * l(3) * l(3) * l(3);
  EXPECT_EQ(gcd(f, f.derivative()), l(1) * l(3) * l(3));
  EXPECT_EQ(radical(f), l(1) * l(2) * l(3));
  EXPECT_EQ(root_multiplicity(f, q.from_int(3)), 3);
  EXPECT_EQ(root_multiplicity(f, q.from_int(4)), 0);
}

TEST(Polynomial, RadicalInCharacteristicThree) {
  const Field f3 = Field::prime(3);
  // (x - 1)^3 = x^3 - 1 has zero derivative
  const Polynomial cube(f3, {f3.from_int(-1), f3.zero(), f3.zero(), f3.one()});
  EXPECT_EQ(radical(cube), Polynomial::linear(f3.one()));
  const Polynomial sq = Polynomial::linear(f3.one()) * Polynomial::linear(f3.one()) * Polynomial::linear(f3.zero());
  EXPECT_EQ(radical(sq), Polynomial::linear(f3.one()) * Polynomial::linear(f3.zero()));
  const Field f9 = Field::parse("qext:fp:3:2");
  const FieldValue r = f9.root();
  const Polynomial p = Polynomial::linear(r);
  EXPECT_EQ(radical(p * p * p * Polynomial::linear(f9.one())), p * Polynomial::linear(f9.one()));
}

TEST(Polynomial, RootsInFieldFinite) {
  std::mt19937_64 rng(5);
  for (const char* text : {"fp:7", "fp:13", "qext:fp:5:2"}) {
    const Field k = Field::parse(text);
    for (int trial = 0; trial < 50; ++trial) {
      Polynomial f = Polynomial::constant(k.one());
      for (int i = 0; i < 4; ++i) f = f * Polynomial(k, {testing::random_element(k, rng), k.one()});
      std::vector<std::pair<FieldValue, int>> expected;
      for (const auto& x : k.elements())
        if (int m = f(x).is_zero() ? root_multiplicity(f, x) : 0) expected.emplace_back(x, m);
      EXPECT_EQ(roots_in_field(f), expected) << text << " " << f.to_string();
    }
  }
}

TEST(Polynomial, RootsInFieldRationals) {
  const Field q = Field::rationals();
  const auto l = [&](const char* r) { return Polynomial::linear(val(q, r)); };
  const Polynomial f = l("1/2") * l("1/2") * l("-3") * Polynomial(q, {val(q, "-2"), q.zero(), q.one()});
  const auto roots = roots_in_field(f);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], std::make_pair(val(q, "-3"), 1));
  EXPECT_EQ(roots[1], std::make_pair(val(q, "1/2"), 2));
  EXPECT_THROW(roots_in_field(Polynomial::linear(Field::parse("qext:q:2").root())), DomainError);
}

}  // namespace
}  // namespace halfpoint
