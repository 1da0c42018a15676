#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "halfpoint/field.hpp"
#include "halfpoint/quartic.hpp"
#include "halfpoint/weierstrass.hpp"

namespace halfpoint::testing {

inline FieldValue val(const Field& k, const std::string& text) { return k.parse_value(text); }

inline WeierstrassCubic curve(const Field& k, const std::string& text) {
  auto v = parse_value_list(k, text);
  return WeierstrassCubic(v.at(0), v.at(1), v.at(2));
}

inline MonicQuartic quartic(const Field& k, const std::string& text) { return MonicQuartic::parse(k, text); }

/// Uniform element of a finite field.
inline FieldValue random_element(const Field& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, k.size() - 1);
  return k.element_at(pick(rng));
}

inline FieldValue random_nonzero(const Field& k, std::mt19937_64& rng) {
  for (;;) {
    FieldValue x = random_element(k, rng);
    if (!x.is_zero()) return x;
  }
}

/// Small random rational n/d with |n| <= bound, 1 <= d <= bound.
inline FieldValue random_rational(std::mt19937_64& rng, int bound = 12) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return Field::rationals().from_rational(mpq_class(num(rng), den(rng)));
}

inline MonicQuartic random_quartic(const Field& k, std::mt19937_64& rng) {
  return {random_element(k, rng), random_element(k, rng), random_element(k, rng), random_element(k, rng)};
}

}  // namespace halfpoint::testing
