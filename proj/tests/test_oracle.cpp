#include <gtest/gtest.h>

#include <cstdlib>

#include "halfpoint/errors.hpp"
#include "halfpoint/oracle.hpp"
#include "support.hpp"

namespace halfpoint {
namespace {

using testing::curve;

std::vector<std::string> names(const std::vector<FieldValue>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

TEST(Oracle, HalvesByEnumeration) {
  const Field f7 = Field::prime(7);
  const auto c = curve(f7, "0,0,1");
  EXPECT_EQ(names(halves_by_enumeration(c, c.point(f7.zero(), f7.one()))),
            (std::vector<std::string>{"0", "1", "2", "4"}));
  EXPECT_TRUE(halves_by_enumeration(c, c.point(f7.from_int(2), f7.from_int(3))).empty());
  // halves of O: the three points with y = 0 (x^3 + 1 = 0 at x = 3, 5, 6)
  EXPECT_EQ(names(halves_by_enumeration(c, CubicPoint::infinity())), (std::vector<std::string>{"3", "5", "6"}));
  EXPECT_THROW(halves_by_enumeration(curve(Field::rationals(), "0,0,1"), CubicPoint::infinity()), DomainError);
}

TEST(Oracle, HalvesWithOrdinatesOutsideTheField) {
  // a 2-torsion point whose halves have y1 outside F_p: abscissae still rational
  const Field f7 = Field::prime(7);
  for (const auto& a : f7.elements())
    for (const auto& b : f7.elements()) {
      const WeierstrassCubic c(a, b, f7.zero());
      if (!is_smooth(c.singularity_type())) continue;
      const auto t = c.point(f7.zero(), f7.zero());
      const auto xs = halves_by_enumeration(c, t);
      const auto g = forward_quartic(c, t).polynomial();
      int total = 0;
      for (const auto& [root, m] : roots_in_field(g)) total += m;
      EXPECT_EQ(static_cast<int>(xs.size()), total);
    }
}

class SweepTest : public ::testing::TestWithParam<std::tuple<std::string, std::int64_t>> {};

TEST_P(SweepTest, PassesWithZeroDiscrepancies) {
  const auto& [name, p] = GetParam();
  const SweepReport r = run_sweep(name, p);
  EXPECT_TRUE(r.passed()) << name << " p=" << p << " first: "
                          << (r.discrepancies.empty() ? "" : r.discrepancies[0].check + " " + r.discrepancies[0].inputs);
  EXPECT_EQ(r.prime, p);
  EXPECT_FALSE(r.counters.empty());
}

INSTANTIATE_TEST_SUITE_P(AllSweeps, SweepTest,
                         ::testing::Combine(::testing::Values("gate", "classify", "torsion", "stats", "roundtrip",
                                                              "homogeneous", "halves"),
                                            ::testing::Values(3, 5, 7)));

TEST(Oracle, GateConventions) {
  EXPECT_TRUE(gate_sweep(5, SignConvention::PlusE).passed());
  EXPECT_TRUE(gate_sweep(3, SignConvention::MinusE).passed());
  const SweepReport plus = gate_sweep(7, SignConvention::PlusE);
  EXPECT_FALSE(plus.passed());
  for (const auto& d : plus.discrepancies) EXPECT_EQ(d.check, "gate[plus-e]");
  const SweepReport minus = gate_sweep(7, SignConvention::MinusE);
  EXPECT_TRUE(minus.passed());
  EXPECT_EQ(minus.counters.at("quartics"), 2401u);
  EXPECT_GT(minus.counters.at("eq7"), 0u);
}

TEST(Oracle, ClassificationSeesAllFiveClasses) {
  const SweepReport r = classification_sweep(7);
  for (const char* cls : {"class:smooth-generic", "class:two-torsion", "class:nodal-smooth-point",
                          "class:cuspidal-smooth-point", "class:singular-point"})
    EXPECT_GT(r.counters.at(cls), 0u) << cls;
  EXPECT_EQ(r.counters.at("cusp-iff-a=-3s"), 49u);
  EXPECT_EQ(r.counters.at("cusp-iff-3s=a'"), 49u);
}

TEST(Oracle, TorsionPairing) {
  const SweepReport r = torsion_sweep(11);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.counters.at("order-3-points"), 2 * r.counters.at("flagged-quartics"));
  EXPECT_GT(r.counters.at("order-3-points"), 0u);
}

TEST(Oracle, StatsFindsFullySplitInstances) {
  const SweepReport r = stats_sweep(11);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.counters.at("fully-split"), 0u);
  // the identity as printed fails on most instances
  EXPECT_LT(r.counters.count("printed-form-holds") ? r.counters.at("printed-form-holds") : 0u,
            r.counters.at("fully-split"));
}

TEST(Oracle, SerialAndParallelAgree) {
  for (const auto& name : sweep_names())
    for (std::int64_t p : {5, 7})
      EXPECT_EQ(run_sweep(name, p, SignConvention::MinusE, Execution::Serial),
                run_sweep(name, p, SignConvention::MinusE, Execution::Parallel))
          << name << " " << p;
  EXPECT_EQ(gate_sweep(7, SignConvention::PlusE, Execution::Serial),
            gate_sweep(7, SignConvention::PlusE, Execution::Parallel));
}

TEST(Oracle, PrimeBound) {
  EXPECT_EQ(default_oracle_primes(), (std::vector<std::int64_t>{3, 5, 7, 11, 13}));
  EXPECT_THROW(run_sweep("classify", 17), DomainError);
  ::setenv("HALFPOINT_MAX_PRIME", "17", 1);
  EXPECT_EQ(max_oracle_prime(), 17);
  EXPECT_NO_THROW(homogeneous_sweep(17));
  ::setenv("HALFPOINT_MAX_PRIME", "bogus", 1);
  EXPECT_THROW(max_oracle_prime(), ParseError);
  ::unsetenv("HALFPOINT_MAX_PRIME");
  EXPECT_THROW(run_sweep("nonsense", 5), ParseError);
  EXPECT_THROW(run_sweep("gate", 9), DomainError);
}

}  // namespace
}  // namespace halfpoint
