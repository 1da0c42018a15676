#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "halfpoint/cli.hpp"
#include "halfpoint/two_division.hpp"
#include "support.hpp"

namespace halfpoint {
namespace {

using json = nlohmann::json;

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

std::string joined(const json& arr) {
  std::string s;
  for (const auto& v : arr) s += (s.empty() ? "" : ",") + v.get<std::string>();
  return s;
}

TEST(Cli, DivideExample) {
  const json r = run_json({"divide", "--field", "q", "--curve", "0,0,1", "--point", "2,3"});
  EXPECT_EQ(r["outcome"], "QUARTIC");
  EXPECT_EQ(r["quartic"]["text"], "x^4 - 8x^3 - 8x - 8");
  EXPECT_EQ(r["invariants"]["e_q"], "-576");
  EXPECT_TRUE(r["invariants"]["minus_e_square"].get<bool>());
  const Result text = run({"divide", "--curve", "0,0,1", "--point", "2,3"});
  EXPECT_NE(text.out.find("x^4 - 8x^3 - 8x - 8"), std::string::npos);
}

TEST(Cli, ReconstructExamples) {
  const json nd = run_json({"reconstruct", "--field", "q", "--quartic", "-6,11,-6,0"});
  EXPECT_EQ(nd["outcome"], "NOT_A_DIVISION");
  EXPECT_EQ(nd["e"], "0");
  EXPECT_EQ(nd["a_q"], "-16");
  const json up = run_json({"reconstruct", "--quartic", "-8,0,-8,-8"});
  EXPECT_EQ(up["outcome"], "UNIQUE_PAIR");
  EXPECT_EQ(joined(up["curve"]), "0,0,1");
  const json fam = run_json({"reconstruct", "--quartic", "0,2,0,1"});
  EXPECT_EQ(fam["outcome"], "FAMILY");
  EXPECT_EQ(joined(fam["b_of_a"]), "-1,0");
  const json ext = run_json({"reconstruct", "--quartic", "0,0,1,0"});
  EXPECT_EQ(ext["outcome"], "NEEDS_EXTENSION");
  EXPECT_EQ(ext["extension"], "qext:q:-8");
}

TEST(Cli, PointAtInfinity) {
  const json d = run_json({"divide", "--curve", "0,-1,0", "--point", "inf"});
  EXPECT_EQ(d["outcome"], "POINT_AT_INFINITY");
  EXPECT_EQ(d["hquartic"]["text"], "(0:1:0:-1:0)");
  const json r = run_json({"reconstruct", "--homogeneous", "--quartic", "0,1,1,0,0"});
  EXPECT_EQ(r["outcome"], "POINT_AT_INFINITY");
  EXPECT_EQ(r["singularity"], "node");
  const json c = run_json({"classify", "--homogeneous", "--quartic", "0,1,0,0,0"});
  EXPECT_EQ(c["singularity"], "cusp");
  const json a = run_json({"reconstruct", "--homogeneous", "--quartic", "2,-16,0,-16,-16"});
  EXPECT_EQ(a["outcome"], "UNIQUE_PAIR");
}

TEST(Cli, OtherVerbs) {
  const json h = run_json({"halves", "--field", "fp:7", "--curve", "0,0,1", "--point", "0,1"});
  EXPECT_EQ(h["halves"].size(), 4u);
  const json s = run_json({"stats-check", "--field", "fp:7", "--curve", "0,0,1", "--point", "0,1"});
  EXPECT_EQ(s["corrected_y2"], "1");
  EXPECT_TRUE(s["corrected_holds"].get<bool>());
  const json i = run_json({"invariants", "--quartic", "-12,-12,0,0"});
  EXPECT_EQ(i["profile"], "2,1,1");
  const json rs = run_json({"rescale", "--quartic", "0,0,1,0"});
  EXPECT_EQ(rs["eps"], "8");
  EXPECT_EQ(rs["e_rescaled"], "4096");
  const json cl = run_json({"classify", "--curve", "0,0,1", "--point", "0,1"});
  EXPECT_EQ(cl["class"]["kind"], "smooth-generic");
  EXPECT_TRUE(cl["class"]["three_torsion"].get<bool>());
  EXPECT_TRUE(cl["agree"].get<bool>());
  const json g = run_json({"galois", "--type", "biquadratic", "--params", "2,3", "--element", "0,1,1,0"});
  EXPECT_EQ(g["minimal_polynomial"]["text"], "x^4 - 10x^2 + 1");
  const json cy = run_json({"galois", "--type", "cyclic", "--params", "2"});
  EXPECT_EQ(cy["field"], "qext:q:-1");
  EXPECT_EQ(cy["e_invariant"], "-192");
  EXPECT_EQ(cy["e_closed_form_printed"], "192");
}

TEST(Cli, OracleExitCodes) {
  const Result both = run({"oracle", "gate", "--prime", "7", "--sign-convention", "both"});
  EXPECT_EQ(both.code, kExitOk);
  EXPECT_NE(both.out.find("[minus-e]  PASS"), std::string::npos);
  EXPECT_NE(both.out.find("[plus-e]  FAIL"), std::string::npos);
  EXPECT_EQ(run({"oracle", "gate", "--prime", "7", "--sign-convention", "plus-e"}).code, kExitDiscrepancy);
  EXPECT_EQ(run({"oracle", "classify", "--prime", "5", "--serial"}).code, kExitOk);
  const json j = run_json({"oracle", "torsion", "--prime", "5", "--prime", "7"});
  EXPECT_EQ(j["reports"].size(), 2u);
}

TEST(Cli, ErrorCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"divide", "--field", "fp:9", "--curve", "0,0,1", "--point", "0,1"}).code, kExitUsage);
  EXPECT_EQ(run({"divide", "--curve", "0,0,1"}).code, kExitUsage);
  EXPECT_EQ(run({"divide", "--curve", "0,0,1", "--point", "1,1"}).code, kExitDomain);
  EXPECT_EQ(run({"halves", "--curve", "0,-1,0", "--point", "0,0"}).code, kExitDomain);
  EXPECT_EQ(run({"classify", "--quartic", "-6,11,-6,0"}).code, kExitDomain);
  EXPECT_EQ(run({"oracle", "gate", "--prime", "101"}).code, kExitDomain);
  EXPECT_EQ(run({"oracle", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  const Result off = run({"divide", "--curve", "0,0,1", "--point", "1,1"});
  EXPECT_NE(off.err.find("not on"), std::string::npos);
}

// Output parsed back through the input syntax reproduces the same values.
TEST(Cli, RoundTripRandomRequests) {
  std::mt19937_64 rng(1234);
  const std::vector<std::string> fields{"q", "fp:7", "fp:11", "fp:13", "qext:fp:7:3"};
  int done = 0;
  while (done < 100) {
    const std::string fd = fields[std::uniform_int_distribution<std::size_t>(0, fields.size() - 1)(rng)];
    const Field k = Field::parse(fd);
    auto pick = [&] { return k.kind() == Field::Kind::Rationals ? testing::random_rational(rng) : testing::random_element(k, rng); };
    const FieldValue a = pick(), b = pick(), x = pick(), y = pick();
    const FieldValue c = y * y - ((x + a) * x + b) * x;
    const WeierstrassCubic cv(a, b, c);
    const CubicPoint p2 = cv.point(x, y);
    if (cv.is_singular_point(p2)) continue;
    const std::string curve_text = join_values({a, b, c});
    const std::string point_text = join_values({x, y});

    const json d = run_json({"divide", "--field", fd, "--curve", curve_text, "--point", point_text});
    ASSERT_EQ(d["field"], fd);
    ASSERT_EQ(Field::parse(d["field"].get<std::string>()), k);
    EXPECT_EQ(parse_value_list(k, joined(d["curve"])), (std::vector<FieldValue>{a, b, c}));
    const MonicQuartic g = MonicQuartic::parse(k, joined(d["quartic"]["coefficients"]));
    EXPECT_EQ(g, forward_quartic(cv, p2));
    EXPECT_EQ(k.parse_value(d["invariants"]["e_q"].get<std::string>()), invariant_e(g));

    const json r = run_json({"reconstruct", "--field", fd, "--quartic", joined(d["quartic"]["coefficients"])});
    if (r["outcome"] == "UNIQUE_PAIR") {
      const auto coeffs = parse_value_list(k, joined(r["curve"]));
      EXPECT_EQ(WeierstrassCubic(coeffs[0], coeffs[1], coeffs[2]), cv);
      for (const auto& pt : r["points"]) {
        const auto xy = parse_value_list(k, joined(pt));
        EXPECT_TRUE(cv.contains(xy[0], xy[1]));
        EXPECT_EQ(xy[0], x);
      }
    } else {
      EXPECT_EQ(r["outcome"], "FAMILY");
      EXPECT_TRUE(y.is_zero());
    }

    if (k.is_finite() && !y.is_zero()) {
      const json h = run_json({"halves", "--field", fd, "--curve", curve_text, "--point", point_text});
      for (const auto& pt : h["halves"]) {
        const auto xy = parse_value_list(k, joined(pt));
        EXPECT_EQ(cv.double_point(cv.point(xy[0], xy[1])), p2);
      }
    }
    ++done;
  }
}

}  // namespace
}  // namespace halfpoint
