#include <gtest/gtest.h>

#include "relint/errors.hpp"
#include "relint/generate.hpp"
#include "relint/json_io.hpp"
#include "relint/separation.hpp"
#include "test_helpers.hpp"

namespace relint {
namespace {

using namespace relint::testing;
namespace js = relint::json;

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(JsonIo, RationalsAreStrings) {
  EXPECT_EQ(js::encode(R("-3/6")), js::Json("-1/2"));
  EXPECT_EQ(js::decode_rat(js::Json("4/8"), "/x"), R("1/2"));
  EXPECT_EQ(js::encode(ExtendedRat::pos_inf()), js::Json("+inf"));
  EXPECT_NE(error_of([] { js::decode_rat(js::Json(0.5), "/x"); }).find("json /x"), std::string::npos);
  EXPECT_FALSE(error_of([] { js::decode_rat(js::Json("1/0"), "/x"); }).empty());
}

TEST(JsonIo, MalformedTextReportsByteOffset) {
  const std::string msg = error_of([] { js::parse("{\"dim\": 2,", "in.json"); });
  EXPECT_NE(msg.find("in.json: malformed JSON at byte"), std::string::npos) << msg;
}

TEST(JsonIo, ErrorsNameTheJsonPointer) {
  const auto doc = js::parse(R"({"dim": 2, "ineq": {"A": [["1", "0"], ["1"]], "b": ["1", "1"]}})", "t");
  const std::string msg = error_of([&] { js::decode_set(doc); });
  EXPECT_NE(msg.find("/ineq/A/1"), std::string::npos) << msg;
  const auto missing = js::parse(R"({"ineq": {"A": [], "b": []}})", "t");
  EXPECT_NE(error_of([&] { js::decode_set(missing); }).find("missing key \"dim\""), std::string::npos);
}

TEST(JsonIo, PointParsing) {
  EXPECT_EQ(js::parse_point("1/2, -3"), vec({"1/2", "-3"}));
  EXPECT_FALSE(error_of([] { js::parse_point("1/2,x"); }).empty());
}

TEST(JsonIo, SetRoundTripsAndVFormMatches) {
  InstanceRng rng(7);
  for (int i = 0; i < 20; ++i) {
    const HPolyhedron P = random_polyhedron(rng, 1 + i % 3);
    const HPolyhedron back = js::decode_set(js::parse(js::dump(js::encode(P)), "t"));
    EXPECT_EQ(back.A(), P.A());
    EXPECT_EQ(back.b(), P.b());
    EXPECT_EQ(back.E(), P.E());
    EXPECT_EQ(back.d(), P.d());
    const HPolyhedron from_v = js::decode_set(js::encode(P.vrep()));
    EXPECT_TRUE(set_equal(from_v, P));
  }
}

TEST(JsonIo, FunctionPairAndSequenceRoundTrip) {
  InstanceRng rng(11);
  for (int i = 0; i < 10; ++i) {
    const PLPair pair = random_pl_pair(rng, 1 + i % 2, OverlapMode::Any);
    const PLPair back = js::decode_pair(js::parse(js::dump(js::encode(pair)), "t"));
    EXPECT_EQ(back.f.pieces, pair.f.pieces);
    EXPECT_EQ(back.g.pieces, pair.g.pieces);
    EXPECT_TRUE(set_equal(back.f.domain, pair.f.domain));
    EXPECT_EQ(js::encode(back), js::encode(pair));
  }
  const TailSequence x{{R("1/3")}, TailSequence::Tail{R("1/4"), R("1/2")}};
  const TailSequence y = js::decode_sequence(js::encode(x));
  EXPECT_EQ(y.prefix, x.prefix);
  ASSERT_TRUE(y.tail.has_value());
  EXPECT_EQ(y.tail->rho, x.tail->rho);
  EXPECT_FALSE(error_of([] { js::decode_sequence(js::parse(R"({"prefix": [], "tail": {"c": "1", "rho": "1"}})", "t")); })
                   .empty());
}

TEST(JsonIo, MissingDomainMeansWholeSpace) {
  const auto f = js::decode_function(js::parse(R"({"kind": "convex", "dim": 1, "pieces": [{"a": ["1"], "b": "0"}]})", "t"));
  ASSERT_TRUE(std::holds_alternative<PLConvexFunction>(f));
  EXPECT_TRUE(set_equal(std::get<PLConvexFunction>(f).domain, HPolyhedron::whole_space(1)));
  EXPECT_FALSE(error_of([] {
                 js::decode_pair(js::parse(R"({"f": {"kind": "concave", "dim": 1, "pieces": [{"a": ["1"], "b": "0"}]},
                                              "g": {"kind": "concave", "dim": 1, "pieces": [{"a": ["1"], "b": "0"}]}})",
                                           "t"));
               }).empty());
}

TEST(JsonIo, CertificateRoundTripStillReplays) {
  const HPolyhedron P = unit_square();
  const HPolyhedron Q = HPolyhedron::box(ivec({1, 0}), ivec({2, 1}));
  const auto sep = properly_separate_sets(P, Q);
  ASSERT_TRUE(sep.certificate.has_value());
  const auto back = js::decode_certificate(js::parse(js::dump(js::encode(*sep.certificate)), "t"));
  EXPECT_TRUE(verify_certificate(back, P, Q).ok);
  auto tampered = js::encode(*sep.certificate);
  tampered["threshold"] = "-1";
  EXPECT_FALSE(verify_certificate(js::decode_certificate(tampered), P, Q).ok);
}

TEST(JsonIo, MapAndOrderingCone) {
  InstanceRng rng(3);
  const PolySetValuedMap F = random_set_valued_map(rng, 1, 1);
  EXPECT_EQ(js::encode(js::decode_map(js::encode(F))), js::encode(F));
  const auto lex = js::decode_ordering_cone(js::parse(R"({"kind": "lex2d"})", "t"));
  EXPECT_EQ(lex.kind(), OrderingCone::Kind::Lexicographic2D);
  const auto quad = js::decode_ordering_cone(js::parse(R"({"kind": "polyhedral", "generators": [["1","0"],["0","1"]]})", "t"));
  EXPECT_EQ(quad.dim(), 2u);
}

TEST(JsonIo, DumpIsStable) {
  const HPolyhedron P = unit_square();
  EXPECT_EQ(js::dump(js::encode(P)), js::dump(js::encode(P)));
  EXPECT_EQ(js::dump(js::Json{{"b", 1}, {"a", 2}}), "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
}

}  // namespace
}  // namespace relint
