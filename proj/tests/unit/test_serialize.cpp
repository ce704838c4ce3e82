#include <gtest/gtest.h>

#include "apolar/error.hpp"
#include "apolar/serialize.hpp"
#include "corpus.hpp"

namespace apolar {
namespace {

TEST(Serialize, BettiRoundTrip) {
  for (const auto& entry : testing::global_corpus()) {
    const BettiTable b = betti_table(entry.F);
    const Json j = betti_to_json(b, entry.F.socle_degree());
    int s = -1;
    EXPECT_EQ(betti_from_json(Json::parse(j.dump()), &s), b) << entry.name;
    EXPECT_EQ(s, entry.F.socle_degree());
  }
}

TEST(Serialize, BettiSchema) {
  BettiTable b(3);
  b.set(0, 0, 1);
  b.set(1, 2, 3);
  EXPECT_EQ(betti_to_json(b, 3).dump(), R"({"n":3,"s":3,"entries":[[0,0,1],[1,2,3]]})");
  EXPECT_THROW(betti_from_json(Json::parse(R"({"n":3,"entries":[[0,0]]})")), ParseError);
  EXPECT_THROW(betti_from_json(Json::parse(R"([1,2])")), ParseError);
  EXPECT_THROW(betti_from_json(Json::parse(R"({"n":3,"s":3,"entries":[[0,0,-1]]})")), ParseError);
}

TEST(Serialize, SequencesRoundTrip) {
  const HVector h{{1, 4, 7, 7, 4, 1}};
  EXPECT_EQ(to_json(h).dump(), "[1,4,7,7,4,1]");
  EXPECT_EQ(hvector_from_json(to_json(h)), h);
  const Partition p({6, 4, 4, 4, 2, 2, 2});
  EXPECT_EQ(partition_from_json(to_json(p)), p);
  EXPECT_THROW(partition_from_json(Json::parse("[2,0]")), ParseError);
  EXPECT_THROW(hvector_from_json(Json::parse(R"(["a"])")), ParseError);
}

TEST(Serialize, RationalsAndLinearForms) {
  EXPECT_EQ(to_json(Rational(-1, 2)).dump(), R"("-1/2")");
  EXPECT_EQ(rational_from_json(Json("6/4")), Rational(3, 2));
  EXPECT_THROW(rational_from_json(Json(3)), ParseError);
  const LinearForm l{{1, Rational(-2, 3), 0, 5}};
  EXPECT_EQ(linear_form_from_json(to_json(l)), l);
}

TEST(Serialize, ReportsAreDeterministic) {
  EXPECT_EQ(to_json(classify_k4(10)).dump(), to_json(classify_k4(10)).dump());
  const Json ci = to_json(classify_ci(4, 5));
  EXPECT_EQ(ci.dump(), to_json(classify_ci(4, 5)).dump());
  const Json tables = to_json(check_conjectured_tables(), conjectured_tables());
  EXPECT_EQ(tables.dump(), to_json(check_conjectured_tables(), conjectured_tables()).dump());
  const Json eq = to_json(classify_equigenerated());
  EXPECT_EQ(eq.dump(), to_json(classify_equigenerated()).dump());
}

}  // namespace
}  // namespace apolar
