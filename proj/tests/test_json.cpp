#include <gtest/gtest.h>

#include "invharm/errors.hpp"
#include "invharm/frobenius.hpp"
#include "invharm/json_io.hpp"

using namespace invharm;
using json = nlohmann::ordered_json;

namespace {
Tableau tab(Tableau::Rows rows) { return Tableau(std::move(rows)); }
}  // namespace

TEST(Json, GoldenGrfrob) {
  EXPECT_EQ(to_json(grfrob_width(LocusSize(3, 1))).dump(),
            R"({"terms":[{"partition":[3],"coeffs":[1]},{"partition":[2,1],"coeffs":[0,1]}]})");
}

TEST(Json, Shapes) {
  const HorizontalStripe s(Partition{10, 9, 6, 4, 4, 3}, Partition{10, 6, 4, 4, 4, 2});
  EXPECT_EQ(to_json(s.outer()).dump(), "[10,9,6,4,4,3]");
  EXPECT_EQ(to_json(s).dump(), R"({"outer":[10,9,6,4,4,3],"inner":[10,6,4,4,4,2]})");
  EXPECT_EQ(to_json(path_of_stripe(s)).dump(), R"("SSNSNNNNNS")");
  EXPECT_EQ(to_json(MatchingMonomial({{3, 4}, {1, 2}})).dump(), "[[1,2],[3,4]]");
  EXPECT_EQ(to_json(tab({{1, 3}, {2}})).dump(), "[[1,3],[2]]");
  EXPECT_EQ(to_json(QPoly({1, 0, 2})).dump(), "[1,0,2]");
}

TEST(Json, BigCoefficientsBecomeStrings) {
  const mpz_class big("123456789012345678901234567890");
  EXPECT_EQ(to_json(big).dump(), R"("123456789012345678901234567890")");
  SchurPoly f;
  f.add_term(Partition{2}, QPoly({big, 1}));
  EXPECT_EQ(schur_from_json(to_json(f)), f);
}

TEST(Json, RoundTripsAndDeterminism) {
  for (const LocusSize& size : locus_sizes_up_to(8)) {
    const SchurPoly f = grfrob_width(size);
    const std::string once = to_json(f).dump();
    ASSERT_EQ(once, to_json(grfrob_signed(size)).dump());
    ASSERT_EQ(schur_from_json(json::parse(once)), f);
  }
  const HorizontalStripe s(Partition{4, 1}, Partition{2});
  EXPECT_EQ(stripe_from_json(to_json(s)), s);
  EXPECT_THROW(partition_from_json(json::parse("[1,2]")), InvalidArguments);
  EXPECT_THROW(partition_from_json(json::parse("{}")), InvalidArguments);
  EXPECT_THROW(stripe_from_json(json::parse(R"({"outer":[2,1,1],"inner":[2]})")), InvalidArguments);
}

TEST(Json, Verdict) {
  const json v = to_json(verify_monomial_basis(LocusSize(4, 0)));
  EXPECT_EQ(v.at("basis_check"), "PASS");
  EXPECT_EQ(v.at("hilbert").dump(), "[1,2]");
  EXPECT_EQ(v.at("profile").dump(), "[1,2]");
  EXPECT_EQ(v.at("frobenius").dump(),
            R"([{"partition":[4],"coeffs":[1]},{"partition":[2,2],"coeffs":[0,1]}])");
}
