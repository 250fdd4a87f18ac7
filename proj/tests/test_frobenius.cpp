#include <gtest/gtest.h>

#include <algorithm>

#include "invharm/errors.hpp"
#include "invharm/frobenius.hpp"
#include "invharm/involution.hpp"
#include "invharm/sweeps.hpp"

using namespace invharm;

namespace {

SchurPoly s(std::initializer_list<int> parts, std::size_t q_power = 0) {
  return SchurPoly::schur(Partition(parts)).times_q_power(q_power);
}

}  // namespace

TEST(Frobenius, SignedExamples) {
  EXPECT_EQ(grfrob_signed(LocusSize(2, 0)), s({2}));
  EXPECT_EQ(grfrob_signed(LocusSize(3, 1)), s({3}) + s({2, 1}, 1));
  EXPECT_EQ(grfrob_signed(LocusSize(4, 2)), s({4}) + s({3, 1}, 1) + s({2, 2}, 1));
}

TEST(Frobenius, SignedPieceExposesCancellation) {
  const SignedDegreePiece piece = signed_degree_piece(LocusSize(3, 1), 1);
  EXPECT_EQ(piece.difference, s({2, 1}));
  EXPECT_EQ(piece.truncated, s({2, 1}));
  bool saw_negative = false;
  for (const LocusSize& size : locus_sizes_up_to(8)) {
    for (int d = 0; d <= size.pairs(); ++d) {
      const SignedDegreePiece p = signed_degree_piece(size, d);
      saw_negative = saw_negative || !p.difference.nonnegative();
      ASSERT_TRUE(p.truncated.nonnegative());
    }
  }
  EXPECT_TRUE(saw_negative);
}

TEST(Frobenius, PositiveExamples) {
  EXPECT_EQ(grfrob_positive(LocusSize(4, 0)), s({4}) + s({2, 2}, 1));
  EXPECT_EQ(grfrob_positive(LocusSize(3, 1)), s({3}) + s({2, 1}, 1));
  EXPECT_EQ(grfrob_positive(LocusSize(2, 2)), s({2}));
}

TEST(Frobenius, WidthExamples) {
  EXPECT_EQ(grfrob_width(LocusSize(4, 2)), s({4}) + s({3, 1}, 1) + s({2, 2}, 1));
  EXPECT_EQ(grfrob_width(LocusSize(4, 0)), s({4}) + s({2, 2}, 1));
  EXPECT_EQ(grfrob_width(LocusSize(2, 2)), s({2}));
}

TEST(Frobenius, TotalExamples) {
  EXPECT_EQ(frob_total(LocusSize(4, 2)), s({4}) + s({3, 1}) + s({2, 2}));
  EXPECT_EQ(frob_total(LocusSize(2, 0)), s({2}));
  EXPECT_EQ(frob_total(LocusSize(3, 1)), s({3}) + s({2, 1}));
}

TEST(Frobenius, HilbertExamples) {
  EXPECT_EQ(hilbert_series(grfrob_width(LocusSize(3, 1))), QPoly({1, 2}));
  EXPECT_EQ(hilbert_series(grfrob_width(LocusSize(4, 0))), QPoly({1, 2}));
  EXPECT_EQ(hilbert_series(s({})), QPoly({1}));
  SchurPoly negative;
  negative.add_term(Partition{1}, QPoly({-1}));
  EXPECT_THROW(hilbert_series(negative), DomainViolation);
}

TEST(Frobenius, LocusSizeMatchesEnumeration) {
  for (const LocusSize& size : locus_sizes_up_to(9)) {
    ASSERT_EQ(locus_size(size), mpz_class(static_cast<unsigned long>(enumerate_locus(size).size())));
  }
  EXPECT_EQ(locus_size(LocusSize(6, 0)), 15);
}

TEST(Frobenius, TopDegreeAttainedAndBounded) {
  for (const LocusSize& size : locus_sizes_up_to(8)) {
    int top = -1;
    const SchurPoly f = grfrob_width(size);
    for (const auto& [lambda, c] : f.terms()) top = std::max(top, c.degree());
    // with a = 0 the stripe is empty and wid = lambda_1 >= 2, capping the exponent at k - 1
    const int expected = size.a() > 0 ? size.pairs() : size.pairs() - 1;
    ASSERT_EQ(top, expected) << size.n() << "," << size.a();
  }
}

TEST(Frobenius, WidthIndexExponents) {
  for (const LocusSize& size : locus_sizes_up_to(8)) {
    for (const IndexedStripe& e : width_index_stripes(size)) {
      ASSERT_EQ(2 * e.degree, size.n() + size.a() - e.width);
      ASSERT_GE(e.degree, 0);
      ASSERT_LE(e.degree, size.pairs());
    }
  }
}

TEST(Sweeps, FormulasUpToEight) {
  const SweepReport report = check_formulas(8);
  EXPECT_EQ(report.checks, 24 * 5);
  for (const auto& f : report.failures) ADD_FAILURE() << f;
}

TEST(Sweeps, WidthUpToTwelve) {
  const SweepReport report = check_width(12);
  EXPECT_GT(report.checks, 0);
  for (const auto& f : report.failures) ADD_FAILURE() << f;
}
