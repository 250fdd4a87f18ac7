#include <gtest/gtest.h>

#include <cstdlib>

#include "invharm/errors.hpp"
#include "invharm/frobenius.hpp"
#include "invharm/oracle.hpp"
#include "invharm/rational_basis.hpp"

using namespace invharm;

namespace {

CharacterVector character(int n, std::vector<mpq_class> values) {
  return {partitions_of(n), std::move(values)};
}

}  // namespace

TEST(RationalBasis, RankAndSpan) {
  RationalBasis b(3);
  EXPECT_TRUE(b.insert({1, 1, 0}));
  EXPECT_TRUE(b.insert({0, 1, 1}));
  EXPECT_FALSE(b.insert({1, 2, 1}));
  EXPECT_TRUE(b.in_span({2, 0, -2}));
  EXPECT_FALSE(b.in_span({0, 0, 1}));
  EXPECT_EQ(b.rank(), 2u);
  EXPECT_TRUE(b.insert({0, 0, 1}));
  EXPECT_TRUE(b.full());
}

TEST(MurnaghanNakayama, Examples) {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& rho : partitions_of(n)) {
      ASSERT_EQ(murnaghan_nakayama(Partition{n}, rho), 1);
    }
  }
  EXPECT_EQ(murnaghan_nakayama(Partition{2, 1}, Partition{3}), -1);
  EXPECT_EQ(murnaghan_nakayama(Partition{2, 1}, Partition{2, 1}), 0);
  EXPECT_THROW(murnaghan_nakayama(Partition{2, 1}, Partition{2}), SizeMismatch);
  EXPECT_EQ(centralizer_order(Partition{2, 2, 1}), 8);
}

TEST(MurnaghanNakayama, IdentityGivesDimension) {
  for (int n = 1; n <= 8; ++n) {
    const Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const Partition& lambda : partitions_of(n)) {
      ASSERT_EQ(murnaghan_nakayama(lambda, identity), syt_count(lambda));
    }
  }
}

TEST(MurnaghanNakayama, Orthogonality) {
  for (int n = 1; n <= 8; ++n) {
    const auto shapes = partitions_of(n);
    for (const Partition& a : shapes) {
      for (const Partition& b : shapes) {
        mpq_class rows = 0;
        mpz_class cols = 0;
        for (const Partition& rho : shapes) {
          rows += mpq_class(murnaghan_nakayama(a, rho) * murnaghan_nakayama(b, rho),
                            centralizer_order(rho));
          cols += murnaghan_nakayama(rho, a) * murnaghan_nakayama(rho, b);
        }
        rows.canonicalize();
        ASSERT_EQ(rows, a == b ? 1 : 0);
        ASSERT_EQ(cols, a == b ? centralizer_order(a) : mpz_class(0));
      }
    }
  }
}

TEST(Oracle, HilbertExamples) {
  EXPECT_EQ(graded_hilbert(LocusSize(3, 1)), QPoly({1, 2}));
  EXPECT_EQ(graded_hilbert(LocusSize(4, 0)), QPoly({1, 2}));
  EXPECT_EQ(graded_hilbert(LocusSize(2, 0)), QPoly({1}));
  EXPECT_EQ(graded_hilbert(LocusSize(6, 2)), QPoly({1, 14, 30}));
}

TEST(Oracle, CharacterExamples) {
  const auto chars = graded_character(LocusSize(3, 1));
  ASSERT_EQ(chars.size(), 2u);
  // classes run (3), (2,1), (1,1,1)
  EXPECT_EQ(chars[0], character(3, {1, 1, 1}));
  EXPECT_EQ(chars[1], character(3, {-1, 0, 2}));
  SchurPoly expected = SchurPoly::schur(Partition{3});
  expected += SchurPoly::schur(Partition{2, 1}).times_q_power(1);
  EXPECT_EQ(frobenius_of_character(chars), expected);
}

TEST(Oracle, FrobeniusRejectsNonModules) {
  EXPECT_THROW(frobenius_of_character({character(2, {0, 1})}), InvariantViolation);
  EXPECT_THROW(frobenius_of_character({character(2, {-2, 0})}), InvariantViolation);
}

TEST(Oracle, AgreesWithFormulasUpToSix) {
  for (const LocusSize& size : locus_sizes_up_to(6)) {
    const SchurPoly formula = grfrob_width(size);
    const auto chars = graded_character(size);
    ASSERT_EQ(graded_hilbert(size), hilbert_series(formula));
    ASSERT_EQ(graded_hilbert(size).at_one(), locus_size(size));
    const SchurPoly oracle = frobenius_of_character(chars);
    ASSERT_EQ(oracle, formula) << size.n() << "," << size.a();
    ASSERT_EQ(oracle.coeff(Partition{size.n()}).coeff(0), 1);
    ASSERT_EQ(oracle.at_q_one(), frob_total(size));

    CharacterVector total{partitions_of(size.n()),
                          std::vector<mpq_class>(partitions_of(size.n()).size(), 0)};
    for (const CharacterVector& c : chars) {
      for (std::size_t k = 0; k < c.values.size(); ++k) total.values[k] += c.values[k];
    }
    ASSERT_EQ(total, conjugation_permutation_character(size));
  }
}

TEST(Oracle, SizeCap) {
  EXPECT_THROW(graded_hilbert(LocusSize(7, 1)), ResourceLimit);
  EXPECT_THROW(graded_character(LocusSize(8, 0)), ResourceLimit);
  EXPECT_THROW(verify_monomial_basis(LocusSize(8, 0)), ResourceLimit);
  OracleConfig small;
  small.max_n = 3;
  EXPECT_THROW(graded_hilbert(LocusSize(4, 0), small), ResourceLimit);

  ::setenv(OracleConfig::kEnvOverride, "8", 1);
  EXPECT_EQ(OracleConfig::from_environment().max_n, 8);
  ::setenv(OracleConfig::kEnvOverride, "junk", 1);
  EXPECT_EQ(OracleConfig::from_environment().max_n, OracleConfig::kDefaultMaxN);
  ::unsetenv(OracleConfig::kEnvOverride);
  EXPECT_EQ(OracleConfig::from_environment().max_n, OracleConfig::kDefaultMaxN);
}

TEST(Oracle, BasisVerdicts) {
  const BasisVerdict four = verify_monomial_basis(LocusSize(4, 0));
  EXPECT_TRUE(four.pass) << four.reason;
  EXPECT_EQ(four.profile, (std::vector<int>{1, 2}));
  const BasisVerdict two = verify_monomial_basis(LocusSize(2, 0));
  EXPECT_TRUE(two.pass) << two.reason;
  EXPECT_EQ(two.profile, std::vector<int>{1});
  const BasisVerdict six = verify_monomial_basis(LocusSize(6, 0));
  EXPECT_TRUE(six.pass) << six.reason;
  int total = 0;
  for (int c : six.profile) total += c;
  EXPECT_EQ(total, 15);
  for (const LocusSize& size : locus_sizes_up_to(5)) {
    const BasisVerdict v = verify_monomial_basis(size);
    EXPECT_TRUE(v.pass) << size.n() << "," << size.a() << ": " << v.reason;
    EXPECT_EQ(v.hilbert, hilbert_series(grfrob_width(size)));
  }
}
