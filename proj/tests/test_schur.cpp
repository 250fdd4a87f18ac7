#include <gtest/gtest.h>

#include "invharm/errors.hpp"
#include "invharm/schur.hpp"

using namespace invharm;

namespace {

SchurPoly s(std::initializer_list<int> parts) { return SchurPoly::schur(Partition(parts)); }

SchurPoly sum(std::initializer_list<SchurPoly> fs) {
  SchurPoly out;
  for (const auto& f : fs) out += f;
  return out;
}

}  // namespace

TEST(QPoly, Basics) {
  QPoly p({1, 0, 2, 0, 0});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coeff(2), 2);
  EXPECT_EQ(p.coeff(7), 0);
  EXPECT_EQ(p.at_one(), 3);
  EXPECT_EQ(p.to_string(), "1 + 2q^2");
  EXPECT_TRUE(QPoly({0, 0}).is_zero());
  EXPECT_EQ(p - p, QPoly());
  EXPECT_EQ(QPoly::monomial(1, 3).shifted(2), QPoly({0, 0, 0, 3}));
  EXPECT_FALSE(QPoly({1, -1}).nonnegative());
}

TEST(SchurPoly, AddSubtract) {
  const SchurPoly f = s({3}) + s({2, 1});
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(subtract(f, s({3})), s({2, 1}));
  EXPECT_EQ(add(s({3}), s({2, 1})), f);
  EXPECT_EQ(subtract(pieri_mult(s({2}), 1), h_complete(3)), s({2, 1}));
}

TEST(SchurPoly, PieriExamples) {
  EXPECT_EQ(pieri_mult(s({}), 3), s({3}));
  EXPECT_EQ(pieri_mult(s({2, 1}), 2), sum({s({4, 1}), s({3, 2}), s({3, 1, 1}), s({2, 2, 1})}));
  EXPECT_EQ(pieri_mult(s({2}), 2), sum({s({4}), s({3, 1}), s({2, 2})}));
  EXPECT_EQ(pieri_mult(s({2}).times_q_power(1), 0), s({2}).times_q_power(1));
}

TEST(SchurPoly, CompleteHomogeneous) {
  EXPECT_EQ(h_complete(0), s({}));
  EXPECT_EQ(h_complete(1), s({1}));
  EXPECT_EQ(h_complete(5), s({5}));
}

TEST(SchurPoly, EvenPlethysm) {
  EXPECT_EQ(plethysm_h_h2(2), s({4}) + s({2, 2}));
  EXPECT_EQ(plethysm_h_h2(0), s({}));
  EXPECT_TRUE(plethysm_h_h2(-1).is_zero());
  EXPECT_THROW(plethysm_h_h2(-2), InvalidArguments);
  for (int d = 0; d <= 8; ++d) {
    const SchurPoly f = plethysm_h_h2(d);
    ASSERT_EQ(f.support_size(), partitions_of(d).size());
    for (const auto& [lambda, c] : f.terms()) {
      ASSERT_TRUE(is_even(lambda));
      ASSERT_EQ(c, QPoly({1}));
    }
  }
}

TEST(SchurPoly, Truncation) {
  const SchurPoly f = s({3}) + s({2, 1});
  EXPECT_EQ(truncate_first_part(f, 2), s({2, 1}));
  EXPECT_TRUE(truncate_first_part(f, 0).is_zero());
  EXPECT_EQ(truncate_first_part(f + s({}), 0), s({}));
  EXPECT_EQ(truncate_first_part(f, 100), f);
}

TEST(SchurPoly, PieriCommutes) {
  for (int n = 0; n <= 4; ++n) {
    SchurPoly f;
    int k = 0;
    for (const Partition& p : partitions_of(n)) {
      if (++k > 10) break;
      f.add_term(p, QPoly({k, 0, 1}));
    }
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; b <= 4; ++b) {
        ASSERT_EQ(pieri_mult(pieri_mult(f, a), b), pieri_mult(pieri_mult(f, b), a));
      }
    }
  }
}

TEST(SchurPoly, IteratedHOneGivesRegularRepresentation) {
  SchurPoly f = s({});
  for (int n = 1; n <= 8; ++n) {
    f = pieri_mult(f, 1);
    ASSERT_EQ(f.homogeneous_degree(), n);
    ASSERT_EQ(f.support_size(), partitions_of(n).size());
    for (const auto& [lambda, c] : f.terms()) ASSERT_EQ(c, QPoly({syt_count(lambda)}));
  }
}

TEST(SchurPoly, QSpecialization) {
  SchurPoly f;
  f.add_term(Partition{2}, QPoly({1, 2}));
  f.add_term(Partition{1, 1}, QPoly({0, 0, 4}));
  SchurPoly expected;
  expected.add_term(Partition{2}, QPoly({3}));
  expected.add_term(Partition{1, 1}, QPoly({4}));
  EXPECT_EQ(f.at_q_one(), expected);
  EXPECT_EQ(f.coeff(Partition{3}), QPoly());
  EXPECT_EQ(f.terms().begin()->first, Partition{2});
}
