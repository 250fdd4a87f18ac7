#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "invharm/errors.hpp"
#include "invharm/lattice_path.hpp"

using namespace invharm;

namespace {

const HorizontalStripe kExample(Partition{10, 9, 6, 4, 4, 3}, Partition{10, 6, 4, 4, 4, 2});

template <typename Visit>
void for_each_stripe(int max_size, Visit visit) {
  for (int total = 0; total <= max_size; ++total) {
    for (const Partition& outer : partitions_of(total)) {
      for (int k = 0; k <= total; ++k) {
        for (const Partition& inner : partitions_of(total - k)) {
          if (is_horizontal_stripe(outer, inner)) visit(HorizontalStripe(outer, inner));
        }
      }
    }
  }
}

// pair each up step i with the first later j where the path comes back down
// to the height it had before step i
std::vector<ReflectionPair> pairs_by_ray(const LatticePath& path) {
  std::vector<ReflectionPair> out;
  for (std::size_t i = 1; i <= path.prefix_length(); ++i) {
    if (path.step(i) != Step::NE) continue;
    const int base = path.height(i - 1);
    std::size_t j = i + 1;
    while (path.height(j) != base) ++j;
    out.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  return out;
}

}  // namespace

TEST(LatticePath, ExamplePath) {
  EXPECT_EQ(path_of_stripe(kExample).to_string(), "SSNSNNNNNS");
  const HorizontalStripe empty(Partition{3, 1}, Partition{3, 1});
  EXPECT_EQ(path_of_stripe(empty).to_string(), "SSS");
  EXPECT_EQ(path_of_stripe(HorizontalStripe(Partition{4}, Partition{})).to_string(), "NNNN");
}

TEST(LatticePath, StepsAndHeights) {
  const LatticePath p = LatticePath::from_string("NSN");
  EXPECT_EQ(p.step(1), Step::NE);
  EXPECT_EQ(p.step(2), Step::SE);
  EXPECT_EQ(p.step(4), Step::SE);
  EXPECT_EQ(p.height(3), 1);
  EXPECT_EQ(p.height(5), -1);
  EXPECT_EQ(p.up_steps(), 2);
  EXPECT_THROW(p.step(0), InvalidArguments);
  EXPECT_THROW(LatticePath::from_string("NX"), InvalidArguments);
}

TEST(LatticePath, ReflectionPairExamples) {
  const std::vector<ReflectionPair> expected{{3, 4}, {5, 14}, {6, 13}, {7, 12}, {8, 11}, {9, 10}};
  EXPECT_EQ(reflection_pairs(path_of_stripe(kExample)), expected);
  EXPECT_TRUE(reflection_pairs(LatticePath::from_string("SSS")).empty());
  EXPECT_EQ(reflection_pairs(LatticePath::from_string("NS")), (std::vector<ReflectionPair>{{1, 2}}));
}

TEST(LatticePath, WidthExamples) {
  EXPECT_EQ(width(kExample), 14);
  EXPECT_EQ(width_by_pairs(kExample), 14);
  EXPECT_EQ(width_by_reversed_prefix(kExample), 14);
  EXPECT_EQ(width(HorizontalStripe(Partition{5, 2}, Partition{5, 2})), 5);
  EXPECT_EQ(width(HorizontalStripe(Partition{4}, Partition{2})), 6);
}

TEST(LatticePath, PairsMatchRayDescription) {
  for_each_stripe(12, [](const HorizontalStripe& s) {
    const LatticePath p = path_of_stripe(s);
    auto got = reflection_pairs(p);
    ASSERT_EQ(got, pairs_by_ray(p)) << s.to_string();
    ASSERT_EQ(static_cast<int>(got.size()), s.size()) << s.to_string();
    for (const ReflectionPair& r : got) {
      ASSERT_LT(r.up_index, r.down_index);
      ASSERT_EQ(p.step(static_cast<std::size_t>(r.down_index)), Step::SE);
    }
  });
}

TEST(LatticePath, ReconstructionRoundTrip) {
  for_each_stripe(12, [](const HorizontalStripe& s) {
    const LatticePath p = path_of_stripe(s);
    ASSERT_EQ(p.prefix_length(), static_cast<std::size_t>(s.outer().first()));
    ASSERT_EQ(p.up_steps(), s.size());
    ASSERT_EQ(stripe_from_path(s.outer(), p), s);
  });
}

TEST(LatticePath, WidthRoutesAgreeAndStayInRange) {
  for_each_stripe(12, [](const HorizontalStripe& s) {
    const int w = width_by_pairs(s);
    ASSERT_EQ(width(s), w) << s.to_string();
    ASSERT_EQ(width_by_reversed_prefix(s), w) << s.to_string();
    ASSERT_GE(w, s.outer().first());
    ASSERT_LE(w, s.outer().first() + 2 * s.size());
  });
}

TEST(LatticePath, StripeFromColumnsRejectsBadSets) {
  const int cols[] = {1};
  EXPECT_THROW(stripe_from_columns(Partition{2, 2}, cols), InvariantViolation);
  const int outside[] = {3};
  EXPECT_THROW(stripe_from_columns(Partition{2}, outside), InvariantViolation);
}

TEST(LocusSize, Validation) {
  EXPECT_NO_THROW(LocusSize(4, 2));
  EXPECT_THROW(LocusSize(3, 0), InvalidArguments);
  EXPECT_THROW(LocusSize(0, 0), InvalidArguments);
  EXPECT_THROW(LocusSize(2, 4), InvalidArguments);
  EXPECT_THROW(LocusSize(4, -2), InvalidArguments);
  EXPECT_EQ(LocusSize(6, 2).pairs(), 2);
  EXPECT_EQ(LocusSize(6, 2).bound(1), 6);
  EXPECT_THROW(LocusSize(6, 2).bound(3), InvalidArguments);
  EXPECT_EQ(locus_sizes_up_to(8).size(), 24u);
}

TEST(Membership, HPlus) {
  EXPECT_FALSE(in_h_plus(kExample, 15));
  EXPECT_TRUE(in_h(kExample, 15));
  EXPECT_TRUE(in_h_plus(HorizontalStripe(Partition{2, 1}, Partition{2}), 1));
  EXPECT_TRUE(in_h_plus(HorizontalStripe(Partition{4}, Partition{}), 0));
  EXPECT_FALSE(in_h_plus(HorizontalStripe(Partition{4}, Partition{4}), 0));
  EXPECT_FALSE(in_h_plus(HorizontalStripe(Partition{3, 1}, Partition{3}), 1));
}

TEST(Membership, HWid) {
  const HorizontalStripe four_two(Partition{4}, Partition{2});
  EXPECT_TRUE(in_h_wid(four_two, 4, 2, 0));
  EXPECT_TRUE(in_h_wid(HorizontalStripe(Partition{2, 1}, Partition{2}), 3, 1, 1));
  EXPECT_FALSE(in_h_wid(four_two, 4, 2, 1));
  EXPECT_THROW(in_h_wid(four_two, 4, 1, 0), InvalidArguments);
  EXPECT_THROW(in_h_wid(four_two, 4, 2, 2), InvalidArguments);
}
