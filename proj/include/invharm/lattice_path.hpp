#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invharm/partition.hpp"

namespace invharm {

enum class Step : signed char { NE = 1, SE = -1 };

// A finite prefix of NE/SE steps followed by an implicit infinite run of SE
// steps. Steps are indexed from 1; heights from 0 with height(0) = 0.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> prefix);

  // Parses the "N"/"S" alphabet used by the JSON interface.
  static LatticePath from_string(std::string_view text);

  std::size_t prefix_length() const { return prefix_.size(); }
  std::span<const Step> prefix() const { return prefix_; }

  // Any j >= 1; positions past the prefix are SE.
  Step step(std::size_t j) const;
  // Any x >= 0; the tail keeps descending.
  int height(std::size_t x) const;
  // height(0), ..., height(prefix_length()).
  std::span<const int> heights() const { return heights_; }

  int up_steps() const;
  std::string to_string() const;

  bool operator==(const LatticePath& other) const { return prefix_ == other.prefix_; }

 private:
  std::vector<Step> prefix_;
  std::vector<int> heights_{0};
};

struct ReflectionPair {
  int up_index = 0;
  int down_index = 0;
  auto operator<=>(const ReflectionPair&) const = default;
};

// Step j is NE iff column j of the outer shape meets the stripe.
LatticePath path_of_stripe(const HorizontalStripe& stripe);

// Inverse of path_of_stripe given the outer shape. Throws InvariantViolation
// if the path does not describe a stripe of `outer`.
HorizontalStripe stripe_from_path(const Partition& outer, const LatticePath& path);

// The stripe outer/nu whose meeting columns are exactly `columns` (1-based),
// i.e. nu'[j] = outer'[j] - [j in columns]. Throws InvariantViolation when the
// result is not a partition or a column index exceeds outer_1.
HorizontalStripe stripe_from_columns(const Partition& outer, std::span<const int> columns);

// Up/down parenthesis matching; unmatched NE steps of the prefix pair with the
// tail positions L+1, L+2, ... innermost first. Sorted by up_index.
std::vector<ReflectionPair> reflection_pairs(const LatticePath& path);

// Width in closed form: outer_1 + (y(outer_1) - min y) for nonempty stripes.
int width(const HorizontalStripe& stripe);
// max(outer_1, largest down index of a reflection pair).
int width_by_pairs(const HorizontalStripe& stripe);
// outer_1 + max(0, M), M the maximum prefix sum of the reversed column
// sequence with +1 for columns meeting the stripe.
int width_by_reversed_prefix(const HorizontalStripe& stripe);

// Validated (n, a): n > 0, 0 <= a <= n, a = n mod 2.
class LocusSize {
 public:
  LocusSize(int n, int a);
  int n() const { return n_; }
  int a() const { return a_; }
  // (n - a) / 2, the number of matched pairs and the top degree.
  int pairs() const { return (n_ - a_) / 2; }
  // n - 2d + a, the first-part bound of degree d. Requires 0 <= d <= pairs().
  int bound(int d) const;
  void require_degree(int d) const;

  bool operator==(const LocusSize&) const = default;

 private:
  int n_;
  int a_;
};

// All (n, a) with 1 <= n <= max_n, in increasing n then a.
std::vector<LocusSize> locus_sizes_up_to(int max_n);

bool in_h(const HorizontalStripe& stripe, int d);
bool in_h_plus(const HorizontalStripe& stripe, int d);
bool in_h_wid(const HorizontalStripe& stripe, int n, int a, int d);

}  // namespace invharm
