#include "invharm/lattice_path.hpp"

#include <algorithm>

#include "invharm/errors.hpp"

namespace invharm {

LatticePath::LatticePath(std::vector<Step> prefix) : prefix_(std::move(prefix)) {
  heights_.reserve(prefix_.size() + 1);
  for (Step s : prefix_) heights_.push_back(heights_.back() + static_cast<int>(s));
}

LatticePath LatticePath::from_string(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'N') {
      steps.push_back(Step::NE);
    } else if (c == 'S') {
      steps.push_back(Step::SE);
    } else {
      throw InvalidArguments(std::string("lattice path: unexpected character '") + c + "'");
    }
  }
  return LatticePath(std::move(steps));
}

Step LatticePath::step(std::size_t j) const {
  if (j == 0) throw InvalidArguments("lattice path steps are indexed from 1");
  return j <= prefix_.size() ? prefix_[j - 1] : Step::SE;
}

int LatticePath::height(std::size_t x) const {
  if (x < heights_.size()) return heights_[x];
  return heights_.back() - static_cast<int>(x - prefix_.size());
}

int LatticePath::up_steps() const {
  return static_cast<int>(std::count(prefix_.begin(), prefix_.end(), Step::NE));
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(prefix_.size());
  for (Step s : prefix_) out.push_back(s == Step::NE ? 'N' : 'S');
  return out;
}

LatticePath path_of_stripe(const HorizontalStripe& stripe) {
  const Partition outer_cols = conjugate(stripe.outer());
  const Partition inner_cols = conjugate(stripe.inner());
  std::vector<Step> steps(outer_cols.length());
  for (std::size_t j = 0; j < steps.size(); ++j) {
    steps[j] = outer_cols[j] > inner_cols[j] ? Step::NE : Step::SE;
  }
  return LatticePath(std::move(steps));
}

HorizontalStripe stripe_from_columns(const Partition& outer, std::span<const int> columns) {
  const Partition outer_cols = conjugate(outer);
  std::vector<int> inner_cols(outer_cols.vec());
  for (int j : columns) {
    if (j < 1 || j > outer.first()) {
      throw InvariantViolation("column index " + std::to_string(j) + " outside " +
                               outer.to_string());
    }
    --inner_cols[static_cast<std::size_t>(j - 1)];
  }
  for (std::size_t j = 0; j + 1 < inner_cols.size(); ++j) {
    if (inner_cols[j] < inner_cols[j + 1] || inner_cols[j + 1] < 0) {
      throw InvariantViolation("column set does not carve a partition out of " +
                               outer.to_string());
    }
  }
  if (!inner_cols.empty() && inner_cols.front() < 0) {
    throw InvariantViolation("column set does not carve a partition out of " + outer.to_string());
  }
  return HorizontalStripe(outer, conjugate(Partition(std::move(inner_cols))));
}

HorizontalStripe stripe_from_path(const Partition& outer, const LatticePath& path) {
  if (path.prefix_length() != static_cast<std::size_t>(outer.first())) {
    throw InvariantViolation("path length " + std::to_string(path.prefix_length()) +
                             " does not match " + outer.to_string());
  }
  std::vector<int> columns;
  for (std::size_t j = 1; j <= path.prefix_length(); ++j) {
    if (path.step(j) == Step::NE) columns.push_back(static_cast<int>(j));
  }
  return stripe_from_columns(outer, columns);
}

std::vector<ReflectionPair> reflection_pairs(const LatticePath& path) {
  std::vector<ReflectionPair> pairs;
  std::vector<int> open;
  const int length = static_cast<int>(path.prefix_length());
  for (int j = 1; j <= length; ++j) {
    if (path.step(static_cast<std::size_t>(j)) == Step::NE) {
      open.push_back(j);
    } else if (!open.empty()) {
      pairs.push_back({open.back(), j});
      open.pop_back();
    }
  }
  for (int j = length + 1; !open.empty(); ++j) {
    pairs.push_back({open.back(), j});
    open.pop_back();
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

int width(const HorizontalStripe& stripe) {
  const int first = stripe.outer().first();
  if (stripe.size() == 0) return first;
  const LatticePath path = path_of_stripe(stripe);
  const auto h = path.heights();
  const int lowest = *std::min_element(h.begin(), h.end());
  return first + (h.back() - lowest);
}

int width_by_pairs(const HorizontalStripe& stripe) {
  int last = 0;
  for (const ReflectionPair& p : reflection_pairs(path_of_stripe(stripe))) {
    last = std::max(last, p.down_index);
  }
  return std::max(stripe.outer().first(), last);
}

int width_by_reversed_prefix(const HorizontalStripe& stripe) {
  const LatticePath path = path_of_stripe(stripe);
  const int first = stripe.outer().first();
  int sum = 0;
  int best = 0;
  for (int i = 1; i <= first; ++i) {
    sum += static_cast<int>(path.step(static_cast<std::size_t>(first - i + 1)));
    best = std::max(best, sum);
  }
  return first + best;
}

LocusSize::LocusSize(int n, int a) : n_(n), a_(a) {
  if (n <= 0) throw InvalidArguments("n must be positive, got " + std::to_string(n));
  if (a < 0 || a > n) {
    throw InvalidArguments("a must lie in [0, n], got a=" + std::to_string(a));
  }
  if ((n - a) % 2 != 0) {
    throw InvalidArguments("a must have the parity of n, got n=" + std::to_string(n) +
                           " a=" + std::to_string(a));
  }
}

void LocusSize::require_degree(int d) const {
  if (d < 0 || d > pairs()) {
    throw InvalidArguments("degree d=" + std::to_string(d) + " outside [0, " +
                           std::to_string(pairs()) + "]");
  }
}

int LocusSize::bound(int d) const {
  require_degree(d);
  return n_ - 2 * d + a_;
}

std::vector<LocusSize> locus_sizes_up_to(int max_n) {
  std::vector<LocusSize> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int a = n % 2; a <= n; a += 2) out.emplace_back(n, a);
  }
  return out;
}

bool in_h(const HorizontalStripe& stripe, int d) {
  return d >= 0 && stripe.inner().size() == 2 * d && is_even(stripe.inner());
}

bool in_h_plus(const HorizontalStripe& stripe, int d) {
  if (!in_h(stripe, d)) return false;
  const LatticePath path = path_of_stripe(stripe);
  const auto h = path.heights();
  return std::all_of(h.begin(), h.end(), [](int y) { return y >= 0; });
}

bool in_h_wid(const HorizontalStripe& stripe, int n, int a, int d) {
  const LocusSize size(n, a);
  const int target = size.bound(d);
  return stripe.inner().size() == n - a && is_even(stripe.inner()) && width(stripe) == target;
}

}  // namespace invharm
