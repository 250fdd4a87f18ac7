#include "invharm/bijections.hpp"

#include <algorithm>
#include <string>

#include "invharm/errors.hpp"

namespace invharm {
namespace {

void require_size(const HorizontalStripe& stripe, const LocusSize& size, const char* op) {
  const Partition& outer = stripe.outer();
  if (outer.size() != size.n()) {
    throw DomainViolation(std::string(op) + ": " + outer.to_string() + " is not a partition of " +
                          std::to_string(size.n()));
  }
}

void require_outer(const HorizontalStripe& stripe, const LocusSize& size, int d, const char* op) {
  require_size(stripe, size, op);
  const Partition& outer = stripe.outer();
  if (outer.first() > size.bound(d)) {
    throw DomainViolation(std::string(op) + ": first part of " + outer.to_string() +
                          " exceeds n-2d+a=" + std::to_string(size.bound(d)));
  }
}

void require_positive_degree(const LocusSize& size, int d, const char* op) {
  size.require_degree(d);
  if (d == 0) throw InvalidArguments(std::string(op) + ": requires d > 0");
}

std::vector<int> columns_turned(const LatticePath& path, std::size_t a, std::size_t b, Step to) {
  std::vector<int> columns;
  for (std::size_t j = 1; j <= path.prefix_length(); ++j) {
    const bool flipped = (j == a || j == b);
    const Step s = flipped ? to : path.step(j);
    if (s == Step::NE) columns.push_back(static_cast<int>(j));
  }
  return columns;
}

// Missing turning steps are a caller error past the first-part bound and a
// bug within it.
[[noreturn]] void turning_failed(const HorizontalStripe& stripe, const LocusSize& size, int d,
                                 const std::string& what) {
  if (stripe.outer().first() > size.bound(d)) throw DomainViolation(what);
  throw InvariantViolation(what);
}

}  // namespace

std::size_t first_lowest_point(const LatticePath& path, std::size_t limit) {
  std::size_t best = 0;
  for (std::size_t x = 1; x <= limit; ++x) {
    if (path.height(x) < path.height(best)) best = x;
  }
  return best;
}

std::size_t last_lowest_point(const LatticePath& path, std::size_t limit) {
  std::size_t best = 0;
  for (std::size_t x = 1; x <= limit; ++x) {
    if (path.height(x) <= path.height(best)) best = x;
  }
  return best;
}

std::vector<HorizontalStripe> h_set(const Partition& outer, int d) {
  if (d < 0) return {};
  return stripes_with_even_inner(outer, 2 * d);
}

std::vector<HorizontalStripe> h_plus_set(const Partition& outer, int d) {
  std::vector<HorizontalStripe> out;
  for (HorizontalStripe& s : h_set(outer, d)) {
    if (in_h_plus(s, d)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<HorizontalStripe> h_wid_set(const Partition& outer, const LocusSize& size, int d) {
  const int target = size.bound(d);
  std::vector<HorizontalStripe> out;
  for (HorizontalStripe& s : stripes_with_even_inner(outer, size.n() - size.a())) {
    if (width(s) == target) out.push_back(std::move(s));
  }
  return out;
}

HorizontalStripe phi(const HorizontalStripe& stripe, const LocusSize& size, int d) {
  require_positive_degree(size, d, "phi");
  require_size(stripe, size, "phi");
  if (!in_h(stripe, d)) throw DomainViolation("phi: " + stripe.to_string() + " not in H_d");
  if (in_h_plus(stripe, d)) throw DomainViolation("phi: " + stripe.to_string() + " lies in H+_d");

  const LatticePath path = path_of_stripe(stripe);
  const auto limit = static_cast<std::size_t>(stripe.outer().first());
  const std::size_t m = first_lowest_point(path, limit);
  if (m < 2 || path.step(m - 1) != Step::SE || path.step(m) != Step::SE) {
    turning_failed(stripe, size, d,
                   "phi: first lowest point " + std::to_string(m) +
                       " is not preceded by two SE steps in " + stripe.to_string());
  }
  const std::vector<int> columns = columns_turned(path, m - 1, m, Step::NE);
  HorizontalStripe result = stripe_from_columns(stripe.outer(), columns);
  if (!in_h(result, d - 1)) {
    throw InvariantViolation("phi: image " + result.to_string() + " not in H_{d-1}");
  }
  return result;
}

HorizontalStripe phi_inverse(const HorizontalStripe& stripe, const LocusSize& size, int d) {
  require_positive_degree(size, d, "phi_inverse");
  require_size(stripe, size, "phi_inverse");
  if (!in_h(stripe, d - 1)) {
    throw DomainViolation("phi_inverse: " + stripe.to_string() + " not in H_{d-1}");
  }

  const LatticePath path = path_of_stripe(stripe);
  const auto limit = static_cast<std::size_t>(stripe.outer().first());
  const std::size_t m = last_lowest_point(path, limit);
  if (m + 2 > limit || path.step(m + 1) != Step::NE || path.step(m + 2) != Step::NE) {
    turning_failed(stripe, size, d,
                   "phi_inverse: last lowest point " + std::to_string(m) +
                       " is not followed by two NE steps in " + stripe.to_string());
  }
  const std::vector<int> columns = columns_turned(path, m + 1, m + 2, Step::SE);
  HorizontalStripe result = stripe_from_columns(stripe.outer(), columns);
  if (!in_h(result, d) || in_h_plus(result, d)) {
    throw InvariantViolation("phi_inverse: image " + result.to_string() +
                             " not in H_d \\ H+_d");
  }
  return result;
}

HorizontalStripe left_shadow(const HorizontalStripe& stripe, const LocusSize& size, int d) {
  require_outer(stripe, size, d, "left_shadow");
  if (!in_h_plus(stripe, d)) {
    throw DomainViolation("left_shadow: " + stripe.to_string() + " not in H+_d");
  }
  const int bound = size.bound(d);
  const int first = stripe.outer().first();
  std::vector<int> columns;
  for (const ReflectionPair& p : reflection_pairs(path_of_stripe(stripe))) {
    if (p.up_index <= first && p.down_index <= bound) columns.push_back(p.up_index);
  }
  HorizontalStripe result = stripe_from_columns(stripe.outer(), columns);
  if (!in_h_wid(result, size.n(), size.a(), d)) {
    throw InvariantViolation("left_shadow: image " + result.to_string() + " not in H^wid_d");
  }
  return result;
}

HorizontalStripe right_shadow(const HorizontalStripe& stripe, const LocusSize& size, int d) {
  require_outer(stripe, size, d, "right_shadow");
  if (!in_h_wid(stripe, size.n(), size.a(), d)) {
    throw DomainViolation("right_shadow: " + stripe.to_string() + " not in H^wid_d");
  }
  const int bound = size.bound(d);
  const int first = stripe.outer().first();
  std::vector<char> is_down(static_cast<std::size_t>(bound) + 1, 0);
  int last_down = 0;
  for (const ReflectionPair& p : reflection_pairs(path_of_stripe(stripe))) {
    last_down = std::max(last_down, p.down_index);
    if (p.down_index <= bound) is_down[static_cast<std::size_t>(p.down_index)] = 1;
  }
  if (std::max(first, last_down) != bound) {
    throw InvariantViolation("right_shadow: reflection pairs of " + stripe.to_string() +
                             " do not reach n-2d+a");
  }
  std::vector<int> columns;
  for (int j = 1; j <= bound; ++j) {
    if (is_down[static_cast<std::size_t>(j)]) continue;
    if (j > first) {
      throw InvariantViolation("right_shadow: column " + std::to_string(j) + " lies outside " +
                               stripe.outer().to_string());
    }
    columns.push_back(j);
  }
  HorizontalStripe result = stripe_from_columns(stripe.outer(), columns);
  if (!in_h_plus(result, d)) {
    throw InvariantViolation("right_shadow: image " + result.to_string() + " not in H+_d");
  }
  return result;
}

}  // namespace invharm
