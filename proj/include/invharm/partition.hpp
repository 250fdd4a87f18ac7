#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace invharm {

// A weakly decreasing sequence of positive integers. Trailing zeros given to
// the constructor are dropped, so the empty sequence is the unique partition
// of zero and equality is plain sequence equality.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // Zero-based row access; rows past the last part have length zero.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  // Componentwise containment of Young diagrams.
  bool contains(const Partition& other) const;

  std::string to_string() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  std::strong_ordering operator<=>(const Partition& other) const {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// lambda/mu with mu inside lambda and at most one box per column.
class HorizontalStripe {
 public:
  // Throws InvalidArguments unless (outer, inner) is a horizontal stripe.
  HorizontalStripe(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }

  std::string to_string() const;

  bool operator==(const HorizontalStripe&) const = default;
  auto operator<=>(const HorizontalStripe&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

Partition conjugate(const Partition& p);
bool is_even(const Partition& p);
bool is_horizontal_stripe(const Partition& outer, const Partition& inner);

// All partitions of n in decreasing lexicographic order, optionally with
// first part at most max_first_part.
std::vector<Partition> partitions_of(int n, std::optional<int> max_first_part = std::nullopt);
std::vector<Partition> even_partitions_of(int n);

// Number of standard Young tableaux of the shape (hook-length formula).
mpz_class syt_count(const Partition& p);
mpz_class factorial(int n);

// Stripes outer/mu with mu even and |mu| = inner_size, inner partitions in
// decreasing lexicographic order.
std::vector<HorizontalStripe> stripes_with_even_inner(const Partition& outer, int inner_size);

// Partitions lambda such that lambda/inner is a horizontal stripe of the given
// size, in decreasing lexicographic order.
std::vector<Partition> add_horizontal_stripe(const Partition& inner, int size);

}  // namespace invharm
