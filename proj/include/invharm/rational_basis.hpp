#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace invharm {

using RationalVector = std::vector<mpq_class>;

// Incrementally maintained reduced row echelon basis of a subspace of Q^dim.
// Every stored vector has a 1 at its pivot and 0 at the pivots of the others,
// so the coordinates of any v in the span are v[pivot(k)].
class RationalBasis {
 public:
  explicit RationalBasis(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return vectors_.size(); }
  bool full() const { return rank() == dimension_; }

  // Adds v if it is independent of the current span; returns whether it was.
  bool insert(RationalVector v);
  bool in_span(RationalVector v) const;

  std::span<const RationalVector> vectors() const { return vectors_; }
  std::size_t pivot(std::size_t k) const { return pivots_[k]; }

 private:
  // Subtracts the span component; returns the first nonzero index or dim.
  std::size_t reduce(RationalVector& v) const;

  std::size_t dimension_;
  std::vector<RationalVector> vectors_;
  std::vector<std::size_t> pivots_;
};

}  // namespace invharm
