#include "invharm/rational_basis.hpp"

#include "invharm/errors.hpp"

namespace invharm {

std::size_t RationalBasis::reduce(RationalVector& v) const {
  if (v.size() != dimension_) throw SizeMismatch("RationalBasis: vector of wrong length");
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    const mpq_class coeff = v[pivots_[k]];
    if (sgn(coeff) == 0) continue;
    const RationalVector& b = vectors_[k];
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (sgn(b[i]) != 0) v[i] -= coeff * b[i];
    }
  }
  for (std::size_t i = 0; i < dimension_; ++i) {
    if (sgn(v[i]) != 0) return i;
  }
  return dimension_;
}

bool RationalBasis::insert(RationalVector v) {
  const std::size_t p = reduce(v);
  if (p == dimension_) return false;
  const mpq_class lead = v[p];
  for (auto& x : v) {
    if (sgn(x) != 0) x /= lead;
  }
  for (RationalVector& b : vectors_) {
    const mpq_class coeff = b[p];
    if (sgn(coeff) == 0) continue;
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (sgn(v[i]) != 0) b[i] -= coeff * v[i];
    }
  }
  vectors_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RationalBasis::in_span(RationalVector v) const { return reduce(v) == dimension_; }

}  // namespace invharm
