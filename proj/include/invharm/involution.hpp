#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "invharm/lattice_path.hpp"
#include "invharm/partition.hpp"
#include "invharm/tableau.hpp"

namespace invharm {

using IndexPair = std::pair<int, int>;  // (i, j) with 1 <= i < j

// An involution of [n]: disjoint transpositions plus fixed points.
class InvolutionPoint {
 public:
  // Throws InvalidArguments unless pairs are disjoint, ordered i < j, and
  // every index lies in [1, n].
  InvolutionPoint(int n, std::vector<IndexPair> pairs);
  static InvolutionPoint from_images(const std::vector<int>& images);

  int n() const { return n_; }
  const std::vector<IndexPair>& pairs() const { return pairs_; }
  std::vector<int> fixed_points() const;
  int fixed_count() const { return n_ - 2 * static_cast<int>(pairs_.size()); }
  // images()[i - 1] = w(i).
  const std::vector<int>& images() const { return images_; }
  // Symmetric 0/1 matrix with ones at (i, w(i)) for matched i only.
  IntMatrix matching_matrix() const;

  std::string to_string() const;

  bool operator==(const InvolutionPoint& other) const { return images_ == other.images_; }
  auto operator<=>(const InvolutionPoint& other) const { return images_ <=> other.images_; }

 private:
  int n_;
  std::vector<IndexPair> pairs_;
  std::vector<int> images_;
};

// Product of x_{i,j} over a partial matching; degree = number of pairs.
class MatchingMonomial {
 public:
  MatchingMonomial() = default;
  explicit MatchingMonomial(std::vector<IndexPair> pairs);
  static MatchingMonomial from_matrix(const IntMatrix& m);

  const std::vector<IndexPair>& pairs() const { return pairs_; }
  int degree() const { return static_cast<int>(pairs_.size()); }
  // Value on a 0/1 involution matrix: 1 iff every pair is a transposition of w.
  bool evaluate(const InvolutionPoint& w) const;

  std::string to_string() const;

  bool operator==(const MatchingMonomial&) const = default;
  auto operator<=>(const MatchingMonomial&) const = default;

 private:
  std::vector<IndexPair> pairs_;
};

// All involutions of [n] with a fixed points, in lexicographic order of
// their image sequences.
std::vector<InvolutionPoint> enumerate_locus(const LocusSize& size);

struct DimImage {
  Tableau tableau;           // standard, shape stripe.outer()
  HorizontalStripe stripe;   // inner is an even partition of n - a
  bool operator==(const DimImage&) const = default;
  auto operator<=>(const DimImage&) const = default;
};

// w -> RSK tableau of its matching, transposed to even row shape, then the
// fixed points inserted in increasing order.
DimImage dim_bijection(const InvolutionPoint& w);

// (P, lambda/mu) with mu in H+_d: push the strip out of P, transpose, and read
// the matching off symmetric inverse RSK.
MatchingMonomial basis_monomial(const Tableau& p, const HorizontalStripe& stripe,
                                const LocusSize& size, int d);

struct BasisCandidate {
  Tableau tableau;
  HorizontalStripe stripe;
  int degree = 0;
  MatchingMonomial monomial;
};

// basis_monomial over every (P, lambda/mu) with lambda_1 <= n - 2d + a,
// lambda/mu in H+_d and P in SYT(lambda), ordered by degree.
std::vector<BasisCandidate> basis_candidates(const LocusSize& size);

}  // namespace invharm
