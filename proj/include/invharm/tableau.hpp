#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "invharm/partition.hpp"

namespace invharm {

// Rows of positive integers, weakly increasing along rows and strictly
// increasing down columns. Shape is a partition.
class Tableau {
 public:
  using Rows = std::vector<std::vector<int>>;

  Tableau() = default;
  // Throws InvalidArguments unless `rows` is semistandard of partition shape.
  explicit Tableau(Rows rows);

  const Rows& rows() const { return rows_; }
  Partition shape() const;
  std::size_t box_count() const;
  bool empty() const { return rows_.empty(); }

  // Semistandard with pairwise distinct entries.
  bool has_distinct_entries() const;
  // Distinct entries 1..n.
  bool is_standard() const;
  std::vector<int> content() const;
  Tableau transpose() const;

  std::string to_string() const;

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau&) const = default;

 private:
  Rows rows_;
};

struct Insertion {
  Tableau tableau;
  std::size_t row = 0;     // 0-based position of the new box
  std::size_t column = 0;
};

// Schensted row insertion.
Insertion row_insert(const Tableau& t, int value);

// Removes the last box of `row` and bumps upward; returns the ejected value.
std::pair<Tableau, int> reverse_bump(const Tableau& t, std::size_t row);

struct StripExtraction {
  Tableau tableau;            // shape strip.inner()
  std::vector<int> values;    // in extraction order (rightmost box first)
};

// Reverse-inserts the boxes of strip from right to left. Throws ShapeMismatch
// unless t has shape strip.outer().
StripExtraction reverse_insert_strip(const Tableau& t, const HorizontalStripe& strip);

std::vector<Tableau> standard_tableaux(const Partition& shape);

// Nonnegative integer matrix, rows indexed 1..rows via [i-1][j-1].
using IntMatrix = std::vector<std::vector<int>>;

struct RskPair {
  Tableau insertion;
  Tableau recording;
};

// RSK on the two-line array of m. Throws InvalidMatrix on negative entries.
RskPair rsk(const IntMatrix& m);
// Inverse of rsk; returns a rows x cols matrix. Throws InvalidArguments when
// the tableaux have different shapes or do not fit.
IntMatrix rsk_inverse(const RskPair& pair, std::size_t rows, std::size_t cols);

// For a symmetric 0/1 matrix with zero diagonal, RSK(M) = (P, P); returns P.
// Throws InvalidMatrix on other input.
Tableau rsk_symmetric(const IntMatrix& m);
// The symmetric matrix with RSK image (P, P), of size n (defaults to the
// largest entry of P). Throws NotInImage unless the conjugate of sh(P) is
// even and P has distinct entries.
IntMatrix rsk_symmetric_inverse(const Tableau& p, std::size_t n = 0);

}  // namespace invharm
