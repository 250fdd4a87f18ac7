#pragma once

#include <vector>

#include <gmpxx.h>

#include "invharm/lattice_path.hpp"
#include "invharm/partition.hpp"
#include "invharm/schur.hpp"

namespace invharm {

// Degree-d piece of the signed formula before and after truncation to
// lambda_1 <= n - 2d + a. The untruncated difference may carry negative
// coefficients; the truncated one must not.
struct SignedDegreePiece {
  int degree = 0;
  SchurPoly difference;
  SchurPoly truncated;
};

SignedDegreePiece signed_degree_piece(const LocusSize& size, int d);

// Three routes to the graded Frobenius image of the orbit harmonics module.
SchurPoly grfrob_signed(const LocusSize& size);
SchurPoly grfrob_positive(const LocusSize& size);
SchurPoly grfrob_width(const LocusSize& size);

// Ungraded image h_{(n-a)/2}[h_2] * h_a.
SchurPoly frob_total(const LocusSize& size);

// sum_lambda c_lambda(q) f^lambda. Throws DomainViolation on negative input.
QPoly hilbert_series(const SchurPoly& f);

// n! / (2^k k! a!), k = (n - a) / 2.
mpz_class locus_size(const LocusSize& size);

// A stripe lambda/mu with lambda of n and mu an even partition of n - a,
// with its width and q-degree (n + a - width) / 2.
struct IndexedStripe {
  HorizontalStripe stripe;
  int width = 0;
  int degree = 0;
};

// The width-formula index set, grouped by outer shape in decreasing
// lexicographic order.
std::vector<IndexedStripe> width_index_stripes(const LocusSize& size);

}  // namespace invharm
