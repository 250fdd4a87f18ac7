#pragma once

#include <string>
#include <vector>

namespace invharm {

// Outcome of an exhaustive sweep: the number of individual checks performed
// and a description of each one that failed.
struct SweepReport {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// signed = positive = width for every valid (n, a), n <= max_n, plus the q = 1
// and Hilbert-series mass checks.
SweepReport check_formulas(int max_n);

// Phi is a bijection H_d \ H+_d -> H_{d-1} inverted by phi_inverse, and the
// left/right shadows are mutually inverse between H+_d and H^wid_d, for every
// valid (n, a, d, lambda) with n <= max_n.
SweepReport check_bijections(int max_n);

// Pair-based, reversed-prefix and closed-form widths agree on every stripe
// with |lambda| <= max_size.
SweepReport check_width(int max_size);

// dim_bijection is injective on M_{n,a} with image of size |M_{n,a}| lying in
// the width index set, for n <= max_n.
SweepReport check_dim_bijection(int max_n);

}  // namespace invharm
