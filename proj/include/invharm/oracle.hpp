#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "invharm/involution.hpp"
#include "invharm/lattice_path.hpp"
#include "invharm/partition.hpp"
#include "invharm/schur.hpp"

namespace invharm {

// Size cap for the evaluation-matrix oracle. Jobs with n > max_n are refused
// with ResourceLimit.
struct OracleConfig {
  static constexpr int kDefaultMaxN = 6;
  static constexpr const char* kEnvOverride = "INVHARM_ORACLE_MAX_N";

  int max_n = kDefaultMaxN;

  // Default cap, replaced by the environment override when it parses.
  static OracleConfig from_environment();
  void check(const LocusSize& size) const;
};

// One exact value per conjugacy class of S_n; classes are the partitions of n
// in decreasing lexicographic order.
struct CharacterVector {
  std::vector<Partition> classes;
  std::vector<mpq_class> values;
  bool operator==(const CharacterVector&) const = default;
};

// Coefficient d is rank F_d - rank F_{d-1}, where F_d is the span of the
// evaluations on the locus of all monomials of degree <= d.
QPoly graded_hilbert(const LocusSize& size, const OracleConfig& config = {});

// Character of F_d / F_{d-1} for each degree, from traces of conjugation.
std::vector<CharacterVector> graded_character(const LocusSize& size,
                                              const OracleConfig& config = {});

// Character of the conjugation action on the functions on the locus, by
// counting fixed points directly.
CharacterVector conjugation_permutation_character(const LocusSize& size);

// chi^lambda at the class of the given cycle type (border-strip recursion).
mpz_class murnaghan_nakayama(const Partition& lambda, const Partition& cycle_type);

// n! / |class| for the given cycle type.
mpz_class centralizer_order(const Partition& cycle_type);

// Decomposes each degree into irreducibles; throws InvariantViolation when a
// multiplicity is negative or not an integer.
SchurPoly frobenius_of_character(const std::vector<CharacterVector>& chars);

struct BasisVerdict {
  int n = 0;
  int a = 0;
  QPoly hilbert;
  SchurPoly frobenius;
  std::vector<int> profile;  // candidates per degree
  bool pass = false;
  std::string reason;        // empty on PASS
};

// Checks that the candidate matching monomials have the Hilbert function's
// degree profile and that those of degree <= d are linearly independent on
// the locus for every d.
BasisVerdict verify_monomial_basis(const LocusSize& size, const OracleConfig& config = {});

}  // namespace invharm
