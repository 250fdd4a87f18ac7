#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "invharm/partition.hpp"

namespace invharm {

// Polynomial in q with big-integer coefficients, lowest degree first.
// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpz_class> coeffs);
  static QPoly monomial(std::size_t degree, mpz_class coeff = 1);

  std::span<const mpz_class> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpz_class coeff(std::size_t degree) const;
  mpz_class at_one() const;
  bool nonnegative() const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const mpz_class& scalar);
  QPoly shifted(std::size_t degrees) const;

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  bool operator==(const QPoly& other) const { return coeffs_ == other.coeffs_; }

  // "1 + 2q + q^3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// A finitely supported map Partition -> QPoly, read as sum c_lambda(q) s_lambda.
// Zero coefficients are never stored; iteration is in decreasing
// lexicographic order of partitions.
class SchurPoly {
 public:
  using Terms = std::map<Partition, QPoly, std::greater<>>;

  SchurPoly() = default;
  // s_lambda with coefficient 1.
  static SchurPoly schur(const Partition& lambda);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  QPoly coeff(const Partition& lambda) const;

  void add_term(const Partition& lambda, const QPoly& coeff);

  SchurPoly& operator+=(const SchurPoly& other);
  SchurPoly& operator-=(const SchurPoly& other);
  friend SchurPoly operator+(SchurPoly lhs, const SchurPoly& rhs) { return lhs += rhs; }
  friend SchurPoly operator-(SchurPoly lhs, const SchurPoly& rhs) { return lhs -= rhs; }
  bool operator==(const SchurPoly& other) const { return terms_ == other.terms_; }

  SchurPoly times_q_power(std::size_t degrees) const;
  // Specialization q = 1.
  SchurPoly at_q_one() const;
  bool nonnegative() const;
  // Throws InvariantViolation if the terms do not share one size.
  int homogeneous_degree() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

SchurPoly add(const SchurPoly& f, const SchurPoly& g);
SchurPoly subtract(const SchurPoly& f, const SchurPoly& g);

// f * h_a expanded by Pieri's rule.
SchurPoly pieri_mult(const SchurPoly& f, int a);
// h_a = s_(a).
SchurPoly h_complete(int a);
// h_d[h_2] = sum of s_lambda over even lambda of 2d; zero for d = -1.
SchurPoly plethysm_h_h2(int d);
// Terms with first part at most `bound`.
SchurPoly truncate_first_part(const SchurPoly& f, int bound);

}  // namespace invharm
