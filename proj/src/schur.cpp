#include "invharm/schur.hpp"

#include <algorithm>
#include <sstream>

#include "invharm/errors.hpp"

namespace invharm {

QPoly::QPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(std::size_t degree, mpz_class coeff) {
  std::vector<mpz_class> c(degree + 1, 0);
  c[degree] = std::move(coeff);
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class QPoly::coeff(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : mpz_class(0);
}

mpz_class QPoly::at_one() const {
  mpz_class sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

bool QPoly::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c >= 0; });
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const mpz_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

QPoly QPoly::shifted(std::size_t degrees) const {
  if (is_zero()) return {};
  std::vector<mpz_class> c(degrees, 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(c));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str();
    out << 'q';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

SchurPoly SchurPoly::schur(const Partition& lambda) {
  SchurPoly f;
  f.terms_.emplace(lambda, QPoly::monomial(0));
  return f;
}

QPoly SchurPoly::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QPoly{} : it->second;
}

void SchurPoly::add_term(const Partition& lambda, const QPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SchurPoly& SchurPoly::operator+=(const SchurPoly& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

SchurPoly& SchurPoly::operator-=(const SchurPoly& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, QPoly{} - c);
  return *this;
}

SchurPoly SchurPoly::times_q_power(std::size_t degrees) const {
  SchurPoly out;
  for (const auto& [lambda, c] : terms_) out.terms_.emplace(lambda, c.shifted(degrees));
  return out;
}

SchurPoly SchurPoly::at_q_one() const {
  SchurPoly out;
  for (const auto& [lambda, c] : terms_) out.add_term(lambda, QPoly({c.at_one()}));
  return out;
}

bool SchurPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& term) { return term.second.nonnegative(); });
}

int SchurPoly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  const int size = terms_.begin()->first.size();
  for (const auto& [lambda, c] : terms_) {
    if (lambda.size() != size) {
      throw InvariantViolation("inhomogeneous Schur polynomial: " + to_string());
    }
  }
  return size;
}

std::string SchurPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.to_string() << ")*s" << lambda.to_string();
  }
  return out.str();
}

SchurPoly add(const SchurPoly& f, const SchurPoly& g) { return f + g; }
SchurPoly subtract(const SchurPoly& f, const SchurPoly& g) { return f - g; }

SchurPoly pieri_mult(const SchurPoly& f, int a) {
  if (a < 0) throw InvalidArguments("pieri_mult: negative degree");
  SchurPoly out;
  for (const auto& [mu, c] : f.terms()) {
    for (const Partition& lambda : add_horizontal_stripe(mu, a)) out.add_term(lambda, c);
  }
  return out;
}

SchurPoly h_complete(int a) {
  if (a < 0) throw InvalidArguments("h_complete: negative degree");
  return SchurPoly::schur(a == 0 ? Partition{} : Partition{a});
}

SchurPoly plethysm_h_h2(int d) {
  if (d < -1) throw InvalidArguments("plethysm_h_h2: d must be at least -1");
  SchurPoly out;
  if (d == -1) return out;
  for (const Partition& lambda : even_partitions_of(2 * d)) out.add_term(lambda, QPoly({1}));
  return out;
}

SchurPoly truncate_first_part(const SchurPoly& f, int bound) {
  SchurPoly out;
  for (const auto& [lambda, c] : f.terms()) {
    if (lambda.first() <= bound) out.add_term(lambda, c);
  }
  return out;
}

}  // namespace invharm
