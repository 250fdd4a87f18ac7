#include "invharm/frobenius.hpp"

#include "invharm/bijections.hpp"
#include "invharm/errors.hpp"

namespace invharm {

SignedDegreePiece signed_degree_piece(const LocusSize& size, int d) {
  const int bound = size.bound(d);
  const int n = size.n();
  SignedDegreePiece piece;
  piece.degree = d;
  piece.difference = subtract(pieri_mult(plethysm_h_h2(d), n - 2 * d),
                              pieri_mult(plethysm_h_h2(d - 1), n - 2 * d + 2));
  piece.truncated = truncate_first_part(piece.difference, bound);
  if (!piece.truncated.nonnegative()) {
    throw InvariantViolation("signed formula left a negative coefficient in degree " +
                             std::to_string(d) + ": " + piece.truncated.to_string());
  }
  return piece;
}

SchurPoly grfrob_signed(const LocusSize& size) {
  SchurPoly out;
  for (int d = 0; d <= size.pairs(); ++d) {
    out += signed_degree_piece(size, d).truncated.times_q_power(static_cast<std::size_t>(d));
  }
  return out;
}

SchurPoly grfrob_positive(const LocusSize& size) {
  SchurPoly out;
  for (int d = 0; d <= size.pairs(); ++d) {
    const QPoly term = QPoly::monomial(static_cast<std::size_t>(d));
    for (const Partition& lambda : partitions_of(size.n(), size.bound(d))) {
      for (const HorizontalStripe& s : h_plus_set(lambda, d)) out.add_term(s.outer(), term);
    }
  }
  return out;
}

std::vector<IndexedStripe> width_index_stripes(const LocusSize& size) {
  std::vector<IndexedStripe> out;
  const int n = size.n();
  const int a = size.a();
  for (const Partition& lambda : partitions_of(n)) {
    for (HorizontalStripe& s : stripes_with_even_inner(lambda, n - a)) {
      const int w = width(s);
      const int twice = n + a - w;
      if (twice < 0 || twice % 2 != 0 || twice / 2 > size.pairs()) {
        throw InvariantViolation("width " + std::to_string(w) + " of " + s.to_string() +
                                 " gives an exponent outside [0, (n-a)/2]");
      }
      out.push_back({std::move(s), w, twice / 2});
    }
  }
  return out;
}

SchurPoly grfrob_width(const LocusSize& size) {
  SchurPoly out;
  for (const IndexedStripe& entry : width_index_stripes(size)) {
    out.add_term(entry.stripe.outer(), QPoly::monomial(static_cast<std::size_t>(entry.degree)));
  }
  return out;
}

SchurPoly frob_total(const LocusSize& size) {
  return pieri_mult(plethysm_h_h2(size.pairs()), size.a());
}

QPoly hilbert_series(const SchurPoly& f) {
  if (!f.nonnegative()) throw DomainViolation("hilbert_series: negative coefficient");
  QPoly out;
  for (const auto& [lambda, c] : f.terms()) {
    QPoly term = c;
    term *= syt_count(lambda);
    out += term;
  }
  return out;
}

mpz_class locus_size(const LocusSize& size) {
  const int k = size.pairs();
  mpz_class denom = factorial(k) * factorial(size.a());
  denom <<= static_cast<mp_bitcnt_t>(k);
  return factorial(size.n()) / denom;
}

}  // namespace invharm
