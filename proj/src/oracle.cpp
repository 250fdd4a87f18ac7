#include "invharm/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>

#include "invharm/errors.hpp"
#include "invharm/rational_basis.hpp"

namespace invharm {
namespace {

// Every monomial in the x_{i,j} evaluates on a 0/1 involution matrix to the
// indicator of "w contains these transpositions and fixes these points", or
// to zero. These patterns, graded by pairs + fixed points, therefore span
// exactly the same filtration as the monomials.
struct Pattern {
  std::vector<IndexPair> pairs;
  std::vector<int> fixed;
};

std::vector<Pattern> patterns_of_size(const LocusSize& size, int total) {
  const int n = size.n();
  std::vector<Pattern> out;
  std::vector<int> used(static_cast<std::size_t>(n + 1), 0);
  Pattern current;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    if (i > n) return;
    if (used[static_cast<std::size_t>(i)]) {
      rec(i + 1, left);
      return;
    }
    rec(i + 1, left);
    if (static_cast<int>(current.fixed.size()) < size.a()) {
      current.fixed.push_back(i);
      rec(i + 1, left - 1);
      current.fixed.pop_back();
    }
    if (static_cast<int>(current.pairs.size()) < size.pairs()) {
      used[static_cast<std::size_t>(i)] = 1;
      for (int j = i + 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        used[static_cast<std::size_t>(j)] = 1;
        current.pairs.emplace_back(i, j);
        rec(i + 1, left - 1);
        current.pairs.pop_back();
        used[static_cast<std::size_t>(j)] = 0;
      }
      used[static_cast<std::size_t>(i)] = 0;
    }
  };
  rec(1, total);
  return out;
}

RationalVector evaluate(const Pattern& pattern, const std::vector<InvolutionPoint>& locus) {
  RationalVector v(locus.size());
  for (std::size_t k = 0; k < locus.size(); ++k) {
    const auto& images = locus[k].images();
    bool hit = true;
    for (const auto& [i, j] : pattern.pairs) {
      if (images[static_cast<std::size_t>(i - 1)] != j) {
        hit = false;
        break;
      }
    }
    for (int i : pattern.fixed) {
      if (!hit) break;
      if (images[static_cast<std::size_t>(i - 1)] != i) hit = false;
    }
    v[k] = hit ? 1 : 0;
  }
  return v;
}

std::vector<int> class_representative(const Partition& cycle_type) {
  std::vector<int> g(static_cast<std::size_t>(cycle_type.size()));
  int start = 1;
  for (int len : cycle_type.parts()) {
    for (int k = 0; k < len; ++k) {
      const int i = start + k;
      g[static_cast<std::size_t>(i - 1)] = (k + 1 < len) ? i + 1 : start;
    }
    start += len;
  }
  return g;
}

// act[k] = index of g^{-1} w_k g.
std::vector<std::size_t> conjugation_action(const std::vector<int>& g,
                                            const std::vector<InvolutionPoint>& locus,
                                            const std::map<std::vector<int>, std::size_t>& index) {
  const std::size_t n = g.size();
  std::vector<int> g_inv(n);
  for (std::size_t i = 0; i < n; ++i) g_inv[static_cast<std::size_t>(g[i] - 1)] = static_cast<int>(i) + 1;
  std::vector<std::size_t> act(locus.size());
  std::vector<int> u(n);
  for (std::size_t k = 0; k < locus.size(); ++k) {
    const auto& w = locus[k].images();
    for (std::size_t i = 0; i < n; ++i) {
      const int gi = g[i];
      const int wgi = w[static_cast<std::size_t>(gi - 1)];
      u[i] = g_inv[static_cast<std::size_t>(wgi - 1)];
    }
    act[k] = index.at(u);
  }
  return act;
}

struct FiltrationResult {
  QPoly hilbert;
  std::vector<CharacterVector> characters;
};

FiltrationResult run_filtration(const LocusSize& size, const OracleConfig& config,
                                bool with_characters) {
  config.check(size);
  const std::vector<InvolutionPoint> locus = enumerate_locus(size);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < locus.size(); ++k) index.emplace(locus[k].images(), k);

  const std::vector<Partition> classes = partitions_of(size.n());
  std::vector<std::vector<std::size_t>> actions;
  if (with_characters) {
    for (const Partition& rho : classes) {
      actions.push_back(conjugation_action(class_representative(rho), locus, index));
    }
  }

  RationalBasis basis(locus.size());
  std::vector<mpz_class> hilbert;
  std::vector<mpq_class> previous_trace(classes.size(), 0);
  FiltrationResult result;
  const int max_pattern = size.pairs() + size.a();
  for (int d = 0; !basis.full(); ++d) {
    if (d > max_pattern) {
      throw InvariantViolation("oracle: filtration did not saturate");
    }
    const std::size_t before = basis.rank();
    for (const Pattern& pattern : patterns_of_size(size, d)) {
      basis.insert(evaluate(pattern, locus));
      if (basis.full()) break;
    }
    hilbert.emplace_back(static_cast<unsigned long>(basis.rank() - before));
    if (!with_characters) continue;

    CharacterVector piece{classes, {}};
    for (std::size_t c = 0; c < classes.size(); ++c) {
      mpq_class trace = 0;
      const auto vectors = basis.vectors();
      for (std::size_t k = 0; k < vectors.size(); ++k) {
        trace += vectors[k][actions[c][basis.pivot(k)]];
      }
      piece.values.push_back(trace - previous_trace[c]);
      previous_trace[c] = trace;
    }
    result.characters.push_back(std::move(piece));
  }
  result.hilbert = QPoly(std::move(hilbert));
  return result;
}

using BetaSet = std::vector<int>;

mpz_class mn_recursive(const BetaSet& beta, std::span<const int> parts,
                       std::map<std::pair<BetaSet, std::size_t>, mpz_class>& memo,
                       std::size_t offset) {
  if (offset == parts.size()) return 1;
  const auto key = std::make_pair(beta, offset);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = parts[offset];
  mpz_class total = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    const int b = beta[k];
    const int target = b - r;
    if (target < 0 || std::binary_search(beta.begin(), beta.end(), target)) continue;
    const auto lo = std::upper_bound(beta.begin(), beta.end(), target);
    const auto between = static_cast<int>(std::distance(lo, beta.begin() + static_cast<long>(k)));
    BetaSet next = beta;
    next.erase(next.begin() + static_cast<long>(k));
    next.insert(std::upper_bound(next.begin(), next.end(), target), target);
    const mpz_class sub = mn_recursive(next, parts, memo, offset + 1);
    if (between % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

OracleConfig OracleConfig::from_environment() {
  OracleConfig config;
  if (const char* raw = std::getenv(kEnvOverride)) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) config.max_n = static_cast<int>(value);
  }
  return config;
}

void OracleConfig::check(const LocusSize& size) const {
  if (size.n() > max_n) {
    throw ResourceLimit("oracle size cap is n <= " + std::to_string(max_n) + ", requested n=" +
                        std::to_string(size.n()));
  }
}

QPoly graded_hilbert(const LocusSize& size, const OracleConfig& config) {
  return run_filtration(size, config, false).hilbert;
}

std::vector<CharacterVector> graded_character(const LocusSize& size, const OracleConfig& config) {
  return run_filtration(size, config, true).characters;
}

CharacterVector conjugation_permutation_character(const LocusSize& size) {
  const std::vector<InvolutionPoint> locus = enumerate_locus(size);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < locus.size(); ++k) index.emplace(locus[k].images(), k);
  CharacterVector out{partitions_of(size.n()), {}};
  for (const Partition& rho : out.classes) {
    const auto act = conjugation_action(class_representative(rho), locus, index);
    long fixed = 0;
    for (std::size_t k = 0; k < act.size(); ++k) fixed += (act[k] == k) ? 1 : 0;
    out.values.emplace_back(fixed);
  }
  return out;
}

mpz_class murnaghan_nakayama(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size()) {
    throw SizeMismatch("murnaghan_nakayama: " + lambda.to_string() + " and " +
                       cycle_type.to_string() + " have different sizes");
  }
  const std::size_t len = lambda.length();
  BetaSet beta(len);
  for (std::size_t i = 0; i < len; ++i) beta[i] = lambda[i] + static_cast<int>(len - 1 - i);
  std::sort(beta.begin(), beta.end());
  std::map<std::pair<BetaSet, std::size_t>, mpz_class> memo;
  return mn_recursive(beta, cycle_type.parts(), memo, 0);
}

mpz_class centralizer_order(const Partition& cycle_type) {
  mpz_class z = 1;
  std::map<int, int> multiplicity;
  for (int part : cycle_type.parts()) {
    ++multiplicity[part];
    z *= part;
  }
  for (const auto& [part, m] : multiplicity) z *= factorial(m);
  return z;
}

SchurPoly frobenius_of_character(const std::vector<CharacterVector>& chars) {
  SchurPoly out;
  for (std::size_t d = 0; d < chars.size(); ++d) {
    const CharacterVector& chi = chars[d];
    if (chi.classes.size() != chi.values.size() || chi.classes.empty()) {
      throw SizeMismatch("frobenius_of_character: malformed character");
    }
    const int n = chi.classes.front().size();
    for (const Partition& lambda : partitions_of(n)) {
      mpq_class inner = 0;
      for (std::size_t c = 0; c < chi.classes.size(); ++c) {
        inner += chi.values[c] * mpq_class(murnaghan_nakayama(lambda, chi.classes[c])) /
                 mpq_class(centralizer_order(chi.classes[c]));
      }
      inner.canonicalize();
      if (inner.get_den() != 1 || inner < 0) {
        throw InvariantViolation("frobenius_of_character: multiplicity " + inner.get_str() +
                                 " of " + lambda.to_string() + " in degree " +
                                 std::to_string(d));
      }
      if (inner != 0) out.add_term(lambda, QPoly::monomial(d, inner.get_num()));
    }
  }
  return out;
}

BasisVerdict verify_monomial_basis(const LocusSize& size, const OracleConfig& config) {
  const FiltrationResult filtration = run_filtration(size, config, true);
  BasisVerdict verdict;
  verdict.n = size.n();
  verdict.a = size.a();
  verdict.hilbert = filtration.hilbert;
  verdict.frobenius = frobenius_of_character(filtration.characters);

  const std::vector<BasisCandidate> candidates = basis_candidates(size);
  for (const BasisCandidate& c : candidates) {
    const auto d = static_cast<std::size_t>(c.degree);
    if (verdict.profile.size() <= d) verdict.profile.resize(d + 1, 0);
    ++verdict.profile[d];
  }

  const auto hilbert = verdict.hilbert.coeffs();
  bool profile_matches = verdict.profile.size() == hilbert.size();
  for (std::size_t d = 0; profile_matches && d < hilbert.size(); ++d) {
    profile_matches = hilbert[d] == verdict.profile[d];
  }
  if (!profile_matches) {
    verdict.reason = "candidate degree profile differs from the Hilbert function";
    return verdict;
  }

  const std::vector<InvolutionPoint> locus = enumerate_locus(size);
  RationalBasis basis(locus.size());
  for (const BasisCandidate& c : candidates) {
    RationalVector v(locus.size());
    for (std::size_t k = 0; k < locus.size(); ++k) v[k] = c.monomial.evaluate(locus[k]) ? 1 : 0;
    if (!basis.insert(std::move(v))) {
      verdict.reason = "candidate " + c.monomial.to_string() + " of degree " +
                       std::to_string(c.degree) + " depends on earlier candidates";
      return verdict;
    }
  }
  verdict.pass = true;
  return verdict;
}

}  // namespace invharm
