#include "invharm/involution.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "invharm/bijections.hpp"
#include "invharm/errors.hpp"

namespace invharm {

InvolutionPoint::InvolutionPoint(int n, std::vector<IndexPair> pairs)
    : n_(n), pairs_(std::move(pairs)), images_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw InvalidArguments("involution: negative size");
  for (int i = 1; i <= n; ++i) images_[static_cast<std::size_t>(i - 1)] = i;
  for (const auto& [i, j] : pairs_) {
    if (!(1 <= i && i < j && j <= n)) {
      throw InvalidArguments("involution: bad pair (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
    }
    auto& wi = images_[static_cast<std::size_t>(i - 1)];
    auto& wj = images_[static_cast<std::size_t>(j - 1)];
    if (wi != i || wj != j) throw InvalidArguments("involution: pairs overlap");
    wi = j;
    wj = i;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

InvolutionPoint InvolutionPoint::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<IndexPair> pairs;
  for (int i = 1; i <= n; ++i) {
    const int j = images[static_cast<std::size_t>(i - 1)];
    if (j < 1 || j > n || images[static_cast<std::size_t>(j - 1)] != i) {
      throw InvalidArguments("from_images: not an involution");
    }
    if (i < j) pairs.emplace_back(i, j);
  }
  return InvolutionPoint(n, std::move(pairs));
}

std::vector<int> InvolutionPoint::fixed_points() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (images_[static_cast<std::size_t>(i - 1)] == i) out.push_back(i);
  }
  return out;
}

IntMatrix InvolutionPoint::matching_matrix() const {
  const auto n = static_cast<std::size_t>(n_);
  IntMatrix m(n, std::vector<int>(n, 0));
  for (const auto& [i, j] : pairs_) {
    m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
    m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = 1;
  }
  return m;
}

std::string InvolutionPoint::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (const auto& [i, j] : pairs_) {
    out << '(' << i << ' ' << j << ')';
    any = true;
  }
  if (!any) out << "id";
  return out.str();
}

MatchingMonomial::MatchingMonomial(std::vector<IndexPair> pairs) : pairs_(std::move(pairs)) {
  std::vector<int> seen;
  for (auto& [i, j] : pairs_) {
    if (i > j) std::swap(i, j);
    if (i < 1 || i == j) throw InvalidArguments("matching monomial: bad pair");
    seen.push_back(i);
    seen.push_back(j);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InvalidArguments("matching monomial: pairs overlap");
  }
  std::sort(pairs_.begin(), pairs_.end());
}

MatchingMonomial MatchingMonomial::from_matrix(const IntMatrix& m) {
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < m.size(); ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j] == 0) continue;
      if (m[i][j] != 1 || i == j) throw InvalidMatrix("matching monomial: not a matching matrix");
      ++ones;
      if (i < j) pairs.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    }
    if (ones > 1) throw InvalidMatrix("matching monomial: row with several ones");
  }
  return MatchingMonomial(std::move(pairs));
}

bool MatchingMonomial::evaluate(const InvolutionPoint& w) const {
  const auto& images = w.images();
  return std::all_of(pairs_.begin(), pairs_.end(), [&](const IndexPair& p) {
    return p.second <= w.n() && images[static_cast<std::size_t>(p.first - 1)] == p.second;
  });
}

std::string MatchingMonomial::to_string() const {
  if (pairs_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if (k) out << '*';
    out << "x" << pairs_[k].first << "_" << pairs_[k].second;
  }
  return out.str();
}

std::vector<InvolutionPoint> enumerate_locus(const LocusSize& size) {
  const int n = size.n();
  std::vector<InvolutionPoint> out;
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int fixed_left) {
    while (i <= n && images[static_cast<std::size_t>(i - 1)] != 0) ++i;
    if (i > n) {
      if (fixed_left == 0) out.push_back(InvolutionPoint::from_images(images));
      return;
    }
    auto& wi = images[static_cast<std::size_t>(i - 1)];
    if (fixed_left > 0) {
      wi = i;
      rec(i + 1, fixed_left - 1);
      wi = 0;
    }
    for (int j = i + 1; j <= n; ++j) {
      auto& wj = images[static_cast<std::size_t>(j - 1)];
      if (wj != 0) continue;
      wi = j;
      wj = i;
      rec(i + 1, fixed_left);
      wi = 0;
      wj = 0;
    }
  };
  rec(1, size.a());
  std::sort(out.begin(), out.end());
  return out;
}

DimImage dim_bijection(const InvolutionPoint& w) {
  const Tableau matched = rsk_symmetric(w.matching_matrix()).transpose();
  const Partition inner = matched.shape();
  if (!is_even(inner)) {
    throw InvariantViolation("dim_bijection: transposed matching tableau has shape " +
                             inner.to_string());
  }
  Tableau q = matched;
  for (int x : w.fixed_points()) q = row_insert(q, x).tableau;
  return {q, HorizontalStripe(q.shape(), inner)};
}

MatchingMonomial basis_monomial(const Tableau& p, const HorizontalStripe& stripe,
                                const LocusSize& size, int d) {
  if (p.shape() != stripe.outer()) {
    throw ShapeMismatch("basis_monomial: tableau shape " + p.shape().to_string() +
                        " differs from " + stripe.outer().to_string());
  }
  if (!p.is_standard() || static_cast<int>(p.box_count()) != size.n()) {
    throw ShapeMismatch("basis_monomial: tableau is not standard on [n]");
  }
  const int bound = size.bound(d);
  if (stripe.outer().first() > bound) {
    throw DomainViolation("basis_monomial: first part exceeds n-2d+a");
  }
  if (!in_h_plus(stripe, d)) {
    throw DomainViolation("basis_monomial: " + stripe.to_string() + " not in H+_d");
  }
  const StripExtraction pushed = reverse_insert_strip(p, stripe);
  const IntMatrix m =
      rsk_symmetric_inverse(pushed.tableau.transpose(), static_cast<std::size_t>(size.n()));
  MatchingMonomial monomial = MatchingMonomial::from_matrix(m);
  if (monomial.degree() != d) {
    throw InvariantViolation("basis_monomial: produced degree " +
                             std::to_string(monomial.degree()) + ", expected " +
                             std::to_string(d));
  }
  return monomial;
}

std::vector<BasisCandidate> basis_candidates(const LocusSize& size) {
  std::vector<BasisCandidate> out;
  for (int d = 0; d <= size.pairs(); ++d) {
    for (const Partition& lambda : partitions_of(size.n(), size.bound(d))) {
      const std::vector<HorizontalStripe> stripes = h_plus_set(lambda, d);
      if (stripes.empty()) continue;
      const std::vector<Tableau> tableaux = standard_tableaux(lambda);
      for (const HorizontalStripe& s : stripes) {
        for (const Tableau& p : tableaux) {
          out.push_back({p, s, d, basis_monomial(p, s, size, d)});
        }
      }
    }
  }
  return out;
}

}  // namespace invharm
