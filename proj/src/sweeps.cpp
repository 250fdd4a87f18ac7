#include "invharm/sweeps.hpp"

#include <exception>
#include <set>

#include "invharm/bijections.hpp"
#include "invharm/frobenius.hpp"
#include "invharm/involution.hpp"

namespace invharm {
namespace {

std::string label(const LocusSize& size) {
  return "n=" + std::to_string(size.n()) + " a=" + std::to_string(size.a());
}

std::string label(const LocusSize& size, int d, const Partition& lambda) {
  return label(size) + " d=" + std::to_string(d) + " lambda=" + lambda.to_string();
}

void expect(SweepReport& report, bool ok, const std::string& what) {
  ++report.checks;
  if (!ok) report.failures.push_back(what);
}

void sweep_phi(SweepReport& report, const LocusSize& size, int d, const Partition& lambda) {
  const std::string where = label(size, d, lambda);
  const std::vector<HorizontalStripe> lower = h_set(lambda, d - 1);
  std::set<HorizontalStripe> images;
  for (const HorizontalStripe& s : h_set(lambda, d)) {
    if (in_h_plus(s, d)) continue;
    const HorizontalStripe image = phi(s, size, d);
    const auto limit = static_cast<std::size_t>(lambda.first());
    const std::size_t m = first_lowest_point(path_of_stripe(s), limit);
    expect(report, last_lowest_point(path_of_stripe(image), limit) + 2 == m,
           where + ": m-2 is not the last lowest point of phi(" + s.to_string() + ")");
    expect(report, images.insert(image).second,
           where + ": phi not injective at " + image.to_string());
    expect(report, phi_inverse(image, size, d) == s,
           where + ": phi_inverse(phi(s)) != s for " + s.to_string());
  }
  expect(report, images == std::set<HorizontalStripe>(lower.begin(), lower.end()),
         where + ": phi image differs from H_{d-1}");
  for (const HorizontalStripe& t : lower) {
    expect(report, phi(phi_inverse(t, size, d), size, d) == t,
           where + ": phi(phi_inverse(t)) != t for " + t.to_string());
  }
}

void sweep_shadows(SweepReport& report, const LocusSize& size, int d, const Partition& lambda) {
  const std::string where = label(size, d, lambda);
  const std::vector<HorizontalStripe> wide = h_wid_set(lambda, size, d);
  std::set<HorizontalStripe> images;
  for (const HorizontalStripe& s : h_plus_set(lambda, d)) {
    const HorizontalStripe image = left_shadow(s, size, d);
    expect(report, images.insert(image).second,
           where + ": left shadow not injective at " + image.to_string());
    expect(report, right_shadow(image, size, d) == s,
           where + ": right(left(s)) != s for " + s.to_string());
  }
  expect(report, images == std::set<HorizontalStripe>(wide.begin(), wide.end()),
         where + ": left shadow image differs from H^wid_d");
  for (const HorizontalStripe& t : wide) {
    expect(report, left_shadow(right_shadow(t, size, d), size, d) == t,
           where + ": left(right(t)) != t for " + t.to_string());
  }
}

template <typename Body>
void guarded(SweepReport& report, const std::string& where, Body&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    ++report.checks;
    report.failures.push_back(where + ": " + e.what());
  }
}

}  // namespace

SweepReport check_formulas(int max_n) {
  SweepReport report{"formulas", 0, {}};
  for (const LocusSize& size : locus_sizes_up_to(max_n)) {
    guarded(report, label(size), [&] {
      const SchurPoly signed_route = grfrob_signed(size);
      const SchurPoly positive_route = grfrob_positive(size);
      const SchurPoly width_route = grfrob_width(size);
      expect(report, signed_route == positive_route, label(size) + ": signed != positive");
      expect(report, signed_route == width_route, label(size) + ": signed != width");
      expect(report, signed_route.nonnegative(), label(size) + ": negative coefficient");
      expect(report, width_route.at_q_one() == frob_total(size),
             label(size) + ": q=1 specialization differs from h[h2]*h_a");
      expect(report, hilbert_series(width_route).at_one() == locus_size(size),
             label(size) + ": Hilbert series at q=1 differs from |M_{n,a}|");
    });
  }
  return report;
}

SweepReport check_bijections(int max_n) {
  SweepReport report{"bijections", 0, {}};
  for (const LocusSize& size : locus_sizes_up_to(max_n)) {
    for (int d = 0; d <= size.pairs(); ++d) {
      for (const Partition& lambda : partitions_of(size.n(), size.bound(d))) {
        guarded(report, label(size, d, lambda), [&] {
          if (d > 0) sweep_phi(report, size, d, lambda);
          sweep_shadows(report, size, d, lambda);
        });
      }
    }
  }
  return report;
}

SweepReport check_width(int max_size) {
  SweepReport report{"width", 0, {}};
  for (int total = 0; total <= max_size; ++total) {
    for (const Partition& lambda : partitions_of(total)) {
      for (int k = 0; k <= total; ++k) {
        for (const Partition& mu : partitions_of(total - k)) {
          if (!is_horizontal_stripe(lambda, mu)) continue;
          const HorizontalStripe s(lambda, mu);
          const int by_pairs = width_by_pairs(s);
          expect(report, by_pairs == width_by_reversed_prefix(s),
                 s.to_string() + ": pair width != reversed-prefix width");
          expect(report, by_pairs == width(s), s.to_string() + ": pair width != closed form");
        }
      }
    }
  }
  return report;
}

SweepReport check_dim_bijection(int max_n) {
  SweepReport report{"dim", 0, {}};
  for (const LocusSize& size : locus_sizes_up_to(max_n)) {
    guarded(report, label(size), [&] {
      std::set<HorizontalStripe> index;
      for (const IndexedStripe& e : width_index_stripes(size)) index.insert(e.stripe);
      std::set<DimImage> images;
      const std::vector<InvolutionPoint> locus = enumerate_locus(size);
      for (const InvolutionPoint& w : locus) {
        const DimImage image = dim_bijection(w);
        expect(report, image.tableau.is_standard() && index.count(image.stripe) == 1,
               label(size) + ": image of " + w.to_string() + " outside DIM");
        expect(report, images.insert(image).second,
               label(size) + ": collision at " + w.to_string());
      }
      expect(report, mpz_class(static_cast<unsigned long>(images.size())) == locus_size(size),
             label(size) + ": image size differs from |M_{n,a}|");
    });
  }
  return report;
}

}  // namespace invharm
