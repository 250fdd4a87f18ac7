#pragma once

#include <cstddef>
#include <vector>

#include "invharm/lattice_path.hpp"
#include "invharm/partition.hpp"

namespace invharm {

// Smallest / largest x in [0, limit] at which the path attains its minimum
// height over that window.
std::size_t first_lowest_point(const LatticePath& path, std::size_t limit);
std::size_t last_lowest_point(const LatticePath& path, std::size_t limit);

// Stripe sets indexed by (lambda, d).
//   h_set:      outer/mu with mu even, |mu| = 2d.
//   h_plus_set: members of h_set whose path stays weakly above the axis on
//               [0, lambda_1].
//   h_wid_set:  outer/mu with mu even, |mu| = n - a, width = n - 2d + a.
std::vector<HorizontalStripe> h_set(const Partition& outer, int d);
std::vector<HorizontalStripe> h_plus_set(const Partition& outer, int d);
std::vector<HorizontalStripe> h_wid_set(const Partition& outer, const LocusSize& size, int d);

// Lowers a stripe from H_d \ H+_d to H_{d-1} by turning the two SE steps
// ending at the first lowest point upward.
HorizontalStripe phi(const HorizontalStripe& stripe, const LocusSize& size, int d);
// Turns the two NE steps after the last lowest point downward.
// Neither map demands lambda_1 <= n - 2d + a up front; the bijection is only
// guaranteed under that bound, and outside it a missing pair of turning steps
// is reported as a DomainViolation.
HorizontalStripe phi_inverse(const HorizontalStripe& stripe, const LocusSize& size, int d);

// H+_d -> H^wid_d: keep the columns whose reflection partner lies within
// [n - 2d + a].
HorizontalStripe left_shadow(const HorizontalStripe& stripe, const LocusSize& size, int d);
// H^wid_d -> H+_d: columns of [n - 2d + a] that are not the down index of any
// reflection pair.
HorizontalStripe right_shadow(const HorizontalStripe& stripe, const LocusSize& size, int d);

}  // namespace invharm
