#pragma once

#include <json.hpp>

#include "invharm/involution.hpp"
#include "invharm/lattice_path.hpp"
#include "invharm/oracle.hpp"
#include "invharm/partition.hpp"
#include "invharm/schur.hpp"
#include "invharm/tableau.hpp"

namespace invharm {

// Big integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise.
nlohmann::ordered_json to_json(const mpz_class& value);
nlohmann::ordered_json to_json(const Partition& p);
nlohmann::ordered_json to_json(const HorizontalStripe& s);
nlohmann::ordered_json to_json(const LatticePath& path);
nlohmann::ordered_json to_json(const QPoly& poly);
// {"terms": [{"partition": [...], "coeffs": [...]}, ...]}
nlohmann::ordered_json to_json(const SchurPoly& f);
nlohmann::ordered_json to_json(const Tableau& t);
nlohmann::ordered_json to_json(const MatchingMonomial& m);
nlohmann::ordered_json to_json(const InvolutionPoint& w);
nlohmann::ordered_json to_json(const BasisVerdict& verdict);

// Throw InvalidArguments on malformed input.
Partition partition_from_json(const nlohmann::ordered_json& j);
HorizontalStripe stripe_from_json(const nlohmann::ordered_json& j);
SchurPoly schur_from_json(const nlohmann::ordered_json& j);

}  // namespace invharm
