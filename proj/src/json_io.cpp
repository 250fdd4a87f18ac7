#include "invharm/json_io.hpp"

#include "invharm/errors.hpp"

namespace invharm {

using json = nlohmann::ordered_json;

json to_json(const mpz_class& value) {
  if (mpz_fits_slong_p(value.get_mpz_t())) return json(value.get_si());
  return json(value.get_str());
}

json to_json(const Partition& p) { return json(p.vec()); }

json to_json(const HorizontalStripe& s) {
  return json{{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}};
}

json to_json(const LatticePath& path) { return json(path.to_string()); }

json to_json(const QPoly& poly) {
  json out = json::array();
  for (const mpz_class& c : poly.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const SchurPoly& f) {
  json terms = json::array();
  for (const auto& [lambda, c] : f.terms()) {
    terms.push_back(json{{"partition", to_json(lambda)}, {"coeffs", to_json(c)}});
  }
  return json{{"terms", std::move(terms)}};
}

json to_json(const Tableau& t) { return json(t.rows()); }

json to_json(const MatchingMonomial& m) {
  json out = json::array();
  for (const auto& [i, j] : m.pairs()) out.push_back(json::array({i, j}));
  return out;
}

json to_json(const InvolutionPoint& w) {
  json pairs = json::array();
  for (const auto& [i, j] : w.pairs()) pairs.push_back(json::array({i, j}));
  return json{{"n", w.n()}, {"pairs", std::move(pairs)}, {"fixed", w.fixed_points()}};
}

json to_json(const BasisVerdict& verdict) {
  return json{{"n", verdict.n},
              {"a", verdict.a},
              {"hilbert", to_json(verdict.hilbert)},
              {"frobenius", to_json(verdict.frobenius)["terms"]},
              {"basis_check", verdict.pass ? "PASS" : "FAIL"},
              {"profile", verdict.profile}};
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArguments("partition JSON must be an array");
  std::vector<int> parts;
  for (const json& x : j) {
    if (!x.is_number_integer()) throw InvalidArguments("partition JSON entries must be integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

HorizontalStripe stripe_from_json(const json& j) {
  if (!j.is_object() || !j.contains("outer") || !j.contains("inner")) {
    throw InvalidArguments("stripe JSON needs \"outer\" and \"inner\"");
  }
  return HorizontalStripe(partition_from_json(j.at("outer")), partition_from_json(j.at("inner")));
}

SchurPoly schur_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw InvalidArguments("Schur JSON needs a \"terms\" array");
  }
  SchurPoly out;
  for (const json& term : j.at("terms")) {
    std::vector<mpz_class> coeffs;
    for (const json& c : term.at("coeffs")) {
      if (c.is_number_integer()) {
        coeffs.emplace_back(c.get<long>());
      } else if (c.is_string()) {
        coeffs.emplace_back(c.get<std::string>());
      } else {
        throw InvalidArguments("Schur JSON coefficient must be an integer");
      }
    }
    out.add_term(partition_from_json(term.at("partition")), QPoly(std::move(coeffs)));
  }
  return out;
}

}  // namespace invharm
