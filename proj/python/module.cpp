#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "invharm/bijections.hpp"
#include "invharm/errors.hpp"
#include "invharm/frobenius.hpp"
#include "invharm/involution.hpp"
#include "invharm/oracle.hpp"
#include "invharm/sweeps.hpp"

namespace py = pybind11;
using namespace invharm;

namespace {

py::int_ to_py(const mpz_class& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

py::list to_py(const QPoly& poly) {
  py::list out;
  for (const mpz_class& c : poly.coeffs()) out.append(to_py(c));
  return out;
}

py::tuple key(const Partition& p) { return py::tuple(py::cast(p.vec())); }

py::dict to_py(const SchurPoly& f) {
  py::dict out;
  for (const auto& [lambda, c] : f.terms()) out[key(lambda)] = to_py(c);
  return out;
}

py::dict to_py(const SweepReport& r) {
  py::dict out;
  out["name"] = r.name;
  out["checks"] = r.checks;
  out["failures"] = r.failures;
  out["passed"] = r.pass();
  return out;
}

HorizontalStripe stripe(const std::vector<int>& outer, const std::vector<int>& inner) {
  return HorizontalStripe(Partition(outer), Partition(inner));
}

OracleConfig config_for(std::optional<int> max_n) {
  OracleConfig config = OracleConfig::from_environment();
  if (max_n) config.max_n = *max_n;
  return config;
}

SchurPoly grfrob(int n, int a, const std::string& method, std::optional<int> max_n) {
  const LocusSize size(n, a);
  if (method == "signed") return grfrob_signed(size);
  if (method == "positive") return grfrob_positive(size);
  if (method == "width") return grfrob_width(size);
  if (method == "oracle") return frobenius_of_character(graded_character(size, config_for(max_n)));
  throw InvalidArguments("unknown method '" + method + "'");
}

}  // namespace

PYBIND11_MODULE(_invharm, m) {
  m.doc() = "Graded Frobenius images of involution loci";

  py::register_exception<InvalidArguments>(m, "InvalidArguments", PyExc_ValueError);
  py::register_exception<DomainViolation>(m, "DomainViolation", PyExc_ValueError);
  py::register_exception<ShapeMismatch>(m, "ShapeMismatch", PyExc_ValueError);
  py::register_exception<InvalidMatrix>(m, "InvalidMatrix", PyExc_ValueError);
  py::register_exception<NotInImage>(m, "NotInImage", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("partitions_of",
        [](int n, std::optional<int> max_first) {
          std::vector<std::vector<int>> out;
          for (const Partition& p : partitions_of(n, max_first)) out.push_back(p.vec());
          return out;
        },
        py::arg("n"), py::arg("max_first") = py::none());
  m.def("conjugate", [](const std::vector<int>& p) { return conjugate(Partition(p)).vec(); });
  m.def("syt_count", [](const std::vector<int>& p) { return to_py(syt_count(Partition(p))); });

  m.def("lattice_path",
        [](const std::vector<int>& outer, const std::vector<int>& inner) {
          return path_of_stripe(stripe(outer, inner)).to_string();
        },
        py::arg("outer"), py::arg("inner"));
  m.def("reflection_pairs",
        [](const std::vector<int>& outer, const std::vector<int>& inner) {
          std::vector<std::pair<int, int>> out;
          for (const ReflectionPair& p : reflection_pairs(path_of_stripe(stripe(outer, inner)))) {
            out.emplace_back(p.up_index, p.down_index);
          }
          return out;
        },
        py::arg("outer"), py::arg("inner"));
  m.def("width",
        [](const std::vector<int>& outer, const std::vector<int>& inner) {
          return width(stripe(outer, inner));
        },
        py::arg("outer"), py::arg("inner"));

  // the four stripe maps return the new inner partition
  using StripeMap = HorizontalStripe (*)(const HorizontalStripe&, const LocusSize&, int);
  const auto bind_map = [&m](const char* name, StripeMap f) {
    m.def(name,
          [f](const std::vector<int>& outer, const std::vector<int>& inner, int n, int a, int d) {
            return f(stripe(outer, inner), LocusSize(n, a), d).inner().vec();
          },
          py::arg("outer"), py::arg("inner"), py::arg("n"), py::arg("a"), py::arg("d"));
  };
  bind_map("phi", &phi);
  bind_map("phi_inverse", &phi_inverse);
  bind_map("left_shadow", &left_shadow);
  bind_map("right_shadow", &right_shadow);

  m.def("grfrob",
        [](int n, int a, const std::string& method, std::optional<int> max_n) {
          return to_py(grfrob(n, a, method, max_n));
        },
        py::arg("n"), py::arg("a"), py::arg("method") = "width", py::arg("max_n") = py::none());
  m.def("hilbert",
        [](int n, int a, const std::string& method, std::optional<int> max_n) {
          const LocusSize size(n, a);
          if (method == "oracle") return to_py(graded_hilbert(size, config_for(max_n)));
          if (method != "formula") throw InvalidArguments("unknown method '" + method + "'");
          return to_py(hilbert_series(grfrob_width(size)));
        },
        py::arg("n"), py::arg("a"), py::arg("method") = "formula", py::arg("max_n") = py::none());
  m.def("frob_total", [](int n, int a) { return to_py(frob_total(LocusSize(n, a))); });
  m.def("locus_size", [](int n, int a) { return to_py(locus_size(LocusSize(n, a))); });

  m.def("enumerate_locus", [](int n, int a) {
    std::vector<std::vector<int>> out;
    for (const InvolutionPoint& w : enumerate_locus(LocusSize(n, a))) out.push_back(w.images());
    return out;
  });
  m.def("rsk_symmetric", [](const IntMatrix& matrix) { return rsk_symmetric(matrix).rows(); });
  m.def("dim_bijection",
        [](const std::vector<int>& images) {
          const DimImage image = dim_bijection(InvolutionPoint::from_images(images));
          return py::make_tuple(image.tableau.rows(), image.stripe.outer().vec(),
                                image.stripe.inner().vec());
        },
        py::arg("images"));

  m.def("verify_basis",
        [](int n, int a, std::optional<int> max_n) {
          const BasisVerdict v = verify_monomial_basis(LocusSize(n, a), config_for(max_n));
          py::dict out;
          out["n"] = v.n;
          out["a"] = v.a;
          out["hilbert"] = to_py(v.hilbert);
          out["frobenius"] = to_py(v.frobenius);
          out["profile"] = v.profile;
          out["passed"] = v.pass;
          out["reason"] = v.reason;
          return out;
        },
        py::arg("n"), py::arg("a"), py::arg("max_n") = py::none());

  m.def("check_formulas", [](int max_n) { return to_py(check_formulas(max_n)); });
  m.def("check_bijections", [](int max_n) { return to_py(check_bijections(max_n)); });
  m.def("check_width", [](int max_size) { return to_py(check_width(max_size)); });
  m.def("check_dim_bijection", [](int max_n) { return to_py(check_dim_bijection(max_n)); });
}
