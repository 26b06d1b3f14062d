#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilpair/invariants.hpp"
#include "nilpair/json_io.hpp"

namespace py = pybind11;
using namespace nilpair;

namespace {

catalog::Params to_params(const py::kwargs& kwargs) {
  catalog::Params params;
  for (auto item : kwargs) {
    std::string key = py::str(item.first);
    if (py::isinstance<py::int_>(item.second)) {
      params[key] = Rational(item.second.cast<long long>());
    } else {
      params[key] = Rational::parse(py::str(item.second));
    }
  }
  return params;
}

py::dict invariants_dict(const LieAlgebra& alg) {
  InvariantRecord inv = invariants_of(alg);
  py::dict out;
  out["dim"] = alg.dim();
  out["dimL2"] = alg.derived_subalgebra().rank();
  out["dimZ"] = alg.center().rank();
  out["dimM"] = inv.multiplier;
  out["s"] = inv.s;
  out["t"] = inv.t;
  return out;
}

}  // namespace

PYBIND11_MODULE(_nilpair, m) {
  m.doc() = "exact invariants and pair classification for nilpotent Lie algebras";

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("label", &LieAlgebra::label)
      .def("bracket_table",
           [](const LieAlgebra& alg) {
             py::dict out;
             for (const auto& [pair, coeffs] : alg.sc().stored()) {
               py::dict cc;
               for (const auto& [k, v] : coeffs) cc[py::int_(k + 1)] = v.to_string();
               out[py::make_tuple(pair.first + 1, pair.second + 1)] = cc;
             }
             return out;
           })
      .def("validate", [](const LieAlgebra& alg) { return alg.validate().ok(); })
      .def("is_nilpotent", [](const LieAlgebra& alg) { return alg.is_nilpotent(); })
      .def("nilpotency_class", [](const LieAlgebra& alg) { return alg.nilpotency().nil_class; })
      .def("derived_dim", [](const LieAlgebra& alg) { return alg.derived_subalgebra().rank(); })
      .def("center_dim", [](const LieAlgebra& alg) { return alg.center().rank(); })
      .def("to_json", [](const LieAlgebra& alg) { return algebra_to_json(alg).dump(); })
      .def("__repr__", [](const LieAlgebra& alg) {
        std::string name = alg.label().empty() ? "?" : alg.label();
        return "<LieAlgebra " + name + " dim=" + std::to_string(alg.dim()) + ">";
      });

  m.def(
      "algebra",
      [](const std::string& name, const py::kwargs& kwargs) {
        return catalog::lookup(name, to_params(kwargs));
      },
      py::arg("name"), "build a catalog algebra, e.g. algebra('H', r=2), algebra('L_{6,22}', eps=-1)");
  m.def("from_json",
        [](const std::string& text) { return algebra_from_json(nlohmann::json::parse(text)); });
  m.def("abelian", &abelian, py::arg("k"));
  m.def("heisenberg", &heisenberg, py::arg("r"));
  m.def("direct_sum", &direct_sum);
  m.def("catalog_names", &catalog::listing_names);

  m.def("multiplier_dim", [](const LieAlgebra& alg) { return multiplier_dim(alg); });
  m.def("s_invariant", [](const LieAlgebra& alg) { return s_invariant(alg); });
  m.def("t_invariant", [](const LieAlgebra& alg) { return t_invariant(alg); });
  m.def("invariants", &invariants_dict);

  m.def(
      "pair_invariants",
      [](const LieAlgebra& n, const LieAlgebra& k) {
        SplitPair p = make_split_pair(n, k);
        InvariantRecord inv = pair_invariants_of(p);
        py::dict out;
        out["n"] = p.n;
        out["m"] = p.m;
        out["dimN2"] = p.d;
        out["dimK2"] = p.c;
        out["dimM"] = inv.multiplier;
        out["s"] = inv.s;
        out["t"] = inv.t;
        return out;
      },
      py::arg("N"), py::arg("K"));

  m.def(
      "classify_json",
      [](int sigma, std::optional<bool> allow_trivial_k) {
        classifier::ClassifyOptions options;
        options.allow_trivial_k = allow_trivial_k;
        return classification_to_json(classifier::classify(sigma, options)).dump();
      },
      py::arg("s"), py::arg("allow_trivial_k") = std::nullopt);
  m.def("verify_json", [](int sigma) {
    return verify_to_json(classifier::verify_theorems(sigma)).dump();
  });
  m.def("self_check_ok", [](int max_dim) { return catalog::self_check(max_dim).all_ok; },
        py::arg("max_dim") = 12);

  m.attr("__version__") = "0.1.0";
}
