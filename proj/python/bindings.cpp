#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "orbitcalc/algebra_io.hpp"
#include "orbitcalc/calculus.hpp"
#include "orbitcalc/errors.hpp"
#include "orbitcalc/oracles.hpp"
#include "orbitcalc/orbit.hpp"

namespace py = pybind11;
using namespace orbitcalc;

namespace {

py::dict witness_dict(const Witness& w) {
  py::dict d;
  d["root"] = w.root;
  d["kind"] = w.kind == WitnessKind::CartanDirection ? "cartan" : "lowering";
  d["values"] = w.values;
  d["span_residual"] = w.span_residual;
  d["cartan_residual"] = w.cartan_residual;
  d["root_vector_residual"] = w.root_vector_residual;
  d["target_value"] = w.target_value;
  d["passed"] = w.passed;
  return d;
}

py::dict orbit_dict(const RootSystem& rs, const std::vector<int>& labels) {
  const Irrep irrep = build_irrep(rs, HighestWeight{labels});
  const MomentumFunctional lambda = momentum(irrep);
  const RealVector z = z_diamond(lambda, rs.kil);
  const OrbitData od = stabilizer_split(rs.algebra, z, rs.kil);
  const StrukReport sr = verify_struk(od, rs, lambda);
  const MomentumChecks mc = check_momentum(rs, irrep, lambda);
  py::dict d;
  d["lambda"] = lambda.values;
  d["z_diamond"] = z;
  d["k_basis"] = od.k_basis;
  d["m_basis"] = od.m_basis;
  d["dim_k"] = sr.dim_k;
  d["dim_m"] = sr.dim_m;
  d["labels"] = mc.labels;
  d["lowering_norms"] = mc.lowering_norms;
  d["k_distance"] = sr.k_distance;
  d["m_distance"] = sr.m_distance;
  d["stabilizer_roots"] = sr.stabilizer_roots;
  d["passed"] = sr.passed;
  return d;
}

py::dict verify_dict(const RootSystem& rs, const std::vector<int>& labels, bool bimodule,
                     std::size_t budget) {
  TheoremOptions opts;
  opts.bimodule = bimodule;
  opts.bimodule_budget = budget;
  const CotangentReport r = verify_main_theorem(rs, HighestWeight{labels}, opts);
  py::dict d;
  d["dim_g"] = r.dim_g;
  d["dim_g_lambda"] = r.dim_g_lambda;
  d["dim_g_o"] = r.dim_g_o;
  d["N"] = r.dim_h;
  d["dim_Q"] = r.q.dim_q;
  d["dim_Q_tight"] = r.q.dim_q_tight;
  d["dim_Q_loose"] = r.q.dim_q_loose;
  d["dim_bimodule"] = r.dim_bimodule ? py::object(py::int_(*r.dim_bimodule)) : py::object(py::none());
  d["annihilator_distance"] = r.q.annihilator_distance;
  d["leibniz_residual"] = r.leibniz_residual;
  py::list ws;
  for (const auto& w : r.witnesses) ws.append(witness_dict(w));
  d["witnesses"] = ws;
  d["trivial"] = r.trivial;
  d["verdict"] = r.verdict;
  return d;
}

}  // namespace

PYBIND11_MODULE(_orbitcalc, m) {
  m.doc() = "Root data, highest-weight irreps, coadjoint orbits and first-order calculi";
  m.attr("__version__") = ORBITCALC_VERSION;

  auto base = py::register_exception<Error>(m, "OrbitcalcError");
  py::register_exception<UnreachableWeight>(m, "UnreachableWeight", base.ptr());
  py::register_exception<InvalidWeight>(m, "InvalidWeight", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<SpecError>(m, "SpecError", base.ptr());

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def_property_readonly("label", &LieAlgebra::label)
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("basis_labels", &LieAlgebra::basis_labels)
      .def_property_readonly("defining_rep", &LieAlgebra::defining_rep)
      .def("structure_constant", &LieAlgebra::structure_constant)
      .def("bracket", [](const LieAlgebra& a, const Vector& w, const Vector& z) {
        return bracket(a, Element(w), Element(z)).coeffs;
      })
      .def("killing", [](const LieAlgebra& a, const Vector& w, const Vector& z) {
        return killing(a, Element(w), Element(z));
      })
      .def("check", [](const LieAlgebra& a) {
        py::dict d;
        for (const auto& item : check_algebra(a).items)
          d[py::str(item.name)] = py::make_tuple(item.passed, item.residual);
        return d;
      })
      .def("to_json", [](const LieAlgebra& a) { return io::algebra_to_json(a).dump(); });

  m.def("builtin", &algebras::by_name, py::arg("name"));
  m.def("direct_sum", &algebras::direct_sum);
  m.def("algebra_from_json", [](const std::string& text) {
    try {
      return io::algebra_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw SpecError(e.what());
    }
  });

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init([](LieAlgebra a) { return analyze(std::move(a)); }), py::arg("algebra"))
      .def_property_readonly("algebra", [](const RootSystem& rs) { return rs.algebra; })
      .def_property_readonly("rank", [](const RootSystem& rs) { return rs.roots.rank(); })
      .def_property_readonly("num_roots", [](const RootSystem& rs) { return rs.roots.size(); })
      .def_property_readonly("num_positive", [](const RootSystem& rs) { return rs.roots.positive.size(); })
      .def_property_readonly("num_simple", [](const RootSystem& rs) { return rs.roots.simple.size(); })
      .def_property_readonly("roots", [](const RootSystem& rs) {
        std::vector<RealVector> out;
        for (const auto& r : rs.roots.roots) out.push_back(r.values);
        return out;
      })
      .def_property_readonly("simple_coordinates", [](const RootSystem& rs) { return rs.roots.simple_coordinates; })
      .def_property_readonly("cartan_matrix", [](const RootSystem& rs) { return rs.cartan_matrix; })
      .def_property_readonly("killing_gram", [](const RootSystem& rs) { return rs.kil.gram(); })
      .def("triple_residuals", [](const RootSystem& rs) {
        std::vector<double> out;
        for (const auto& t : rs.triples) out.push_back(triple_residuals(rs.algebra, rs.roots, t).max());
        return out;
      })
      .def("triple", [](const RootSystem& rs, int k) {
        if (k < 0 || k >= static_cast<int>(rs.triples.size())) throw py::index_error();
        const SL2Triple& t = rs.triples[static_cast<size_t>(k)];
        return py::make_tuple(t.h.coeffs, t.e.coeffs, t.f.coeffs);
      });

  py::class_<Irrep>(m, "Irrep")
      .def_property_readonly("dim", &Irrep::dim)
      .def_property_readonly("labels", [](const Irrep& r) { return r.highest_weight.dynkin_labels; })
      .def_property_readonly("matrices", [](const Irrep& r) { return r.rep.matrices; })
      .def_property_readonly("highest_vector", [](const Irrep& r) { return r.highest_vector; })
      .def_property_readonly("weights", [](const Irrep& r) {
        std::vector<std::pair<std::vector<int>, int>> out;
        for (const auto& w : r.weights) out.emplace_back(w.dynkin, w.multiplicity());
        return out;
      });

  m.def("build_irrep", [](const RootSystem& rs, const std::vector<int>& labels) {
    return build_irrep(rs, HighestWeight{labels});
  }, py::arg("root_system"), py::arg("labels"));
  m.def("weyl_dimension", [](const RootSystem& rs, const std::vector<int>& labels) {
    return oracles::weyl_dimension(rs.roots, rs.kil, HighestWeight{labels});
  });
  m.def("freudenthal_multiplicities", [](const RootSystem& rs, const std::vector<int>& labels) {
    py::dict out;
    for (const auto& [w, m] : oracles::freudenthal_multiplicities(rs.roots, rs.kil, HighestWeight{labels}))
      out[py::tuple(py::cast(w))] = m;
    return out;
  });
  m.def("orbit", &orbit_dict, py::arg("root_system"), py::arg("labels"));
  m.def("verify", &verify_dict, py::arg("root_system"), py::arg("labels"),
        py::arg("bimodule") = true, py::arg("budget") = 4096);
}
