// Python bindings. Modules cross the boundary as FPModule handles; reports cross as
// JSON text that the Python package decodes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "endoring/constructions.hpp"
#include "endoring/endoscope.hpp"
#include "endoring/errors.hpp"
#include "endoring/json_io.hpp"

namespace py = pybind11;
using namespace endoring;

namespace {

RingPtr ring_of(const std::vector<std::string>& vars, Coeff prime) { return make_ring(vars, prime); }

std::vector<Polynomial> polys(const RingPtr& ring, const std::vector<std::string>& text) {
  std::vector<Polynomial> out;
  for (const auto& t : text) out.push_back(parse_polynomial(t, ring));
  return out;
}

std::optional<DegreeWindow> window_of(const std::optional<std::pair<int, int>>& w) {
  if (!w) return std::nullopt;
  return DegreeWindow{w->first, w->second};
}

}  // namespace

PYBIND11_MODULE(_endoring, m) {
  m.doc() = "Endomorphism rings of finitely presented graded modules over F_p[x1..xn]";
  m.attr("DEFAULT_PRIME") = PrimeField::kDefaultPrime;

  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<FPModule>(m, "Module")
      .def_static("from_json", [](const std::string& text) { return module_from_json(Json::parse(text)); })
      .def("to_json", [](const FPModule& e) { return module_to_json(e).dump(); })
      .def_property_readonly("num_generators", &FPModule::num_generators)
      .def_property_readonly("generator_degrees", [](const FPModule& e) { return e.ambient().degrees; })
      .def_property_readonly("vars", [](const FPModule& e) { return e.ring()->names(); })
      .def_property_readonly("prime", [](const FPModule& e) { return e.ring()->prime(); })
      .def("hilbert_function",
           [](const FPModule& e, int lo, int hi) { return hilbert_function(e, lo, hi).values; })
      .def("__repr__", [](const FPModule& e) {
        return "<Module with " + std::to_string(e.num_generators()) + " generators over " +
               std::to_string(e.ring()->nvars()) + " variables>";
      });

  m.def("free_module", [](const std::vector<std::string>& vars, std::vector<int> degrees, Coeff prime) {
    return FPModule::free(ring_of(vars, prime), std::move(degrees));
  }, py::arg("vars"), py::arg("degrees"), py::arg("prime") = PrimeField::kDefaultPrime);
  m.def("cyclic_module", [](const std::vector<std::string>& vars, const std::vector<std::string>& relations,
                            Coeff prime) {
    auto ring = ring_of(vars, prime);
    std::vector<std::vector<Polynomial>> cols;
    for (auto& p : polys(ring, relations)) cols.push_back({p});
    return make_module(ring, {0}, cols);
  }, py::arg("vars"), py::arg("relations"), py::arg("prime") = PrimeField::kDefaultPrime);
  m.def("koszul_cycles", &koszul_cycles, py::arg("n"), py::arg("i"), py::arg("prime") = PrimeField::kDefaultPrime);
  m.def("generic_determinantal", [](std::size_t n, std::size_t mm, Coeff prime) {
    return generic_determinantal(n, mm, prime).module;
  }, py::arg("n"), py::arg("m"), py::arg("prime") = PrimeField::kDefaultPrime);
  m.def("one_relation_module", [](const std::vector<std::string>& vars, const std::vector<std::string>& entries,
                                  Coeff prime) {
    return one_relation_module(polys(ring_of(vars, prime), entries)).module;
  }, py::arg("vars"), py::arg("entries"), py::arg("prime") = PrimeField::kDefaultPrime);
  m.def("perfect_syzygy", &perfect_syzygy, py::arg("m"), py::arg("k"));

  m.def("direct_sum", &direct_sum);
  m.def("tensor", &tensor);
  m.def("hom", [](const FPModule& a, const FPModule& b) { return hom(a, b).module(); });
  m.def("dual", [](const FPModule& e) { return dual(e).module(); });
  m.def("end", [](const FPModule& e) { return EndAlgebra(e).underlying(); });
  m.def("auslander_dual", &auslander_dual);
  m.def("ext", &ext, py::arg("e"), py::arg("i"));
  m.def("tor", &tor, py::arg("a"), py::arg("b"), py::arg("i"));
  m.def("minimalize", [](const FPModule& e) { return minimalize(e).module; });
  m.def("nu", &nu);
  m.def("rank", [](const FPModule& e) { return rank(e); });
  m.def("depth", &depth);
  m.def("projective_dimension", &projective_dimension);
  m.def("is_reflexive", &is_reflexive);
  m.def("has_free_summand", &has_free_summand);
  m.def("betti", [](const FPModule& e) { return free_resolution(e).betti(); });

  m.def("verify_ausbr0_json", [](const FPModule& e, std::optional<std::pair<int, int>> w) {
    return report_to_json(verify_ausbr0(e, window_of(w))).dump();
  }, py::arg("e"), py::arg("window") = py::none());
  m.def("verify_adual_json", [](const FPModule& e, const FPModule& x, std::optional<std::pair<int, int>> w) {
    return report_to_json(verify_adual(e, x, window_of(w))).dump();
  }, py::arg("e"), py::arg("x"), py::arg("window") = py::none());
  m.def("verify_perfect_syzygy_json", [](const FPModule& mm, std::size_t k, std::optional<std::pair<int, int>> w) {
    return report_to_json(verify_perfect_syzygy_sequence(mm, k, window_of(w))).dump();
  }, py::arg("m"), py::arg("k"), py::arg("window") = py::none());
  m.def("radical_profile_json", [](const FPModule& e) { return profile_to_json(is_local_module(e)).dump(); });
  m.def("radical_blocks_json", [](const FPModule& a, const FPModule& b) {
    return block_profile_to_json(radical_block_profile(a, b)).dump();
  });
  m.def("generator_bounds_json", [](const FPModule& e) { return bound_to_json(generator_bound_report(e)).dump(); });
  m.def("endomorphism_trace_identity", [](const FPModule& e) {
    return endomorphism_trace(ModuleMorphism::identity(e));
  });
}
