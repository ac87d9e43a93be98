#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "okbody/cli.hpp"
#include "okbody/cones.hpp"
#include "okbody/serialize.hpp"
#include "okbody/zariski.hpp"

namespace py = pybind11;

namespace {

using namespace okb;

Rat entry_to_rat(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rat(Int(py::cast<std::string>(py::str(h))));
  return rat_from_string(py::cast<std::string>(h));
}

QDivisor to_divisor(const py::sequence& seq) {
  QVec v;
  for (const auto& h : seq) v.push_back(entry_to_rat(h));
  return QDivisor(std::move(v));
}

DivisorClass to_curve(const py::sequence& seq) {
  IVec v;
  for (const auto& h : seq) v.push_back(Int(py::cast<std::string>(py::str(h))));
  return DivisorClass(std::move(v));
}

// exact values cross the boundary as parsed JSON, rationals as "p/q" strings
py::object out(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_okbody, m) {
  m.doc() = "Newton-Okounkov bodies on (weak) del Pezzo surfaces";

  py::register_exception<okb::DomainError>(m, "DomainError");

  py::class_<SurfaceModel>(m, "Surface")
      .def_property_readonly("name", &SurfaceModel::name)
      .def_readonly("rank", &SurfaceModel::rank)
      .def("__repr__", [](const SurfaceModel& s) { return "Surface(" + s.name() + ")"; });

  m.def("surface", [](const std::string& name) { return make_surface(name); });
  m.def("negative_curves",
        [](const SurfaceModel& s) { return out(json(s.negative_curves)); });
  m.def("nef_extremal_rays",
        [](const SurfaceModel& s) { return out(json(nef_extremal_rays(s))); });
  m.def("integrality_bound",
        [](const SurfaceModel& s) { return out(json(integrality_bound(s).str())); });
  m.def("zariski", [](const SurfaceModel& s, const py::sequence& d) {
    return out(json(zariski_decompose(s, to_divisor(d))));
  });
  m.def("okounkov_polygon",
        [](const SurfaceModel& s, const py::sequence& d, const py::sequence& c) {
          return out(json(okounkov_polygon(s, to_divisor(d), FlagSpec{to_curve(c)})));
        });
  m.def("hilbert_polynomial", [](const SurfaceModel& s, const py::sequence& d) {
    return out(json(hilbert_polynomial(s, to_divisor(d))));
  });
  m.def("normal_defect", [](const SurfaceModel& s, const py::sequence& d,
                            const py::sequence& c) {
    return out(json(normal_defect_report(s, to_divisor(d), to_curve(c))));
  });
  m.def("optimize", [](const SurfaceModel& s, const py::sequence& d) {
    return out(json(optimize(s, to_divisor(d))));
  });
  m.def(
      "global_body",
      [](const SurfaceModel& s, const py::sequence& c, int degree_bound) {
        GlobalBody body = global_body(s, FlagSpec{to_curve(c)});
        auto gens = global_semigroup_generators(body, Int(degree_bound));
        auto cox = cox_generators_report(s, body);
        json jg = json::array();
        for (const auto& g : gens.generators) {
          json row = json::array();
          for (const auto& x : g) row.push_back(x.str());
          jg.push_back(row);
        }
        return out(json{{"body", body},
                        {"semigroup_generators", jg},
                        {"rays_form_hilbert_basis", gens.verified},
                        {"cox_generators", cox}});
      },
      py::arg("surface"), py::arg("curve"), py::arg("degree_bound") = 6);
}
