#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "radgeo/complex.hpp"
#include "radgeo/morse.hpp"
#include "radgeo/radical.hpp"
#include "radgeo/suites.hpp"

namespace py = pybind11;
using namespace radgeo;

namespace {

// Reports and tables cross as JSON text; the Python side parses them.
std::string report_json(const Report& r) { return r.to_json().dump(); }

TypedComplex from_facets(const std::vector<std::vector<VertexId>>& facets) {
  TypedComplex c;
  c.add_type("v");
  VertexId top = 0;
  for (const auto& f : facets)
    for (auto v : f) top = std::max(top, v + 1);
  for (VertexId i = 0; i < top; ++i) c.add_vertex(0);
  for (const auto& f : facets) {
    if (f.empty()) throw py::value_error("empty facet");
    c.add_simplex(f);
  }
  return c;
}

}  // namespace

PYBIND11_MODULE(_radgeo, m) {
  m.doc() = "radical subgroups, 2-local geometry and collapse certificates";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<PermError>(m, "PermError", PyExc_ValueError);

  m.attr("source_dir") = RADGEO_SOURCE_DIR;
  m.attr("data_dir") = RADGEO_DATA_DIR;

  m.def("class_table_json", [](const std::string& name) {
    FiniteGroup g(small_group(name));
    return class_table_json(name, p_subgroups(g, 2)).dump();
  });
  m.def("small_group_names", &small_group_names);
  m.def("selftest_json", [] { return report_json(selftest_suite()); });
  m.def("small_groups_json", [](const std::string& golden) { return report_json(small_group_suite(golden)); });
  m.def("engine_properties_json", [](std::uint64_t seed, std::size_t n) { return report_json(engine_properties(seed, n)); },
        py::arg("seed") = 1, py::arg("complexes") = 50);
  m.def(
      "co3_json",
      [](const std::string& suite, const std::string& gens, std::uint64_t seed, bool enumerate_2b) {
        Co3Options o;
        o.seed = seed;
        o.enumerate_2b = enumerate_2b;
        py::gil_scoped_release release;
        Co3Session s(read_generators(gens), o);
        return report_json(s.run(suite));
      },
      py::arg("suite"), py::arg("gens"), py::arg("seed") = 1, py::arg("enumerate_2b") = false);

  m.def(
      "euler_by_orbit_counting",
      [](const std::vector<std::tuple<std::string, int, std::uint64_t>>& flags, std::uint64_t group_order) {
        std::vector<FlagTypeStabilizer> f;
        for (const auto& [name, size, order] : flags) f.push_back({name, size, order});
        // 128-bit result, handed over as a decimal string
        return int128_to_string(euler_by_orbit_counting(f, group_order));
      });
  m.def("reduced_betti", [](const std::vector<std::vector<VertexId>>& facets) {
    return from_facets(facets).betti().reduced;
  });
  m.def("reduced_euler", [](const std::vector<std::vector<VertexId>>& facets) {
    return from_facets(facets).euler_reduced();
  });
  m.def("greedy_collapse", [](const std::vector<std::vector<VertexId>>& facets) {
    auto c = from_facets(facets);
    auto r = greedy_collapse(c);
    return py::make_tuple(r.reached_point, r.certificate.steps.size(), r.certificate.terminal_hash);
  });
}
