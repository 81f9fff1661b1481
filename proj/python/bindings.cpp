#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stp/closures.hpp"
#include "stp/errors.hpp"
#include "stp/facets.hpp"
#include "stp/io.hpp"
#include "stp/locked.hpp"
#include "stp/oracle.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object to_python(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_python(item));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_python(value);
      return out;
    }
  }
}

stp::Graph parse(const std::string& text) { return stp::parse_edge_list(text).graph; }

py::object facets(const std::string& text, bool verify) {
  const auto fs = stp::spanning_tree_polytope_system(parse(text));
  json out = stp::system_to_json(fs);
  if (verify) out["report"] = stp::report_to_json(stp::verify_system(fs.graph, fs.system), fs.graph, fs.system);
  return to_python(out);
}

py::object locked(const std::string& text) {
  const auto g = parse(text);
  json out = json::array();
  for (const auto& b : stp::blocks(g).blocks) {
    if (b.num_vertices() < 3) continue;
    const auto d = stp::extract(b);
    json certs = json::array();
    for (const auto& c : stp::enumerate_locked_subgraphs(d.graph)) certs.push_back(stp::certificate_to_json(c, d.graph));
    out.push_back({{"block", d.graph.vertex_labels()}, {"locked", certs}});
  }
  return to_python(out);
}

py::object closures(const std::string& text) {
  const auto g = parse(text);
  json out = json::array();
  for (const auto& b : stp::blocks(g).blocks) {
    if (b.num_vertices() < 3) continue;
    const auto d = stp::extract(b);
    json entry = {{"block", d.graph.vertex_labels()}, {"parallel", json::array()}, {"coparallel", json::array()}};
    for (const auto& c : stp::parallel_closures_graph(d.graph)) entry["parallel"].push_back(stp::closure_to_json(c, d.graph));
    for (const auto& c : stp::coparallel_closures_graph(d.graph)) {
      entry["coparallel"].push_back(stp::closure_to_json(c, d.graph));
    }
    out.push_back(entry);
  }
  return to_python(out);
}

py::object verify(const std::string& text, const std::string& system_json) {
  const auto g = parse(text);
  json j;
  try {
    j = json::parse(system_json);
  } catch (const json::parse_error& e) {
    throw stp::ParseError(e.what());
  }
  const auto sys = stp::system_from_json(j, g);
  return to_python(stp::report_to_json(stp::verify_system(g, sys), g, sys));
}

std::string tree_count(const std::string& text) {
  return stp::tree_count_determinant(parse(text)).str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Facet descriptions of spanning tree polytopes";

  auto input_error = py::register_exception<stp::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<stp::DisconnectedError>(m, "DisconnectedError", input_error.ptr());
  py::register_exception<stp::CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  m.def("facets", &facets, py::arg("edge_list"), py::arg("verify") = false,
        "Facet system of the spanning tree polytope as a SystemJSON dict.");
  m.def("locked", &locked, py::arg("edge_list"), "Locked subgraphs per 2-connected block.");
  m.def("closures", &closures, py::arg("edge_list"), "Parallel and coparallel closures per 2-connected block.");
  m.def("blocks", [](const std::string& text) {
    const auto g = parse(text);
    return to_python(stp::blocks_to_json(stp::blocks(g), g));
  }, py::arg("edge_list"));
  m.def("verify_json", &verify, py::arg("edge_list"), py::arg("system_json"));
  m.def("tree_count", [](const std::string& text) { return py::int_(py::str(tree_count(text))); },
        py::arg("edge_list"), "Number of spanning trees (matrix-tree theorem).");
  m.def("to_ine", [](const std::string& text) {
    return stp::to_ine(stp::spanning_tree_polytope_system(parse(text)).system);
  }, py::arg("edge_list"));
  m.def("to_lp", [](const std::string& text, bool relaxed) {
    return stp::to_lp(stp::spanning_tree_polytope_system(parse(text)), relaxed);
  }, py::arg("edge_list"), py::arg("relaxed_bounds") = false);
}
