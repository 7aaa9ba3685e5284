#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "groupcodes/classify.hpp"
#include "groupcodes/cyclic.hpp"
#include "groupcodes/decompose.hpp"
#include "groupcodes/errors.hpp"
#include "groupcodes/io.hpp"
#include "groupcodes/isomorphy.hpp"
#include "groupcodes/selftest.hpp"

namespace py = pybind11;
namespace gc = groupcodes;
using gc::io::Json;

namespace {

// Reports cross the boundary as compact JSON text; the Python layer decodes them.
std::string out(const Json& j) { return j.dump(); }

gc::Code load(const std::string& text) { return gc::io::parse_code(gc::io::parse_text(text, "<python>")); }

gc::GroupCode need_group(const gc::Code& c) {
  if (auto g = gc::GroupCode::view(c)) return *g;
  throw gc::Error(gc::Errc::precondition, "a group code is required");
}

gc::DecomposeOptions decompose_options(std::size_t max_partition_bits) {
  gc::DecomposeOptions o;
  o.max_partition_bits = max_partition_bits;
  return o;
}

}  // namespace

PYBIND11_MODULE(_groupcodes, m) {
  // Messages carry the error kind as a prefix, e.g. "parse-error: ...".
  py::register_exception<gc::Error>(m, "GroupCodesError", PyExc_ValueError);

  py::class_<gc::Code>(m, "Code")
      .def_static("from_json", &load, py::arg("text"))
      .def_static("from_file", &gc::io::read_code, py::arg("path"))
      .def("to_json", [](const gc::Code& c) { return out(gc::io::to_json(c)); })
      .def_property_readonly("q", &gc::Code::q)
      .def_property_readonly("length", &gc::Code::length)
      .def_property_readonly("is_group_code", &gc::Code::is_group_code)
      .def_property_readonly("words",
                             [](const gc::Code& c) {
                               std::vector<std::vector<unsigned>> ws;
                               for (const auto& w : c.words()) ws.emplace_back(w.begin(), w.end());
                               return ws;
                             })
      .def("__len__", &gc::Code::size)
      .def("__eq__", [](const gc::Code& a, const gc::Code& b) { return a == b; });

  m.def("parameters", [](const gc::Code& c) { return out(gc::io::to_json(gc::parameters(c))); });
  m.def("classify", [](const gc::Code& c) { return out(gc::io::to_json(gc::classify(c))); });
  m.def("certificates", [](const gc::Code& c) {
    std::vector<std::string> tags;
    for (auto t : gc::certificates(c)) tags.emplace_back(gc::to_string(t));
    return tags;
  });
  m.def(
      "is_decomposable",
      [](const gc::Code& c, std::size_t bits) { return gc::is_decomposable(c, decompose_options(bits)); },
      py::arg("code"), py::arg("max_partition_bits") = 24);
  m.def(
      "decompose",
      [](const gc::Code& c, std::size_t bits) { return out(gc::io::to_json(gc::decompose(c, decompose_options(bits)))); },
      py::arg("code"), py::arg("max_partition_bits") = 24);
  m.def("aut_group", [](const gc::Code& c) {
    const gc::GroupCode g = need_group(c);
    const gc::Decomposition d = gc::decompose(g);
    return out(gc::io::to_json(gc::aut_group(g, {}, &d)));
  });
  m.def("isomorphism", [](const gc::Code& a, const gc::Code& b) -> std::optional<std::string> {
    const auto ga = gc::GroupCode::view(a), gb = gc::GroupCode::view(b);
    if (ga && gb) {
      if (auto w = gc::gc_isomorphic(*ga, *gb)) return out(gc::io::to_json(*w));
    } else if (auto w = gc::code_isomorphic(a, b)) {
      return out(gc::io::to_json(*w));
    }
    return std::nullopt;
  });
  m.def("is_cyclic", &gc::is_cyclic);
  m.def("cyclic_report", [](const gc::Code& c) { return out(gc::io::to_json(gc::cyclic_report(c))); });
  m.def("interleave", [](const gc::Code& c, std::size_t copies) {
    gc::Interleaving il = gc::interleave(need_group(c), copies);
    return py::make_tuple(gc::Code(il.code), il.sigma.one_based());
  });
  m.def("join", [](const std::vector<gc::Code>& codes) {
    std::vector<gc::GroupCode> parts;
    for (const auto& c : codes) parts.push_back(need_group(c));
    return gc::Code(gc::join(parts));
  });
  m.def(
      "selftest",
      [](std::vector<int> ids, std::uint64_t seed) {
        gc::selftest::Options o;
        o.seed = seed;
        if (ids.empty())
          for (int i = 1; i <= gc::selftest::kCriterionCount; ++i) ids.push_back(i);
        py::list rows;
        for (int id : ids) {
          const auto r = gc::selftest::run_criterion(id, o);
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          rows.append(d);
        }
        return rows;
      },
      py::arg("ids") = std::vector<int>{}, py::arg("seed") = gc::selftest::Options{}.seed);
}
