#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treecolor/enumeration.hpp"
#include "treecolor/error.hpp"
#include "treecolor/maps.hpp"
#include "treecolor/paths.hpp"
#include "treecolor/verify.hpp"

namespace py = pybind11;
using namespace tc;

PYBIND11_MODULE(_treecolor, m) {
  m.doc() = "Colorings of binary tree pairs";
  py::register_exception<Error>(m, "TreecolorError", PyExc_ValueError);

  py::class_<BinaryTree>(m, "BinaryTree")
      .def(py::init(&BinaryTree::parse), py::arg("text"))
      .def_property_readonly("carets", &BinaryTree::carets)
      .def_property_readonly("internal",
                             [](const BinaryTree& t) {
                               std::vector<std::string> out;
                               for (const auto& a : t.internal()) out.push_back(a.str());
                               return out;
                             })
      .def("json", &BinaryTree::json)
      .def("__str__", &BinaryTree::str)
      .def("__repr__", [](const BinaryTree& t) { return "BinaryTree('" + t.str() + "')"; })
      .def("__eq__", [](const BinaryTree& a, const BinaryTree& b) { return a == b; })
      .def("__hash__", [](const BinaryTree& t) { return py::hash(py::str(t.str())); });

  py::class_<TreePair>(m, "TreePair")
      .def(py::init(&TreePair::parse), py::arg("text"))
      .def(py::init(&TreePair::make), py::arg("d"), py::arg("r"))
      .def_readonly("d", &TreePair::d)
      .def_readonly("r", &TreePair::r)
      .def("__str__", &TreePair::str)
      .def("__repr__", [](const TreePair& p) { return "TreePair('" + p.str() + "')"; })
      .def("__mul__", &multiply)
      .def("inverse", &invert)
      .def("reduced", &reduce);

  m.def("all_trees", &all_trees, py::arg("carets"));
  m.def("catalan", &catalan, py::arg("n"));
  m.def("rotate", [](const BinaryTree& t, const std::string& sym) { return rotate(t, RotationSymbol::parse(sym)); });

  // Color vectors cross the boundary as digit strings such as "1213".
  auto strs = [](const std::vector<ColorVector>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(vector_str(c));
    return out;
  };
  m.def("is_valid", [](const BinaryTree& t, const std::string& v) { return is_valid(t, parse_vector(v)); });
  m.def("classify_vector", [](const std::string& v) { return std::string(vector_class_name(classify_vector(parse_vector(v)))); });
  m.def("normalized_colorings", [strs](const BinaryTree& t) { return strs(normalized_colorings(t)); });
  m.def("colorings_of_pair", [strs](const TreePair& p) { return strs(colorings_of_pair(p)); });

  m.def("word_to_pair", [](const std::string& w) { return word_to_pair(parse_word(w)); });
  m.def("path_evaluate", [](const BinaryTree& t, const std::string& w) { return path_evaluate(t, parse_word(w)); });
  m.def("sign_structure", [](const std::string& w) {
    SignStructure ss = sign_structure(parse_word(w));
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (const auto& e : ss.edges) edges.emplace_back(e.a.str(), e.b.str(), e.sign);
    return edges;
  });
  m.def("is_balanced", [](const std::string& w) { return is_balanced(sign_structure(parse_word(w))).balanced; });
  m.def("find_sign_consistent_path", [](const BinaryTree& d, const BinaryTree& r) -> std::optional<std::string> {
    auto w = find_sign_consistent_path(d, r);
    if (!w) return std::nullopt;
    return word_str(*w);
  });

  m.def("is_prime", &is_prime);
  m.def("prime_factorization", &prime_factorization);
  m.def("family_colorings", [](const std::string& family, int n) {
    return count_vertex_colorings(family_graph(parse_family(family), n).graph(), 4);
  });
  m.def("closed_form", [](const std::string& family, int n) { return closed_form(parse_family(family), n); });

  m.def("count_acceptable", &count_acceptable);
  m.def("count_rigid", &count_rigid);
  m.def("count_flexible", &count_flexible);
  m.def("jacobsthal", &jacobsthal);
  m.def("conjectured_m", &conjectured_m, py::arg("i"), py::arg("n"));
  m.def(
      "max_coloring_search",
      [](int n, int jobs) {
        CountReport rep = max_coloring_search(n, jobs);
        std::vector<std::tuple<int64_t, int64_t, std::string>> out;
        for (const auto& r : rep.ranks) out.emplace_back(r.count, r.pairs, r.witness.str());
        return out;
      },
      py::arg("n"), py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());

  m.def("suite_names", [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  });
  m.def(
      "run_suite",
      [](const std::string& name, int size, int jobs) {
        SuiteResult r = run_suite(name, {size, jobs});
        return std::make_tuple(r.pass, r.detail);
      },
      py::arg("name"), py::arg("size") = -1, py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
}
