#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <autocyc/automorphism.hpp>
#include <autocyc/catalog.hpp>
#include <autocyc/delta_graph.hpp>
#include <autocyc/error.hpp>
#include <autocyc/group.hpp>
#include <autocyc/group_props.hpp>
#include <autocyc/io.hpp>
#include <autocyc/theorems.hpp>

namespace py = pybind11;
using namespace autocyc;

namespace {

using GroupPtr = std::shared_ptr<FiniteGroup>;

PyObject *error_type = nullptr;

GroupPtr shared_group(const CatalogEntry &e)
{
  return std::const_pointer_cast<FiniteGroup>(e.group_ptr());
}

py::dict profile_dict(const GroupProfile &p)
{
  py::dict d;
  d["order"] = p.order;
  d["factorization"] = p.factorization;
  d["exponent"] = p.exponent;
  d["abelian"] = p.abelian;
  d["nilpotent"] = p.nilpotent;
  d["cyclic"] = p.cyclic;
  d["center_size"] = p.center_size;
  return d;
}

VerifyOptions options(std::size_t action_cap, std::size_t lattice_cap)
{
  return VerifyOptions{action_cap, lattice_cap};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Automorphic cyclic graphs of finite permutation groups";

  error_type = PyErr_NewException("autocyc._core.Error", PyExc_RuntimeError, nullptr);
  m.attr("Error") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const Error &e) {
      py::object inst = py::handle(error_type)(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type, inst.ptr());
    }
  });

  py::class_<Permutation>(m, "Permutation")
    .def(py::init<std::vector<Permutation::Point>>(), py::arg("images"))
    .def_static("identity", [](std::size_t n) { return Permutation(n); })
    .def_static("from_cycles", &Permutation::from_cycles, py::arg("degree"), py::arg("text"))
    .def_property_readonly("degree", &Permutation::degree)
    .def_property_readonly("images", &Permutation::images)
    .def("is_identity", &Permutation::is_identity)
    .def("to_cycles", &Permutation::to_cycles)
    .def("inverse", [](const Permutation &p) { return inverse(p); })
    // p * q applies p first
    .def("__mul__", [](const Permutation &p, const Permutation &q) { return compose(p, q); })
    .def("__getitem__", [](const Permutation &p, std::size_t i) {
      if (i >= p.degree())
        throw py::index_error();
      return p[i];
    })
    .def(py::self == py::self)
    .def(py::self < py::self)
    .def("__hash__", [](const Permutation &p) { return PermutationHash{}(p); })
    .def("__repr__", [](const Permutation &p) { return "Permutation('" + p.to_cycles() + "')"; });

  py::class_<FiniteGroup, GroupPtr>(m, "FiniteGroup")
    .def_static(
      "enumerate",
      [](std::vector<Permutation> gens, std::size_t degree, std::size_t bound, std::string name) {
        return std::make_shared<FiniteGroup>(
          FiniteGroup::enumerate(std::move(gens), degree, bound, std::move(name)));
      },
      py::arg("generators"), py::arg("degree"), py::arg("order_bound") = kDefaultOrderBound,
      py::arg("name") = "")
    .def_static(
      "from_json",
      [](const std::string &text, std::size_t bound) {
        return std::make_shared<FiniteGroup>(io::group_from_json(io::json::parse(text), bound));
      },
      py::arg("text"), py::arg("order_bound") = kDefaultOrderBound)
    .def("to_json", [](const FiniteGroup &G) { return io::group_to_json(G).dump(); })
    .def_property_readonly("order", &FiniteGroup::order)
    .def_property_readonly("degree", &FiniteGroup::degree)
    .def_property("name", &FiniteGroup::name, &FiniteGroup::set_name)
    .def_property("generator_names", &FiniteGroup::generator_names,
                  &FiniteGroup::set_generator_names)
    .def_property_readonly("generators", &FiniteGroup::generators)
    .def_property_readonly("generator_ids", &FiniteGroup::generator_ids)
    .def("element", &FiniteGroup::element)
    .def("index_of", &FiniteGroup::index_of)
    .def("mul", &FiniteGroup::mul)
    .def("inv", &FiniteGroup::inv)
    .def("pow", &FiniteGroup::pow)
    .def("conjugate", &FiniteGroup::conjugate)
    .def("commutator", &FiniteGroup::commutator)
    .def("element_order", &FiniteGroup::element_order)
    .def("word", &FiniteGroup::word_string)
    .def("hash", &FiniteGroup::hash)
    .def("__len__", &FiniteGroup::order)
    .def("__repr__", [](const FiniteGroup &G) {
      return "FiniteGroup(name='" + G.name() + "', order=" + std::to_string(G.order()) + ")";
    });

  m.def("is_cyclic_pair", &is_cyclic_pair);
  m.def("center", &center);
  m.def("centralizer", &centralizer);
  m.def("conjugacy_classes", &conjugacy_classes);
  m.def("cyclic_subgroup", &cyclic_subgroup);
  m.def("generated_closure",
        [](const FiniteGroup &G, std::vector<ElementId> seeds) { return generated_closure(G, seeds); });

  m.def("profile", [](const FiniteGroup &G) { return profile_dict(profile(G)); });
  m.def("exponent", &exponent);
  m.def("is_abelian", &is_abelian);
  m.def("is_cyclic", &is_cyclic);
  m.def("is_nilpotent", &is_nilpotent);
  m.def("is_p_group", py::overload_cast<const FiniteGroup &>(&is_p_group));
  m.def("is_generalized_quaternion", &is_generalized_quaternion);
  m.def("is_homocyclic", &is_homocyclic);
  m.def("abelian_type", &abelian_type);
  m.def("minimal_subgroups", &minimal_subgroups);
  m.def("normal_subgroups", &normal_subgroups, py::arg("group"), py::arg("cap") = kDefaultLatticeCap);
  m.def("cyc_set", &cyc_set);
  m.def("kernel_K", &kernel_K);
  m.def(
    "frobenius_witness",
    [](const FiniteGroup &G, std::size_t cap) -> std::optional<std::pair<ElementSet, std::size_t>> {
      auto w = frobenius_witness(G, cap);
      if (!w)
        return std::nullopt;
      return std::make_pair(w->kernel, w->complement_order);
    },
    py::arg("group"), py::arg("cap") = kDefaultLatticeCap);

  py::class_<Automorphism>(m, "Automorphism")
    .def(py::init<std::vector<ElementId>>())
    .def_property_readonly("table", &Automorphism::table)
    .def("is_identity", &Automorphism::is_identity)
    .def("__call__", &Automorphism::operator())
    .def("__mul__", [](const Automorphism &a, const Automorphism &b) { return compose(a, b); })
    .def("inverse", [](const Automorphism &a) { return inverse(a); })
    .def(py::self == py::self)
    .def("__len__", &Automorphism::size);

  py::enum_<ActionKind>(m, "ActionKind")
    .value("trivial", ActionKind::trivial)
    .value("inner", ActionKind::inner)
    .value("full", ActionKind::full)
    .value("explicit", ActionKind::explicit_);

  py::class_<AutAction>(m, "AutAction")
    .def_readonly("kind", &AutAction::kind)
    .def_readonly("label", &AutAction::label)
    .def_readonly("generators", &AutAction::generators)
    .def_property_readonly("closure", [](const AutAction &A) { return A.all; })
    .def("is_closed", &AutAction::is_closed)
    .def("__repr__", [](const AutAction &A) {
      return "AutAction(kind='" + std::string(to_string(A.kind)) + "', label='" + A.label + "')";
    });

  m.def("trivial_action", &trivial_action);
  m.def("inner_action", &inner_generators);
  m.def("full_action", &full_aut_brute, py::arg("group"),
        py::arg("bound") = kDefaultBruteForceBound, py::arg("cap") = kDefaultActionCap);
  m.def("from_conjugator", &from_conjugator);
  m.def("explicit_automorphism", [](const FiniteGroup &G, std::vector<ElementId> images) {
    return explicit_automorphism(G, images);
  });
  m.def("validated_automorphism", &validated_automorphism);
  m.def(
    "close_action",
    [](const FiniteGroup &G, std::vector<Automorphism> gens, std::size_t cap, std::string label) {
      return close_action(G, std::move(gens), cap, ActionKind::explicit_, std::move(label));
    },
    py::arg("group"), py::arg("generators"), py::arg("cap") = kDefaultActionCap,
    py::arg("label") = "explicit");
  m.def("closed", &closed, py::arg("group"), py::arg("action"), py::arg("cap") = kDefaultActionCap);
  m.def("element_orbits", [](const FiniteGroup &G, const AutAction &A) {
    return element_orbits(G, A).members;
  });
  m.def("is_within_inner", &is_within_inner);
  m.def("action_from_json",
        [](const FiniteGroup &G, const std::string &text, std::size_t cap) {
          return io::action_from_json(G, io::json::parse(text), cap);
        },
        py::arg("group"), py::arg("text"), py::arg("cap") = kDefaultActionCap);
  m.def("action_to_json",
        [](const FiniteGroup &G, const AutAction &A) { return io::action_to_json(G, A).dump(); });

  py::class_<Vertex>(m, "Vertex")
    .def_readonly("representative", &Vertex::representative)
    .def_readonly("element_order", &Vertex::element_order)
    .def_readonly("orbit_size", &Vertex::orbit_size)
    .def("__repr__", [](const Vertex &v) {
      return "Vertex(representative=" + std::to_string(v.representative) +
             ", element_order=" + std::to_string(v.element_order) +
             ", orbit_size=" + std::to_string(v.orbit_size) + ")";
    });

  py::class_<DeltaGraph>(m, "DeltaGraph")
    .def_property_readonly("vertex_count", &DeltaGraph::vertex_count)
    .def_property_readonly("vertices", &DeltaGraph::vertices)
    .def_property_readonly("group_name", &DeltaGraph::group_name)
    .def_property_readonly("action_label", &DeltaGraph::action_label)
    .def("members", &DeltaGraph::members)
    .def("vertex_of", &DeltaGraph::vertex_of)
    .def("adjacent", &DeltaGraph::adjacent)
    .def("degree", &DeltaGraph::degree)
    .def("neighbors", &DeltaGraph::neighbors)
    .def("edges", &DeltaGraph::edges)
    .def("edge_count", &DeltaGraph::edge_count)
    .def("same_structure", &DeltaGraph::same_structure)
    .def("__len__", &DeltaGraph::vertex_count);

  m.def("build_delta", py::overload_cast<const FiniteGroup &, const AutAction &>(&build_delta),
        py::call_guard<py::gil_scoped_release>());
  m.def("build_delta_with",
        py::overload_cast<const FiniteGroup &, const AutAction &, const CyclicPairTest &>(
          &build_delta),
        py::arg("group"), py::arg("action"), py::arg("cyclic"));
  m.def("build_enhanced_power", &build_enhanced_power);
  m.def("build_ccc_cyclic", &build_ccc_cyclic);
  m.def("quotient_of_enhanced", &quotient_of_enhanced);

  py::class_<AnalysisReport>(m, "AnalysisReport")
    .def_readonly("components", &AnalysisReport::components)
    .def_readonly("component_of", &AnalysisReport::component_of)
    .def_readonly("diameters", &AnalysisReport::diameters)
    .def_readonly("universal_vertices", &AnalysisReport::universal_vertices)
    .def_readonly("isolated_vertices", &AnalysisReport::isolated_vertices)
    .def_readonly("is_complete", &AnalysisReport::is_complete)
    .def_readonly("is_empty", &AnalysisReport::is_empty)
    .def_readonly("clique_components", &AnalysisReport::clique_components)
    .def_property_readonly("connected", &AnalysisReport::connected)
    .def_property_readonly("diameter", &AnalysisReport::diameter);

  m.def("analyze", &analyze);
  m.def("distance", &distance);
  m.def("distances_from", &distances_from);

  m.def("graph_json",
        [](const FiniteGroup &G, const DeltaGraph &D) { return io::graph_to_json(G, D).dump(); });
  m.def("report_json", [](const FiniteGroup &G, const DeltaGraph &D, const AnalysisReport &R) {
    return io::report_to_json(G, D, R).dump();
  });
  m.def("to_dot", &io::to_dot);
  m.def("to_graphml", &io::to_graphml);

  py::class_<CatalogEntry>(m, "CatalogEntry")
    .def_property_readonly("key", &CatalogEntry::key)
    .def_property_readonly("parameters", &CatalogEntry::parameters)
    .def_property_readonly("group", &shared_group)
    .def_property_readonly("generator_names", &CatalogEntry::generator_names)
    .def_property_readonly("tags", &CatalogEntry::tags)
    .def("metadata_json", [](const CatalogEntry &e) { return io::metadata_to_json(e).dump(); })
    .def("element", &CatalogEntry::element)
    .def("tagged", &CatalogEntry::tagged)
    .def("action_names", &CatalogEntry::action_names)
    .def("has_action", &CatalogEntry::has_action)
    .def("action", &CatalogEntry::action, py::arg("name"), py::arg("cap") = kDefaultActionCap)
    .def("validate", &CatalogEntry::validate)
    .def("__repr__", [](const CatalogEntry &e) { return "CatalogEntry('" + e.key() + "')"; });

  m.def("catalog_keys", &catalog::keys);
  m.def("catalog_load", &catalog::load, py::arg("key"));

  py::class_<TheoremVerdict>(m, "TheoremVerdict")
    .def_readonly("theorem_id", &TheoremVerdict::theorem_id)
    .def_readonly("group", &TheoremVerdict::group)
    .def_readonly("action", &TheoremVerdict::action)
    .def_readonly("hypotheses_hold", &TheoremVerdict::hypotheses_hold)
    .def_readonly("conclusion_holds", &TheoremVerdict::conclusion_holds)
    .def_readonly("witness", &TheoremVerdict::witness)
    .def_readonly("detail", &TheoremVerdict::detail)
    .def("failed", &TheoremVerdict::failed)
    .def("to_json", [](const TheoremVerdict &v) { return io::verdict_to_json(v).dump(); })
    .def("__repr__", [](const TheoremVerdict &v) {
      std::string c = v.conclusion_holds ? (*v.conclusion_holds ? "True" : "False") : "None";
      return "TheoremVerdict('" + v.theorem_id + "', group='" + v.group + "', action='" +
             v.action + "', hypotheses_hold=" + (v.hypotheses_hold ? "True" : "False") +
             ", conclusion_holds=" + c + ")";
    });

  m.def("theorem_ids", &theorem_ids);
  m.def("lemma_ids", &lemma_ids);
  m.def(
    "verify",
    [](std::string_view id, GroupPtr G, const AutAction &A, std::size_t action_cap,
       std::size_t lattice_cap) { return verify(id, G, A, options(action_cap, lattice_cap)); },
    py::arg("theorem"), py::arg("group"), py::arg("action"),
    py::arg("action_cap") = kDefaultActionCap, py::arg("lattice_cap") = kDefaultLatticeCap);
  m.def(
    "run_catalog_suite",
    [](std::string_view selector, std::size_t action_cap, std::size_t lattice_cap) {
      return run_suite(catalog_corpus(action_cap), selector, options(action_cap, lattice_cap));
    },
    py::arg("selector") = "all", py::arg("action_cap") = kDefaultActionCap,
    py::arg("lattice_cap") = kDefaultLatticeCap, py::call_guard<py::gil_scoped_release>());
  m.def("count_failures", &count_failures);
}
