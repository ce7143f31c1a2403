#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "extctx/runner.hpp"
#include "extctx/serialize.hpp"

namespace py = pybind11;
using namespace extctx;

// ObjectRef points to const; pybind11 holders cannot, so objects are held
// mutably on the Python side and converted at the boundary.
namespace pybind11::detail {
template <>
struct type_caster<ObjectRef> {
  using Held = std::shared_ptr<FiniteObject>;
  PYBIND11_TYPE_CASTER(ObjectRef, const_name("FiniteObject"));

  bool load(handle src, bool convert) {
    make_caster<Held> inner;
    if (!inner.load(src, convert)) return false;
    value = cast_op<Held>(inner);
    return true;
  }
  static handle cast(const ObjectRef& src, return_value_policy policy, handle parent) {
    return make_caster<Held>::cast(std::const_pointer_cast<FiniteObject>(src), policy, parent);
  }
};
}  // namespace pybind11::detail

namespace {

// Documents cross the boundary as JSON text; the Python package decodes them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

Verdict check(const Context& ctx, const std::string& theorem, const std::string& family,
              int bound) {
  if (theorem == "A") return check_sum_admissible(ctx, bound);
  if (theorem == "B") return check_sum_closed_embeddings(ctx, family, bound);
  if (theorem == "C") return check_cor_sum_closed_morphisms(ctx, family, bound);
  if (theorem == "D") return check_lemma_componentwise_closure(ctx, family, bound);
  if (theorem == "E") return check_factorization_of_sums(ctx, bound);
  if (theorem == "F") return check_pb_stability_closed_E_monos(ctx, family, bound);
  if (theorem == "G") return check_sum_proper(ctx, family, bound);
  if (theorem == "H") return check_sum_separated(ctx, family, bound);
  if (theorem == "adjunctions") return check_adjunctions(ctx, family, bound);
  if (theorem == "biproduct") return check_biproducts(ctx, family, bound);
  if (theorem == "validate") {
    return check_validators(ctx, family.empty() ? ctx.families() : std::vector{family}, bound);
  }
  throw std::invalid_argument("unknown theorem '" + theorem + "'");
}

}  // namespace

PYBIND11_MODULE(_extctx, m) {
  m.doc() = "Bounded verification engine for extensive contexts";
  py::register_exception<CategoryError>(m, "CategoryError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  py::class_<FiniteObject, std::shared_ptr<FiniteObject>>(m, "FiniteObject")
      .def_static("set", &FiniteObject::make_set, py::arg("id"), py::arg("labels"))
      .def_static(
          "preorder",
          [](std::string id, std::vector<std::string> labels, const FiniteObject::OrderPairs& order) {
            return FiniteObject::make_preorder(std::move(id), std::move(labels), order);
          },
          py::arg("id"), py::arg("labels"), py::arg("order") = FiniteObject::OrderPairs{})
      .def_property_readonly("id", &FiniteObject::id)
      .def_property_readonly("labels", &FiniteObject::labels)
      .def_property_readonly("ordered", &FiniteObject::ordered)
      .def("__len__", &FiniteObject::size)
      .def("leq",
           [](const FiniteObject& x, const std::string& a, const std::string& b) {
             auto i = x.index_of(a);
             auto j = x.index_of(b);
             if (!i || !j) throw CategoryError("unknown label");
             return x.leq(*i, *j);
           })
      .def("strict_pairs", &FiniteObject::strict_pairs)
      .def("to_json", [](const FiniteObject& x) { return dump(to_json(x)); })
      .def("__repr__", &FiniteObject::describe);

  py::class_<Morphism>(m, "Morphism")
      .def_static("from_labels", &Morphism::from_labels, py::arg("source"), py::arg("target"),
                  py::arg("images"))
      .def_static("identity", &Morphism::identity)
      .def_property_readonly("source", &Morphism::source)
      .def_property_readonly("target", &Morphism::target)
      .def_property_readonly("table", &Morphism::table)
      .def("is_mono", [](const Morphism& f) { return is_mono(f); })
      .def("is_epi", [](const Morphism& f) { return is_epi(f); })
      .def("is_iso", [](const Morphism& f) { return is_iso(f); })
      .def("__eq__", [](const Morphism& a, const Morphism& b) { return a == b; })
      .def("to_json", [](const Morphism& f) { return dump(to_json(f)); })
      .def("__repr__", &Morphism::describe);

  m.def("compose", py::overload_cast<const Morphism&, const Morphism&>(&compose),
        py::arg("g"), py::arg("f"));
  m.def("coproduct", [](const ObjectRef& x, const ObjectRef& y) {
    auto c = coproduct(x, y);
    return py::make_tuple(c.object, c.inl, c.inr);
  });
  m.def("pullback", [](const Morphism& f, const Morphism& g) {
    auto c = pullback(f, g);
    return py::make_tuple(c.apex, c.first, c.second);
  });
  m.def("is_isomorphic", &is_isomorphic);
  m.def("canonical_objects", &canonical_objects, py::arg("ordered"), py::arg("max_size"));

  py::class_<Context>(m, "Context")
      .def_static("builtin", [](const std::string& name) { return builtin(name); })
      .def_property_readonly("name", &Context::name)
      .def_property_readonly("ordered", &Context::ordered)
      .def_property_readonly("families", &Context::families)
      .def("objects", &Context::objects, py::arg("bound"))
      .def("add_objects", &Context::add_objects)
      .def("_validate_extensive",
           [](const Context& c, int bound) { return dump(to_json(validate_extensive(c, bound))); })
      .def("_check",
           [](const Context& c, const std::string& theorem, const std::string& family, int bound) {
             py::gil_scoped_release release;
             return dump(to_json(check(c, theorem, family, bound)));
           },
           py::arg("theorem"), py::arg("family") = "", py::arg("bound") = 3);
  m.def("builtin_names", &builtin_names);
  m.def("closure_family_names", &closure_family_names);
  m.def("theorem_ids", &theorem_ids);
  m.def("load_objects", &load_objects, py::arg("path"), py::arg("ordered"));

  m.def(
      "_run",
      [](const std::string& context, std::vector<std::string> closures, int bound,
         std::vector<std::string> theorems, std::optional<int> heavy_bound,
         const std::string& objects, bool timings) {
        RunConfig cfg;
        cfg.context = context;
        cfg.families = std::move(closures);
        cfg.bound = bound;
        cfg.theorems = std::move(theorems);
        cfg.heavy_bound = heavy_bound;
        cfg.objects_path = objects;
        cfg.timings = timings;
        py::gil_scoped_release release;
        return dump(to_json(run(cfg)));
      },
      py::arg("context"), py::arg("closures"), py::arg("bound"), py::arg("theorems"),
      py::arg("heavy_bound"), py::arg("objects"), py::arg("timings"));
  m.attr("BOUND_CAP") = kBoundCap;
}
