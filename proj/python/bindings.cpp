#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tambara/check/acceptance.hpp"
#include "tambara/error.hpp"
#include "tambara/ideal.hpp"
#include "tambara/io.hpp"
#include "tambara/options.hpp"
#include "tambara/reciprocity.hpp"

namespace py = pybind11;
using namespace tambara;

namespace {

struct GroupHandle {
  GroupPtr g;
};

ModelOptions model_options(const std::string& model, int zmod, int regular, long long modulus, const std::string& ring) {
  ModelOptions o;
  o.model = model;
  o.zmod = zmod;
  o.regular = regular;
  o.modulus = modulus;
  o.ring = ring;
  return o;
}

py::dict report(bool ok, int cases, const std::string& witness, const std::string& summary) {
  py::dict d;
  d["ok"] = ok;
  d["cases"] = cases;
  d["witness"] = witness;
  d["summary"] = summary;
  return d;
}

}  // namespace

PYBIND11_MODULE(_tambara, m) {
  m.doc() = "Incomplete Tambara functors over finite groups";

  auto base = py::register_exception<Error>(m, "TambaraError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<NormUnavailable>(m, "NormUnavailable", base.ptr());

  py::class_<GroupHandle>(m, "Group")
      .def(py::init([](const std::string& ref) { return GroupHandle{parse_group_ref(ref)}; }), py::arg("ref"))
      .def_property_readonly("name", [](const GroupHandle& h) { return h.g->name(); })
      .def_property_readonly("order", [](const GroupHandle& h) { return h.g->order(); })
      .def("subgroups", [](const GroupHandle& h) {
        std::vector<std::vector<int>> out;
        for (auto s : h.g->lattice().subgroups) out.push_back(s.elements());
        return out;
      })
      .def("subgroup", [](const GroupHandle& h, const std::string& text) { return parse_subgroup(h.g, text).elements(); })
      .def("is_subconjugate",
           [](const GroupHandle& h, const std::string& k, const std::string& l) {
             return h.g->is_subconjugate(parse_subgroup(h.g, k), parse_subgroup(h.g, l));
           })
      .def("text", [](const GroupHandle& h) { return write_group(*h.g); })
      .def("__repr__", [](const GroupHandle& h) { return "Group('" + h.g->name() + "')"; });

  py::class_<IndexingSystem>(m, "IndexingSystem")
      .def(py::init([](const std::string& text) { return parse_indexing(text); }), py::arg("text"))
      .def("text", &write_indexing)
      .def("is_admissible",
           [](const IndexingSystem& s, const std::string& h, const std::string& k) {
             const auto& g = s.group();
             return s.admissible(g->lattice().index_of(parse_subgroup(g, h)), g->lattice().index_of(parse_subgroup(g, k)));
           })
      .def("__eq__", [](const IndexingSystem& a, const IndexingSystem& b) { return a == b; })
      .def("__repr__", &write_indexing);

  m.def("indexing_systems", [](const std::string& ref, int threads) {
    return enumerate_indexing_systems(parse_group_ref(ref), threads).systems;
  }, py::arg("group"), py::arg("threads") = 1);
  m.def("count_indexing_systems", [](const std::string& ref, int threads) {
    return enumerate_indexing_systems(parse_group_ref(ref), threads).systems.size();
  }, py::arg("group"), py::arg("threads") = 1);
  m.def("validate_indexing", [](const std::string& text) {
    auto rep = validate(parse_indexing(text, false));
    return report(rep.ok, 0, rep.ok ? "" : rep.axiom + ": " + rep.witness, rep.ok ? "valid" : "invalid");
  }, py::arg("text"));

  py::class_<Bispan>(m, "Bispan")
      .def(py::init([](const std::string& text) { return parse_bispan(text); }), py::arg("text"))
      .def("text", &write_bispan)
      .def("canonical", [](const Bispan& b) { return HomClass::of(b).representative(); })
      .def("compose",
           [](const Bispan& p, const Bispan& q, const std::string& indexing) {
             return compose(p, q, load_predicate(indexing, p.source().group()));
           },
           py::arg("then"), py::arg("indexing") = "complete", "q o p, where p is self")
      .def("equivalent", [](const Bispan& a, const Bispan& b) { return HomClass::of(a) == HomClass::of(b); })
      .def("__repr__", [](const Bispan& b) { return describe(b); });

  m.def("evaluate",
        [](const Bispan& b, std::vector<long long> value, const std::string& model, int zmod, int regular,
           long long modulus, const std::string& ring, const std::string& indexing) {
          const auto& g = b.source().group();
          auto mod = build_model(model_options(model, zmod, regular, modulus, ring), g, load_indexing(indexing, g));
          Value x{std::move(value)};
          if (x.c.size() != mod->zero(b.source()).c.size()) throw ValidationError("value has the wrong number of coordinates");
          auto y = eval(*mod, b, x);
          return py::make_tuple(y.c, mod->format(b.target(), y));
        },
        py::arg("bispan"), py::arg("value"), py::arg("model") = "fixed", py::arg("zmod") = 6, py::arg("regular") = 0,
        py::arg("modulus") = 0, py::arg("ring") = "", py::arg("indexing") = "complete");

  m.def("verify_reciprocity",
        [](const std::string& group, const std::string& kind, const std::string& h, const std::string& k,
           const std::string& model, int zmod, int regular, long long modulus, const std::string& indexing, int threads) {
          auto g = parse_group_ref(group);
          auto sys = load_indexing(indexing, g);
          auto mod = build_model(model_options(model, zmod, regular, modulus, ""), g, sys);
          if (kind != "sum" && kind != "transfer") throw ValidationError("kind must be 'sum' or 'transfer'");
          auto f = kind == "sum" ? reciprocity_sum(sys, parse_subgroup(g, h), parse_subgroup(g, k))
                                 : reciprocity_transfer(sys, parse_subgroup(g, h), parse_subgroup(g, k));
          auto rep = verify_reciprocity(*mod, f, threads);
          auto d = report(rep.ok, rep.cases, rep.witness, rep.summary());
          d["summands"] = f.summands.size();
          return d;
        },
        py::arg("group"), py::arg("kind"), py::arg("h"), py::arg("k"), py::arg("model") = "fixed", py::arg("zmod") = 6,
        py::arg("regular") = 0, py::arg("modulus") = 0, py::arg("indexing") = "complete", py::arg("threads") = 1);

  m.def("ideal_check",
        [](const std::string& group, const std::vector<std::string>& family, const std::string& model, int zmod,
           long long modulus, const std::string& indexing) {
          auto g = parse_group_ref(group);
          auto mod = build_model(model_options(model, zmod, 0, modulus, ""), g, load_indexing(indexing, g));
          std::vector<int> idx;
          for (const auto& f : family) idx.push_back(g->lattice().index_of(parse_subgroup(g, f)));
          auto rep = is_O_ideal(*mod, family_ideal(*mod, idx));
          return report(rep.ok, 0, rep.witness, rep.summary());
        },
        py::arg("group"), py::arg("family"), py::arg("model") = "burnside", py::arg("zmod") = 6, py::arg("modulus") = 0,
        py::arg("indexing") = "complete");

  m.def("acceptance", [](int threads, int only) {
    py::list out;
    for (int id = 1; id <= check::kCriteria; ++id) {
      if (only && id != only) continue;
      auto r = [&] {
        py::gil_scoped_release release;
        return check::run_criterion(id, threads);
      }();
      py::dict d;
      d["id"] = r.id;
      d["title"] = r.title;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("threads") = 1, py::arg("only") = 0);
}
