// Python bindings: partial maps, Par checks, decisions, matrices, file
// loading and the command line, over the C++ library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "rcat/decisions.hpp"
#include "rcat/extensive.hpp"
#include "rcat/io.hpp"
#include "rcat/kleisli.hpp"
#include "rcat/matrix.hpp"
#include "rcat/par.hpp"
#include "rcat/restriction.hpp"

namespace py = pybind11;
using namespace rcat;

namespace {

py::dict report_dict(const LawReport& r) {
  py::list vs;
  for (auto& v : r.violations) {
    py::dict d;
    d["tag"] = v.tag;
    d["witness"] = v.witness;
    d["detail"] = v.detail;
    vs.append(d);
  }
  py::dict out;
  out["status"] = std::string(to_string(r.status));
  out["checked"] = r.checked;
  out["sampled"] = r.sampled;
  out["note"] = r.note;
  out["violations"] = vs;
  return out;
}

CheckOptions options(std::optional<std::size_t> samples, std::uint64_t seed) {
  CheckOptions o;
  o.samples = samples;
  o.seed = seed;
  return o;
}

}  // namespace

PYBIND11_MODULE(_rcat, m) {
  m.doc() = "Finite restriction categories: checks and constructions";

  // library errors surface as one Python exception type carrying the message
  py::register_exception<Error>(m, "RcatError");

  py::class_<PartialFn>(m, "PartialFn")
      .def(py::init([](int src, int tgt, const std::vector<std::optional<int>>& table) {
             std::vector<int> t;
             for (auto& x : table) t.push_back(x ? *x : PartialFn::kUndef);
             return PartialFn(src, tgt, t);
           }),
           py::arg("src"), py::arg("tgt"), py::arg("table"))
      .def_static("parse", [](const std::string& name) {
        // "s>t:v0,v1" with '-' for undefined
        auto gt = name.find('>'), colon = name.find(':');
        if (gt == std::string::npos || colon == std::string::npos)
          throw MalformedTable("not a partial map name: " + name);
        int s = std::stoi(name.substr(0, gt)), t = std::stoi(name.substr(gt + 1, colon - gt - 1));
        std::vector<int> v;
        std::stringstream ss(name.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(tok == "-" ? PartialFn::kUndef : std::stoi(tok));
        return PartialFn(s, t, v);
      })
      .def_readonly("src", &PartialFn::src)
      .def_readonly("tgt", &PartialFn::tgt)
      .def_property_readonly("table",
                             [](const PartialFn& f) {
                               std::vector<std::optional<int>> t;
                               for (int x : f.t) t.push_back(x < 0 ? std::nullopt : std::optional<int>(x));
                               return t;
                             })
      .def_property_readonly("name", &PartialFn::name)
      .def("total", &PartialFn::total)
      .def("restriction", [](const PartialFn& f) { return par_restriction(f); })
      .def("__matmul__", [](const PartialFn& g, const PartialFn& f) { return par_compose(g, f); })
      .def("__eq__", [](const PartialFn& a, const PartialFn& b) { return a == b; })
      .def("__hash__", [](const PartialFn& f) { return std::hash<std::string>{}(f.name()); })
      .def("__repr__", [](const PartialFn& f) { return "PartialFn('" + f.name() + "')"; });

  m.def("all_partial_fns", &all_partial_fns, py::arg("src"), py::arg("tgt"));

  m.def(
      "check_par_axioms",
      [](int n, std::optional<std::size_t> samples, std::uint64_t seed) {
        return report_dict(check_restriction_axioms(FinView(par_to_rcat(n)), options(samples, seed)));
      },
      py::arg("n"), py::arg("samples") = py::none(), py::arg("seed") = 1,
      "Restriction axioms on Par restricted to sizes 0..n");

  m.def(
      "decide",
      [](const PartialFn& f, int a, int b) -> std::optional<PartialFn> {
        if (f.tgt != a + b) throw ShapeMismatch(f.name() + " does not land in " + std::to_string(a + b));
        ParCat par(std::max({f.src, a + b, 1}));
        auto d = find_decision(par, f, {a, b});
        if (!d) return std::nullopt;
        return d->h;
      },
      py::arg("f"), py::arg("a"), py::arg("b"), "Decision C -> C+C of f : C -> A+B in Par");

  m.def(
      "decompose",
      [](const PartialFn& f, const std::vector<int>& rows, const std::vector<int>& cols) {
        ParCat par(std::max(f.src, f.tgt));
        return matrix_decompose(par, f, rows, cols).entries;
      },
      py::arg("f"), py::arg("rows"), py::arg("cols"), "Block entries of f between the given sums");

  m.def(
      "recompose",
      [](const std::vector<int>& rows, const std::vector<int>& cols,
         const std::vector<std::vector<PartialFn>>& entries) {
        int total = 0;
        for (int r : rows) total += r;
        ParCat par(std::max(total, 1));
        PartialMatrix<ParCat> mat{rows, cols, entries, {}};
        if (entries.size() != rows.size()) throw ShapeMismatch("one row of entries per row block");
        for (std::size_t l = 0; l < rows.size(); ++l) {
          auto h = detail::row_witness(par, rows[l], entries[l]);
          if (!h) throw InvalidWitness("row " + std::to_string(l) + " has overlapping domains");
          mat.witness.push_back(*h);
        }
        return matrix_recompose(par, mat);
      },
      py::arg("rows"), py::arg("cols"), py::arg("entries"), "The map with the given block entries");

  py::class_<Instance>(m, "Category")
      .def_static("load", [](const std::string& path) { return io::parse_category(io::read_file(path)); })
      .def_static("parse", &io::parse_category)
      .def("dump", [](const Instance& in) { return io::format_category(in); })
      .def_property_readonly("objects",
                             [](const Instance& in) {
                               std::vector<std::string> out;
                               const auto& c = in.x.base();
                               for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a)
                                 out.push_back(c.obj_name(a));
                               return out;
                             })
      .def_property_readonly("morphisms",
                             [](const Instance& in) {
                               std::vector<std::string> out;
                               const auto& c = in.x.base();
                               for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f)
                                 out.push_back(c.name(f));
                               return out;
                             })
      .def(
          "check_axioms",
          [](const Instance& in, std::optional<std::size_t> samples, std::uint64_t seed) {
            return report_dict(check_restriction_axioms(in.view(), options(samples, seed)));
          },
          py::arg("samples") = py::none(), py::arg("seed") = 1)
      .def("check_extensive", [](const Instance& in) {
        if (!in.has_coproducts) throw StructureError("the category file declares no coproducts");
        return report_dict(is_extensive_rcat(in.view()));
      });

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line in-process; returns (exit code, stdout, stderr)");
}
