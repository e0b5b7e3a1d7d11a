// Copyright 2026 The wpl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wpl/api.hpp"
#include "wpl/bundles.hpp"
#include "wpl/error.hpp"
#include "wpl/fixtures.hpp"
#include "wpl/graded.hpp"
#include "wpl/quiver.hpp"
#include "wpl/replay.hpp"
#include "wpl/stablehom.hpp"
#include "wpl/textio.hpp"

namespace py = pybind11;

namespace {

using Weights = std::array<int, 3>;

wpl::WeightTriple Triple(const Weights& w) {
  return wpl::WeightTriple(w[0], w[1], w[2]);
}

std::vector<std::string> Exprs(std::vector<wpl::LElement> ys) {
  std::sort(ys.begin(), ys.end());
  std::vector<std::string> out;
  for (const auto& y : ys) out.push_back(wpl::LGroup::FormatExpr(y));
  return out;
}

std::string Canonical(const wpl::Bundles& b, const wpl::ExtBundle& e) {
  return wpl::Bundles::Format(b.CanonicalForm(e));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for vector bundles on weighted projective lines "
            "and quiver mutation.";

  py::register_exception<wpl::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<wpl::PreconditionError>(m, "PreconditionError",
                                                 PyExc_ValueError);
  py::register_exception<wpl::InvariantViolation>(m, "InvariantViolation",
                                                  PyExc_ValueError);
  py::register_exception<wpl::UnknownFixture>(m, "UnknownFixture",
                                              PyExc_KeyError);
  py::register_exception<wpl::SearchFailure>(m, "SearchFailure",
                                             PyExc_RuntimeError);
  py::register_exception<wpl::VerificationFailure>(m, "VerificationFailure",
                                                   PyExc_RuntimeError);

  m.def("normal_form", [](const Weights& w, const std::string& expr) {
    const wpl::LGroup g(Triple(w));
    return wpl::LGroup::Format(wpl::ParseElement(g, expr));
  }, py::arg("weights"), py::arg("expr"));

  m.def("delta", [](const Weights& w, const std::string& expr) {
    const wpl::LGroup g(Triple(w));
    return g.Delta(wpl::ParseElement(g, expr));
  }, py::arg("weights"), py::arg("expr"));

  m.def("hom_dim", [](const Weights& w, const std::string& x,
                      const std::string& y) {
    const wpl::LGroup g(Triple(w));
    return wpl::HomDimLine(g, wpl::ParseElement(g, x), wpl::ParseElement(g, y));
  }, py::arg("weights"), py::arg("x"), py::arg("y"));

  m.def("ext1_dim", [](const Weights& w, const std::string& x,
                       const std::string& y) {
    const wpl::LGroup g(Triple(w));
    return wpl::Ext1DimLine(g, wpl::ParseElement(g, x),
                            wpl::ParseElement(g, y));
  }, py::arg("weights"), py::arg("x"), py::arg("y"));

  m.def("reduce_line", [](const Weights& w, const std::string& expr) {
    const wpl::K0 k0(Triple(w));
    return k0.ReduceLine(wpl::ParseElement(k0.group(), expr)).coefficients();
  }, py::arg("weights"), py::arg("expr"));

  m.def("bundle_class", [](const Weights& w, const std::string& bundle) {
    const wpl::Bundles b(Triple(w));
    return b.ClassOf(wpl::ParseBundle(b, bundle)).coefficients();
  }, py::arg("weights"), py::arg("bundle"));

  m.def("euler_lines", [](const Weights& w, const std::string& x,
                          const std::string& y) {
    const wpl::K0 k0(Triple(w));
    return k0.EulerForm(k0.ReduceLine(wpl::ParseElement(k0.group(), x)),
                        k0.ReduceLine(wpl::ParseElement(k0.group(), y)));
  }, py::arg("weights"), py::arg("x"), py::arg("y"));

  m.def("bundle_eq", [](const Weights& w, const std::string& a,
                        const std::string& c) {
    const wpl::Bundles b(Triple(w));
    return b.EqExt(wpl::ParseBundle(b, a), wpl::ParseBundle(b, c));
  }, py::arg("weights"), py::arg("a"), py::arg("b"));

  m.def("canonical_form", [](const Weights& w, const std::string& a) {
    const wpl::Bundles b(Triple(w));
    return Canonical(b, wpl::ParseBundle(b, a));
  }, py::arg("weights"), py::arg("bundle"));

  m.def("suspend", [](const Weights& w, const std::string& a) {
    const wpl::Bundles b(Triple(w));
    return Canonical(b, b.Suspend(wpl::ParseBundle(b, a)));
  }, py::arg("weights"), py::arg("bundle"));

  m.def("desuspend", [](const Weights& w, const std::string& a) {
    const wpl::Bundles b(Triple(w));
    return Canonical(b, b.Desuspend(wpl::ParseBundle(b, a)));
  }, py::arg("weights"), py::arg("bundle"));

  m.def("injective_hull", [](const Weights& w, const std::string& a) {
    const wpl::Bundles b(Triple(w));
    return Exprs(b.InjectiveHull(wpl::ParseBundle(b, a)));
  }, py::arg("weights"), py::arg("bundle"));

  m.def("projective_cover", [](const Weights& w, const std::string& a) {
    const wpl::Bundles b(Triple(w));
    return Exprs(b.ProjectiveCover(wpl::ParseBundle(b, a)));
  }, py::arg("weights"), py::arg("bundle"));

  // (numerator, denominator); the Python wrapper turns it into a Fraction.
  m.def("slope", [](const Weights& w, const std::string& a) {
    const wpl::Bundles b(Triple(w));
    const wpl::Rational q = b.Slope(wpl::ParseBundle(b, a));
    return std::make_pair(q.numerator(), q.denominator());
  }, py::arg("weights"), py::arg("bundle"));

  m.def("replacement_verdict", [](const Weights& w) {
    const wpl::Bundles b(Triple(w));
    const wpl::ReplacementResult r = wpl::ReplacementVerdict(b);
    return py::make_tuple(r.tilting, r.chain);
  }, py::arg("weights"));

  py::class_<wpl::Quiver>(m, "Quiver")
      .def_static("fixture", &wpl::GetFixture, py::arg("name"))
      .def_static("from_json", [](const std::string& text) {
        try {
          return wpl::api::ResolveQuiver(wpl::api::Json::parse(text));
        } catch (const wpl::api::Json::exception& e) {
          throw wpl::ParseError(e.what());
        }
      }, py::arg("text"))
      .def("to_json", [](const wpl::Quiver& q) {
        return wpl::api::QuiverToJson(q).dump();
      })
      .def("__len__", &wpl::Quiver::size)
      .def_property_readonly("ids", &wpl::Quiver::ids)
      .def("multiplicity", &wpl::Quiver::Multiplicity, py::arg("source"),
           py::arg("target"))
      .def("exchange_matrix", &wpl::Quiver::ExchangeMatrix)
      .def("mutate", &wpl::Quiver::Mutate, py::arg("vertex"))
      .def("mutate_by_rewriting", [](const wpl::Quiver& q, int v) {
        return wpl::MutateByRewriting(q, v);
      }, py::arg("vertex"))
      .def("apply", &wpl::Quiver::ApplySequence, py::arg("sequence"))
      .def("__eq__", [](const wpl::Quiver& a, const wpl::Quiver& b) {
        return a == b;
      })
      .def("__repr__", [](const wpl::Quiver& q) {
        return "<Quiver with " + std::to_string(q.size()) + " vertices, " +
               std::to_string(q.ArrowCount()) + " arrows>";
      });

  m.def("find_isomorphism", &wpl::FindIsomorphism, py::arg("a"), py::arg("b"));
  m.def("search", [](const wpl::Quiver& s, const wpl::Quiver& t, int depth) {
    py::gil_scoped_release release;
    return wpl::SearchMutations(s, t, depth).sequence;
  }, py::arg("source"), py::arg("target"), py::arg("max_depth"));
  m.def("fixture_names", &wpl::FixtureNames);

  m.def("replay_json", [](const std::string& tag) {
    return wpl::api::Replay(tag).dump();
  }, py::arg("type"));
}
