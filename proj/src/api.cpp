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

#include "wpl/api.hpp"

#include <algorithm>
#include <sstream>

#include "wpl/bundles.hpp"
#include "wpl/error.hpp"
#include "wpl/fixtures.hpp"
#include "wpl/graded.hpp"
#include "wpl/k0.hpp"
#include "wpl/textio.hpp"

namespace wpl::api {

namespace {

Json Envelope() {
  Json j;
  j["schema"] = kSchema;
  return j;
}

const Json& Field(const Json& req, const char* key) {
  if (!req.is_object()) throw ParseError("request body must be a JSON object");
  auto it = req.find(key);
  if (it == req.end()) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string StringField(const Json& req, const char* key) {
  const Json& v = Field(req, key);
  if (!v.is_string()) {
    throw ParseError(std::string("field \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

int IntOf(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  return v.get<int>();
}

std::vector<int> IntList(const Json& v, const std::string& what) {
  if (v.is_string()) return ParseIntList(v.get<std::string>());
  if (!v.is_array()) throw ParseError(what + " must be an array of integers");
  std::vector<int> out;
  for (const Json& e : v) out.push_back(IntOf(e, what + " entry"));
  return out;
}

Json WeightsJson(const WeightTriple& w) {
  return Json::array({w.weight(1), w.weight(2), w.weight(3)});
}

Json LinesJson(std::vector<LElement> ys) {
  std::sort(ys.begin(), ys.end());
  Json out = Json::array();
  for (const LElement& y : ys) out.push_back(LGroup::FormatExpr(y));
  return out;
}

Json WitnessJson(const VertexMap& m) {
  Json out = Json::array();
  for (const auto& [from, to] : m) out.push_back({{"from", from}, {"to", to}});
  return out;
}

Json CheckJson(const IdentityCheck& c) {
  return {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}};
}

Json SequenceJson(const K0& k0, const SequenceRecord& s) {
  return {{"sub", s.sub_label},
          {"middle", s.middle_label},
          {"quotient", s.quotient_label},
          {"sub_class", k0.Format(s.sub)},
          {"middle_class", k0.Format(s.middle)},
          {"quotient_class", k0.Format(s.quotient)},
          {"additive", s.additive()}};
}

// A line bundle expression or an extension bundle "E...".
K0Class ClassOfText(const Bundles& b, const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t");
  if (i != std::string::npos && text[i] == 'E') {
    return b.ClassOf(ParseBundle(b, text));
  }
  return b.k0().ReduceLine(ParseElement(b.group(), text));
}

}  // namespace

Json QuiverToJson(const Quiver& q) {
  Json vertices = Json::array();
  for (const Vertex& v : q.vertices()) {
    Json jv = {{"id", v.id}, {"label", v.label}};
    if (v.row) jv["row"] = *v.row;
    if (v.col) jv["col"] = *v.col;
    vertices.push_back(std::move(jv));
  }
  Json arrows = Json::array();
  for (const Arrow& a : q.Arrows()) {
    arrows.push_back({{"from", a.from}, {"to", a.to}, {"mult", a.mult}});
  }
  return {{"vertices", vertices}, {"arrows", arrows}};
}

Quiver QuiverFromJson(const Json& j) {
  if (!j.is_object()) throw ParseError("quiver must be a JSON object");
  const Json& vs = Field(j, "vertices");
  const Json& as = Field(j, "arrows");
  if (!vs.is_array() || !as.is_array()) {
    throw ParseError("quiver vertices and arrows must be arrays");
  }
  std::vector<Vertex> vertices;
  for (const Json& v : vs) {
    if (!v.is_object()) throw ParseError("vertex must be an object");
    Vertex out;
    out.id = IntOf(Field(v, "id"), "vertex id");
    if (auto it = v.find("label"); it != v.end()) {
      if (!it->is_string()) throw ParseError("vertex label must be a string");
      out.label = it->get<std::string>();
    }
    if (auto it = v.find("row"); it != v.end()) out.row = IntOf(*it, "row");
    if (auto it = v.find("col"); it != v.end()) out.col = IntOf(*it, "col");
    vertices.push_back(std::move(out));
  }
  std::vector<Arrow> arrows;
  for (const Json& a : as) {
    if (!a.is_object()) throw ParseError("arrow must be an object");
    Arrow out;
    out.from = IntOf(Field(a, "from"), "arrow from");
    out.to = IntOf(Field(a, "to"), "arrow to");
    if (auto it = a.find("mult"); it != a.end()) {
      out.mult = IntOf(*it, "arrow mult");
    }
    if (out.mult < 1) throw ParseError("arrow mult must be positive");
    arrows.push_back(out);
  }
  return Quiver(std::move(vertices), arrows);
}

Quiver ResolveQuiver(const Json& j) {
  if (j.is_string()) return GetFixture(j.get<std::string>());
  return QuiverFromJson(j);
}

WeightTriple WeightsFromJson(const Json& j) {
  if (j.is_string()) return WeightTriple::Parse(j.get<std::string>());
  const std::vector<int> p = IntList(j, "weights");
  if (p.size() != 3) throw ParseError("weights must have three entries");
  return WeightTriple(p[0], p[1], p[2]);
}

Json ReportToJson(const ReplayReport& r) {
  const K0 k0(r.weights);
  Json j = Envelope();
  j["type"] = r.weights.Tag();
  j["weights"] = WeightsJson(r.weights);
  j["pass"] = r.pass();
  j["start_fixture"] = r.start_fixture;
  j["target_fixture"] = r.target_fixture;
  j["sequence"] = r.sequence;
  j["initial_objects"] = r.initial_objects;
  j["initial_quiver"] = QuiverToJson(r.initial);
  Json steps = Json::array();
  for (const ExchangeStep& s : r.steps) {
    Json js = {{"vertex", s.vertex},
               {"outgoing", s.outgoing},
               {"incoming", s.incoming}};
    js["sequences"] = Json::array();
    for (const auto& q : s.sequences) js["sequences"].push_back(SequenceJson(k0, q));
    js["checks"] = Json::array();
    for (const auto& c : s.checks) js["checks"].push_back(CheckJson(c));
    steps.push_back(std::move(js));
  }
  j["steps"] = steps;
  j["sequences"] = Json::array();
  for (const auto& q : r.sequences) j["sequences"].push_back(SequenceJson(k0, q));
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(CheckJson(c));
  j["slopes"] = Json::array();
  for (const SlopeEntry& s : r.slopes) {
    j["slopes"].push_back({{"object", s.object},
                           {"slope", FormatRational(s.slope)},
                           {"shifted", s.shifted}});
  }
  j["final_quiver"] = QuiverToJson(r.final_quiver);
  if (r.witness) j["witness"] = WitnessJson(*r.witness);
  j["notes"] = r.notes;
  return j;
}

std::string ReportToText(const ReplayReport& r) {
  const K0 k0(r.weights);
  std::ostringstream os;
  auto check = [&](const IdentityCheck& c, const char* indent) {
    os << indent << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << "\n"
       << indent << "         " << c.lhs << "\n"
       << indent << "       = " << c.rhs << "\n";
  };
  auto sequence = [&](const SequenceRecord& s, const char* indent) {
    os << indent << (s.additive() ? "[ok]   " : "[FAIL] ") << "0 -> "
       << s.sub_label << " -> " << s.middle_label << " -> " << s.quotient_label
       << " -> 0\n";
  };
  os << "replay " << r.weights.ToString() << ": " << r.start_fixture << " -> "
     << r.target_fixture << "\nsequence:";
  for (int v : r.sequence) os << ' ' << v;
  os << "\n\ninitial objects:\n";
  for (const std::string& s : r.initial_objects) os << "  " << s << "\n";
  for (const ExchangeStep& s : r.steps) {
    os << "\nmutate " << s.vertex << ": " << s.outgoing << " -> " << s.incoming
       << "\n";
    for (const auto& q : s.sequences) sequence(q, "  ");
    for (const auto& c : s.checks) check(c, "  ");
  }
  if (!r.sequences.empty()) os << "\ndefining sequences:\n";
  for (const auto& q : r.sequences) sequence(q, "  ");
  os << "\nchecks:\n";
  for (const auto& c : r.checks) check(c, "  ");
  if (!r.slopes.empty()) os << "\nslopes:\n";
  for (const SlopeEntry& s : r.slopes) {
    os << "  " << s.object << (s.shifted ? " (shifted)" : "") << ": "
       << FormatRational(s.slope) << "\n";
  }
  if (!r.notes.empty()) os << "\nnotes:\n";
  for (const std::string& n : r.notes) os << "  " << n << "\n";
  os << "\nresult: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Json ListFixtures() {
  Json j = Envelope();
  j["fixtures"] = Json::array();
  for (const std::string& name : FixtureNames()) {
    const Quiver q = GetFixture(name);
    j["fixtures"].push_back({{"name", name},
                             {"description", FixtureDescription(name)},
                             {"vertices", q.size()},
                             {"arrows", q.ArrowCount()}});
  }
  return j;
}

Json ShowFixture(const std::string& name) {
  const Quiver q = GetFixture(name);
  Json j = Envelope();
  j["name"] = name;
  j["description"] = FixtureDescription(name);
  j["quiver"] = QuiverToJson(q);
  return j;
}

Json Mutate(const Json& req) {
  const Quiver q = ResolveQuiver(Field(req, "quiver"));
  const int v = IntOf(Field(req, "vertex"), "vertex");
  Json j = Envelope();
  j["quiver"] = QuiverToJson(q.Mutate(v));
  return j;
}

Json Apply(const Json& req) {
  const Quiver q = ResolveQuiver(Field(req, "quiver"));
  const std::vector<int> seq = IntList(Field(req, "sequence"), "sequence");
  Json j = Envelope();
  j["quiver"] = QuiverToJson(q.ApplySequence(seq));
  return j;
}

Json Iso(const Json& req) {
  const Quiver a = ResolveQuiver(Field(req, "q1"));
  const Quiver b = ResolveQuiver(Field(req, "q2"));
  const auto w = FindIsomorphism(a, b);
  Json j = Envelope();
  j["isomorphic"] = w.has_value();
  if (w) j["witness"] = WitnessJson(*w);
  return j;
}

Json Search(const Json& req) {
  const Quiver s = ResolveQuiver(Field(req, "source"));
  const Quiver t = ResolveQuiver(Field(req, "target"));
  const int depth = IntOf(Field(req, "maxDepth"), "maxDepth");
  const SearchResult r = SearchMutations(s, t, depth);
  Json j = Envelope();
  j["found"] = r.sequence.has_value();
  if (r.sequence) {
    j["sequence"] = *r.sequence;
    j["witness"] = WitnessJson(*r.witness);
  }
  j["classes_visited"] = r.classes_visited;
  return j;
}

Json BundleEq(const Json& req) {
  const Bundles b(WeightsFromJson(Field(req, "weights")));
  const ExtBundle x = ParseBundle(b, StringField(req, "a"));
  const ExtBundle y = ParseBundle(b, StringField(req, "b"));
  Json j = Envelope();
  j["equal"] = b.EqExt(x, y);
  j["a"] = Bundles::Format(b.CanonicalForm(x));
  j["b"] = Bundles::Format(b.CanonicalForm(y));
  return j;
}

Json Replay(const std::string& tag) { return ReportToJson(RunReplay(tag)); }

Json NormalForm(const Json& req) {
  const LGroup g(WeightsFromJson(Field(req, "weights")));
  const LElement x = ParseElement(g, StringField(req, "expr"));
  Json j = Envelope();
  j["normal_form"] = LGroup::Format(x);
  j["expr"] = LGroup::FormatExpr(x);
  return j;
}

Json Delta(const Json& req) {
  const LGroup g(WeightsFromJson(Field(req, "weights")));
  const LElement x = ParseElement(g, StringField(req, "expr"));
  Json j = Envelope();
  j["normal_form"] = LGroup::Format(x);
  j["delta"] = g.Delta(x);
  return j;
}

Json HomDim(const Json& req) {
  const LGroup g(WeightsFromJson(Field(req, "weights")));
  const LElement x = ParseElement(g, StringField(req, "x"));
  const LElement y = ParseElement(g, StringField(req, "y"));
  Json j = Envelope();
  j["hom"] = HomDimLine(g, x, y);
  j["ext1"] = Ext1DimLine(g, x, y);
  return j;
}

Json K0Reduce(const Json& req) {
  const Bundles b(WeightsFromJson(Field(req, "weights")));
  const K0Class cls = ClassOfText(b, StringField(req, "expr"));
  Json j = Envelope();
  j["class"] = b.k0().Format(cls);
  j["coefficients"] = cls.coefficients();
  j["rank"] = b.k0().RankOf(cls);
  j["det"] = LGroup::Format(b.k0().DetOf(cls));
  return j;
}

Json Euler(const Json& req) {
  const Bundles b(WeightsFromJson(Field(req, "weights")));
  const K0Class x = ClassOfText(b, StringField(req, "a"));
  const K0Class y = ClassOfText(b, StringField(req, "b"));
  Json j = Envelope();
  j["euler"] = b.k0().EulerForm(x, y);
  return j;
}

Json Suspend(const Json& req) {
  const Bundles b(WeightsFromJson(Field(req, "weights")));
  const ExtBundle x = ParseBundle(b, StringField(req, "bundle"));
  bool inverse = false;
  if (auto it = req.find("inverse"); it != req.end()) {
    if (!it->is_boolean()) throw ParseError("inverse must be a boolean");
    inverse = it->get<bool>();
  }
  const ExtBundle y = inverse ? b.Desuspend(x) : b.Suspend(x);
  Json j = Envelope();
  j["bundle"] = Bundles::Format(b.CanonicalForm(x));
  j["shift"] = inverse ? -1 : 1;
  j["result"] = Bundles::Format(b.CanonicalForm(y));
  return j;
}

Json Hulls(const Json& req) {
  const Bundles b(WeightsFromJson(Field(req, "weights")));
  const ExtBundle x = ParseBundle(b, StringField(req, "bundle"));
  Json j = Envelope();
  j["bundle"] = Bundles::Format(x);
  j["injective_hull"] = LinesJson(b.InjectiveHull(x));
  j["projective_cover"] = LinesJson(b.ProjectiveCover(x));
  return j;
}

Json Slope(const Json& req) {
  const Bundles b(WeightsFromJson(Field(req, "weights")));
  const ExtBundle x = ParseBundle(b, StringField(req, "bundle"));
  Json j = Envelope();
  j["bundle"] = Bundles::Format(x);
  j["slope"] = FormatRational(b.Slope(x));
  return j;
}

int StatusFor(const std::exception& e) {
  if (dynamic_cast<const UnknownFixture*>(&e)) return 404;
  if (dynamic_cast<const InvariantViolation*>(&e)) return 422;
  if (dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const PreconditionError*>(&e) ||
      dynamic_cast<const UnsupportedInterval*>(&e) ||
      dynamic_cast<const Json::exception*>(&e)) {
    return 400;
  }
  return 500;
}

Json ErrorBody(const std::exception& e) {
  Json j = Envelope();
  j["error"] = e.what();
  j["status"] = StatusFor(e);
  return j;
}

Response Handle(const std::string& method, const std::string& path,
                const std::string& body) {
  auto parse = [&] { return Json::parse(body); };
  try {
    if (method == "GET" && path == "/fixtures") {
      return {200, Render(ListFixtures())};
    }
    if (method == "GET" && path.rfind("/fixtures/", 0) == 0) {
      return {200, Render(ShowFixture(path.substr(10)))};
    }
    if (method == "POST" && path.rfind("/replay/", 0) == 0) {
      const std::string tag = path.substr(8);
      if (tag != "244" && tag != "236" && tag != "333") {
        return {404, Render(ErrorBody(UnknownFixture("no replay " + tag)))};
      }
      return {200, Render(Replay(tag))};
    }
    if (method == "POST") {
      if (path == "/mutate") return {200, Render(Mutate(parse()))};
      if (path == "/apply") return {200, Render(Apply(parse()))};
      if (path == "/iso") return {200, Render(Iso(parse()))};
      if (path == "/search") return {200, Render(Search(parse()))};
      if (path == "/bundle/eq") return {200, Render(BundleEq(parse()))};
    }
  } catch (const std::exception& e) {
    const Json err = ErrorBody(e);
    return {StatusFor(e), Render(err)};
  }
  Json err = Envelope();
  err["error"] = "no route " + method + " " + path;
  err["status"] = 404;
  return {404, Render(err)};
}

std::string Render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace wpl::api
