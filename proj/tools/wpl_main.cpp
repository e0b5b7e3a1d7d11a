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

// wpl: command-line front end.
//
// Exit codes: 0 success, 1 failed verification, 2 usage or input error.

#include <algorithm>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wpl/api.hpp"
#include "wpl/error.hpp"
#include "wpl/service.hpp"

namespace {

using wpl::api::Json;

constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

// One --json option per subcommand, all writing to the same path.
struct JsonOutput {
  std::vector<CLI::Option*> options;
  std::string path;

  bool wanted() const {
    return std::any_of(options.begin(), options.end(),
                       [](const CLI::Option* o) { return o->count() > 0; });
  }
};

void AddJson(CLI::App* cmd, JsonOutput& out) {
  out.options.push_back(
      cmd->add_option("--json", out.path,
                      "Print JSON, or write it to the given file")
          ->expected(0, 1));
}

void Emit(const JsonOutput& out, const Json& j, const std::string& text) {
  if (!out.wanted()) {
    std::cout << text;
    return;
  }
  const std::string body = wpl::api::Render(j);
  if (out.path.empty() || out.path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw wpl::PreconditionError("cannot write " + out.path);
  f << body;
  std::cout << text;
}

// A JSON file holding a quiver (or a response with a "quiver" member), or a
// fixture name.
Json LoadQuiver(const std::string& arg) {
  if (!std::filesystem::exists(arg)) return Json(arg);
  std::ifstream f(arg);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw wpl::ParseError(arg + ": " + e.what());
  }
  if (j.is_object() && j.contains("quiver")) return j["quiver"];
  return j;
}

std::string ArrowsText(const Json& q) {
  std::ostringstream os;
  for (const Json& a : q["arrows"]) {
    os << a["from"].get<int>() << " -> " << a["to"].get<int>();
    if (a["mult"].get<int>() != 1) os << " x" << a["mult"].get<int>();
    os << "\n";
  }
  return os.str();
}

std::string WitnessText(const Json& w) {
  std::ostringstream os;
  for (const Json& p : w) {
    os << p["from"].get<int>() << " -> " << p["to"].get<int>() << "\n";
  }
  return os.str();
}

std::string Lines(const Json& ys) {
  std::ostringstream os;
  bool first = true;
  for (const Json& y : ys) {
    os << (first ? "" : " + ") << "O(" << y.get<std::string>() << ")";
    first = false;
  }
  return os.str();
}

wpl::Service* g_service = nullptr;

void OnSignal(int) {
  if (g_service != nullptr) g_service->Stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable categories of vector bundles on weighted projective "
               "lines: group and K0 arithmetic, extension bundles, quiver "
               "mutation and replays."};
  app.require_subcommand(1);

  std::string weights;
  auto add_weights = [&](CLI::App* cmd) {
    cmd->add_option("--weights", weights, "Weight triple p1,p2,p3")
        ->required();
  };

  std::string a;
  std::string b;
  JsonOutput out;

  auto* normal = app.add_subcommand("normal-form", "Normal form of an element");
  add_weights(normal);
  normal->add_option("expr", a, "Element, e.g. \"x1-x2+c\" or \"w\"")->required();
  AddJson(normal, out);

  auto* delta = app.add_subcommand("delta", "Degree of an element");
  add_weights(delta);
  delta->add_option("expr", a)->required();
  AddJson(delta, out);

  auto* hom = app.add_subcommand("hom-dim", "dim Hom and Ext^1 from O(x) to O(y)");
  add_weights(hom);
  hom->add_option("x", a)->required();
  hom->add_option("y", b)->required();
  AddJson(hom, out);

  auto* reduce = app.add_subcommand(
      "k0-reduce", "Class of a line bundle or an extension bundle in K0");
  add_weights(reduce);
  reduce->add_option("object", a, "Element or bundle \"E<...>(...)\"")
      ->required();
  AddJson(reduce, out);

  auto* euler = app.add_subcommand("euler", "Euler form of two classes");
  add_weights(euler);
  euler->add_option("a", a)->required();
  euler->add_option("b", b)->required();
  AddJson(euler, out);

  auto* beq = app.add_subcommand("bundle-eq", "Are two extension bundles isomorphic");
  add_weights(beq);
  beq->add_option("a", a)->required();
  beq->add_option("b", b)->required();
  AddJson(beq, out);

  bool inverse = false;
  auto* susp = app.add_subcommand("suspend", "Suspension of an extension bundle");
  add_weights(susp);
  susp->add_option("bundle", a)->required();
  susp->add_flag("--inverse", inverse, "Desuspend instead");
  AddJson(susp, out);

  auto* hulls = app.add_subcommand("hulls", "Injective hull and projective cover");
  add_weights(hulls);
  hulls->add_option("bundle", a)->required();
  AddJson(hulls, out);

  auto* slope = app.add_subcommand("slope", "Slope of an extension bundle");
  add_weights(slope);
  slope->add_option("bundle", a)->required();
  AddJson(slope, out);

  std::string quiver;
  std::string target;
  int vertex = 0;
  std::string sequence;
  int max_depth = 0;

  auto* mutate = app.add_subcommand("mutate", "Mutate a quiver at one vertex");
  mutate->add_option("--quiver", quiver, "JSON file or fixture name")->required();
  mutate->add_option("--vertex,vertex", vertex)->required();
  AddJson(mutate, out);

  auto* apply = app.add_subcommand("apply", "Apply a mutation sequence");
  apply->add_option("--quiver", quiver, "JSON file or fixture name")->required();
  apply->add_option("--sequence", sequence, "Vertex ids, e.g. \"1,2,3\"")
      ->required();
  AddJson(apply, out);

  auto* iso = app.add_subcommand("iso", "Test two quivers for isomorphism");
  iso->add_option("--quiver", quiver, "JSON file or fixture name")->required();
  iso->add_option("--target", target, "JSON file or fixture name")->required();
  AddJson(iso, out);

  auto* search = app.add_subcommand(
      "search", "Shortest mutation sequence reaching the target up to isomorphism");
  search->add_option("--quiver", quiver, "JSON file or fixture name")->required();
  search->add_option("--target", target, "JSON file or fixture name")->required();
  search->add_option("--max-depth", max_depth)->required()->check(
      CLI::NonNegativeNumber);
  AddJson(search, out);

  std::string fixture;
  auto* fixtures = app.add_subcommand("fixtures", "List fixtures, or show one");
  fixtures->add_option("name", fixture);
  AddJson(fixtures, out);

  std::string tag;
  auto* replay = app.add_subcommand("replay", "Replay a construction: 244, 236 or 333");
  replay->add_option("type", tag)->required()->check(
      CLI::IsMember({"244", "236", "333"}));
  AddJson(replay, out);

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the JSON service");
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--port", port, "Port, 0 for any free port")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    auto with_weights = [&] {
      Json req;
      req["weights"] = weights;
      return req;
    };
    if (*normal) {
      Json req = with_weights();
      req["expr"] = a;
      const Json j = wpl::api::NormalForm(req);
      Emit(out, j, j["normal_form"].get<std::string>() + "\n");
    } else if (*delta) {
      Json req = with_weights();
      req["expr"] = a;
      const Json j = wpl::api::Delta(req);
      Emit(out, j, std::to_string(j["delta"].get<int64_t>()) + "\n");
    } else if (*hom) {
      Json req = with_weights();
      req["x"] = a;
      req["y"] = b;
      const Json j = wpl::api::HomDim(req);
      Emit(out, j,
           "hom " + std::to_string(j["hom"].get<int64_t>()) + "\next1 " +
               std::to_string(j["ext1"].get<int64_t>()) + "\n");
    } else if (*reduce) {
      Json req = with_weights();
      req["expr"] = a;
      const Json j = wpl::api::K0Reduce(req);
      Emit(out, j, j["class"].get<std::string>() + "\n");
    } else if (*euler) {
      Json req = with_weights();
      req["a"] = a;
      req["b"] = b;
      const Json j = wpl::api::Euler(req);
      Emit(out, j, std::to_string(j["euler"].get<int64_t>()) + "\n");
    } else if (*beq) {
      Json req = with_weights();
      req["a"] = a;
      req["b"] = b;
      const Json j = wpl::api::BundleEq(req);
      Emit(out, j, j["equal"].get<bool>() ? "true\n" : "false\n");
    } else if (*susp) {
      Json req = with_weights();
      req["bundle"] = a;
      req["inverse"] = inverse;
      const Json j = wpl::api::Suspend(req);
      Emit(out, j, j["result"].get<std::string>() + "\n");
    } else if (*hulls) {
      Json req = with_weights();
      req["bundle"] = a;
      const Json j = wpl::api::Hulls(req);
      Emit(out, j,
           "I: " + Lines(j["injective_hull"]) + "\nP: " +
               Lines(j["projective_cover"]) + "\n");
    } else if (*slope) {
      Json req = with_weights();
      req["bundle"] = a;
      const Json j = wpl::api::Slope(req);
      Emit(out, j, j["slope"].get<std::string>() + "\n");
    } else if (*mutate) {
      const Json j = wpl::api::Mutate({{"quiver", LoadQuiver(quiver)},
                                       {"vertex", vertex}});
      Emit(out, j, ArrowsText(j["quiver"]));
    } else if (*apply) {
      const Json j = wpl::api::Apply({{"quiver", LoadQuiver(quiver)},
                                      {"sequence", sequence}});
      Emit(out, j, ArrowsText(j["quiver"]));
    } else if (*iso) {
      const Json j = wpl::api::Iso({{"q1", LoadQuiver(quiver)},
                                    {"q2", LoadQuiver(target)}});
      const bool yes = j["isomorphic"].get<bool>();
      Emit(out, j,
           yes ? "isomorphic\n" + WitnessText(j["witness"])
               : std::string("not isomorphic\n"));
    } else if (*search) {
      const Json j = wpl::api::Search({{"source", LoadQuiver(quiver)},
                                       {"target", LoadQuiver(target)},
                                       {"maxDepth", max_depth}});
      std::string text = "not found within depth " + std::to_string(max_depth) + "\n";
      if (j["found"].get<bool>()) {
        std::ostringstream os;
        os << "sequence:";
        for (const Json& v : j["sequence"]) os << ' ' << v.get<int>();
        os << "\nlength: " << j["sequence"].size() << "\n";
        text = os.str();
      }
      Emit(out, j, text);
    } else if (*fixtures) {
      if (fixture.empty()) {
        const Json j = wpl::api::ListFixtures();
        std::ostringstream os;
        for (const Json& f : j["fixtures"]) {
          os << f["name"].get<std::string>() << "  ("
             << f["vertices"].get<int>() << " vertices) "
             << f["description"].get<std::string>() << "\n";
        }
        Emit(out, j, os.str());
      } else {
        const Json j = wpl::api::ShowFixture(fixture);
        std::ostringstream os;
        for (const Json& v : j["quiver"]["vertices"]) {
          os << v["id"].get<int>() << ": " << v["label"].get<std::string>() << "\n";
        }
        Emit(out, j, os.str() + ArrowsText(j["quiver"]));
      }
    } else if (*replay) {
      const wpl::ReplayReport r = wpl::RunReplay(tag);
      const bool ok = r.pass() && wpl::Verify(r);
      Emit(out, wpl::api::ReportToJson(r), wpl::api::ReportToText(r));
      return ok ? 0 : kVerificationFailed;
    } else if (*serve) {
      wpl::Service service;
      const int bound = service.Bind(host, port);
      if (bound < 0) {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return kUsage;
      }
      g_service = &service;
      std::signal(SIGINT, OnSignal);
      std::signal(SIGTERM, OnSignal);
      std::cout << "listening on http://" << host << ":" << bound << "\n"
                << std::flush;
      service.Listen();
      g_service = nullptr;
    }
  } catch (const wpl::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const wpl::SearchFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return 0;
}
