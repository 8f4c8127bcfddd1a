//
// Copyright 2026 The adjkeel Authors
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
//


// adjkeel command line front end. Talks to the library only through the C
// interface.

#include <adjkeel/adjkeel.h>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCheck = 2;

struct Options {
  std::string polygon;
  std::string surface;
  std::string input;
  std::string format = "json";
  bool oracle = false;
  std::optional<std::uint64_t> seed;
  int n = 5;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("ADJOINT_KEEL_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring malformed ADJOINT_KEEL_SEED\n";
  }
  return adjkeel_default_seed();
}

int emit(adjkeel_status st, char* body) {
  if (body) {
    std::string s(body);
    adjkeel_string_free(body);
    std::cout << s;
    if (s.empty() || s.back() != '\n') std::cout << '\n';
  }
  if (st == ADJKEEL_OK) return kExitOk;
  if (st == ADJKEEL_CHECK_FAILED) {
    std::cerr << "error: " << adjkeel_last_error() << "\n";
    return kExitCheck;
  }
  std::cerr << "error [" << adjkeel_status_name(st) << "]: " << adjkeel_last_error() << "\n";
  return kExitInput;
}

int fail_input(const std::string& msg) {
  std::cerr << "error [InvalidInput]: " << msg << "\n";
  return kExitInput;
}

int run_geometry(const std::string& command, const Options& o) {
  std::string polygon = o.polygon, surface = o.surface;
  const int given = !o.polygon.empty() + !o.surface.empty() + !o.input.empty();
  if (given != 1) return fail_input("input: give exactly one of --polygon, --surface, --input");
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) return fail_input("input: cannot read '" + o.input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    (buf.str().find("\"vertices\"") != std::string::npos ? polygon : surface) = buf.str();
  }
  const std::uint64_t seed = resolve_seed(o);
  char* body = nullptr;
  if (!polygon.empty()) {
    adjkeel_polygon* p = nullptr;
    adjkeel_status st = adjkeel_polygon_from_json(polygon.c_str(), &p);
    if (st != ADJKEEL_OK) return emit(st, nullptr);
    st = adjkeel_polygon_report(p, command.c_str(), o.format.c_str(), o.oracle, seed, &body);
    adjkeel_polygon_free(p);
    return emit(st, body);
  }
  adjkeel_surface* s = nullptr;
  adjkeel_status st = adjkeel_surface_from_json(surface.c_str(), &s);
  if (st != ADJKEEL_OK) return emit(st, nullptr);
  st = adjkeel_surface_report(s, command.c_str(), o.format.c_str(), o.oracle, seed, &body);
  adjkeel_surface_free(s);
  return emit(st, body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level, keel and parametric degree bounds of rational surfaces"};
  app.set_version_flag("--version", adjkeel_version());
  app.require_subcommand(1);

  Options o;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json | text | svg")->check(CLI::IsMember({"json", "text", "svg"}));
  };
  std::string command;
  for (const char* name : {"level", "keel", "chain", "bounds"}) {
    CLI::App* sub = app.add_subcommand(name, std::string("Compute ") + name + " for a polygon or surface");
    sub->add_option("--polygon", o.polygon, "Polygon JSON {\"vertices\": [[x,y],...]}");
    sub->add_option("--surface", o.surface, "Surface JSON {\"model\": ..., \"D\": [...]}");
    sub->add_option("--input", o.input, "File holding polygon or surface JSON");
    add_format(sub);
    sub->add_flag("--oracle", o.oracle, "Run brute-force validators; exit 2 on disagreement");
    sub->add_option("--seed", o.seed, "Oracle seed (default: ADJOINT_KEEL_SEED or built-in)");
    sub->callback([&command, name] { command = name; });
  }
  CLI::App* high = app.add_subcommand("example-high", "Closed forms of the high-level example family");
  high->add_option("--n", o.n, "Odd integer >= 5")->required();
  add_format(high);
  high->callback([&command] { command = "example-high"; });

  CLI::App* check = app.add_subcommand("check", "Rerun every built-in example and invariant suite");
  add_format(check);
  check->add_option("--seed", o.seed, "Oracle seed");
  check->callback([&command] { command = "check"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  char* body = nullptr;
  if (command == "example-high") {
    const auto st = adjkeel_example_high(o.n, o.format.c_str(), &body);
    return emit(st, body);
  }
  if (command == "check") {
    const auto st = adjkeel_self_check(resolve_seed(o), o.format.c_str(), &body);
    return emit(st, body);
  }
  return run_geometry(command, o);
}
