/*
 *   Copyright 2026 The latticelab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <latticelab/cli.hpp>
#include <latticelab/lattice_io.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

  struct Run {
    int         code = 0;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = latticelab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string fixture_path(std::string const& name) {
    return (fs::path(LATTICELAB_FIXTURE_DIR) / (name + ".json")).string();
  }

  fs::path scratch(std::string const& name) {
    fs::path dir = fs::temp_directory_path() / "latticelab-cli-test";
    fs::create_directories(dir);
    return dir / name;
  }

}  // namespace

TEST_CASE("endos counts") {
  auto r = run({"endos", fixture_path("c3"), "--count"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  CHECK(run({"endos", fixture_path("m3"), "--count"}).out == "16\n");
  auto listed = run({"--json", "endos", fixture_path("b2"), "--list"});
  CHECK(listed.code == 0);
  CHECK(latticelab::Json::parse(listed.out)["morphisms"].size() == 7);
  auto cross = run({"endos", fixture_path("c3"), "--count", "--codomain", fixture_path("c2")});
  CHECK(cross.code == 0);
}

TEST_CASE("analyze reports failing properties with exit 1") {
  auto r = run({"analyze", fixture_path("excip"), "--monoid", "full", "--props", "cip,rickart"});
  CHECK(r.code == 1);
  CHECK(r.out.find("CIP: true") != std::string::npos);
  CHECK(r.out.find("rickart: false") != std::string::npos);
  CHECK(run({"analyze", fixture_path("b2"), "--props", "rickart,baer"}).code == 0);
  CHECK(run({"analyze", fixture_path("b2"), "--props", "no_such"}).code == 2);
}

TEST_CASE("analyze with an explicit monoid file") {
  fs::path spec = scratch("z4-monoid.json");
  std::ofstream(spec) << R"({"kind": "explicit", "members": [)"
                      << R"({"map": {"0": "0", "n": "0", "1": "0"}},)"
                      << R"({"map": {"0": "0", "n": "0", "1": "n"}},)"
                      << R"({"map": {"0": "0", "n": "n", "1": "1"}}]})";
  auto r = run({"--json", "analyze", fixture_path("c3"), "--monoid", spec.string(), "--props",
                "rickart"});
  CHECK(r.code == 1);
  auto json = latticelab::Json::parse(r.out);
  CHECK(json["monoid_size"] == 3);
  CHECK(json["results"][0]["witness"]["kernel"] == "n");
}

TEST_CASE("module bridge") {
  auto r = run({"module", "--group", "4", "--props", "rickart"});
  CHECK(r.code == 1);
  CHECK(run({"module", "--group", "2,2"}).code == 0);
  CHECK(run({"module", "--group", "4,2"}).code == 2);
  auto json = latticelab::Json::parse(run({"--json", "module", "--group", "4"}).out);
  CHECK(json["induced_monoid"]["size"] == 3);
}

TEST_CASE("validate, decompose and export") {
  CHECK(run({"validate", fixture_path("n5")}).code == 0);
  CHECK(run({"validate", fixture_path("fig1-morphism")}).code == 2);
  CHECK(run({"validate", fixture_path("missing")}).code == 2);
  auto d = run({"--json", "decompose", fixture_path("b3")});
  CHECK(d.code == 0);
  CHECK(latticelab::Json::parse(d.out)["blocks"].size() == 3);
  CHECK(run({"decompose", fixture_path("n5")}).code == 2);

  fs::path dot = scratch("excip.dot");
  CHECK(run({"export-dot", fixture_path("excip"), "-o", dot.string()}).code == 0);
  std::ifstream in(dot);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("digraph", 0) == 0);
}

TEST_CASE("products can be written and read back") {
  fs::path out = scratch("c2xc3.json");
  CHECK(run({"product", fixture_path("c2"), fixture_path("c3"), "-o", out.string()}).code == 0);
  auto l = latticelab::lattice_from_json(latticelab::read_json_file(out));
  CHECK(l->size() == 6);
  CHECK(l->modular());
}

TEST_CASE("theorems on a small corpus") {
  fs::path repro = scratch("repro.json");
  fs::remove(repro);
  auto r = run({"theorems", "--random", "10", "--max-size", "6", "--seed", "3", "--repro",
                repro.string()});
  CHECK(r.code == 0);
  CHECK_FALSE(fs::exists(repro));
  auto j = run({"--json", "theorems", "--random", "5", "--seed", "3", "--checks", "kerpi,if2"});
  CHECK(j.code == 0);
  auto json = latticelab::Json::parse(j.out);
  CHECK(json["checks"].size() == 2);
  CHECK(run({"theorems", "--checks", "nope"}).code == 2);
  CHECK(run({"theorems", "--corpus", LATTICELAB_FIXTURE_DIR, "--random", "0"}).code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"endos", fixture_path("c3"), "--bogus"}).code == 2);
  CHECK(run({"analyze"}).code == 2);
}

TEST_CASE("output is deterministic") {
  std::vector<std::vector<std::string>> commands{
      {"--json", "analyze", fixture_path("excip"), "--props", "all"},
      {"--json", "endos", fixture_path("m3"), "--list"},
      {"--json", "theorems", "--random", "8", "--seed", "9"},
      {"analyze", fixture_path("m3")},
  };
  for (auto const& c : commands) {
    auto a = run(c);
    auto b = run(c);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    if (c.front() == "--json") {
      CHECK(latticelab::Json::parse(a.out).is_object());
    }
  }
}
