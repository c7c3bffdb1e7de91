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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <latticelab/cli.hpp>
#include <latticelab/fixtures.hpp>
#include <latticelab/harness.hpp>
#include <latticelab/lattice_io.hpp>
#include <latticelab/module_bridge.hpp>
#include <latticelab/properties.hpp>

#include "oracles.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace latticelab;

namespace {

  // Collects the reasons a criterion failed; an empty list means PASS.
  class Findings {
   public:
    void expect(bool ok, std::string what) {
      if (!ok) {
        _problems.push_back(std::move(what));
      }
    }
    [[nodiscard]] bool ok() const noexcept {
      return _problems.empty();
    }
    [[nodiscard]] std::vector<std::string> const& problems() const noexcept {
      return _problems;
    }

   private:
    std::vector<std::string> _problems;
  };

  struct Criterion {
    int                            number;
    std::string                    title;
    double                         budget_seconds;
    std::function<void(Findings&)> run;
  };

  struct CliResult {
    int  code = 0;
    Json json;
  };

  CliResult cli_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    std::ostringstream out;
    std::ostringstream err;
    int const code = cli::run(args, out, err);
    CliResult result{code, nullptr};
    if (!out.str().empty()) {
      result.json = Json::parse(out.str());
    }
    return result;
  }

  std::string fixture_path(std::string const& name) {
    return (fs::path(LATTICELAB_FIXTURE_DIR) / (name + ".json")).string();
  }

  ////////////////////////////////////////////////////////////////////////

  void z4_bridge(Findings& f) {
    auto module = cli_json({"module", "--group", "4", "--props", "rickart"});
    f.expect(module.code == 1, "module exit code is not 1");
    Json const& induced = module.json["induced_monoid"];
    f.expect(induced["size"] == 3, "induced monoid size " + induced["size"].dump());
    Json const doubling{{"0", "0"}, {"<2>", "0"}, {"M", "<2>"}};
    bool found = false;
    for (auto const& member : induced["members"]) {
      found = found || member == doubling;
    }
    f.expect(found, "doubling map missing from induced monoid");
    Json const& rickart = module.json["results"][0];
    f.expect(rickart["holds"] == false, "module side reports Rickart");
    f.expect(rickart["agree"] == true, "module and lattice sides disagree");
    f.expect(rickart["witness"]["kernel"] == "<2>", "witness kernel " + rickart["witness"].dump());

    // carry the induced monoid over to the C3 fixture along the unique iso
    auto group = AbelianGroup::parse("4");
    auto sub = subgroup_lattice(group);
    auto c3 = lattice_from_json(read_json_file(fixture_path("c3")));
    auto isos = enumerate_isos(*sub.lattice, *c3);
    f.expect(isos.size() == 1, "Sub(Z4) is not uniquely C3");
    if (isos.size() != 1) {
      return;
    }
    auto const& iso = isos.front();
    Json members = Json::array();
    for (auto const& member : induced["members"]) {
      Json map = Json::object();
      for (auto const& [from, to] : member.items()) {
        map[c3->element_name(iso[sub.lattice->at(from).index()])] =
            c3->element_name(iso[sub.lattice->at(to.get<std::string>()).index()]);
      }
      members.push_back(Json{{"map", map}});
    }
    fs::path spec = fs::temp_directory_path() / "latticelab-acceptance-z4-monoid.json";
    std::ofstream(spec) << Json{{"kind", "explicit"}, {"members", members}}.dump(2);

    auto analyze = cli_json({"analyze", fixture_path("c3"), "--monoid", spec.string(), "--props",
                             "rickart"});
    f.expect(analyze.code == 1, "analyze exit code is not 1");
    f.expect(analyze.json["monoid_size"] == 3, "analyze monoid size differs");
    Json const& lattice_side = analyze.json["results"][0];
    f.expect(lattice_side["holds"] == false, "lattice side reports Rickart");
    f.expect(lattice_side["witness"]["kernel"] == "n", "lattice witness kernel differs");

    auto doubled = induced_morphism(group, sub, GroupHom::from_images(group, {2}));
    MapTable moved(c3->size());
    for (ElementId x : sub.lattice->elements()) {
      moved[iso[x.index()].index()] = iso[doubled(x).index()];
    }
    f.expect(moved == collapse_morphism(c3).table(), "(2x)_* is not the collapsing map of C3");
    fs::remove(spec);
  }

  void excip_example(Findings& f) {
    auto ex = lattice_from_json(read_json_file(fixture_path("excip")));
    std::set<std::string> comps;
    for (ElementId x : complemented_elements(*ex)) {
      comps.insert(ex->element_name(x));
    }
    f.expect(comps == std::set<std::string>{"0", "1", "a", "b"}, "complemented set differs");
    f.expect(check_summand_property(*ex, SummandKind::CIP).holds, "CIP fails");

    // the map 0 -> 0, k -> 0, a -> f between [0, a] and [0, b]
    auto below_a = interval(ex, ex->bottom(), ex->at("a"));
    auto below_b = interval(ex, ex->bottom(), ex->at("b"));
    MapTable t(below_a.size());
    t[below_a.to_local(ex->at("0")).index()] = below_b.to_local(ex->at("0"));
    t[below_a.to_local(ex->at("k")).index()] = below_b.to_local(ex->at("0"));
    t[below_a.to_local(ex->at("a")).index()] = below_b.to_local(ex->at("f"));
    auto phi = try_linear(below_a.lattice_ptr(), below_b.lattice_ptr(), t);
    f.expect(phi.has_value(), "the example map is not linear");
    if (phi) {
      f.expect(below_a.to_parent(phi->kernel()) == ex->at("k"), "kernel is not k");
    }
    Verdict cross = check_cross_rickart(below_a.lattice_ptr(), below_b.lattice_ptr());
    f.expect(!cross.holds, "[0,a] is [0,b]-Rickart");
  }

  void enumeration_counts(Findings& f) {
    struct Row {
      char const* name;
      std::size_t candidates;
      std::size_t count;
    };
    for (auto row : {Row{"c2", 4, 2}, Row{"c3", 27, 3}, Row{"b2", 256, 7}, Row{"m3", 3125, 16}}) {
      auto l = lattice_from_json(read_json_file(fixture_path(row.name)));
      auto brute = oracle::all_linear_maps(*l, *l);
      auto factored = enumerate_linmors(l, l);
      std::set<std::vector<std::size_t>> lhs;
      for (auto const& phi : factored) {
        lhs.insert(oracle::as_indices(phi.table()));
      }
      std::set<std::vector<std::size_t>> rhs(brute.linear.begin(), brute.linear.end());
      std::string const tag = std::string(row.name) + ": ";
      f.expect(brute.candidates == row.candidates, tag + "candidate count");
      f.expect(brute.linear.size() == row.count, tag + "oracle count");
      f.expect(factored.size() == row.count, tag + "enumerated count");
      f.expect(lhs == rhs, tag + "enumerated and oracle sets differ");
    }
  }

  void theorem_conformance(Findings& f) {
    fs::path repro = fs::temp_directory_path() / "latticelab-acceptance-repro.json";
    auto run = cli_json({"theorems", "--random", "200", "--max-size", "8", "--seed", "42",
                         "--repro", repro.string()});
    f.expect(run.code == 0, "theorems exit code " + std::to_string(run.code));
    f.expect(run.json["totals"]["failed"] == 0, "failures: " + run.json["failures"].dump());
    f.expect(run.json["lattices"] == 200 + fixture_corpus().size(), "corpus size differs");
    std::set<std::string> ran;
    for (auto const& c : run.json["checks"]) {
      ran.insert(c["name"].get<std::string>());
    }
    for (char const* name :
         {"riccipssp", "baerricscip", "ricendoric", "dricendodric", "baercar", "dbaercar", "ricd2",
          "dricc2", "kercompkergenann", "imcompintkercogen", "baercarK", "dbaercarT",
          "acc_rickart_eq_baer", "kerpi", "idemcomp", "fipi1", "fidis", "lemmaret", "splits",
          "isolin", "boolean_meetmaps", "compintric", "complbaer", "compldbaer", "ricind2", "if2",
          "sumric", "decomp_fi", "prod_projections_linear", "prod_rickart_pairs",
          "ricdirsumsub"}) {
      f.expect(ran.contains(name), std::string("check not run: ") + name);
    }
    f.expect(ran.size() == check_names().size(), "registry not fully exercised");
  }

  void acc_degeneracy(Findings& f) {
    std::vector<LatticePtr> corpus = fixture_corpus();
    auto random = random_corpus(42, 200, 8);
    corpus.insert(corpus.end(), random.begin(), random.end());
    std::size_t compared = 0;
    for (auto const& l : corpus) {
      for (auto const& m : {full_monoid(l), build_monoid(l, MonoidSpec::generated({}, true))}) {
        bool const r = check_rickart_family(m, RickartKind::rickart).holds;
        bool const b = check_rickart_family(m, RickartKind::baer).holds;
        bool const dr = check_rickart_family(m, RickartKind::dual_rickart).holds;
        bool const db = check_rickart_family(m, RickartKind::dual_baer).holds;
        f.expect(r == b, l->name() + ": rickart and baer differ");
        f.expect(dr == db, l->name() + ": dual_rickart and dual_baer differ");
        ++compared;
      }
    }
    f.expect(compared == 2 * corpus.size(), "not every lattice compared");
    bool const c3 = check_rickart_family(full_monoid(fixture("c3")), RickartKind::rickart).holds;
    bool const b2 = check_rickart_family(full_monoid(fixture("b2")), RickartKind::rickart).holds;
    f.expect(!c3 && b2, "C3 and B2 do not separate rickart");
  }

  // Exponent (largest invariant factor) square-free means semisimple.
  bool square_free(std::uint32_t n) {
    for (std::uint32_t p = 2; p * p <= n; ++p) {
      if (n % (p * p) == 0) {
        return false;
      }
    }
    return true;
  }

  void module_sweep(Findings& f) {
    Limits limits;
    limits.max_lattice = 512;
    std::size_t groups = 0;
    for (std::size_t order = 1; order <= 32; ++order) {
      for (auto const& factors : abelian_groups_of_order(order)) {
        AbelianGroup group(factors, limits);
        auto const verdicts = rickart_module_all(group, limits);
        bool const semisimple = factors.empty() || square_free(factors.back());
        for (auto const& v : verdicts) {
          f.expect(v.agree(), group.name() + ": " + v.module_side.property + " sides disagree");
          if (semisimple) {
            f.expect(v.module_side.holds && v.lattice_side.holds,
                     group.name() + ": semisimple but " + v.module_side.property + " fails");
          }
        }
        ++groups;
      }
    }
    f.expect(groups > 0, "no groups enumerated");
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "Z4 bridge matches the C3 collapsing morphism", 1.0, z4_bridge},
      {2, "EXCIP complements, CIP and cross Rickart", 1.0, excip_example},
      {3, "endomorphism counts match the all-maps oracle", 5.0, enumeration_counts},
      {4, "theorem conformance on fixtures plus 200 random lattices", 600.0, theorem_conformance},
      {5, "Rickart equals Baer on every finite corpus lattice", 600.0, acc_degeneracy},
      {6, "module bridge sweep over abelian groups of order <= 32", 120.0, module_sweep},
  };
  bool all = true;
  for (auto const& c : criteria) {
    Findings findings;
    auto const start = std::chrono::steady_clock::now();
    try {
      c.run(findings);
    } catch (std::exception const& e) {
      findings.expect(false, std::string("exception: ") + e.what());
    }
    double const seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      std::ostringstream msg;
      msg << "took " << seconds << " s, budget " << c.budget_seconds << " s";
      findings.expect(false, msg.str());
    }
    all = all && findings.ok();
    std::cout << (findings.ok() ? "PASS" : "FAIL") << ' ' << c.number << ' ' << c.title << " ("
              << std::fixed << std::setprecision(2) << seconds << " s)\n";
    for (auto const& p : findings.problems()) {
      std::cout << "    " << p << '\n';
    }
  }
  return all ? 0 : 1;
}
