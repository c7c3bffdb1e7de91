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


#include "latticelab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "latticelab/error.hpp"
#include "latticelab/fixtures.hpp"
#include "latticelab/harness.hpp"
#include "latticelab/lattice_io.hpp"
#include "latticelab/module_bridge.hpp"
#include "latticelab/properties.hpp"

namespace latticelab::cli {

  namespace {

    namespace fs = std::filesystem;

    struct Globals {
      bool     json    = false;
      unsigned threads = 1;
      Limits   limits;
    };

    std::string lowercase(std::string s) {
      std::transform(s.begin(), s.end(), s.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      return s;
    }

    std::vector<std::string> split_csv(std::string const& csv) {
      std::vector<std::string> out;
      std::stringstream        in(csv);
      std::string              item;
      while (std::getline(in, item, ',')) {
        if (!item.empty()) {
          out.push_back(item);
        }
      }
      return out;
    }

    void emit(std::ostream& out, Json const& json) {
      out << json.dump(2) << '\n';
    }

    void write_text(fs::path const& path, std::string const& text) {
      std::ofstream file(path);
      if (!file) {
        throw Error(ErrorCode::invalid_input, "cannot write " + path.string());
      }
      file << text;
    }

    std::string describe(LinearMorphism const& phi) {
      std::string s;
      for (std::size_t i = 0; i < phi.table().size(); ++i) {
        if (i != 0) {
          s += ' ';
        }
        s += phi.domain().element_name(ElementId(i)) + "->"
             + phi.codomain().element_name(phi.table()[i]);
      }
      return s;
    }

    //! Case-insensitive lookup in the property catalogue.
    std::string resolve_property(std::string const& name) {
      for (auto const& known : property_names()) {
        if (lowercase(known) == lowercase(name)) {
          return known;
        }
      }
      throw Error(ErrorCode::invalid_input, "unknown property '" + name + "'");
    }

    RickartKind resolve_kind(std::string const& name) {
      auto n = lowercase(name);
      for (auto k : {RickartKind::rickart, RickartKind::baer, RickartKind::dual_rickart,
                     RickartKind::dual_baer}) {
        if (n == to_string(k)) {
          return k;
        }
      }
      throw Error(ErrorCode::invalid_input,
                  "module properties are rickart, baer, dual_rickart, dual_baer; got '" + name
                      + "'");
    }

    ////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////

    int validate(Globals const& g, std::string const& path, std::ostream& out) {
      auto L       = read_lattice_file(path, g.limits);
      auto modular = is_modular(*L);
      Json j{{"lattice", L->name()},
             {"elements", L->size()},
             {"modular", modular.holds},
             {"witness", modular.witness}};
      if (modular.holds) {
        j["distributive"] = is_distributive(*L);
        j["complemented"] = is_complemented(*L);
      }
      if (g.json) {
        emit(out, j);
      } else {
        out << L->name() << ": lattice with " << L->size() << " elements, "
            << (modular.holds ? "modular" : "not modular") << '\n';
        if (!modular.holds) {
          out << "  pentagon witness: " << modular.witness.dump() << '\n';
        }
      }
      return ok;
    }

    int analyze(Globals const& g, std::string const& path, std::string const& monoid_arg,
                std::string const& props, std::ostream& out) {
      auto       L    = read_lattice_file(path, g.limits);
      MonoidSpec spec = monoid_arg == "full"
                            ? MonoidSpec::full()
                            : monoid_spec_from_json(read_json_file(monoid_arg), *L);
      auto       m    = build_monoid(L, spec, g.limits);

      std::vector<std::string> names;
      if (props == "all") {
        names = default_properties(m);
      } else {
        for (auto const& p : split_csv(props)) {
          names.push_back(resolve_property(p));
        }
      }
      std::vector<Verdict> verdicts;
      for (auto const& name : names) {
        verdicts.push_back(evaluate_property(m, name));
      }
      bool all = std::all_of(verdicts.begin(), verdicts.end(),
                             [](Verdict const& v) { return v.holds; });
      if (g.json) {
        Json report           = make_report(m, to_json(spec, *L), verdicts);
        report["monoid_size"] = m.size();
        emit(out, report);
      } else {
        out << L->name() << " with a monoid of " << m.size() << " maps\n";
        for (auto const& v : verdicts) {
          out << "  " << v.property << ": " << (v.holds ? "true" : "false");
          if (!v.witness.is_null()) {
            out << "  " << v.witness.dump();
          }
          out << '\n';
        }
      }
      return all ? ok : property_failed;
    }

    int endos(Globals const& g, std::string const& path, std::string const& codomain_path,
              bool list, std::ostream& out) {
      auto L    = read_lattice_file(path, g.limits);
      auto M    = codomain_path.empty() ? L : read_lattice_file(codomain_path, g.limits);
      auto maps = enumerate_linmors(L, M, g.limits);
      if (g.json) {
        Json j{{"domain", L->name()}, {"codomain", M->name()}, {"count", maps.size()}};
        if (list) {
          j["morphisms"] = Json::array();
          for (auto const& phi : maps) {
            j["morphisms"].push_back(to_json(phi));
          }
        }
        emit(out, j);
      } else if (list) {
        for (auto const& phi : maps) {
          out << describe(phi) << '\n';
        }
      } else {
        out << maps.size() << '\n';
      }
      return ok;
    }

    int decompose_cmd(Globals const& g, std::string const& path, std::ostream& out) {
      auto L = read_lattice_file(path, g.limits);
      auto d = decompose(*L);
      Json blocks = Json::array();
      for (ElementId b : d.blocks) {
        blocks.push_back(
            Json{{"block", L->element_name(b)},
                 {"size", interval(L, L->bottom(), b).size()}});
      }
      if (g.json) {
        emit(out, Json{{"lattice", L->name()}, {"independent", d.independent}, {"blocks", blocks}});
      } else {
        out << L->name() << ": " << d.blocks.size() << " indecomposable block"
            << (d.blocks.size() == 1 ? "" : "s") << '\n';
        for (auto const& b : blocks) {
          out << "  [0, " << b["block"].get<std::string>() << "] with " << b["size"]
              << " elements\n";
        }
      }
      return ok;
    }

    int product(Globals const& g, std::vector<std::string> const& paths,
                std::string const& output, std::ostream& out) {
      std::vector<LatticePtr> factors;
      for (auto const& p : paths) {
        factors.push_back(read_lattice_file(p, g.limits));
      }
      auto P    = direct_product(factors, g.limits);
      auto text = lattice_to_json(*P.lattice).dump(2) + "\n";
      if (output.empty()) {
        out << text;
        return ok;
      }
      write_text(output, text);
      if (g.json) {
        emit(out, Json{{"lattice", P.lattice->name()},
                       {"elements", P.lattice->size()},
                       {"output", output}});
      } else {
        out << "wrote " << output << " (" << P.lattice->name() << ", " << P.lattice->size()
            << " elements)\n";
      }
      return ok;
    }

    int module(Globals const& g, std::string const& group_spec, std::string const& props,
               std::ostream& out) {
      auto G = AbelianGroup::parse(group_spec, g.limits);
      std::vector<RickartKind> kinds;
      for (auto const& p : split_csv(props)) {
        kinds.push_back(resolve_kind(p));
      }
      auto sub   = subgroup_lattice(G, g.limits);
      auto count = endomorphism_count(G);

      Json j{{"group", G.name()},
             {"order", G.order()},
             {"subgroups", sub.lattice->size()},
             {"endomorphisms", count}};
      std::optional<EndoMonoid> induced;
      if (count <= g.limits.max_monoid) {
        induced.emplace(induced_monoid(G, sub, g.limits));
        Json members = Json::array();
        for (auto const& phi : induced->members()) {
          members.push_back(to_json(phi)["map"]);
        }
        j["induced_monoid"] = Json{{"size", induced->size()}, {"members", members}};
      }

      auto all     = rickart_module_all(G, g.limits);
      bool success = true;
      Json results = Json::array();
      for (auto kind : kinds) {
        auto const& v = all[static_cast<std::size_t>(kind)];
        success       = success && v.agree() && v.module_side.holds;
        Json r{{"property", std::string(to_string(kind))},
               {"holds", v.module_side.holds && v.agree()},
               {"module_side", v.module_side.holds},
               {"lattice_side", v.lattice_side.holds},
               {"agree", v.agree()},
               {"witness", v.module_side.witness}};
        if (!v.lattice_side.notes.empty()) {
          r["notes"] = v.lattice_side.notes;
        }
        results.push_back(std::move(r));
      }
      j["results"] = std::move(results);

      if (g.json) {
        emit(out, j);
      } else {
        out << G.name() << ": " << sub.lattice->size() << " subgroups, " << count
            << " endomorphisms";
        if (induced) {
          out << ", induced monoid of " << induced->size() << " maps";
        }
        out << '\n';
        if (induced && induced->size() <= 16) {
          for (auto const& phi : induced->members()) {
            out << "  " << describe(phi) << '\n';
          }
        }
        for (auto const& r : j["results"]) {
          out << "  " << r["property"].get<std::string>() << ": "
              << (r["holds"].get<bool>() ? "true" : "false") << " (module "
              << (r["module_side"].get<bool>() ? "true" : "false") << ", lattice "
              << (r["lattice_side"].get<bool>() ? "true" : "false") << ")";
          if (!r["witness"].is_null()) {
            out << "  " << r["witness"].dump();
          }
          out << '\n';
        }
      }
      return success ? ok : property_failed;
    }

    struct TheoremArgs {
      std::string   corpus_dir;
      std::size_t   random   = 200;
      std::size_t   max_size = 8;
      std::uint64_t seed     = 0;
      std::string   checks   = "all";
      std::string   monoid   = "full";
      bool          no_fixtures = false;
      std::string   repro    = "conformance-repro.json";
    };

    int theorems(Globals const& g, TheoremArgs const& a, std::ostream& out, std::ostream& err) {
      std::vector<LatticePtr> corpus;
      if (!a.no_fixtures) {
        corpus = fixture_corpus();
      }
      if (!a.corpus_dir.empty()) {
        std::vector<fs::path> files;
        for (auto const& entry : fs::directory_iterator(a.corpus_dir)) {
          if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
          }
        }
        std::sort(files.begin(), files.end());
        for (auto const& f : files) {
          auto json = read_json_file(f);
          if (json.is_object() && json.contains("elements")) {
            corpus.push_back(lattice_from_json(json, g.limits));
          }
        }
      }
      auto random = random_corpus(a.seed, a.random, a.max_size, g.limits);
      corpus.insert(corpus.end(), random.begin(), random.end());

      std::vector<std::string> checks = a.checks == "all" ? check_names() : split_csv(a.checks);
      ConformanceOptions       options;
      options.seed    = a.seed;
      options.monoid  = harness_monoid_from_string(a.monoid);
      options.threads = g.threads;
      options.limits  = g.limits;
      auto report     = run_conformance(corpus, checks, options);
      auto json       = to_json(report);

      if (g.json) {
        emit(out, json);
      } else {
        out << "corpus of " << report.lattices.size() << " lattices, seed " << report.seed
            << ", monoid " << to_string(report.monoid) << '\n';
        for (auto const& t : report.tallies) {
          out << "  " << t.name << ": " << t.passed << " passed, " << t.failed << " failed, "
              << t.skipped << " skipped\n";
        }
        auto const& totals = json["totals"];
        out << "total: " << totals["passed"] << " passed, " << totals["failed"] << " failed, "
            << totals["skipped"] << " skipped\n";
      }
      if (!report.ok()) {
        Json repro{{"schema", json["schema"]},
                   {"seed", report.seed},
                   {"monoid", json["monoid"]},
                   {"failures", json["failures"]}};
        write_text(a.repro, repro.dump(2) + "\n");
        err << report.failures.size() << " failing case(s); repro written to " << a.repro << '\n';
        return property_failed;
      }
      return ok;
    }

    int export_dot(Globals const& g, std::string const& path, std::string const& output,
                   std::ostream& out) {
      auto L   = read_lattice_file(path, g.limits);
      auto dot = to_dot(*L);
      if (output.empty()) {
        out << dot;
      } else {
        write_text(output, dot);
        if (!g.json) {
          out << "wrote " << output << '\n';
        } else {
          emit(out, Json{{"lattice", L->name()}, {"output", output}});
        }
      }
      return ok;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"latticelab: linear morphisms and Rickart properties of finite modular lattices",
                 "latticelab"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Print JSON instead of text");
    app.add_option("--threads", g.threads, "Worker threads (a hint)")
        ->check(CLI::PositiveNumber);

    std::string lattice_path, other_path, output, monoid = "full", props = "all";
    std::string group, module_props = "rickart,baer,dual_rickart,dual_baer";
    std::vector<std::string> factor_paths;
    bool                     count = false, list = false;
    TheoremArgs              th;

    auto* validate_cmd = app.add_subcommand("validate", "Check that a file describes a lattice");
    validate_cmd->add_option("lattice", lattice_path, "Lattice JSON")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "Evaluate properties relative to a monoid");
    analyze_cmd->add_option("lattice", lattice_path, "Lattice JSON")->required();
    analyze_cmd->add_option("--monoid", monoid, "'full' or a monoid spec JSON");
    analyze_cmd->add_option("--props", props, "Comma-separated property names or 'all'");

    auto* endos_cmd = app.add_subcommand("endos", "Enumerate linear morphisms");
    endos_cmd->add_option("lattice", lattice_path, "Domain lattice JSON")->required();
    auto* count_flag = endos_cmd->add_flag("--count", count, "Print the number of maps");
    endos_cmd->add_flag("--list", list, "Print every map")->excludes(count_flag);
    endos_cmd->add_option("--codomain", other_path, "Codomain lattice JSON");

    auto* decompose_sub = app.add_subcommand("decompose", "Split into indecomposable blocks");
    decompose_sub->add_option("lattice", lattice_path, "Lattice JSON")->required();

    auto* product_cmd = app.add_subcommand("product", "Direct product of lattices");
    product_cmd->add_option("lattices", factor_paths, "Factor lattice JSON files")
        ->required()
        ->expected(1, -1);
    product_cmd->add_option("-o,--output", output, "Output file (stdout when absent)");

    auto* module_cmd = app.add_subcommand("module", "Subgroup lattice of a finite abelian group");
    module_cmd->add_option("--group", group, "Invariant factors, e.g. 2,4")->required();
    module_cmd->add_option("--props", module_props, "Subset of rickart,baer,dual_rickart,dual_baer");

    auto* theorems_cmd = app.add_subcommand("theorems", "Run the conformance checks");
    theorems_cmd->add_option("--corpus", th.corpus_dir, "Directory of lattice JSON files")
        ->check(CLI::ExistingDirectory);
    theorems_cmd->add_option("--random", th.random, "Number of random lattices");
    theorems_cmd->add_option("--max-size", th.max_size, "Largest random lattice")
        ->check(CLI::PositiveNumber);
    theorems_cmd->add_option("--seed", th.seed, "Seed of the random corpus");
    theorems_cmd->add_option("--checks", th.checks, "Comma-separated check names or 'all'");
    theorems_cmd->add_option("--monoid", th.monoid, "'full' or 'projections'");
    theorems_cmd->add_flag("--no-fixtures", th.no_fixtures, "Leave out the built-in fixtures");
    theorems_cmd->add_option("--repro", th.repro, "Where failing cases are written");

    auto* dot_cmd = app.add_subcommand("export-dot", "Hasse diagram in Graphviz format");
    dot_cmd->add_option("lattice", lattice_path, "Lattice JSON")->required();
    dot_cmd->add_option("-o,--output", output, "Output file (stdout when absent)");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return ok;
    } catch (CLI::CallForAllHelp const& e) {
      app.exit(e, out, err);
      return ok;
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage_error;
    }

    try {
      g.limits = Limits::from_env();
      if (validate_cmd->parsed()) {
        return validate(g, lattice_path, out);
      }
      if (analyze_cmd->parsed()) {
        return analyze(g, lattice_path, monoid, props, out);
      }
      if (endos_cmd->parsed()) {
        return endos(g, lattice_path, other_path, list, out);
      }
      if (decompose_sub->parsed()) {
        return decompose_cmd(g, lattice_path, out);
      }
      if (product_cmd->parsed()) {
        return product(g, factor_paths, output, out);
      }
      if (module_cmd->parsed()) {
        return module(g, group, module_props, out);
      }
      if (theorems_cmd->parsed()) {
        return theorems(g, th, out, err);
      }
      if (dot_cmd->parsed()) {
        return export_dot(g, lattice_path, output, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    }
    return usage_error;
  }

}  // namespace latticelab::cli
