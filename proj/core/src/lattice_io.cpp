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

#include "latticelab/lattice_io.hpp"

#include <fstream>
#include <sstream>

#include "latticelab/error.hpp"

namespace latticelab {

  namespace {

    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      out += '"';
      return out;
    }

  }  // namespace

  LatticeSpec lattice_spec_from_json(Json const& json) {
    try {
      LatticeSpec spec;
      spec.name     = json.value("name", std::string("lattice"));
      spec.elements = json.at("elements").get<std::vector<std::string>>();
      for (auto const& pair : json.at("covers")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw Error(ErrorCode::parse, "each cover must be a [lower, upper] pair");
        }
        spec.covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
      }
      return spec;
    } catch (Json::exception const& e) {
      throw Error(ErrorCode::parse, std::string("malformed lattice JSON: ") + e.what());
    }
  }

  Json to_json(LatticeSpec const& spec) {
    Json out;
    out["name"]     = spec.name;
    out["elements"] = spec.elements;
    out["covers"]   = Json::array();
    for (auto const& [lo, hi] : spec.covers) {
      out["covers"].push_back(Json::array({lo, hi}));
    }
    return out;
  }

  Json lattice_to_json(Lattice const& lattice) {
    return to_json(lattice.to_spec());
  }

  LatticePtr lattice_from_json(Json const& json, Limits const& limits) {
    return build_lattice(lattice_spec_from_json(json), limits);
  }

  Json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::invalid_input, "cannot open " + path.string());
    }
    try {
      return Json::parse(in);
    } catch (Json::exception const& e) {
      throw Error(ErrorCode::parse, path.string() + ": " + e.what());
    }
  }

  LatticePtr read_lattice_file(std::filesystem::path const& path,
                               Limits const&                limits) {
    return lattice_from_json(read_json_file(path), limits);
  }

  std::string to_dot(Lattice const& L) {
    std::ostringstream out;
    out << "digraph " << quoted(L.name()) << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < L.size(); ++i) {
      out << "  " << quoted(L.element_name(ElementId(i))) << ";\n";
    }
    out << "  { rank=min; " << quoted(L.element_name(L.bottom())) << "; }\n";
    for (auto [lo, hi] : L.covers()) {
      out << "  " << quoted(L.element_name(lo)) << " -> " << quoted(L.element_name(hi))
          << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace latticelab
