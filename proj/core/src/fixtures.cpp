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


#include "latticelab/fixtures.hpp"

#include "latticelab/error.hpp"

namespace latticelab {

  namespace {

    LatticeSpec make(std::string name, std::vector<std::string> elements,
                     std::vector<std::pair<std::string, std::string>> covers) {
      return LatticeSpec{std::move(name), std::move(elements), std::move(covers)};
    }

  }  // namespace

  std::vector<std::string> const& fixture_names() {
    static std::vector<std::string> const names{"c2", "c3", "b2", "b3", "m3", "n5", "excip"};
    return names;
  }

  LatticeSpec fixture_spec(std::string_view name) {
    if (name == "c2") {
      return make("2", {"0", "1"}, {{"0", "1"}});
    }
    if (name == "c3") {
      return make("C3", {"0", "n", "1"}, {{"0", "n"}, {"n", "1"}});
    }
    if (name == "b2") {
      return make("B2", {"0", "a", "b", "1"},
                  {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
    }
    if (name == "b3") {
      return make("B3", {"0", "a", "b", "c", "ab", "ac", "bc", "1"},
                  {{"0", "a"},
                   {"0", "b"},
                   {"0", "c"},
                   {"a", "ab"},
                   {"a", "ac"},
                   {"b", "ab"},
                   {"b", "bc"},
                   {"c", "ac"},
                   {"c", "bc"},
                   {"ab", "1"},
                   {"ac", "1"},
                   {"bc", "1"}});
    }
    if (name == "m3") {
      return make("M3", {"0", "a", "b", "c", "1"},
                  {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
    }
    if (name == "n5") {
      // pentagon: 0 < a < b < 1 and 0 < c < 1
      return make("N5", {"0", "a", "b", "c", "1"},
                  {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
    }
    if (name == "excip") {
      return make("EXCIP", {"0", "k", "f", "a", "c", "b", "avc", "cvb", "1"},
                  {{"0", "k"},
                   {"0", "f"},
                   {"k", "a"},
                   {"k", "c"},
                   {"f", "c"},
                   {"f", "b"},
                   {"a", "avc"},
                   {"c", "avc"},
                   {"c", "cvb"},
                   {"b", "cvb"},
                   {"avc", "1"},
                   {"cvb", "1"}});
    }
    throw Error(ErrorCode::invalid_input, "unknown fixture '" + std::string(name) + "'");
  }

  LatticePtr fixture(std::string_view name) {
    return build_lattice(fixture_spec(name));
  }

  LinearMorphism collapse_morphism(LatticePtr const& c3) {
    MapTable table(c3->size());
    table[c3->at("0").index()] = c3->at("0");
    table[c3->at("n").index()] = c3->at("0");
    table[c3->at("1").index()] = c3->at("n");
    return validate_linear(c3, c3, std::move(table));
  }

}  // namespace latticelab
