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

// Shared helpers for the unit tests.

#ifndef LATTICELAB_TESTS_HELPERS_HPP
#define LATTICELAB_TESTS_HELPERS_HPP

#include <latticelab/fixtures.hpp>
#include <latticelab/harness.hpp>
#include <latticelab/lattice.hpp>
#include <latticelab/linear_morphism.hpp>
#include <latticelab/monoid.hpp>

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace testing {

  using namespace latticelab;

  inline ElementId id(LatticePtr const& l, std::string_view name) {
    return l->at(name);
  }

  inline std::set<std::string> names_of(Lattice const& l, std::vector<ElementId> const& xs) {
    std::set<std::string> out;
    for (ElementId x : xs) {
      out.insert(l.element_name(x));
    }
    return out;
  }

  // Map table from name pairs; every domain element must be listed.
  inline MapTable table(LatticePtr const& dom, LatticePtr const& cod,
                        std::initializer_list<std::pair<char const*, char const*>> pairs) {
    MapTable out(dom->size());
    for (auto const& [from, to] : pairs) {
      out[dom->at(from).index()] = cod->at(to);
    }
    return out;
  }

  // {id, zero}, the smallest admissible monoid.
  inline EndoMonoid trivial_monoid(LatticePtr const& l) {
    return build_monoid(l, MonoidSpec::explicit_set({identity_morphism(l).table(),
                                                     zero_morphism(l, l).table()}));
  }

  // Fixtures plus a fixed slice of the random corpus.
  inline std::vector<LatticePtr> sample_corpus(std::size_t random_count) {
    std::vector<LatticePtr> out = fixture_corpus();
    auto random = random_corpus(7, random_count, 7, Limits{});
    out.insert(out.end(), random.begin(), random.end());
    return out;
  }

}  // namespace testing

#endif  // LATTICELAB_TESTS_HELPERS_HPP
