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


/**
 * @file fixtures.hpp
 *
 * Small named lattices used by tests, the CLI and the conformance corpus.
 */

#ifndef LATTICELAB_FIXTURES_HPP
#define LATTICELAB_FIXTURES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "latticelab/linear_morphism.hpp"

namespace latticelab {

  //! c2, c3, b2, b3, m3, n5, excip.
  std::vector<std::string> const& fixture_names();

  //! Throws InvalidInput for unknown names.
  LatticeSpec fixture_spec(std::string_view name);
  LatticePtr  fixture(std::string_view name);

  //! The endomorphism of c3 collapsing n to 0 and sending 1 to n.
  LinearMorphism collapse_morphism(LatticePtr const& c3);

}  // namespace latticelab

#endif  // LATTICELAB_FIXTURES_HPP
