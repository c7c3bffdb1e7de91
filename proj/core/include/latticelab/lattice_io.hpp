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
 * @file lattice_io.hpp
 *
 * JSON and Graphviz serialisation of lattices.
 */

#ifndef LATTICELAB_LATTICE_IO_HPP
#define LATTICELAB_LATTICE_IO_HPP

#include <filesystem>
#include <string>

#include "latticelab/lattice.hpp"
#include "latticelab/verdict.hpp"

namespace latticelab {

  //! {"name", "elements", "covers"}; throws ParseError on malformed input.
  LatticeSpec lattice_spec_from_json(Json const& json);
  Json        to_json(LatticeSpec const& spec);
  Json        lattice_to_json(Lattice const& lattice);

  LatticePtr lattice_from_json(Json const& json, Limits const& limits = Limits{});

  //! Reads a file and parses it as JSON; throws ParseError on failure.
  Json       read_json_file(std::filesystem::path const& path);
  LatticePtr read_lattice_file(std::filesystem::path const& path,
                               Limits const&                limits = Limits{});

  //! Hasse diagram in DOT, bottom drawn lowest.
  std::string to_dot(Lattice const& lattice);

}  // namespace latticelab

#endif  // LATTICELAB_LATTICE_IO_HPP
