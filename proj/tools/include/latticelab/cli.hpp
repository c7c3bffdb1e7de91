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
 * @file cli.hpp
 *
 * Entry point of the latticelab command-line tool, callable in-process so
 * tests can drive it without spawning a shell.
 */

#ifndef LATTICELAB_CLI_HPP
#define LATTICELAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace latticelab::cli {

  //! Exit codes.
  inline constexpr int ok           = 0;
  inline constexpr int property_failed = 1;
  inline constexpr int usage_error  = 2;

  //! args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace latticelab::cli

#endif  // LATTICELAB_CLI_HPP
