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

#include "latticelab/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "latticelab/error.hpp"

namespace latticelab {

  Limits Limits::from_env() {
    Limits limits;
    char const* raw = std::getenv("LATTICELAB_MAX_SIZE");
    if (raw == nullptr || *raw == '\0') {
      return limits;
    }
    std::size_t value = 0;
    char const* end   = raw + std::strlen(raw);
    auto [ptr, ec]    = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) {
      throw Error(ErrorCode::invalid_input,
                  std::string("LATTICELAB_MAX_SIZE is not a positive integer: ")
                      + raw);
    }
    limits.max_lattice = value;
    return limits;
  }

}  // namespace latticelab
