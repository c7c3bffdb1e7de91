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
 * @file limits.hpp
 *
 * Size caps guarding the exponential parts of the library.
 */

#ifndef LATTICELAB_LIMITS_HPP
#define LATTICELAB_LIMITS_HPP

#include <cstddef>

namespace latticelab {

  struct Limits {
    //! Largest lattice accepted by constructors and products.
    std::size_t max_lattice = 64;
    //! Largest domain or codomain for exhaustive morphism enumeration.
    std::size_t max_enumeration = 20;
    //! Largest group order for the subgroup bridge.
    std::size_t max_group_order = 64;
    //! Largest number of monoid members kept in memory.
    std::size_t max_monoid = std::size_t{1} << 18;
    //! Monoids up to this size get a precomputed composition table.
    std::size_t max_table_members = 2048;

    //! Defaults, with `LATTICELAB_MAX_SIZE` overriding `max_lattice`.
    static Limits from_env();
  };

}  // namespace latticelab

#endif  // LATTICELAB_LIMITS_HPP
