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
 * @file error.hpp
 *
 * Exception type and error codes shared by every latticelab component.
 */

#ifndef LATTICELAB_ERROR_HPP
#define LATTICELAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace latticelab {

  enum class ErrorCode {
    invalid_input,
    parse,
    empty,
    not_a_poset,
    not_a_lattice,
    not_modular,
    not_comparable,
    size_limit_exceeded,
    no_kernel,
    not_interval_iso,
    domain_mismatch,
    not_a_complement,
    not_closed,
    missing_projections,
    give_up,
    unknown_check
  };

  //! Stable identifier for an error code, e.g. "NotALattice".
  std::string_view to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& message);

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace latticelab

#endif  // LATTICELAB_ERROR_HPP
