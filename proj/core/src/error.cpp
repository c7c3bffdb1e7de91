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

#include "latticelab/error.hpp"

namespace latticelab {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::invalid_input:
        return "InvalidInput";
      case ErrorCode::parse:
        return "ParseError";
      case ErrorCode::empty:
        return "Empty";
      case ErrorCode::not_a_poset:
        return "NotAPoset";
      case ErrorCode::not_a_lattice:
        return "NotALattice";
      case ErrorCode::not_modular:
        return "NotModular";
      case ErrorCode::not_comparable:
        return "NotComparable";
      case ErrorCode::size_limit_exceeded:
        return "SizeLimitExceeded";
      case ErrorCode::no_kernel:
        return "NoKernel";
      case ErrorCode::not_interval_iso:
        return "NotIntervalIso";
      case ErrorCode::domain_mismatch:
        return "DomainMismatch";
      case ErrorCode::not_a_complement:
        return "NotAComplement";
      case ErrorCode::not_closed:
        return "NotClosed";
      case ErrorCode::missing_projections:
        return "MissingProjections";
      case ErrorCode::give_up:
        return "GiveUp";
      case ErrorCode::unknown_check:
        return "UnknownCheck";
    }
    return "Unknown";
  }

  Error::Error(ErrorCode code, std::string const& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        _code(code) {}

}  // namespace latticelab
