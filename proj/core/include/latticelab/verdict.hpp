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
 * @file verdict.hpp
 *
 * Outcome of a property check, with an optional JSON witness.
 */

#ifndef LATTICELAB_VERDICT_HPP
#define LATTICELAB_VERDICT_HPP

#include <string>

#include <nlohmann/json.hpp>

namespace latticelab {

  using Json = nlohmann::ordered_json;

  struct Verdict {
    std::string property;
    bool        holds = false;
    //! Counterexample when the property fails, certificate otherwise; may be null.
    Json        witness;
    std::string notes;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  inline Verdict make_verdict(std::string property, bool holds, Json witness = nullptr,
                              std::string notes = {}) {
    return Verdict{std::move(property), holds, std::move(witness), std::move(notes)};
  }

  inline Json to_json(Verdict const& verdict) {
    Json out;
    out["property"] = verdict.property;
    out["holds"]    = verdict.holds;
    out["witness"]  = verdict.witness;
    if (!verdict.notes.empty()) {
      out["notes"] = verdict.notes;
    }
    return out;
  }

}  // namespace latticelab

#endif  // LATTICELAB_VERDICT_HPP
