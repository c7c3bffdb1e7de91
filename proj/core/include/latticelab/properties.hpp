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
 * @file properties.hpp
 *
 * Lattice-level property checkers relative to a monoid of linear
 * endomorphisms.
 */

#ifndef LATTICELAB_PROPERTIES_HPP
#define LATTICELAB_PROPERTIES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "latticelab/monoid.hpp"

namespace latticelab {

  enum class RickartKind { rickart, baer, dual_rickart, dual_baer };
  enum class SummandKind { CIP, SCIP, CSP, SCSP };
  enum class ConditionKind { C1, D1, mC2, mD2 };
  enum class NonsingularKind { K, T, K_co, T_co };
  enum class GenerationKind { generated, cogenerated };

  std::string_view to_string(RickartKind kind) noexcept;
  std::string_view to_string(SummandKind kind) noexcept;
  std::string_view to_string(ConditionKind kind) noexcept;
  std::string_view to_string(NonsingularKind kind) noexcept;

  //! Kernels (or images) complemented; the Baer kinds close under meets
  //! (joins) first.
  Verdict check_rickart_family(EndoMonoid const& m, RickartKind kind);

  //! Same test on a bare list of kernels or images. Baer kinds take the
  //! meet (join) closure including the empty family.
  Verdict check_rickart_family(Lattice const& lattice, std::span<ElementId const> values,
                               RickartKind kind);

  Verdict check_summand_property(Lattice const& lattice, SummandKind kind);

  //! C1 and D1 ignore the monoid.
  Verdict check_condition(EndoMonoid const& m, ConditionKind kind);
  Verdict check_condition(Lattice const& lattice, ConditionKind kind);

  Verdict check_nonsingularity(EndoMonoid const& m, NonsingularKind kind);

  Verdict check_retractable(EndoMonoid const& m);

  Verdict check_generation(EndoMonoid const& m, ElementId x, GenerationKind kind);

  //! Every linear L -> M has a complemented kernel. Throws SizeLimitExceeded.
  Verdict check_cross_rickart(LatticePtr const& domain, LatticePtr const& codomain,
                              Limits const& limits = Limits{});

  //! Some projection (x, x') satisfies phi = phi o pi and x ^ ker = 0.
  [[nodiscard]] bool has_projection_form(EndoMonoid const& m, LinearMorphism const& phi);

  //! Compares the Rickart verdict with the projection form of every member;
  //! holds when they agree. Throws MissingProjections.
  Verdict check_rickpix(EndoMonoid const& m);

  //! Names accepted by evaluate_property.
  std::vector<std::string> const& property_names();
  //! Properties meaningful for this monoid (skips ones whose preconditions fail).
  std::vector<std::string> default_properties(EndoMonoid const& m);
  //! Dispatch by name; throws InvalidInput for unknown names.
  Verdict evaluate_property(EndoMonoid const& m, std::string_view name);

  //! {"lattice", "monoid", "results"}.
  Json make_report(EndoMonoid const& m, Json monoid_spec, std::vector<Verdict> const& results);

}  // namespace latticelab

#endif  // LATTICELAB_PROPERTIES_HPP
