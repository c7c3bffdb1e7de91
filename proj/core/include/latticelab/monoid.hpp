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
 * @file monoid.hpp
 *
 * Composition-closed sets of linear endomorphisms containing the identity
 * and the zero morphism, with annihilators and the Rickart and Baer monoid
 * predicates.
 */

#ifndef LATTICELAB_MONOID_HPP
#define LATTICELAB_MONOID_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "latticelab/linear_morphism.hpp"

namespace latticelab {

  struct MapTableHash {
    std::size_t operator()(MapTable const& table) const noexcept;
  };

  struct MonoidSpec {
    enum class Kind { full, generated, explicit_members };

    Kind kind = Kind::full;
    //! Generators, or the full member list for explicit monoids.
    std::vector<MapTable> morphisms;
    bool                  with_projections = false;

    static MonoidSpec full() {
      return {};
    }
    static MonoidSpec generated(std::vector<MapTable> generators, bool with_projections);
    static MonoidSpec explicit_set(std::vector<MapTable> members);
  };

  MonoidSpec monoid_spec_from_json(Json const& json, Lattice const& lattice);
  Json       to_json(MonoidSpec const& spec, Lattice const& lattice);

  using MemberSet = boost::dynamic_bitset<>;

  class EndoMonoid {
   public:
    [[nodiscard]] Lattice const& lattice() const noexcept {
      return *_lattice;
    }
    [[nodiscard]] LatticePtr const& lattice_ptr() const noexcept {
      return _lattice;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _members.size();
    }
    [[nodiscard]] std::span<LinearMorphism const> members() const noexcept {
      return _members;
    }
    [[nodiscard]] LinearMorphism const& operator[](std::size_t i) const {
      return _members[i];
    }
    [[nodiscard]] std::size_t zero() const noexcept {
      return _zero;
    }
    [[nodiscard]] std::size_t identity() const noexcept {
      return _identity;
    }
    [[nodiscard]] bool has_all_projections() const noexcept {
      return _all_projections;
    }
    [[nodiscard]] bool has_composition_table() const noexcept {
      return !_comp.empty();
    }
    //! False when closure was assumed rather than checked.
    [[nodiscard]] bool closure_verified() const noexcept {
      return _closure_verified;
    }

    [[nodiscard]] std::optional<std::size_t> index_of(MapTable const& table) const;
    [[nodiscard]] bool contains(LinearMorphism const& phi) const {
      return index_of(phi.table()).has_value();
    }
    //! Index of members[outer] o members[inner]; throws NotClosed if absent.
    [[nodiscard]] std::size_t compose(std::size_t outer, std::size_t inner) const;

    //! Takes members as given; with verify set, checks closure. Throws
    //! NotClosed, SizeLimitExceeded.
    static EndoMonoid from_members(LatticePtr lattice, std::vector<LinearMorphism> members,
                                   bool verify, Limits const& limits = Limits{});

   private:
    EndoMonoid() = default;

    LatticePtr                                          _lattice;
    std::vector<LinearMorphism>                         _members;
    std::unordered_map<MapTable, std::size_t, MapTableHash> _index;
    std::vector<std::uint32_t>                          _comp;
    std::size_t                                         _zero     = 0;
    std::size_t                                         _identity = 0;
    bool _all_projections  = false;
    bool _closure_verified = false;
  };

  //! Every projection (x, x') for complemented x and each complement x'.
  std::vector<LinearMorphism> all_projections(LatticePtr const& lattice);

  EndoMonoid build_monoid(LatticePtr const& lattice, MonoidSpec const& spec,
                          Limits const& limits = Limits{});

  inline EndoMonoid full_monoid(LatticePtr const& lattice, Limits const& limits = Limits{}) {
    return build_monoid(lattice, MonoidSpec::full(), limits);
  }

  std::vector<std::size_t> idempotents(EndoMonoid const& m);

  std::vector<ElementId> fully_invariant_elements(EndoMonoid const& m);

  enum class Side { right, left };

  struct AnnihilatorSet {
    Side                       side = Side::right;
    std::vector<std::size_t>   targets;
    std::vector<std::size_t>   members;
    std::optional<std::size_t> principal_idempotent;
  };

  //! right: {psi : phi o psi = 0}; left: {psi : psi o phi = 0}, for all
  //! phi in targets. The principal idempotent is the first e with
  //! members = e m (right) or m e (left).
  AnnihilatorSet annihilator(EndoMonoid const& m, Side side,
                             std::span<std::size_t const> targets);

  //! Members psi with e o psi = psi (right) or psi o e = psi (left).
  MemberSet principal_set(EndoMonoid const& m, Side side, std::size_t idempotent);

  enum class MonoidProperty { right_rickart, left_rickart, right_baer, left_baer };

  std::string_view to_string(MonoidProperty kind) noexcept;

  Verdict monoid_predicate(EndoMonoid const& m, MonoidProperty kind);

}  // namespace latticelab

#endif  // LATTICELAB_MONOID_HPP
