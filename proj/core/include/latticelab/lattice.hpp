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
 * @file lattice.hpp
 *
 * Finite bounded lattices with precomputed order, join and meet tables.
 */

#ifndef LATTICELAB_LATTICE_HPP
#define LATTICELAB_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latticelab/limits.hpp"
#include "latticelab/verdict.hpp"

namespace latticelab {

  //! Index of an element inside one particular lattice.
  class ElementId {
   public:
    constexpr ElementId() noexcept = default;
    constexpr explicit ElementId(std::size_t index) noexcept
        : _value(static_cast<std::uint16_t>(index)) {}

    [[nodiscard]] constexpr std::size_t index() const noexcept {
      return _value;
    }

    friend constexpr auto operator<=>(ElementId, ElementId) noexcept = default;

   private:
    std::uint16_t _value = 0;
  };

  //! Element names plus Hasse covers, as read from input files.
  struct LatticeSpec {
    std::string                                      name;
    std::vector<std::string>                         elements;
    std::vector<std::pair<std::string, std::string>> covers;
  };

  class Lattice;
  using LatticePtr = std::shared_ptr<Lattice const>;

  class Lattice {
   public:
    //! Validates covers and canonicalises element order.
    static Lattice from_spec(LatticeSpec const& spec,
                             Limits const&      limits = Limits{});

    //! Builds from an arbitrary generating relation (x, y) meaning x <= y.
    static Lattice from_relation(std::string                    name,
                                 std::vector<std::string>       names,
                                 std::span<std::pair<std::size_t, std::size_t> const> relation,
                                 Limits const& limits = Limits{});

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }
    [[nodiscard]] std::string const& element_name(ElementId x) const {
      return _names[x.index()];
    }
    [[nodiscard]] std::vector<std::string> const& element_names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::optional<ElementId> find(std::string_view name) const;
    //! Like find() but throws InvalidInput for unknown names.
    [[nodiscard]] ElementId at(std::string_view name) const;

    [[nodiscard]] ElementId bottom() const noexcept {
      return _bottom;
    }
    [[nodiscard]] ElementId top() const noexcept {
      return _top;
    }

    [[nodiscard]] bool leq(ElementId a, ElementId b) const noexcept {
      return _leq[a.index() * size() + b.index()] != 0;
    }
    [[nodiscard]] bool less(ElementId a, ElementId b) const noexcept {
      return a != b && leq(a, b);
    }
    [[nodiscard]] ElementId join(ElementId a, ElementId b) const noexcept {
      return _join[a.index() * size() + b.index()];
    }
    [[nodiscard]] ElementId meet(ElementId a, ElementId b) const noexcept {
      return _meet[a.index() * size() + b.index()];
    }
    [[nodiscard]] ElementId join_all(std::span<ElementId const> xs) const noexcept;
    [[nodiscard]] ElementId meet_all(std::span<ElementId const> xs) const noexcept;

    //! Length of the longest chain from the bottom to x.
    [[nodiscard]] std::size_t rank(ElementId x) const noexcept {
      return _rank[x.index()];
    }
    [[nodiscard]] std::vector<ElementId> elements() const;

    //! Hasse diagram edges (lower, upper), sorted.
    [[nodiscard]] std::vector<std::pair<ElementId, ElementId>> const&
    covers() const noexcept {
      return _covers;
    }
    [[nodiscard]] std::vector<ElementId> const& upper_covers(ElementId x) const {
      return _up[x.index()];
    }
    [[nodiscard]] std::vector<ElementId> const& lower_covers(ElementId x) const {
      return _down[x.index()];
    }
    [[nodiscard]] std::vector<ElementId> const& atoms() const {
      return upper_covers(_bottom);
    }
    [[nodiscard]] std::vector<ElementId> const& coatoms() const {
      return lower_covers(_top);
    }

    //! Cached result of the modular law check.
    [[nodiscard]] bool modular() const noexcept {
      return _modular;
    }

    [[nodiscard]] LatticeSpec to_spec() const;

    [[nodiscard]] Lattice renamed(std::string name) const;

   private:
    Lattice() = default;

    std::string            _name;
    std::vector<std::string> _names;
    std::vector<char>      _leq;
    std::vector<ElementId> _join;
    std::vector<ElementId> _meet;
    std::vector<std::size_t> _rank;
    std::vector<std::pair<ElementId, ElementId>> _covers;
    std::vector<std::vector<ElementId>> _up;
    std::vector<std::vector<ElementId>> _down;
    ElementId _bottom;
    ElementId _top;
    bool      _modular = false;
  };

  //! Shorthand for Lattice::from_spec wrapped in a shared pointer.
  LatticePtr build_lattice(LatticeSpec const& spec, Limits const& limits = Limits{});

  inline LatticePtr share(Lattice lattice) {
    return std::make_shared<Lattice const>(std::move(lattice));
  }

  //! Sub-interval [lo, hi] of a parent lattice, also available as a lattice.
  class IntervalView {
   public:
    IntervalView(LatticePtr parent, ElementId lo, ElementId hi);

    [[nodiscard]] Lattice const& parent() const noexcept {
      return *_parent;
    }
    [[nodiscard]] LatticePtr const& parent_ptr() const noexcept {
      return _parent;
    }
    [[nodiscard]] ElementId lo() const noexcept {
      return _lo;
    }
    [[nodiscard]] ElementId hi() const noexcept {
      return _hi;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _members.size();
    }
    //! Parent ids, in the local canonical order.
    [[nodiscard]] std::span<ElementId const> members() const noexcept {
      return _members;
    }
    [[nodiscard]] Lattice const& lattice() const noexcept {
      return *_local;
    }
    [[nodiscard]] LatticePtr const& lattice_ptr() const noexcept {
      return _local;
    }
    [[nodiscard]] bool contains(ElementId parent_id) const noexcept;
    [[nodiscard]] ElementId to_parent(ElementId local) const {
      return _members[local.index()];
    }
    //! Throws InvalidInput when the element lies outside the interval.
    [[nodiscard]] ElementId to_local(ElementId parent_id) const;

   private:
    LatticePtr             _parent;
    LatticePtr             _local;
    ElementId              _lo;
    ElementId              _hi;
    std::vector<ElementId> _members;
    std::vector<std::int32_t> _local_of;
  };

  IntervalView interval(LatticePtr const& lattice, ElementId lo, ElementId hi);

  //! Verdict with the violating triple (a, b, c) when modularity fails.
  Verdict is_modular(Lattice const& lattice);

  //! Complemented and distributive, cross-checked against linearity of
  //! every meet map. Throws NotModular.
  Verdict is_boolean(Lattice const& lattice);
  [[nodiscard]] bool is_distributive(Lattice const& lattice);

  std::vector<ElementId> complements_of(Lattice const& lattice, ElementId a);
  //! Complements of a relative to the interval [0, top].
  std::vector<ElementId> complements_within(Lattice const& lattice, ElementId a,
                                            ElementId top);
  [[nodiscard]] bool is_complemented_element(Lattice const& lattice, ElementId a);
  //! Elements having at least one complement, in index order.
  std::vector<ElementId> complemented_elements(Lattice const& lattice);
  [[nodiscard]] bool is_complemented(Lattice const& lattice);

  //! Every b != lo in [lo, hi] meets a above lo.
  [[nodiscard]] bool is_essential_in(Lattice const& lattice, ElementId a,
                                     ElementId lo, ElementId hi);
  //! For b in [lo, hi], a v b = hi forces b = hi.
  [[nodiscard]] bool is_superfluous_in(Lattice const& lattice, ElementId a,
                                       ElementId lo, ElementId hi);
  [[nodiscard]] bool is_essential(Lattice const& lattice, ElementId a);
  [[nodiscard]] bool is_superfluous(Lattice const& lattice, ElementId a);
  //! Scoped versions; a is given as a parent id.
  [[nodiscard]] bool is_essential(IntervalView const& scope, ElementId a);
  [[nodiscard]] bool is_superfluous(IntervalView const& scope, ElementId a);

  //! Join of atoms and meet of coatoms.
  std::pair<ElementId, ElementId> socle_radical(Lattice const& lattice);

  struct ProductLattice {
    LatticePtr                          lattice;
    std::vector<LatticePtr>             factors;
    //! coordinates[x][i] is the i-th component of product element x.
    std::vector<std::vector<ElementId>> coordinates;

    [[nodiscard]] ElementId element_of(std::span<ElementId const> coords) const;
  };

  ProductLattice direct_product(std::vector<LatticePtr> const& factors,
                                Limits const& limits = Limits{});

  struct Decomposition {
    std::vector<ElementId> blocks;
    bool                   independent = false;
  };

  //! a_i meet the join of the others is bottom, for every i.
  [[nodiscard]] bool is_independent(Lattice const& lattice,
                                    std::span<ElementId const> family);

  //! Splits into indecomposable independent blocks. Throws NotModular.
  Decomposition decompose(Lattice const& lattice);

}  // namespace latticelab

template <>
struct std::hash<latticelab::ElementId> {
  std::size_t operator()(latticelab::ElementId x) const noexcept {
    return x.index();
  }
};

#endif  // LATTICELAB_LATTICE_HPP
