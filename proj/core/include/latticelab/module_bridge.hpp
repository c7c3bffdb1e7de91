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
 * @file module_bridge.hpp
 *
 * Finite abelian groups as Z-modules: subgroup lattices, endomorphisms and
 * the monoid of induced image maps on subgroups.
 */

#ifndef LATTICELAB_MODULE_BRIDGE_HPP
#define LATTICELAB_MODULE_BRIDGE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "latticelab/properties.hpp"

namespace latticelab {

  using GroupElement = std::uint32_t;
  //! Bit g set when element g belongs to the subgroup (order <= 64).
  using SubgroupMask = std::uint64_t;

  //! Z_{d1} x ... x Z_{dk} with d1 | d2 | ... | dk, all > 1.
  class AbelianGroup {
   public:
    explicit AbelianGroup(std::vector<std::uint32_t> invariant_factors,
                          Limits const&              limits = Limits{});

    //! "2,4" is Z2 x Z4; "1" is the trivial group.
    static AbelianGroup parse(std::string_view spec, Limits const& limits = Limits{});

    [[nodiscard]] std::vector<std::uint32_t> const& factors() const noexcept {
      return _factors;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }
    //! e.g. "Z2xZ4", or "Z1" for the trivial group.
    [[nodiscard]] std::string name() const;

    [[nodiscard]] GroupElement add(GroupElement a, GroupElement b) const noexcept {
      return _add[a * _order + b];
    }
    [[nodiscard]] GroupElement multiple(std::uint32_t k, GroupElement a) const noexcept;
    [[nodiscard]] std::vector<std::uint32_t> digits(GroupElement a) const;
    [[nodiscard]] GroupElement encode(std::span<std::uint32_t const> digits) const;
    //! The j-th standard generator.
    [[nodiscard]] GroupElement generator(std::size_t j) const;
    //! Elements x with d x = 0.
    [[nodiscard]] std::vector<GroupElement> torsion(std::uint32_t d) const;
    //! "2" for one factor, "(1,0)" otherwise.
    [[nodiscard]] std::string element_name(GroupElement a) const;

    [[nodiscard]] SubgroupMask full_mask() const noexcept {
      return _order == 64 ? ~SubgroupMask{0} : ((SubgroupMask{1} << _order) - 1);
    }
    //! Subgroup generated by H and g.
    [[nodiscard]] SubgroupMask extend(SubgroupMask h, GroupElement g) const;
    [[nodiscard]] SubgroupMask sum(SubgroupMask h, SubgroupMask k) const;

    friend bool operator==(AbelianGroup const& a, AbelianGroup const& b) noexcept {
      return a._factors == b._factors;
    }

   private:
    std::vector<std::uint32_t> _factors;
    std::vector<std::uint32_t> _strides;
    std::size_t                _order = 1;
    std::vector<GroupElement>  _add;
  };

  //! Every abelian group of the given order, as invariant factor lists.
  std::vector<std::vector<std::uint32_t>> abelian_groups_of_order(std::size_t order);

  class GroupHom {
   public:
    //! images[j] is the image of generator j; it must be killed by d_j.
    static GroupHom from_images(AbelianGroup const& group, std::vector<GroupElement> images);

    [[nodiscard]] GroupElement operator()(GroupElement x) const {
      return _table[x];
    }
    [[nodiscard]] std::vector<GroupElement> const& images() const noexcept {
      return _images;
    }
    [[nodiscard]] std::vector<GroupElement> const& table() const noexcept {
      return _table;
    }
    [[nodiscard]] SubgroupMask kernel_mask() const noexcept;
    [[nodiscard]] SubgroupMask image_mask() const noexcept;

    friend bool operator==(GroupHom const& a, GroupHom const& b) noexcept {
      return a._table == b._table;
    }

   private:
    GroupHom() = default;
    friend GroupHom compose(GroupHom const& outer, GroupHom const& inner);

    std::vector<GroupElement> _images;
    std::vector<GroupElement> _table;
  };

  //! outer o inner.
  GroupHom compose(GroupHom const& outer, GroupHom const& inner);

  //! Product over pairs of gcd(d_i, d_j).
  std::uint64_t endomorphism_count(AbelianGroup const& group);

  //! Streams every endomorphism as (generator images, full table).
  void for_each_endomorphism(
      AbelianGroup const& group,
      std::function<void(std::span<GroupElement const>, std::span<GroupElement const>)> const&
          visit);

  //! Throws SizeLimitExceeded above limits.max_monoid.
  std::vector<GroupHom> endomorphisms(AbelianGroup const& group,
                                      Limits const&       limits = Limits{});

  //! All subgroups, sorted by (size, mask).
  std::vector<SubgroupMask> enumerate_subgroups(AbelianGroup const& group);

  //! Image of a subgroup under a map table.
  SubgroupMask image_of(std::span<GroupElement const> table, SubgroupMask h);

  struct SubgroupLattice {
    LatticePtr                                  lattice;
    std::vector<SubgroupMask>                   masks;  // indexed by ElementId
    std::unordered_map<SubgroupMask, ElementId> index;

    [[nodiscard]] ElementId element_of(SubgroupMask mask) const;
  };

  //! Subgroup lattice, element names "0", "M" and "<generators>".
  SubgroupLattice subgroup_lattice(AbelianGroup const& group, Limits const& limits = Limits{});

  //! The image map H -> f(H) on subgroups, certified linear.
  LinearMorphism induced_morphism(AbelianGroup const& group, SubgroupLattice const& lattice,
                                  GroupHom const& f);

  //! Deduplicated induced maps of all endomorphisms. Throws SizeLimitExceeded.
  EndoMonoid induced_monoid(AbelianGroup const& group, SubgroupLattice const& lattice,
                            Limits const& limits = Limits{});

  //! Some subgroup K has H meet K = 0 and |H||K| = |M|.
  [[nodiscard]] bool is_direct_summand(AbelianGroup const&           group,
                                       std::span<SubgroupMask const> subgroups,
                                       SubgroupMask                  h);

  struct BridgeVerdict {
    Verdict module_side;
    Verdict lattice_side;
    [[nodiscard]] bool agree() const noexcept {
      return module_side.holds == lattice_side.holds;
    }
  };

  //! Module-side answers from kernels and images of endomorphisms as
  //! subgroups, compared with the lattice-side family check on the induced
  //! monoid. Order: rickart, baer, dual_rickart, dual_baer.
  std::array<BridgeVerdict, 4> rickart_module_all(AbelianGroup const& group,
                                                  Limits const&       limits = Limits{});

  BridgeVerdict rickart_module_direct(AbelianGroup const& group, RickartKind kind,
                                      Limits const& limits = Limits{});

}  // namespace latticelab

#endif  // LATTICELAB_MODULE_BRIDGE_HPP
