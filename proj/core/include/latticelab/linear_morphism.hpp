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
 * @file linear_morphism.hpp
 *
 * Linear morphisms between finite lattices: a map with a kernel k such that
 * phi(x) = phi(x v k) and phi restricted to [k, 1] is an isomorphism onto
 * [0, phi(1)].
 */

#ifndef LATTICELAB_LINEAR_MORPHISM_HPP
#define LATTICELAB_LINEAR_MORPHISM_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "latticelab/error.hpp"
#include "latticelab/lattice.hpp"
#include "latticelab/verdict.hpp"

namespace latticelab {

  using MapTable = std::vector<ElementId>;

  //! Structural equality: same names and covers.
  [[nodiscard]] bool same_lattice(Lattice const& a, Lattice const& b);

  //! Result of checking the two linearity clauses on a raw table.
  struct LinearityCheck {
    bool        linear = false;
    ErrorCode   failure = ErrorCode::no_kernel;
    ElementId   kernel;
    ElementId   image_top;
    std::string detail;
  };

  LinearityCheck check_linear(Lattice const& domain, Lattice const& codomain,
                              std::span<ElementId const> map);

  namespace detail {
    struct MorphismAccess;
  }

  class LinearMorphism {
   public:
    [[nodiscard]] Lattice const& domain() const noexcept {
      return *_domain;
    }
    [[nodiscard]] Lattice const& codomain() const noexcept {
      return *_codomain;
    }
    [[nodiscard]] LatticePtr const& domain_ptr() const noexcept {
      return _domain;
    }
    [[nodiscard]] LatticePtr const& codomain_ptr() const noexcept {
      return _codomain;
    }
    [[nodiscard]] ElementId operator()(ElementId x) const {
      return _map[x.index()];
    }
    [[nodiscard]] MapTable const& table() const noexcept {
      return _map;
    }
    [[nodiscard]] ElementId kernel() const noexcept {
      return _kernel;
    }
    [[nodiscard]] ElementId image_top() const noexcept {
      return _image_top;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _kernel == _domain->top();
    }

    //! Map-table equality.
    friend bool operator==(LinearMorphism const& a, LinearMorphism const& b) noexcept {
      return a._map == b._map;
    }
    friend auto operator<=>(LinearMorphism const& a, LinearMorphism const& b) noexcept {
      return a._map <=> b._map;
    }

   private:
    friend struct detail::MorphismAccess;
    LinearMorphism(LatticePtr domain, LatticePtr codomain, MapTable map,
                   ElementId kernel, ElementId image_top)
        : _domain(std::move(domain)),
          _codomain(std::move(codomain)),
          _map(std::move(map)),
          _kernel(kernel),
          _image_top(image_top) {}

    LatticePtr _domain;
    LatticePtr _codomain;
    MapTable   _map;
    ElementId  _kernel;
    ElementId  _image_top;
  };

  //! Certifies a map; throws NoKernel or NotIntervalIso with the witness.
  LinearMorphism validate_linear(LatticePtr domain, LatticePtr codomain, MapTable map);

  //! Non-throwing variant of validate_linear.
  std::optional<LinearMorphism> try_linear(LatticePtr domain, LatticePtr codomain,
                                           MapTable map);

  inline ElementId kernel_of(LinearMorphism const& phi) noexcept {
    return phi.kernel();
  }

  //! outer o inner: inner is applied first. Throws DomainMismatch.
  LinearMorphism compose(LinearMorphism const& outer, LinearMorphism const& inner);

  LinearMorphism identity_morphism(LatticePtr const& lattice);
  LinearMorphism zero_morphism(LatticePtr const& domain, LatticePtr const& codomain);

  //! a -> (a v x') ^ x. Throws NotModular or NotAComplement.
  LinearMorphism projection(LatticePtr const& lattice, ElementId x, ElementId x_prime);

  //! [0, x] -> L, the inclusion.
  LinearMorphism inclusion(IntervalView const& lower);
  //! L -> [a, 1], y -> y v a.
  LinearMorphism join_onto(IntervalView const& upper);

  //! An order isomorphism between two intervals, stored on local ids.
  struct IntervalIso {
    IntervalView source;
    IntervalView target;
    MapTable     forward;
    MapTable     backward;

    //! Parent id in source to parent id in target.
    [[nodiscard]] ElementId apply(ElementId parent_id) const {
      return target.to_parent(forward[source.to_local(parent_id).index()]);
    }
  };

  //! All order isomorphisms between two lattices, as forward tables in
  //! lexicographic order.
  std::vector<MapTable> enumerate_isos(Lattice const& a, Lattice const& b);

  std::vector<IntervalIso> enumerate_interval_isos(IntervalView const& a,
                                                   IntervalView const& b);

  //! Every linear morphism L -> M, sorted by map table.
  std::vector<LinearMorphism> enumerate_linmors(LatticePtr const& domain,
                                                LatticePtr const& codomain,
                                                Limits const&     limits = Limits{});

  //! Extends phi: [0,x] -> [0,y] to L -> L through the projection onto x
  //! along x_prime. Throws NotAComplement or DomainMismatch.
  LinearMorphism extend_from_interval(LinearMorphism const& phi,
                                      IntervalView const&   source,
                                      IntervalView const&   target,
                                      ElementId             x_prime);

  //! Elements x with phi(x) <= x for all given endomorphisms.
  std::vector<ElementId> fully_invariant_elements(
      Lattice const& lattice, std::span<LinearMorphism const> endomorphisms);

  //! {"domain", "codomain", "map": {name: name}}.
  Json           to_json(LinearMorphism const& phi);
  LinearMorphism morphism_from_json(Json const& json, LatticePtr const& domain,
                                    LatticePtr const& codomain);
  //! Map table from a {name: name} object; missing names throw ParseError.
  MapTable       map_from_json(Json const& json, Lattice const& domain,
                               Lattice const& codomain);

  namespace detail {
    struct MorphismAccess {
      //! Builds without checking; callers guarantee linearity.
      static LinearMorphism trusted(LatticePtr domain, LatticePtr codomain,
                                    MapTable map, ElementId kernel,
                                    ElementId image_top) {
        return LinearMorphism(std::move(domain), std::move(codomain), std::move(map),
                              kernel, image_top);
      }
    };
  }  // namespace detail

}  // namespace latticelab

#endif  // LATTICELAB_LINEAR_MORPHISM_HPP
