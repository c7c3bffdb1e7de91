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

#include "latticelab/linear_morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace latticelab {

  using detail::MorphismAccess;

  bool same_lattice(Lattice const& a, Lattice const& b) {
    if (&a == &b) {
      return true;
    }
    return a.size() == b.size() && a.element_names() == b.element_names()
           && a.covers() == b.covers();
  }

  LinearityCheck check_linear(Lattice const& dom, Lattice const& cod,
                              std::span<ElementId const> map) {
    if (map.size() != dom.size()) {
      throw Error(ErrorCode::invalid_input, "map is not total on the domain");
    }
    for (ElementId y : map) {
      if (y.index() >= cod.size()) {
        throw Error(ErrorCode::invalid_input, "map value outside the codomain");
      }
    }
    LinearityCheck out;
    ElementId      k = dom.bottom();
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (map[i] == cod.bottom()) {
        k = dom.join(k, ElementId(i));
      }
    }
    out.kernel    = k;
    out.image_top = map[dom.top().index()];
    if (map[k.index()] != cod.bottom()) {
      out.failure = ErrorCode::no_kernel;
      out.detail  = "zero preimage joins to '" + dom.element_name(k)
                   + "', which maps to '" + cod.element_name(map[k.index()]) + "'";
      return out;
    }
    for (std::size_t i = 0; i < dom.size(); ++i) {
      ElementId x(i);
      if (map[i] != map[dom.join(x, k).index()]) {
        out.failure = ErrorCode::no_kernel;
        out.detail  = "image of '" + dom.element_name(x) + "' differs from image of '"
                     + dom.element_name(dom.join(x, k)) + "'";
        return out;
      }
    }
    std::vector<ElementId> upper;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (dom.leq(k, ElementId(i))) {
        upper.emplace_back(i);
      }
    }
    for (ElementId x : upper) {
      for (ElementId y : upper) {
        if (dom.leq(x, y) != cod.leq(map[x.index()], map[y.index()])) {
          out.failure = ErrorCode::not_interval_iso;
          out.detail  = "order between '" + dom.element_name(x) + "' and '"
                       + dom.element_name(y) + "' is not reflected";
          return out;
        }
      }
    }
    std::size_t below_image = 0;
    for (std::size_t i = 0; i < cod.size(); ++i) {
      below_image += cod.leq(ElementId(i), out.image_top) ? 1 : 0;
    }
    if (below_image != upper.size()) {
      out.failure = ErrorCode::not_interval_iso;
      out.detail  = "[" + dom.element_name(k) + ",1] is not onto [0,"
                   + cod.element_name(out.image_top) + "]";
      return out;
    }
    out.linear = true;
    return out;
  }

  LinearMorphism validate_linear(LatticePtr domain, LatticePtr codomain, MapTable map) {
    auto check = check_linear(*domain, *codomain, map);
    if (!check.linear) {
      throw Error(check.failure, check.detail);
    }
    return MorphismAccess::trusted(std::move(domain), std::move(codomain),
                                   std::move(map), check.kernel, check.image_top);
  }

  std::optional<LinearMorphism> try_linear(LatticePtr domain, LatticePtr codomain,
                                           MapTable map) {
    auto check = check_linear(*domain, *codomain, map);
    if (!check.linear) {
      return std::nullopt;
    }
    return MorphismAccess::trusted(std::move(domain), std::move(codomain),
                                   std::move(map), check.kernel, check.image_top);
  }

  LinearMorphism compose(LinearMorphism const& outer, LinearMorphism const& inner) {
    if (!same_lattice(inner.codomain(), outer.domain())) {
      throw Error(ErrorCode::domain_mismatch,
                  "cannot compose: codomain '" + inner.codomain().name()
                      + "' differs from domain '" + outer.domain().name() + "'");
    }
    MapTable table(inner.domain().size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      table[i] = outer(inner(ElementId(i)));
    }
    auto check = check_linear(inner.domain(), outer.codomain(), table);
    if (!check.linear) {
      throw std::logic_error("composite of linear morphisms failed certification");
    }
    return MorphismAccess::trusted(inner.domain_ptr(), outer.codomain_ptr(),
                                   std::move(table), check.kernel, check.image_top);
  }

  LinearMorphism identity_morphism(LatticePtr const& lattice) {
    MapTable table = lattice->elements();
    return MorphismAccess::trusted(lattice, lattice, std::move(table), lattice->bottom(),
                                   lattice->top());
  }

  LinearMorphism zero_morphism(LatticePtr const& domain, LatticePtr const& codomain) {
    MapTable table(domain->size(), codomain->bottom());
    return MorphismAccess::trusted(domain, codomain, std::move(table), domain->top(),
                                   codomain->bottom());
  }

  LinearMorphism projection(LatticePtr const& lattice, ElementId x, ElementId x_prime) {
    Lattice const& L = *lattice;
    if (!L.modular()) {
      throw Error(ErrorCode::not_modular, "projections need a modular lattice");
    }
    if (L.meet(x, x_prime) != L.bottom() || L.join(x, x_prime) != L.top()) {
      throw Error(ErrorCode::not_a_complement,
                  "'" + L.element_name(x_prime) + "' is not a complement of '"
                      + L.element_name(x) + "'");
    }
    MapTable table(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
      table[i] = L.meet(L.join(ElementId(i), x_prime), x);
    }
    return MorphismAccess::trusted(lattice, lattice, std::move(table), x_prime, x);
  }

  LinearMorphism inclusion(IntervalView const& lower) {
    if (lower.lo() != lower.parent().bottom()) {
      throw Error(ErrorCode::invalid_input, "inclusion needs an interval [0, x]");
    }
    MapTable table(lower.size());
    for (std::size_t i = 0; i < lower.size(); ++i) {
      table[i] = lower.to_parent(ElementId(i));
    }
    return MorphismAccess::trusted(lower.lattice_ptr(), lower.parent_ptr(),
                                   std::move(table), lower.lattice().bottom(),
                                   lower.hi());
  }

  LinearMorphism join_onto(IntervalView const& upper) {
    Lattice const& L = upper.parent();
    if (upper.hi() != L.top()) {
      throw Error(ErrorCode::invalid_input, "join_onto needs an interval [a, 1]");
    }
    MapTable table(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
      table[i] = upper.to_local(L.join(ElementId(i), upper.lo()));
    }
    return MorphismAccess::trusted(upper.parent_ptr(), upper.lattice_ptr(),
                                   std::move(table), upper.lo(),
                                   upper.lattice().top());
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct IsoSearch {
      Lattice const&        a;
      Lattice const&        b;
      MapTable              forward;
      std::vector<char>     used;
      std::vector<MapTable> found;

      bool compatible(std::size_t i, std::size_t j) const {
        ElementId x(i), y(j);
        if (a.rank(x) != b.rank(y)
            || a.upper_covers(x).size() != b.upper_covers(y).size()
            || a.lower_covers(x).size() != b.lower_covers(y).size()) {
          return false;
        }
        for (std::size_t p = 0; p < i; ++p) {
          ElementId u(p);
          if (a.leq(u, x) != b.leq(forward[p], y) || a.leq(x, u) != b.leq(y, forward[p])) {
            return false;
          }
        }
        return true;
      }

      void run(std::size_t i) {
        if (i == a.size()) {
          found.push_back(forward);
          return;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
          if (used[j] || !compatible(i, j)) {
            continue;
          }
          used[j]    = 1;
          forward[i] = ElementId(j);
          run(i + 1);
          used[j] = 0;
        }
      }
    };

    std::vector<std::size_t> profile(Lattice const& L) {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < L.size(); ++i) {
        ElementId x(i);
        out.push_back((L.rank(x) << 16) | (L.upper_covers(x).size() << 8)
                      | L.lower_covers(x).size());
      }
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace

  std::vector<MapTable> enumerate_isos(Lattice const& a, Lattice const& b) {
    if (a.size() != b.size() || a.covers().size() != b.covers().size()
        || profile(a) != profile(b)) {
      return {};
    }
    IsoSearch search{a, b, MapTable(a.size()), std::vector<char>(b.size(), 0), {}};
    search.run(0);
    return std::move(search.found);
  }

  std::vector<IntervalIso> enumerate_interval_isos(IntervalView const& a,
                                                   IntervalView const& b) {
    std::vector<IntervalIso> out;
    for (auto& forward : enumerate_isos(a.lattice(), b.lattice())) {
      MapTable backward(forward.size());
      for (std::size_t i = 0; i < forward.size(); ++i) {
        backward[forward[i].index()] = ElementId(i);
      }
      out.push_back(IntervalIso{a, b, std::move(forward), std::move(backward)});
    }
    return out;
  }

  std::vector<LinearMorphism> enumerate_linmors(LatticePtr const& domain,
                                                LatticePtr const& codomain,
                                                Limits const&     limits) {
    Lattice const& L = *domain;
    Lattice const& M = *codomain;
    if (L.size() > limits.max_enumeration || M.size() > limits.max_enumeration) {
      throw Error(ErrorCode::size_limit_exceeded,
                  "enumeration is capped at " + std::to_string(limits.max_enumeration)
                      + " elements per side");
    }
    std::vector<IntervalView> uppers;
    for (std::size_t k = 0; k < L.size(); ++k) {
      uppers.emplace_back(domain, ElementId(k), L.top());
    }
    std::vector<IntervalView> lowers;
    for (std::size_t a = 0; a < M.size(); ++a) {
      lowers.emplace_back(codomain, M.bottom(), ElementId(a));
    }
    std::vector<LinearMorphism> out;
    for (auto const& up : uppers) {
      for (auto const& low : lowers) {
        if (up.size() != low.size()) {
          continue;
        }
        for (auto const& theta : enumerate_isos(up.lattice(), low.lattice())) {
          MapTable table(L.size());
          for (std::size_t x = 0; x < L.size(); ++x) {
            ElementId lifted = L.join(ElementId(x), up.lo());
            table[x]         = low.to_parent(theta[up.to_local(lifted).index()]);
          }
          out.push_back(MorphismAccess::trusted(domain, codomain, std::move(table),
                                                up.lo(), low.hi()));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  LinearMorphism extend_from_interval(LinearMorphism const& phi,
                                      IntervalView const&   source,
                                      IntervalView const&   target,
                                      ElementId             x_prime) {
    Lattice const& L = source.parent();
    if (!same_lattice(L, target.parent()) || source.lo() != L.bottom()
        || target.lo() != L.bottom()) {
      throw Error(ErrorCode::domain_mismatch,
                  "extension needs intervals [0,x] and [0,y] of one lattice");
    }
    if (!same_lattice(phi.domain(), source.lattice())
        || !same_lattice(phi.codomain(), target.lattice())) {
      throw Error(ErrorCode::domain_mismatch, "morphism does not act between the intervals");
    }
    ElementId const x = source.hi();
    if (L.meet(x, x_prime) != L.bottom() || L.join(x, x_prime) != L.top()) {
      throw Error(ErrorCode::not_a_complement,
                  "'" + L.element_name(x_prime) + "' is not a complement of '"
                      + L.element_name(x) + "'");
    }
    MapTable table(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
      ElementId through = L.meet(L.join(ElementId(i), x_prime), x);
      table[i]          = target.to_parent(phi(source.to_local(through)));
    }
    return validate_linear(source.parent_ptr(), target.parent_ptr(), std::move(table));
  }

  std::vector<ElementId> fully_invariant_elements(
      Lattice const& L, std::span<LinearMorphism const> endomorphisms) {
    std::vector<ElementId> out;
    for (std::size_t i = 0; i < L.size(); ++i) {
      ElementId x(i);
      bool      invariant = std::all_of(endomorphisms.begin(), endomorphisms.end(),
                                        [&](auto const& phi) { return L.leq(phi(x), x); });
      if (invariant) {
        out.push_back(x);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Boolean test, both routes
  ////////////////////////////////////////////////////////////////////////

  Verdict is_boolean(Lattice const& L) {
    if (!L.modular()) {
      throw Error(ErrorCode::not_modular, "is_boolean needs a modular lattice");
    }
    Json witness = nullptr;
    bool by_definition = true;
    for (std::size_t i = 0; i < L.size() && by_definition; ++i) {
      if (!is_complemented_element(L, ElementId(i))) {
        by_definition = false;
        witness       = Json{{"uncomplemented", L.element_name(ElementId(i))}};
      }
    }
    if (by_definition && !is_distributive(L)) {
      by_definition = false;
      witness       = Json{{"reason", "not distributive"}};
    }
    bool by_meet_maps = true;
    for (std::size_t i = 0; i < L.size() && by_meet_maps; ++i) {
      MapTable table(L.size());
      for (std::size_t j = 0; j < L.size(); ++j) {
        table[j] = L.meet(ElementId(i), ElementId(j));
      }
      if (!check_linear(L, L, table).linear) {
        by_meet_maps = false;
        if (witness.is_null()) {
          witness = Json::object();
        }
        witness["nonlinear_meet_map"] = L.element_name(ElementId(i));
      }
    }
    if (by_definition != by_meet_maps) {
      throw std::logic_error("boolean routes disagree on " + L.name());
    }
    return make_verdict("boolean", by_definition, witness);
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  Json to_json(LinearMorphism const& phi) {
    Json out;
    out["domain"]   = phi.domain().name();
    out["codomain"] = phi.codomain().name();
    Json map        = Json::object();
    for (std::size_t i = 0; i < phi.domain().size(); ++i) {
      map[phi.domain().element_name(ElementId(i))] =
          phi.codomain().element_name(phi(ElementId(i)));
    }
    out["map"] = std::move(map);
    return out;
  }

  MapTable map_from_json(Json const& json, Lattice const& domain,
                         Lattice const& codomain) {
    if (!json.is_object()) {
      throw Error(ErrorCode::parse, "morphism map must be an object");
    }
    if (json.size() != domain.size()) {
      throw Error(ErrorCode::parse, "morphism map must list every domain element once");
    }
    MapTable table(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      auto const& name = domain.element_name(ElementId(i));
      auto        it   = json.find(name);
      if (it == json.end() || !it->is_string()) {
        throw Error(ErrorCode::parse, "morphism map lacks element '" + name + "'");
      }
      auto target = codomain.find(it->get<std::string>());
      if (!target) {
        throw Error(ErrorCode::parse,
                    "unknown codomain element '" + it->get<std::string>() + "'");
      }
      table[i] = *target;
    }
    return table;
  }

  LinearMorphism morphism_from_json(Json const& json, LatticePtr const& domain,
                                    LatticePtr const& codomain) {
    try {
      auto dom_name = json.at("domain").get<std::string>();
      auto cod_name = json.at("codomain").get<std::string>();
      if (dom_name != domain->name() || cod_name != codomain->name()) {
        throw Error(ErrorCode::domain_mismatch,
                    "morphism " + dom_name + " -> " + cod_name + " does not act on "
                        + domain->name() + " -> " + codomain->name());
      }
      return validate_linear(domain, codomain,
                             map_from_json(json.at("map"), *domain, *codomain));
    } catch (Json::exception const& e) {
      throw Error(ErrorCode::parse, std::string("malformed morphism JSON: ") + e.what());
    }
  }

}  // namespace latticelab
