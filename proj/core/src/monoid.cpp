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

#include "latticelab/monoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace latticelab {

  std::size_t MapTableHash::operator()(MapTable const& table) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (ElementId x : table) {
      h ^= x.index();
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  MonoidSpec MonoidSpec::generated(std::vector<MapTable> generators,
                                   bool                  with_projections) {
    MonoidSpec spec;
    spec.kind             = Kind::generated;
    spec.morphisms        = std::move(generators);
    spec.with_projections = with_projections;
    return spec;
  }

  MonoidSpec MonoidSpec::explicit_set(std::vector<MapTable> members) {
    MonoidSpec spec;
    spec.kind      = Kind::explicit_members;
    spec.morphisms = std::move(members);
    return spec;
  }

  namespace {

    MapTable table_from_morphism_json(Json const& json, Lattice const& L) {
      auto dom = json.value("domain", L.name());
      auto cod = json.value("codomain", L.name());
      if (dom != L.name() || cod != L.name()) {
        throw Error(ErrorCode::domain_mismatch,
                    "monoid member " + dom + " -> " + cod + " is not an endomorphism of "
                        + L.name());
      }
      return map_from_json(json.at("map"), L, L);
    }

    Json table_to_json(MapTable const& table, Lattice const& L) {
      Json map = Json::object();
      for (std::size_t i = 0; i < table.size(); ++i) {
        map[L.element_name(ElementId(i))] = L.element_name(table[i]);
      }
      return Json{{"domain", L.name()}, {"codomain", L.name()}, {"map", map}};
    }

  }  // namespace

  MonoidSpec monoid_spec_from_json(Json const& json, Lattice const& L) {
    try {
      auto kind = json.at("kind").get<std::string>();
      if (kind == "full") {
        return MonoidSpec::full();
      }
      if (kind == "generated") {
        std::vector<MapTable> gens;
        for (auto const& g : json.value("generators", Json::array())) {
          gens.push_back(table_from_morphism_json(g, L));
        }
        return MonoidSpec::generated(std::move(gens), json.value("with_projections", false));
      }
      if (kind == "explicit") {
        std::vector<MapTable> members;
        for (auto const& g : json.at("members")) {
          members.push_back(table_from_morphism_json(g, L));
        }
        return MonoidSpec::explicit_set(std::move(members));
      }
      throw Error(ErrorCode::parse, "unknown monoid kind '" + kind + "'");
    } catch (Json::exception const& e) {
      throw Error(ErrorCode::parse, std::string("malformed monoid spec: ") + e.what());
    }
  }

  Json to_json(MonoidSpec const& spec, Lattice const& L) {
    Json out;
    switch (spec.kind) {
      case MonoidSpec::Kind::full:
        out["kind"] = "full";
        break;
      case MonoidSpec::Kind::generated:
        out["kind"]       = "generated";
        out["generators"] = Json::array();
        for (auto const& t : spec.morphisms) {
          out["generators"].push_back(table_to_json(t, L));
        }
        out["with_projections"] = spec.with_projections;
        break;
      case MonoidSpec::Kind::explicit_members:
        out["kind"]    = "explicit";
        out["members"] = Json::array();
        for (auto const& t : spec.morphisms) {
          out["members"].push_back(table_to_json(t, L));
        }
        break;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // EndoMonoid
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t> EndoMonoid::index_of(MapTable const& table) const {
    auto it = _index.find(table);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t EndoMonoid::compose(std::size_t outer, std::size_t inner) const {
    if (!_comp.empty()) {
      return _comp[outer * size() + inner];
    }
    auto const& f = _members[outer];
    auto const& g = _members[inner];
    MapTable    table(g.table().size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      table[i] = f(g(ElementId(i)));
    }
    if (auto idx = index_of(table)) {
      return *idx;
    }
    throw Error(ErrorCode::not_closed, "composite lies outside the monoid");
  }

  EndoMonoid EndoMonoid::from_members(LatticePtr lattice, std::vector<LinearMorphism> members,
                                      bool verify, Limits const& limits) {
    Lattice const& L = *lattice;
    for (auto const& phi : members) {
      if (!same_lattice(phi.domain(), L) || !same_lattice(phi.codomain(), L)) {
        throw Error(ErrorCode::domain_mismatch,
                    "monoid member is not an endomorphism of " + L.name());
      }
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() > limits.max_monoid) {
      throw Error(ErrorCode::size_limit_exceeded,
                  "monoid has " + std::to_string(members.size()) + " members, limit is "
                      + std::to_string(limits.max_monoid));
    }
    EndoMonoid m;
    m._lattice = std::move(lattice);
    m._members = std::move(members);
    m._index.reserve(m._members.size());
    for (std::size_t i = 0; i < m._members.size(); ++i) {
      m._index.emplace(m._members[i].table(), i);
    }
    auto id   = m.index_of(L.elements());
    auto zero = m.index_of(MapTable(L.size(), L.bottom()));
    if (!id || !zero) {
      throw Error(ErrorCode::not_closed, "monoid must contain the identity and zero");
    }
    m._identity = *id;
    m._zero     = *zero;

    std::size_t const n = m._members.size();
    if (n <= limits.max_table_members) {
      m._comp.resize(n * n);
      MapTable table(L.size());
      for (std::size_t f = 0; f < n; ++f) {
        for (std::size_t g = 0; g < n; ++g) {
          for (std::size_t i = 0; i < L.size(); ++i) {
            table[i] = m._members[f](m._members[g](ElementId(i)));
          }
          auto idx = m.index_of(table);
          if (!idx) {
            throw Error(ErrorCode::not_closed,
                        "composite of members " + std::to_string(f) + " and "
                            + std::to_string(g) + " lies outside the set");
          }
          m._comp[f * n + g] = static_cast<std::uint32_t>(*idx);
        }
      }
      m._closure_verified = true;
    } else if (verify) {
      throw Error(ErrorCode::size_limit_exceeded,
                  "closure check refused for " + std::to_string(n) + " members");
    }

    if (L.modular()) {
      auto projections   = all_projections(m._lattice);
      m._all_projections = std::all_of(projections.begin(), projections.end(),
                                       [&](auto const& p) { return m.contains(p); });
    }
    return m;
  }

  std::vector<LinearMorphism> all_projections(LatticePtr const& lattice) {
    Lattice const&              L = *lattice;
    std::vector<LinearMorphism> out;
    for (std::size_t i = 0; i < L.size(); ++i) {
      for (ElementId comp : complements_of(L, ElementId(i))) {
        out.push_back(projection(lattice, ElementId(i), comp));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  namespace {

    std::vector<LinearMorphism> close_under_composition(std::vector<LinearMorphism> seed,
                                                        Limits const& limits) {
      std::vector<LinearMorphism>                             members;
      std::unordered_map<MapTable, std::size_t, MapTableHash> index;
      std::deque<std::size_t>                                 pending;
      auto add = [&](LinearMorphism phi) {
        if (index.contains(phi.table())) {
          return;
        }
        if (members.size() >= limits.max_monoid) {
          throw Error(ErrorCode::size_limit_exceeded, "generated monoid is too large");
        }
        index.emplace(phi.table(), members.size());
        pending.push_back(members.size());
        members.push_back(std::move(phi));
      };
      for (auto& phi : seed) {
        add(std::move(phi));
      }
      while (!pending.empty()) {
        std::size_t i = pending.front();
        pending.pop_front();
        for (std::size_t j = 0; j < members.size(); ++j) {
          add(latticelab::compose(members[i], members[j]));
          add(latticelab::compose(members[j], members[i]));
        }
      }
      return members;
    }

  }  // namespace

  EndoMonoid build_monoid(LatticePtr const& lattice, MonoidSpec const& spec,
                          Limits const& limits) {
    switch (spec.kind) {
      case MonoidSpec::Kind::full:
        return EndoMonoid::from_members(lattice, enumerate_linmors(lattice, lattice, limits),
                                        false, limits);
      case MonoidSpec::Kind::generated: {
        std::vector<LinearMorphism> seed{identity_morphism(lattice),
                                         zero_morphism(lattice, lattice)};
        for (auto const& t : spec.morphisms) {
          seed.push_back(validate_linear(lattice, lattice, t));
        }
        if (spec.with_projections) {
          for (auto& p : all_projections(lattice)) {
            seed.push_back(std::move(p));
          }
        }
        return EndoMonoid::from_members(lattice, close_under_composition(seed, limits),
                                        false, limits);
      }
      case MonoidSpec::Kind::explicit_members: {
        std::vector<LinearMorphism> members;
        for (auto const& t : spec.morphisms) {
          members.push_back(validate_linear(lattice, lattice, t));
        }
        return EndoMonoid::from_members(lattice, std::move(members), true, limits);
      }
    }
    throw Error(ErrorCode::invalid_input, "unknown monoid kind");
  }

  std::vector<std::size_t> idempotents(EndoMonoid const& m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m.compose(i, i) == i) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<ElementId> fully_invariant_elements(EndoMonoid const& m) {
    return fully_invariant_elements(m.lattice(), m.members());
  }

  ////////////////////////////////////////////////////////////////////////
  // Annihilators
  ////////////////////////////////////////////////////////////////////////

  namespace {

    MemberSet single_annihilator(EndoMonoid const& m, Side side, std::size_t phi) {
      MemberSet out(m.size());
      for (std::size_t psi = 0; psi < m.size(); ++psi) {
        std::size_t c = side == Side::right ? m.compose(phi, psi) : m.compose(psi, phi);
        if (c == m.zero()) {
          out.set(psi);
        }
      }
      return out;
    }

    std::vector<std::size_t> to_indices(MemberSet const& s) {
      std::vector<std::size_t> out;
      for (auto i = s.find_first(); i != MemberSet::npos; i = s.find_next(i)) {
        out.push_back(i);
      }
      return out;
    }

  }  // namespace

  MemberSet principal_set(EndoMonoid const& m, Side side, std::size_t e) {
    MemberSet out(m.size());
    for (std::size_t psi = 0; psi < m.size(); ++psi) {
      std::size_t c = side == Side::right ? m.compose(e, psi) : m.compose(psi, e);
      if (c == psi) {
        out.set(psi);
      }
    }
    return out;
  }

  AnnihilatorSet annihilator(EndoMonoid const& m, Side side,
                             std::span<std::size_t const> targets) {
    MemberSet set(m.size());
    set.set();
    for (std::size_t phi : targets) {
      set &= single_annihilator(m, side, phi);
    }
    AnnihilatorSet out;
    out.side    = side;
    out.targets.assign(targets.begin(), targets.end());
    out.members = to_indices(set);
    for (std::size_t e : idempotents(m)) {
      if (principal_set(m, side, e) == set) {
        out.principal_idempotent = e;
        break;
      }
    }
    return out;
  }

  std::string_view to_string(MonoidProperty kind) noexcept {
    switch (kind) {
      case MonoidProperty::right_rickart:
        return "right_rickart_monoid";
      case MonoidProperty::left_rickart:
        return "left_rickart_monoid";
      case MonoidProperty::right_baer:
        return "right_baer_monoid";
      case MonoidProperty::left_baer:
        return "left_baer_monoid";
    }
    return "unknown";
  }

  Verdict monoid_predicate(EndoMonoid const& m, MonoidProperty kind) {
    Side const side = (kind == MonoidProperty::right_rickart
                       || kind == MonoidProperty::right_baer)
                          ? Side::right
                          : Side::left;
    bool const baer = kind == MonoidProperty::right_baer || kind == MonoidProperty::left_baer;
    std::string const name(to_string(kind));

    std::set<MemberSet> principal;
    for (std::size_t e : idempotents(m)) {
      principal.insert(principal_set(m, side, e));
    }
    std::vector<MemberSet> singles;
    singles.reserve(m.size());
    for (std::size_t phi = 0; phi < m.size(); ++phi) {
      singles.push_back(single_annihilator(m, side, phi));
    }
    auto failure = [&](std::vector<std::size_t> const& subset) {
      Json maps = Json::array();
      for (std::size_t i : subset) {
        maps.push_back(to_json(m[i])["map"]);
      }
      return make_verdict(name, false, Json{{"subset", subset}, {"maps", maps}});
    };

    if (!baer) {
      for (std::size_t phi = 0; phi < m.size(); ++phi) {
        if (!principal.contains(singles[phi])) {
          return failure({phi});
        }
      }
      return make_verdict(name, true);
    }

    // annihilators of arbitrary subsets are intersections of single ones
    std::map<MemberSet, std::vector<std::size_t>> seen;
    std::vector<MemberSet>                        order;
    MemberSet                                     everything(m.size());
    everything.set();
    seen.emplace(everything, std::vector<std::size_t>{});
    order.push_back(everything);
    for (std::size_t next = 0; next < order.size(); ++next) {
      MemberSet const current = order[next];
      auto const      gens    = seen[current];
      if (!principal.contains(current)) {
        return failure(gens);
      }
      for (std::size_t phi = 0; phi < m.size(); ++phi) {
        MemberSet meet = current & singles[phi];
        if (!seen.contains(meet)) {
          auto g = gens;
          g.push_back(phi);
          seen.emplace(meet, std::move(g));
          order.push_back(std::move(meet));
        }
      }
    }
    return make_verdict(name, true, Json{{"annihilators", order.size()}});
  }

}  // namespace latticelab
