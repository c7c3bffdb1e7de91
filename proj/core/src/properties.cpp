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

#include "latticelab/properties.hpp"

#include <algorithm>
#include <functional>

namespace latticelab {

  std::string_view to_string(RickartKind kind) noexcept {
    switch (kind) {
      case RickartKind::rickart:
        return "rickart";
      case RickartKind::baer:
        return "baer";
      case RickartKind::dual_rickart:
        return "dual_rickart";
      case RickartKind::dual_baer:
        return "dual_baer";
    }
    return "unknown";
  }

  std::string_view to_string(SummandKind kind) noexcept {
    switch (kind) {
      case SummandKind::CIP:
        return "CIP";
      case SummandKind::SCIP:
        return "SCIP";
      case SummandKind::CSP:
        return "CSP";
      case SummandKind::SCSP:
        return "SCSP";
    }
    return "unknown";
  }

  std::string_view to_string(ConditionKind kind) noexcept {
    switch (kind) {
      case ConditionKind::C1:
        return "C1";
      case ConditionKind::D1:
        return "D1";
      case ConditionKind::mC2:
        return "mC2";
      case ConditionKind::mD2:
        return "mD2";
    }
    return "unknown";
  }

  std::string_view to_string(NonsingularKind kind) noexcept {
    switch (kind) {
      case NonsingularKind::K:
        return "K_nonsingular";
      case NonsingularKind::T:
        return "T_nonsingular";
      case NonsingularKind::K_co:
        return "K_cononsingular";
      case NonsingularKind::T_co:
        return "T_cononsingular";
    }
    return "unknown";
  }

  namespace {

    Json map_json(LinearMorphism const& phi) {
      return to_json(phi)["map"];
    }

    struct ClosureEntry {
      ElementId                value;
      std::vector<std::size_t> generators;  // positions in the input list
    };

    //! Closure of values under a binary operation, starting from `unit`
    //! (the empty family). Entries come out in discovery order.
    std::vector<ClosureEntry> closure(Lattice const& L, std::span<ElementId const> values,
                                      ElementId unit, bool use_meet) {
      std::vector<std::int64_t> slot(L.size(), -1);
      std::vector<ClosureEntry> out;
      out.push_back({unit, {}});
      slot[unit.index()] = 0;
      for (std::size_t next = 0; next < out.size(); ++next) {
        for (std::size_t i = 0; i < values.size(); ++i) {
          ElementId v = use_meet ? L.meet(out[next].value, values[i])
                                 : L.join(out[next].value, values[i]);
          if (slot[v.index()] < 0) {
            auto gens = out[next].generators;
            gens.push_back(i);
            slot[v.index()] = static_cast<std::int64_t>(out.size());
            out.push_back({v, std::move(gens)});
          }
        }
      }
      return out;
    }

    std::vector<ElementId> kernels(EndoMonoid const& m) {
      std::vector<ElementId> out;
      for (auto const& phi : m.members()) {
        out.push_back(phi.kernel());
      }
      return out;
    }

    std::vector<ElementId> images(EndoMonoid const& m) {
      std::vector<ElementId> out;
      for (auto const& phi : m.members()) {
        out.push_back(phi.image_top());
      }
      return out;
    }

  }  // namespace

  Verdict check_rickart_family(Lattice const& L, std::span<ElementId const> values,
                               RickartKind kind) {
    std::string const name(to_string(kind));
    bool const        dual = kind == RickartKind::dual_rickart || kind == RickartKind::dual_baer;
    if (kind == RickartKind::rickart || kind == RickartKind::dual_rickart) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (!is_complemented_element(L, values[i])) {
          return make_verdict(name, false,
                              Json{{dual ? "image" : "kernel", L.element_name(values[i])},
                                   {"position", i}});
        }
      }
      return make_verdict(name, true);
    }
    auto entries = closure(L, values, dual ? L.bottom() : L.top(), !dual);
    for (auto const& e : entries) {
      if (!is_complemented_element(L, e.value)) {
        return make_verdict(name, false,
                            Json{{dual ? "join" : "meet", L.element_name(e.value)},
                                 {"positions", e.generators}});
      }
    }
    return make_verdict(name, true);
  }

  Verdict check_rickart_family(EndoMonoid const& m, RickartKind kind) {
    bool const dual   = kind == RickartKind::dual_rickart || kind == RickartKind::dual_baer;
    auto       values = dual ? images(m) : kernels(m);
    Verdict    v      = check_rickart_family(m.lattice(), values, kind);
    if (!v.holds) {
      if (v.witness.contains("position")) {
        std::size_t i = v.witness["position"].get<std::size_t>();
        v.witness.erase("position");
        v.witness["morphism"] = map_json(m[i]);
      } else {
        Json subset = Json::array();
        for (std::size_t i : v.witness["positions"]) {
          subset.push_back(map_json(m[i]));
        }
        v.witness.erase("positions");
        v.witness["subset"] = std::move(subset);
      }
    }
    return v;
  }

  Verdict check_summand_property(Lattice const& L, SummandKind kind) {
    std::string const name(to_string(kind));
    bool const        use_meet = kind == SummandKind::CIP || kind == SummandKind::SCIP;
    auto const        comps    = complemented_elements(L);
    if (kind == SummandKind::CIP || kind == SummandKind::CSP) {
      for (ElementId a : comps) {
        for (ElementId b : comps) {
          ElementId c = use_meet ? L.meet(a, b) : L.join(a, b);
          if (!is_complemented_element(L, c)) {
            return make_verdict(name, false,
                                Json{{"a", L.element_name(a)},
                                     {"b", L.element_name(b)},
                                     {use_meet ? "meet" : "join", L.element_name(c)}});
          }
        }
      }
      return make_verdict(name, true);
    }
    auto entries = closure(L, comps, use_meet ? L.top() : L.bottom(), use_meet);
    for (auto const& e : entries) {
      if (!is_complemented_element(L, e.value)) {
        Json family = Json::array();
        for (std::size_t i : e.generators) {
          family.push_back(L.element_name(comps[i]));
        }
        return make_verdict(name, false,
                            Json{{"family", family},
                                 {use_meet ? "meet" : "join", L.element_name(e.value)}});
      }
    }
    return make_verdict(name, true);
  }

  Verdict check_condition(Lattice const& L, ConditionKind kind) {
    std::string const name(to_string(kind));
    auto const        comps       = complemented_elements(L);
    Json              certificate = Json::object();
    if (kind == ConditionKind::C1) {
      for (std::size_t i = 0; i < L.size(); ++i) {
        ElementId x(i);
        auto      it = std::find_if(comps.begin(), comps.end(), [&](ElementId c) {
          return L.leq(x, c) && is_essential_in(L, x, L.bottom(), c);
        });
        if (it == comps.end()) {
          return make_verdict(name, false, Json{{"x", L.element_name(x)}});
        }
        certificate[L.element_name(x)] = L.element_name(*it);
      }
      return make_verdict(name, true, certificate);
    }
    if (kind == ConditionKind::D1) {
      for (std::size_t i = 0; i < L.size(); ++i) {
        ElementId x(i);
        bool      found = false;
        for (ElementId c : comps) {
          if (!L.leq(c, x)) {
            continue;
          }
          for (ElementId cc : complements_of(L, c)) {
            if (is_superfluous(L, L.meet(x, cc))) {
              certificate[L.element_name(x)] =
                  Json{{"c", L.element_name(c)}, {"complement", L.element_name(cc)}};
              found = true;
              break;
            }
          }
          if (found) {
            break;
          }
        }
        if (!found) {
          return make_verdict(name, false, Json{{"x", L.element_name(x)}});
        }
      }
      return make_verdict(name, true, certificate);
    }
    throw Error(ErrorCode::invalid_input, name + " needs a monoid");
  }

  Verdict check_condition(EndoMonoid const& m, ConditionKind kind) {
    if (kind == ConditionKind::C1 || kind == ConditionKind::D1) {
      return check_condition(m.lattice(), kind);
    }
    // every member factors through its kernel and image, so the quantifier
    // over (a, x, theta) with the composite in m ranges over members
    Lattice const&    L = m.lattice();
    std::string const name(to_string(kind));
    for (auto const& phi : m.members()) {
      bool const ker_c = is_complemented_element(L, phi.kernel());
      bool const img_c = is_complemented_element(L, phi.image_top());
      bool const bad   = kind == ConditionKind::mD2 ? (img_c && !ker_c) : (ker_c && !img_c);
      if (bad) {
        return make_verdict(name, false,
                            Json{{"morphism", map_json(phi)},
                                 {"kernel", L.element_name(phi.kernel())},
                                 {"image", L.element_name(phi.image_top())}});
      }
    }
    return make_verdict(name, true);
  }

  Verdict check_nonsingularity(EndoMonoid const& m, NonsingularKind kind) {
    Lattice const&    L = m.lattice();
    std::string const name(to_string(kind));
    switch (kind) {
      case NonsingularKind::K:
      case NonsingularKind::T:
        for (auto const& phi : m.members()) {
          if (phi.is_zero()) {
            continue;
          }
          bool small = kind == NonsingularKind::K ? is_essential(L, phi.kernel())
                                                  : is_superfluous(L, phi.image_top());
          if (small) {
            return make_verdict(name, false, Json{{"morphism", map_json(phi)}});
          }
        }
        return make_verdict(name, true);
      case NonsingularKind::K_co:
      case NonsingularKind::T_co:
        for (std::size_t i = 0; i < L.size(); ++i) {
          ElementId a(i);
          bool      premise = true;
          for (auto const& phi : m.members()) {
            if (phi.is_zero()) {
              continue;
            }
            bool breaks = kind == NonsingularKind::K_co ? phi(a) == L.bottom()
                                                        : L.leq(phi.image_top(), a);
            if (breaks) {
              premise = false;
              break;
            }
          }
          bool conclusion = kind == NonsingularKind::K_co ? is_essential(L, a)
                                                          : is_superfluous(L, a);
          if (premise && !conclusion) {
            return make_verdict(name, false, Json{{"a", L.element_name(a)}});
          }
        }
        return make_verdict(name, true);
    }
    return make_verdict(name, false);
  }

  Verdict check_retractable(EndoMonoid const& m) {
    Lattice const& L = m.lattice();
    for (auto const& phi : m.members()) {
      ElementId const k = phi.kernel();
      for (std::size_t i = 0; i < L.size(); ++i) {
        ElementId b(i);
        if (!L.leq(b, k)) {
          continue;
        }
        bool served = std::any_of(m.members().begin(), m.members().end(), [&](auto const& xi) {
          return L.leq(b, xi.image_top()) && L.leq(xi.image_top(), k);
        });
        if (!served) {
          return make_verdict("retractable", false,
                              Json{{"morphism", map_json(phi)}, {"b", L.element_name(b)}});
        }
      }
    }
    return make_verdict("retractable", true);
  }

  Verdict check_generation(EndoMonoid const& m, ElementId x, GenerationKind kind) {
    Lattice const& L = m.lattice();
    if (kind == GenerationKind::generated) {
      ElementId acc = L.bottom();
      for (auto const& xi : m.members()) {
        if (L.leq(xi.image_top(), x)) {
          acc = L.join(acc, xi.image_top());
        }
      }
      return make_verdict("generated", acc == x,
                          Json{{"x", L.element_name(x)}, {"join", L.element_name(acc)}});
    }
    ElementId acc = L.top();
    for (auto const& xi : m.members()) {
      if (L.leq(x, xi.kernel())) {
        acc = L.meet(acc, xi.kernel());
      }
    }
    return make_verdict("cogenerated", acc == x,
                        Json{{"x", L.element_name(x)}, {"meet", L.element_name(acc)}});
  }

  Verdict check_cross_rickart(LatticePtr const& domain, LatticePtr const& codomain,
                              Limits const& limits) {
    for (auto const& phi : enumerate_linmors(domain, codomain, limits)) {
      if (!is_complemented_element(*domain, phi.kernel())) {
        return make_verdict("cross_rickart", false,
                            Json{{"morphism", to_json(phi)},
                                 {"kernel", domain->element_name(phi.kernel())}});
      }
    }
    return make_verdict("cross_rickart", true);
  }

  bool has_projection_form(EndoMonoid const& m, LinearMorphism const& phi) {
    Lattice const& L = m.lattice();
    for (std::size_t i = 0; i < L.size(); ++i) {
      ElementId x(i);
      if (L.meet(x, phi.kernel()) != L.bottom()) {
        continue;
      }
      for (ElementId xc : complements_of(L, x)) {
        bool absorbs = true;
        for (std::size_t j = 0; j < L.size() && absorbs; ++j) {
          ElementId a(j);
          absorbs = phi(L.meet(L.join(a, xc), x)) == phi(a);
        }
        if (absorbs) {
          return true;
        }
      }
    }
    return false;
  }

  Verdict check_rickpix(EndoMonoid const& m) {
    if (!m.has_all_projections()) {
      throw Error(ErrorCode::missing_projections,
                  "projection form needs every projection in the monoid");
    }
    bool const rickart    = check_rickart_family(m, RickartKind::rickart).holds;
    bool       projective = true;
    Json       failing    = nullptr;
    for (auto const& phi : m.members()) {
      if (!has_projection_form(m, phi)) {
        projective = false;
        failing    = map_json(phi);
        break;
      }
    }
    Json witness{{"rickart", rickart}, {"projection_form", projective}};
    if (!failing.is_null()) {
      witness["without_projection_form"] = failing;
    }
    return make_verdict("rickpix", rickart == projective, witness);
  }

  ////////////////////////////////////////////////////////////////////////
  // Dispatch
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using Evaluator = std::function<Verdict(EndoMonoid const&)>;

    std::vector<std::pair<std::string, Evaluator>> const& evaluators() {
      static std::vector<std::pair<std::string, Evaluator>> const table = [] {
        std::vector<std::pair<std::string, Evaluator>> t;
        t.emplace_back("modular", [](auto const& m) { return is_modular(m.lattice()); });
        t.emplace_back("boolean", [](auto const& m) { return is_boolean(m.lattice()); });
        for (auto k : {RickartKind::rickart, RickartKind::baer, RickartKind::dual_rickart,
                       RickartKind::dual_baer}) {
          t.emplace_back(std::string(to_string(k)),
                         [k](auto const& m) { return check_rickart_family(m, k); });
        }
        for (auto k : {SummandKind::CIP, SummandKind::SCIP, SummandKind::CSP, SummandKind::SCSP}) {
          t.emplace_back(std::string(to_string(k)),
                         [k](auto const& m) { return check_summand_property(m.lattice(), k); });
        }
        for (auto k : {ConditionKind::C1, ConditionKind::D1, ConditionKind::mC2,
                       ConditionKind::mD2}) {
          t.emplace_back(std::string(to_string(k)),
                         [k](auto const& m) { return check_condition(m, k); });
        }
        for (auto k : {NonsingularKind::K, NonsingularKind::T, NonsingularKind::K_co,
                       NonsingularKind::T_co}) {
          t.emplace_back(std::string(to_string(k)),
                         [k](auto const& m) { return check_nonsingularity(m, k); });
        }
        t.emplace_back("retractable", [](auto const& m) { return check_retractable(m); });
        for (auto k : {MonoidProperty::right_rickart, MonoidProperty::left_rickart,
                       MonoidProperty::right_baer, MonoidProperty::left_baer}) {
          t.emplace_back(std::string(to_string(k)),
                         [k](auto const& m) { return monoid_predicate(m, k); });
        }
        t.emplace_back("rickpix", [](auto const& m) { return check_rickpix(m); });
        return t;
      }();
      return table;
    }

  }  // namespace

  std::vector<std::string> const& property_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& [name, fn] : evaluators()) {
        out.push_back(name);
      }
      return out;
    }();
    return names;
  }

  std::vector<std::string> default_properties(EndoMonoid const& m) {
    std::vector<std::string> out;
    for (auto const& name : property_names()) {
      if (name == "boolean" && !m.lattice().modular()) {
        continue;
      }
      if (name == "rickpix" && !m.has_all_projections()) {
        continue;
      }
      if (!m.has_composition_table()
          && (name.ends_with("_monoid") || name == "rickpix")) {
        continue;
      }
      out.push_back(name);
    }
    return out;
  }

  Verdict evaluate_property(EndoMonoid const& m, std::string_view name) {
    for (auto const& [key, fn] : evaluators()) {
      if (key == name) {
        return fn(m);
      }
    }
    throw Error(ErrorCode::invalid_input, "unknown property '" + std::string(name) + "'");
  }

  Json make_report(EndoMonoid const& m, Json monoid_spec, std::vector<Verdict> const& results) {
    Json out;
    out["lattice"] = m.lattice().name();
    out["monoid"]  = std::move(monoid_spec);
    out["results"] = Json::array();
    for (auto const& v : results) {
      Json r;
      r["property"] = v.property;
      r["holds"]    = v.holds;
      r["witness"]  = v.witness;
      if (!v.notes.empty()) {
        r["notes"] = v.notes;
      }
      out["results"].push_back(std::move(r));
    }
    return out;
  }

}  // namespace latticelab
