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


// The check registry. Each check recomputes both sides of an equivalence
// (or the premise and conclusion of an implication) through independent
// code paths where possible, and returns the first disagreement it finds.

#include <algorithm>
#include <set>

#include "latticelab/error.hpp"
#include "latticelab/fixtures.hpp"
#include "latticelab/harness.hpp"

namespace latticelab {

  namespace {

    using Outcome = CheckOutcome;

    Json names_of(Lattice const& L, std::span<ElementId const> xs) {
      Json out = Json::array();
      for (ElementId x : xs) {
        out.push_back(L.element_name(x));
      }
      return out;
    }

    Json table_json(Lattice const& dom, Lattice const& cod, MapTable const& t) {
      Json out = Json::object();
      for (std::size_t i = 0; i < t.size(); ++i) {
        out[dom.element_name(ElementId(i))] = cod.element_name(t[i]);
      }
      return out;
    }

    Json map_json(LinearMorphism const& phi) {
      return table_json(phi.domain(), phi.codomain(), phi.table());
    }

    bool in(EndoMonoid const& m, MapTable const& t) {
      return m.index_of(t).has_value();
    }

    MapTable identity_table(std::size_t n) {
      MapTable t(n);
      for (std::size_t i = 0; i < n; ++i) {
        t[i] = ElementId(i);
      }
      return t;
    }

    //! Every (x, x') with x' a complement of x.
    std::vector<std::pair<ElementId, ElementId>> complement_pairs(Lattice const& L) {
      std::vector<std::pair<ElementId, ElementId>> out;
      for (ElementId x : complemented_elements(L)) {
        for (ElementId xc : complements_of(L, x)) {
          out.emplace_back(x, xc);
        }
      }
      return out;
    }

    ElementId project(Lattice const& L, ElementId x, ElementId xc, ElementId a) {
      return L.meet(L.join(a, xc), x);
    }

    //! Lower intervals [0, x] and upper intervals [x, 1] for every x.
    struct Intervals {
      std::vector<IntervalView> lower;
      std::vector<IntervalView> upper;

      explicit Intervals(LatticePtr const& L) {
        for (std::size_t i = 0; i < L->size(); ++i) {
          lower.push_back(interval(L, L->bottom(), ElementId(i)));
          upper.push_back(interval(L, ElementId(i), L->top()));
        }
      }
    };

    std::optional<Outcome> need_projections(CheckContext& ctx) {
      if (!ctx.monoid().has_all_projections()) {
        return Outcome::skip("monoid lacks a projection");
      }
      return std::nullopt;
    }

    std::optional<Outcome> need_table(CheckContext& ctx) {
      if (auto g = need_projections(ctx)) {
        return g;
      }
      if (!ctx.monoid().has_composition_table()) {
        return Outcome::skip("monoid too large for a composition table");
      }
      return std::nullopt;
    }

    Outcome agree(std::string const& lhs_name, bool lhs, std::string const& rhs_name, bool rhs,
                  Json extra = Json::object()) {
      if (lhs == rhs) {
        return Outcome::pass();
      }
      extra[lhs_name] = lhs;
      extra[rhs_name] = rhs;
      return Outcome::fail(std::move(extra));
    }

    Outcome implies(std::string const& premise_name, bool premise,
                    std::string const& conclusion_name, bool conclusion,
                    Json extra = Json::object()) {
      if (!premise || conclusion) {
        return Outcome::pass();
      }
      extra[premise_name]    = true;
      extra[conclusion_name] = false;
      return Outcome::fail(std::move(extra));
    }

    bool holds(Verdict const& v) {
      return v.holds;
    }

    bool monoid_has(EndoMonoid const& m, MonoidProperty p) {
      return monoid_predicate(m, p).holds;
    }

    //! Values reachable as meets (joins) of subfamilies of values,
    //! including the empty family.
    std::vector<ElementId> closure(Lattice const& L, std::vector<ElementId> const& values,
                                   bool meets) {
      std::set<ElementId> seen{meets ? L.top() : L.bottom()};
      std::vector<ElementId> frontier(seen.begin(), seen.end());
      while (!frontier.empty()) {
        std::vector<ElementId> next;
        for (ElementId acc : frontier) {
          for (ElementId v : values) {
            ElementId c = meets ? L.meet(acc, v) : L.join(acc, v);
            if (seen.insert(c).second) {
              next.push_back(c);
            }
          }
        }
        frontier = std::move(next);
      }
      return {seen.begin(), seen.end()};
    }

    //! {psi o e : psi in m} as member indices.
    std::set<std::size_t> left_multiples(EndoMonoid const& m, std::size_t e) {
      std::set<std::size_t> out;
      for (std::size_t i = 0; i < m.size(); ++i) {
        out.insert(m.compose(i, e));
      }
      return out;
    }

    std::set<std::size_t> right_multiples(EndoMonoid const& m, std::size_t e) {
      std::set<std::size_t> out;
      for (std::size_t i = 0; i < m.size(); ++i) {
        out.insert(m.compose(e, i));
      }
      return out;
    }

    //! y -> theta(y v a) for an iso theta from [a, 1] onto some [0, x].
    MapTable through_upper(Lattice const& L, IntervalIso const& theta, ElementId a) {
      MapTable t(L.size());
      for (std::size_t i = 0; i < L.size(); ++i) {
        t[i] = theta.apply(L.join(ElementId(i), a));
      }
      return t;
    }

    //! Restricts an endomorphism of L that preserves [0, x] to [0, x].
    MapTable restrict_to(IntervalView const& lower, LinearMorphism const& phi) {
      MapTable t(lower.size());
      for (std::size_t i = 0; i < lower.size(); ++i) {
        ElementId image = phi(lower.to_parent(ElementId(i)));
        t[i]            = lower.to_local(image);
      }
      return t;
    }

    //! Endomorphisms psi of [0, a] whose lift iota psi pi_a lands in m.
    std::vector<LinearMorphism> liftable(CheckContext& ctx, IntervalView const& lower,
                                         ElementId a_prime, bool via_extension) {
      Lattice const&              L = ctx.lattice();
      std::vector<LinearMorphism> kept;
      for (auto& psi : enumerate_linmors(lower.lattice_ptr(), lower.lattice_ptr(), ctx.limits())) {
        MapTable lifted;
        if (via_extension) {
          lifted = extend_from_interval(psi, lower, lower, a_prime).table();
        } else {
          lifted.resize(L.size());
          for (std::size_t i = 0; i < L.size(); ++i) {
            ElementId p = project(L, lower.hi(), a_prime, ElementId(i));
            lifted[i]   = lower.to_parent(psi(lower.to_local(p)));
          }
        }
        if (in(ctx.monoid(), lifted)) {
          kept.push_back(std::move(psi));
        }
      }
      return kept;
    }

    //! The factor pairs used for product checks: L x 2, plus L x L when small.
    std::vector<std::vector<LatticePtr>> product_factors(CheckContext& ctx) {
      std::vector<std::vector<LatticePtr>> out;
      auto two = fixture("c2");
      out.push_back({ctx.lattice_ptr(), two});
      if (ctx.lattice().size() <= 4) {
        out.push_back({ctx.lattice_ptr(), ctx.lattice_ptr()});
      }
      return out;
    }

    bool cross(LatticePtr const& a, LatticePtr const& b, Limits const& limits) {
      return check_cross_rickart(a, b, limits).holds;
    }

    bool indecomposable_interval(Lattice const& L, ElementId top) {
      for (std::size_t i = 0; i < L.size(); ++i) {
        ElementId c(i);
        if (c == L.bottom() || c == top || !L.leq(c, top)) {
          continue;
        }
        if (!complements_within(L, c, top).empty()) {
          return false;
        }
      }
      return true;
    }

    ////////////////////////////////////////////////////////////////////
    // Checks
    ////////////////////////////////////////////////////////////////////

    Outcome riccipssp(CheckContext& ctx) {
      if (auto g = need_projections(ctx)) {
        return *g;
      }
      Lattice const& L = ctx.lattice();
      if (ctx.holds(RickartKind::rickart)) {
        auto cip = check_summand_property(L, SummandKind::CIP);
        if (!cip.holds) {
          return Outcome::fail(Json{{"rickart", true}, {"CIP", false}, {"witness", cip.witness}});
        }
      }
      if (ctx.holds(RickartKind::dual_rickart)) {
        auto csp = check_summand_property(L, SummandKind::CSP);
        if (!csp.holds) {
          return Outcome::fail(
              Json{{"dual_rickart", true}, {"CSP", false}, {"witness", csp.witness}});
        }
      }
      return Outcome::pass();
    }

    Outcome baerricscip(CheckContext& ctx) {
      if (auto g = need_projections(ctx)) {
        return *g;
      }
      Lattice const& L    = ctx.lattice();
      bool           lhs  = ctx.holds(RickartKind::rickart)
                     && holds(check_summand_property(L, SummandKind::SCIP));
      auto out = agree("rickart_and_SCIP", lhs, "baer", ctx.holds(RickartKind::baer));
      if (out.status == CheckStatus::fail) {
        return out;
      }
      bool dual = ctx.holds(RickartKind::dual_rickart)
                  && holds(check_summand_property(L, SummandKind::SCSP));
      return agree("dual_rickart_and_SCSP", dual, "dual_baer", ctx.holds(RickartKind::dual_baer));
    }

    Outcome ricendoric(CheckContext& ctx) {
      if (auto g = need_table(ctx)) {
        return *g;
      }
      auto const& m          = ctx.monoid();
      bool        rickart    = ctx.holds(RickartKind::rickart);
      bool        right      = monoid_has(m, MonoidProperty::right_rickart);
      bool        retract    = holds(check_retractable(m));
      bool        kernels_gen = std::all_of(m.members().begin(), m.members().end(), [&](auto& phi) {
        return check_generation(m, phi.kernel(), GenerationKind::generated).holds;
      });
      auto out = agree("rickart", rickart, "right_rickart_and_retractable", right && retract);
      if (out.status == CheckStatus::fail) {
        return out;
      }
      return agree("rickart", rickart, "right_rickart_and_kernels_generated", right && kernels_gen);
    }

    Outcome dricendodric(CheckContext& ctx) {
      if (auto g = need_table(ctx)) {
        return *g;
      }
      auto const& m    = ctx.monoid();
      bool        left = monoid_has(m, MonoidProperty::left_rickart);
      bool images_cogen = std::all_of(m.members().begin(), m.members().end(), [&](auto& phi) {
        return check_generation(m, phi.image_top(), GenerationKind::cogenerated).holds;
      });
      return agree("dual_rickart", ctx.holds(RickartKind::dual_rickart),
                   "left_rickart_and_images_cogenerated", left && images_cogen);
    }

    Outcome baercar(CheckContext& ctx) {
      if (auto g = need_table(ctx)) {
        return *g;
      }
      auto const&    m    = ctx.monoid();
      Lattice const& L    = ctx.lattice();
      bool const     baer = ctx.holds(RickartKind::baer);
      auto const     idem = idempotents(m);

      // every vanishing set {phi : phi(a) = 0} is a principal left ideal m e
      bool principal = true;
      Json where;
      for (std::size_t i = 0; i < L.size() && principal; ++i) {
        ElementId             a(i);
        std::set<std::size_t> vanish;
        for (std::size_t j = 0; j < m.size(); ++j) {
          if (m[j](a) == L.bottom()) {
            vanish.insert(j);
          }
        }
        principal = std::any_of(idem.begin(), idem.end(),
                                [&](std::size_t e) { return left_multiples(m, e) == vanish; });
        if (!principal) {
          where = L.element_name(a);
        }
      }
      std::vector<ElementId> kernels;
      for (auto const& phi : m.members()) {
        kernels.push_back(phi.kernel());
      }
      bool meets_generated = true;
      for (ElementId k : closure(L, kernels, true)) {
        meets_generated = meets_generated && holds(check_generation(m, k, GenerationKind::generated));
      }
      bool monoid_baer = monoid_has(m, MonoidProperty::right_baer);
      Json extra{{"vanishing_not_principal_at", where}};
      auto out = agree("baer", baer, "vanishing_sets_principal", principal, extra);
      if (out.status == CheckStatus::fail) {
        return out;
      }
      return agree("baer", baer, "baer_monoid_and_meets_generated", monoid_baer && meets_generated);
    }

    Outcome dbaercar(CheckContext& ctx) {
      if (auto g = need_table(ctx)) {
        return *g;
      }
      auto const&    m    = ctx.monoid();
      Lattice const& L    = ctx.lattice();
      bool const     dual = ctx.holds(RickartKind::dual_baer);
      auto const     idem = idempotents(m);

      bool principal = true;
      Json where;
      for (std::size_t i = 0; i < L.size() && principal; ++i) {
        ElementId             a(i);
        std::set<std::size_t> below;
        for (std::size_t j = 0; j < m.size(); ++j) {
          if (L.leq(m[j].image_top(), a)) {
            below.insert(j);
          }
        }
        principal = std::any_of(idem.begin(), idem.end(),
                                [&](std::size_t e) { return right_multiples(m, e) == below; });
        if (!principal) {
          where = L.element_name(a);
        }
      }
      std::vector<ElementId> images;
      for (auto const& phi : m.members()) {
        images.push_back(phi.image_top());
      }
      bool joins_cogenerated = true;
      for (ElementId d : closure(L, images, false)) {
        joins_cogenerated =
            joins_cogenerated && holds(check_generation(m, d, GenerationKind::cogenerated));
      }
      bool monoid_baer = monoid_has(m, MonoidProperty::right_baer);
      Json extra{{"bounded_set_not_principal_at", where}};
      auto out = agree("dual_baer", dual, "bounded_sets_principal", principal, extra);
      if (out.status == CheckStatus::fail) {
        return out;
      }
      return agree("dual_baer", dual, "baer_monoid_and_joins_cogenerated",
                   monoid_baer && joins_cogenerated);
    }

    Outcome baer_symmetry(CheckContext& ctx) {
      if (auto g = need_table(ctx)) {
        return *g;
      }
      auto const& m = ctx.monoid();
      return agree("right_baer", monoid_has(m, MonoidProperty::right_baer), "left_baer",
                   monoid_has(m, MonoidProperty::left_baer));
    }

    // Literal D2 over m: an iso [a, 1] -> [0, x] onto a complemented x whose
    // composite lies in m forces a to be complemented.
    bool literal_d2(CheckContext& ctx, Intervals const& iv, Json& witness) {
      Lattice const& L     = ctx.lattice();
      auto const     comps = complemented_elements(L);
      for (std::size_t i = 0; i < L.size(); ++i) {
        ElementId a(i);
        if (is_complemented_element(L, a)) {
          continue;
        }
        for (ElementId x : comps) {
          if (iv.lower[x.index()].size() != iv.upper[i].size()) {
            continue;
          }
          for (auto const& theta : enumerate_interval_isos(iv.upper[i], iv.lower[x.index()])) {
            auto t = through_upper(L, theta, a);
            if (in(ctx.monoid(), t)) {
              witness = Json{{"a", L.element_name(a)},
                             {"x", L.element_name(x)},
                             {"composite", table_json(L, L, t)}};
              return false;
            }
          }
        }
      }
      return true;
    }

    // Literal C2 over m: an iso [0, x] -> [0, a] from a complemented x whose
    // composite with the projection along x' lies in m forces a complemented.
    bool literal_c2(CheckContext& ctx, Intervals const& iv, Json& witness) {
      Lattice const& L = ctx.lattice();
      for (auto [x, xc] : complement_pairs(L)) {
        for (std::size_t i = 0; i < L.size(); ++i) {
          ElementId a(i);
          if (is_complemented_element(L, a) || iv.lower[i].size() != iv.lower[x.index()].size()) {
            continue;
          }
          for (auto const& theta : enumerate_interval_isos(iv.lower[x.index()], iv.lower[i])) {
            MapTable t(L.size());
            for (std::size_t j = 0; j < L.size(); ++j) {
              t[j] = theta.apply(project(L, x, xc, ElementId(j)));
            }
            if (in(ctx.monoid(), t)) {
              witness = Json{{"a", L.element_name(a)},
                             {"x", L.element_name(x)},
                             {"x_prime", L.element_name(xc)},
                             {"composite", table_json(L, L, t)}};
              return false;
            }
          }
        }
      }
      return true;
    }

    Outcome ricd2(CheckContext& ctx) {
      if (auto g = need_projections(ctx)) {
        return *g;
      }
      Lattice const& L = ctx.lattice();
      Intervals      iv(ctx.lattice_ptr());
      Json           witness;
      bool const     d2 = literal_d2(ctx, iv, witness);
      bool const     scan = holds(check_condition(ctx.monoid(), ConditionKind::mD2));
      if (d2 != scan) {
        return Outcome::fail(Json{{"literal_mD2", d2}, {"member_scan_mD2", scan}, {"at", witness}});
      }
      auto const comps  = complemented_elements(L);
      bool       images = true;
      Json       stuck;
      for (auto const& phi : ctx.monoid().members()) {
        auto const& src   = iv.lower[phi.image_top().index()];
        bool        found = false;
        for (ElementId x : comps) {
          if (iv.lower[x.index()].size() != src.size()) {
            continue;
          }
          for (auto const& theta : enumerate_interval_isos(src, iv.lower[x.index()])) {
            MapTable t(L.size());
            for (std::size_t j = 0; j < L.size(); ++j) {
              t[j] = theta.apply(phi(ElementId(j)));
            }
            if (in(ctx.monoid(), t)) {
              found = true;
              break;
            }
          }
          if (found) {
            break;
          }
        }
        if (!found) {
          images = false;
          stuck  = map_json(phi);
          break;
        }
      }
      return agree("rickart", ctx.holds(RickartKind::rickart), "mD2_and_image_transport",
                   d2 && images, Json{{"mD2", d2}, {"untransported", stuck}});
    }

    Outcome dricc2(CheckContext& ctx) {
      if (auto g = need_projections(ctx)) {
        return *g;
      }
      Lattice const& L = ctx.lattice();
      Intervals      iv(ctx.lattice_ptr());
      Json           witness;
      bool const     c2   = literal_c2(ctx, iv, witness);
      bool const     scan = holds(check_condition(ctx.monoid(), ConditionKind::mC2));
      if (c2 != scan) {
        return Outcome::fail(Json{{"literal_mC2", c2}, {"member_scan_mC2", scan}, {"at", witness}});
      }
      auto const pairs  = complement_pairs(L);
      bool       images = true;
      Json       stuck;
      for (auto const& phi : ctx.monoid().members()) {
        auto const& tgt   = iv.lower[phi.image_top().index()];
        bool        found = false;
        for (auto [x, xc] : pairs) {
          if (iv.lower[x.index()].size() != tgt.size()) {
            continue;
          }
          for (auto const& theta : enumerate_interval_isos(iv.lower[x.index()], tgt)) {
            MapTable t(L.size());
            for (std::size_t j = 0; j < L.size(); ++j) {
              t[j] = theta.apply(project(L, x, xc, ElementId(j)));
            }
            if (in(ctx.monoid(), t)) {
              found = true;
              break;
            }
          }
          if (found) {
            break;
          }
        }
        if (!found) {
          images = false;
          stuck  = map_json(phi);
          break;
        }
      }
      return agree("dual_rickart", ctx.holds(RickartKind::dual_rickart),
                   "mC2_and_image_transport", c2 && images,
                   Json{{"mC2", c2}, {"untransported", stuck}});
    }

    Outcome kercompkergenann(CheckContext& ctx) {
      if (auto g = need_table(ctx)) {
        return *g;
      }
      auto const&    m = ctx.monoid();
      Lattice const& L = ctx.lattice();
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::size_t const target[] = {i};
        bool comp      = is_complemented_element(L, m[i].kernel());
        bool generated = holds(check_generation(m, m[i].kernel(), GenerationKind::generated));
        bool principal = annihilator(m, Side::right, target).principal_idempotent.has_value();
        auto out       = agree("kernel_complemented", comp, "generated_and_principal_annihilator",
                               generated && principal, Json{{"morphism", map_json(m[i])}});
        if (out.status == CheckStatus::fail) {
          return out;
        }
      }
      return Outcome::pass();
    }

    Outcome imcompintkercogen(CheckContext& ctx) {
      if (auto g = need_table(ctx)) {
        return *g;
      }
      auto const&    m = ctx.monoid();
      Lattice const& L = ctx.lattice();
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::size_t const target[] = {i};
        bool comp  = is_complemented_element(L, m[i].image_top());
        bool cogen = holds(check_generation(m, m[i].image_top(), GenerationKind::cogenerated));
        bool principal = annihilator(m, Side::left, target).principal_idempotent.has_value();
        auto out       = agree("image_complemented", comp, "cogenerated_and_principal_annihilator",
                               cogen && principal, Json{{"morphism", map_json(m[i])}});
        if (out.status == CheckStatus::fail) {
          return out;
        }
      }
      return Outcome::pass();
    }

    bool nonsing(CheckContext& ctx, NonsingularKind k) {
      return holds(check_nonsingularity(ctx.monoid(), k));
    }

    bool condition(CheckContext& ctx, ConditionKind k) {
      return holds(check_condition(ctx.lattice(), k));
    }

    Outcome baercarK(CheckContext& ctx) {
      if (auto g = need_projections(ctx)) {
        return *g;
      }
      bool lhs = nonsing(ctx, NonsingularKind::K) && condition(ctx, ConditionKind::C1);
      bool rhs = ctx.holds(RickartKind::baer) && nonsing(ctx, NonsingularKind::K_co);
      return agree("K_nonsingular_and_C1", lhs, "baer_and_K_cononsingular", rhs);
    }

    Outcome dbaercarT(CheckContext& ctx) {
      if (auto g = need_projections(ctx)) {
        return *g;
      }
      bool lhs = nonsing(ctx, NonsingularKind::T) && condition(ctx, ConditionKind::D1);
      bool rhs = ctx.holds(RickartKind::dual_baer) && nonsing(ctx, NonsingularKind::T_co);
      return agree("T_nonsingular_and_D1", lhs, "dual_baer_and_T_cononsingular", rhs);
    }

    Outcome acc_rickart_eq_baer(CheckContext& ctx) {
      if (auto g = need_projections(ctx)) {
        return *g;
      }
      auto out = agree("rickart", ctx.holds(RickartKind::rickart), "baer",
                       ctx.holds(RickartKind::baer));
      if (out.status == CheckStatus::fail) {
        return out;
      }
      return agree("dual_rickart", ctx.holds(RickartKind::dual_rickart), "dual_baer",
                   ctx.holds(RickartKind::dual_baer));
    }

    Outcome kerpi(CheckContext& ctx) {
      Lattice const& L     = ctx.lattice();
      auto const     pairs = complement_pairs(L);
      for (auto [x, xc] : pairs) {
        auto px = projection(ctx.lattice_ptr(), x, xc);
        for (auto [y, yc] : pairs) {
          auto      py       = projection(ctx.lattice_ptr(), y, yc);
          ElementId kernel   = compose(py, px).kernel();
          ElementId expected = L.join(L.meet(x, yc), xc);
          if (kernel != expected) {
            return Outcome::fail(Json{{"x", L.element_name(x)},
                                      {"x_prime", L.element_name(xc)},
                                      {"y", L.element_name(y)},
                                      {"y_prime", L.element_name(yc)},
                                      {"kernel", L.element_name(kernel)},
                                      {"expected", L.element_name(expected)}});
          }
        }
      }
      return Outcome::pass();
    }

    Outcome idemcomp(CheckContext& ctx) {
      Lattice const& L = ctx.lattice();
      auto const&    m = ctx.full();
      for (std::size_t e : idempotents(m)) {
        ElementId k = m[e].kernel(), img = m[e].image_top();
        if (L.meet(k, img) != L.bottom() || L.join(k, img) != L.top()) {
          return Outcome::fail(Json{{"idempotent", map_json(m[e])}});
        }
      }
      return Outcome::pass();
    }

    Outcome fipi1(CheckContext& ctx) {
      Lattice const& L = ctx.lattice();
      for (auto const& family : ctx.decompositions()) {
        for (std::size_t i = 0; i < L.size(); ++i) {
          ElementId x(i);
          ElementId acc = L.bottom();
          for (std::size_t j = 0; j < family.size(); ++j) {
            ElementId rest = L.bottom();
            for (std::size_t k = 0; k < family.size(); ++k) {
              if (k != j) {
                rest = L.join(rest, family[k]);
              }
            }
            acc = L.join(acc, project(L, family[j], rest, x));
          }
          if (!L.leq(x, acc)) {
            return Outcome::fail(
                Json{{"family", names_of(L, family)}, {"x", L.element_name(x)}});
          }
        }
      }
      return Outcome::pass();
    }

    Outcome fidis(CheckContext& ctx) {
      Lattice const& L  = ctx.lattice();
      auto const     fi = fully_invariant_elements(ctx.full());
      for (auto const& family : ctx.decompositions()) {
        for (ElementId x : fi) {
          ElementId acc = L.bottom();
          for (std::size_t j = 0; j < family.size(); ++j) {
            ElementId rest = L.bottom();
            for (std::size_t k = 0; k < family.size(); ++k) {
              if (k != j) {
                rest = L.join(rest, family[k]);
              }
            }
            ElementId piece = L.meet(x, family[j]);
            if (project(L, family[j], rest, x) != piece) {
              return Outcome::fail(Json{{"family", names_of(L, family)},
                                        {"x", L.element_name(x)},
                                        {"block", L.element_name(family[j])}});
            }
            acc = L.join(acc, piece);
          }
          if (acc != x) {
            return Outcome::fail(Json{{"family", names_of(L, family)}, {"x", L.element_name(x)}});
          }
        }
      }
      return Outcome::pass();
    }

    Outcome fi_join(CheckContext& ctx) {
      Lattice const& L  = ctx.lattice();
      auto const     fi = fully_invariant_elements(ctx.full());
      std::set<ElementId> set(fi.begin(), fi.end());
      for (ElementId a : fi) {
        for (ElementId b : fi) {
          if (!set.contains(L.join(a, b))) {
            return Outcome::fail(Json{{"a", L.element_name(a)}, {"b", L.element_name(b)}});
          }
        }
      }
      return set.contains(L.bottom()) ? Outcome::pass()
                                      : Outcome::fail(Json{{"bottom_fully_invariant", false}});
    }

    Outcome lemmaret(CheckContext& ctx) {
      Lattice const& L = ctx.lattice();
      auto const     e = L.elements();
      for (ElementId a : e) {
        for (ElementId b : e) {
          if (L.meet(a, b) != L.bottom()) {
            continue;
          }
          for (ElementId c : e) {
            if (L.meet(L.join(a, b), c) == L.bottom()
                && L.meet(a, L.join(b, c)) != L.bottom()) {
              return Outcome::fail(Json{
                  {"a", L.element_name(a)}, {"b", L.element_name(b)}, {"c", L.element_name(c)}});
            }
          }
        }
      }
      return Outcome::pass();
    }

    Outcome complement_transitive(CheckContext& ctx) {
      Lattice const& L = ctx.lattice();
      for (ElementId b : complemented_elements(L)) {
        for (ElementId a : L.elements()) {
          if (L.leq(a, b) && !complements_within(L, a, b).empty()
              && !is_complemented_element(L, a)) {
            return Outcome::fail(Json{{"a", L.element_name(a)}, {"b", L.element_name(b)}});
          }
        }
      }
      return Outcome::pass();
    }

    Outcome splits(CheckContext& ctx) {
      Lattice const& L = ctx.lattice();
      Intervals      iv(ctx.lattice_ptr());
      for (std::size_t i = 0; i < L.size(); ++i) {
        ElementId   a(i);
        auto const& lower = iv.lower[i];
        auto const& upper = iv.upper[i];
        auto        iota  = inclusion(lower);
        auto        rho   = join_onto(upper);
        auto const  id_lo = identity_table(lower.size());
        auto const  id_up = identity_table(upper.size());

        bool left = false;
        for (auto const& psi : enumerate_linmors(ctx.lattice_ptr(), lower.lattice_ptr(),
                                                 ctx.limits())) {
          if (compose(psi, iota).table() == id_lo) {
            left = true;
            break;
          }
        }
        bool right = false;
        for (auto const& sigma : enumerate_linmors(upper.lattice_ptr(), ctx.lattice_ptr(),
                                                   ctx.limits())) {
          if (compose(rho, sigma).table() == id_up) {
            right = true;
            break;
          }
        }
        bool comp = is_complemented_element(L, a);
        if (comp != left || comp != right) {
          return Outcome::fail(Json{{"a", L.element_name(a)},
                                    {"complemented", comp},
                                    {"inclusion_splits", left},
                                    {"quotient_splits", right}});
        }
      }
      return Outcome::pass();
    }

    Outcome isolin(CheckContext& ctx) {
      Lattice const& L = ctx.lattice();
      Intervals      iv(ctx.lattice_ptr());
      for (std::size_t i = 0; i < L.size(); ++i) {
        for (std::size_t j = 0; j < L.size(); ++j) {
          if (iv.upper[i].size() != iv.lower[j].size()) {
            continue;
          }
          for (auto const& theta : enumerate_interval_isos(iv.upper[i], iv.lower[j])) {
            auto t     = through_upper(L, theta, ElementId(i));
            auto check = check_linear(L, L, t);
            if (!check.linear || check.kernel != ElementId(i) || check.image_top != ElementId(j)) {
              return Outcome::fail(Json{{"a", L.element_name(ElementId(i))},
                                        {"x", L.element_name(ElementId(j))},
                                        {"composite", table_json(L, L, t)},
                                        {"detail", check.detail}});
            }
          }
        }
      }
      return Outcome::pass();
    }

    Outcome boolean_meetmaps(CheckContext& ctx) {
      Lattice const& L       = ctx.lattice();
      bool const     boolean = is_distributive(L) && is_complemented(L);
      bool           meets   = true;
      Json           bad;
      for (ElementId a : L.elements()) {
        MapTable t(L.size());
        for (std::size_t i = 0; i < L.size(); ++i) {
          t[i] = L.meet(a, ElementId(i));
        }
        if (!check_linear(L, L, t).linear) {
          meets = false;
          bad   = L.element_name(a);
          break;
        }
      }
      auto out = agree("boolean", boolean, "meet_maps_linear", meets, Json{{"meet_with", bad}});
      if (out.status == CheckStatus::fail) {
        return out;
      }
      return agree("boolean", boolean, "is_boolean", is_boolean(L).holds);
    }

    Outcome boolean_rickart(CheckContext& ctx, bool unique) {
      if (auto g = need_projections(ctx)) {
        return *g;
      }
      Lattice const& L = ctx.lattice();
      Intervals      iv(ctx.lattice_ptr());
      bool           every_exists = true;
      bool           every_unique = true;
      for (std::size_t i = 0; i < L.size(); ++i) {
        std::set<std::size_t> targets;
        for (std::size_t j = 0; j < L.size(); ++j) {
          if (iv.upper[i].size() != iv.lower[j].size()) {
            continue;
          }
          for (auto const& theta : enumerate_interval_isos(iv.upper[i], iv.lower[j])) {
            if (in(ctx.monoid(), through_upper(L, theta, ElementId(i)))) {
              targets.insert(j);
              break;
            }
          }
        }
        every_exists = every_exists && !targets.empty();
        every_unique = every_unique && targets.size() == 1;
      }
      bool const rickart = ctx.holds(RickartKind::rickart);
      if (unique) {
        bool boolean = is_distributive(L) && is_complemented(L);
        return implies("rickart_with_unique_targets", rickart && every_unique, "boolean", boolean);
      }
      return agree("rickart_with_targets", rickart && every_exists, "complemented",
                   is_complemented(L));
    }

    Outcome cl_boolean_algebra(CheckContext& ctx) {
      Lattice const& L     = ctx.lattice();
      auto const     comps = complemented_elements(L);
      std::set<ElementId> cset(comps.begin(), comps.end());
      for (ElementId x : comps) {
        for (ElementId y : comps) {
          if (!cset.contains(L.meet(x, y)) || !cset.contains(L.join(x, y))) {
            return Outcome::skip("complemented elements do not form a sublattice");
          }
        }
      }
      bool distributive = true;
      for (ElementId x : comps) {
        for (ElementId y : comps) {
          for (ElementId z : comps) {
            distributive = distributive
                           && L.meet(x, L.join(y, z)) == L.join(L.meet(x, y), L.meet(x, z));
          }
        }
      }
      bool commuting = true;
      auto pairs     = complement_pairs(L);
      for (auto [x, xc] : pairs) {
        for (auto [y, yc] : pairs) {
          ElementId m = L.meet(x, y);
          commuting   = commuting && project(L, x, xc, y) == m && project(L, y, yc, x) == m;
        }
      }
      return agree("projections_commute_to_meets", commuting, "boolean_algebra", distributive);
    }

    Outcome cl_complete(CheckContext& ctx) {
      Lattice const& L    = ctx.lattice();
      auto const&    full = ctx.full();
      bool premise        = holds(check_rickart_family(full, RickartKind::baer))
                     || holds(check_rickart_family(full, RickartKind::dual_baer));
      if (!premise) {
        return Outcome::pass();
      }
      auto const comps = complemented_elements(L);
      // least upper and greatest lower bounds inside the complemented set
      for (ElementId x : comps) {
        for (ElementId y : comps) {
          std::vector<ElementId> ub, lb;
          for (ElementId z : comps) {
            if (L.leq(x, z) && L.leq(y, z)) {
              ub.push_back(z);
            }
            if (L.leq(z, x) && L.leq(z, y)) {
              lb.push_back(z);
            }
          }
          auto least = std::find_if(ub.begin(), ub.end(), [&](ElementId z) {
            return std::all_of(ub.begin(), ub.end(), [&](ElementId w) { return L.leq(z, w); });
          });
          auto greatest = std::find_if(lb.begin(), lb.end(), [&](ElementId z) {
            return std::all_of(lb.begin(), lb.end(), [&](ElementId w) { return L.leq(w, z); });
          });
          if (least == ub.end() || greatest == lb.end()) {
            return Outcome::fail(Json{{"x", L.element_name(x)}, {"y", L.element_name(y)}});
          }
        }
      }
      return Outcome::pass();
    }

    Outcome rickpix(CheckContext& ctx) {
      auto const&    full = ctx.full();
      Lattice const& L    = ctx.lattice();
      for (auto const& phi : full.members()) {
        auto out = agree("kernel_complemented", is_complemented_element(L, phi.kernel()),
                         "projection_form", has_projection_form(full, phi),
                         Json{{"morphism", map_json(phi)}});
        if (out.status == CheckStatus::fail) {
          return out;
        }
      }
      return Outcome::pass();
    }

    Outcome rickpix2(CheckContext& ctx) {
      if (auto g = need_projections(ctx)) {
        return *g;
      }
      auto const& m    = ctx.monoid();
      bool        form = std::all_of(m.members().begin(), m.members().end(),
                                     [&](auto const& phi) { return has_projection_form(m, phi); });
      auto out = agree("rickart", ctx.holds(RickartKind::rickart), "all_projection_form", form);
      if (out.status == CheckStatus::fail) {
        return out;
      }
      return check_rickpix(m).holds ? Outcome::pass()
                                    : Outcome::fail(check_rickpix(m).witness);
    }

    Outcome exmorf(CheckContext& ctx) {
      Lattice const& L = ctx.lattice();
      Intervals      iv(ctx.lattice_ptr());
      for (auto [x, xc] : complement_pairs(L)) {
        auto const& src = iv.lower[x.index()];
        for (std::size_t j = 0; j < L.size(); ++j) {
          auto const& tgt = iv.lower[j];
          for (auto const& phi :
               enumerate_linmors(src.lattice_ptr(), tgt.lattice_ptr(), ctx.limits())) {
            auto ext = extend_from_interval(phi, src, tgt, xc);
            for (std::size_t k = 0; k < src.size(); ++k) {
              ElementId z = src.to_parent(ElementId(k));
              if (ext(z) != tgt.to_parent(phi(ElementId(k)))) {
                return Outcome::fail(Json{{"x", L.element_name(x)},
                                          {"x_prime", L.element_name(xc)},
                                          {"y", L.element_name(ElementId(j))},
                                          {"at", L.element_name(z)}});
              }
            }
          }
        }
      }
      return Outcome::pass();
    }

    Outcome interval_inheritance(CheckContext& ctx, bool via_extension, RickartKind first,
                                 RickartKind second) {
      if (auto g = need_projections(ctx)) {
        return *g;
      }
      bool const a = ctx.holds(first), b = ctx.holds(second);
      if (!a && !b) {
        return Outcome::pass();
      }
      Lattice const& L = ctx.lattice();
      for (auto [x, xc] : complement_pairs(L)) {
        auto lower = interval(ctx.lattice_ptr(), L.bottom(), x);
        auto kept  = liftable(ctx, lower, xc, via_extension);
        auto n     = EndoMonoid::from_members(lower.lattice_ptr(), std::move(kept), true,
                                              ctx.limits());
        for (auto [premise, kind] : {std::pair{a, first}, std::pair{b, second}}) {
          if (premise) {
            auto v = check_rickart_family(n, kind);
            if (!v.holds) {
              return Outcome::fail(Json{{"x", L.element_name(x)},
                                        {"x_prime", L.element_name(xc)},
                                        {"lattice_property", std::string(to_string(kind))},
                                        {"interval_witness", v.witness}});
            }
          }
        }
      }
      return Outcome::pass();
    }

    Outcome kretract(CheckContext& ctx) {
      if (auto g = need_projections(ctx)) {
        return *g;
      }
      return implies("rickart", ctx.holds(RickartKind::rickart), "retractable",
                     holds(check_retractable(ctx.monoid())));
    }

    Outcome ricind2(CheckContext& ctx) {
      Lattice const& L = ctx.lattice();
      if (L.size() < 2) {
        return Outcome::skip("one-element lattice");
      }
      auto [soc, rad] = socle_radical(L);
      if (soc == L.bottom() || rad == L.top()) {
        return Outcome::skip("socle is zero or radical is the top");
      }
      bool indecomposable = indecomposable_interval(L, L.top());
      bool rickart        = ctx.lower_interval_rickart(L.top());
      return agree("indecomposable_rickart", indecomposable && rickart, "two_element",
                   L.size() == 2);
    }

    bool is_atom(Lattice const& L, ElementId a) {
      auto const& atoms = L.atoms();
      return std::find(atoms.begin(), atoms.end(), a) != atoms.end();
    }

    Outcome if2(CheckContext& ctx) {
      Lattice const& L       = ctx.lattice();
      bool const     rickart = ctx.lower_interval_rickart(L.top());
      auto const&    fams    = ctx.decompositions();
      bool atomic = std::any_of(fams.begin(), fams.end(), [&](auto const& f) {
        return std::all_of(f.begin(), f.end(), [&](ElementId a) { return is_atom(L, a); });
      });
      auto out = agree("rickart", rickart, "atomic_decomposition", atomic);
      if (out.status == CheckStatus::fail) {
        return out;
      }
      auto blocks = decompose(L).blocks;
      bool two    = std::all_of(blocks.begin(), blocks.end(),
                                [&](ElementId b) { return is_atom(L, b); });
      return agree("rickart", rickart, "blocks_two_element", two,
                   Json{{"blocks", names_of(L, blocks)}});
    }

    Outcome family_rickart(CheckContext& ctx, bool fully_invariant_only) {
      Lattice const&      L       = ctx.lattice();
      bool const          rickart = ctx.lower_interval_rickart(L.top());
      std::set<ElementId> fi;
      if (fully_invariant_only) {
        auto v = fully_invariant_elements(ctx.full());
        fi.insert(v.begin(), v.end());
      }
      for (auto const& family : ctx.decompositions()) {
        if (fully_invariant_only
            && !std::all_of(family.begin(), family.end(),
                            [&](ElementId a) { return fi.contains(a); })) {
          continue;
        }
        bool pieces = std::all_of(family.begin(), family.end(),
                                  [&](ElementId a) { return ctx.lower_interval_rickart(a); });
        auto out = agree("rickart", rickart, "blocks_rickart", pieces,
                         Json{{"family", names_of(L, family)}});
        if (out.status == CheckStatus::fail) {
          return out;
        }
      }
      return Outcome::pass();
    }

    Outcome fi_extension_rickart(CheckContext& ctx) {
      Lattice const& L    = ctx.lattice();
      auto const&    full = ctx.full();
      if (!ctx.lower_interval_rickart(L.top())) {
        return Outcome::pass();
      }
      for (ElementId x : fully_invariant_elements(full)) {
        auto lower = interval(ctx.lattice_ptr(), L.bottom(), x);
        std::set<MapTable> restricted;
        for (auto const& phi : full.members()) {
          restricted.insert(restrict_to(lower, phi));
        }
        bool all_extend = true;
        for (auto const& psi :
             enumerate_linmors(lower.lattice_ptr(), lower.lattice_ptr(), ctx.limits())) {
          all_extend = all_extend && restricted.contains(psi.table());
        }
        if (all_extend && !ctx.lower_interval_rickart(x)) {
          return Outcome::fail(Json{{"x", L.element_name(x)}});
        }
      }
      return Outcome::pass();
    }

    Outcome prod_projections_linear(CheckContext& ctx) {
      for (auto const& factors : product_factors(ctx)) {
        auto product = direct_product(factors, ctx.limits());
        for (std::size_t i = 0; i < factors.size(); ++i) {
          MapTable t(product.lattice->size());
          for (std::size_t p = 0; p < t.size(); ++p) {
            t[p] = product.coordinates[p][i];
          }
          auto check = check_linear(*product.lattice, *factors[i], t);
          if (!check.linear) {
            return Outcome::fail(Json{{"product", product.lattice->name()},
                                      {"coordinate", i},
                                      {"detail", check.detail}});
          }
        }
      }
      return Outcome::pass();
    }

    Outcome prod_rickart_pairs(CheckContext& ctx) {
      for (auto const& factors : product_factors(ctx)) {
        auto product = direct_product(factors, ctx.limits());
        bool whole   = cross(product.lattice, product.lattice, ctx.limits());
        bool pairs   = true;
        for (auto const& a : factors) {
          for (auto const& b : factors) {
            pairs = pairs && cross(a, b, ctx.limits());
          }
        }
        auto out = agree("product_rickart", whole, "all_factor_pairs_rickart", pairs,
                         Json{{"product", product.lattice->name()}});
        if (out.status == CheckStatus::fail) {
          return out;
        }
      }
      return Outcome::pass();
    }

    Outcome ricdirsumsub(CheckContext& ctx) {
      auto two = fixture("c2");
      auto self = ctx.lattice_ptr();
      for (auto const& [dom, cod] :
           {std::pair{self, self}, std::pair{self, two}, std::pair{two, self}}) {
        if (!cross(dom, cod, ctx.limits())) {
          continue;
        }
        for (ElementId a : complemented_elements(*dom)) {
          auto da = interval(dom, dom->bottom(), a);
          for (ElementId x : cod->elements()) {
            auto cx = interval(cod, cod->bottom(), x);
            if (!cross(da.lattice_ptr(), cx.lattice_ptr(), ctx.limits())) {
              return Outcome::fail(Json{{"domain", dom->name()},
                                        {"codomain", cod->name()},
                                        {"a", dom->element_name(a)},
                                        {"x", cod->element_name(x)}});
            }
          }
        }
      }
      return Outcome::pass();
    }

    Outcome cip_codomain_split(CheckContext& ctx) {
      Lattice const& L = ctx.lattice();
      if (!holds(check_summand_property(L, SummandKind::CIP))) {
        return Outcome::skip("lattice lacks CIP");
      }
      auto const&                 self  = ctx.lattice_ptr();
      bool const                  whole = cross(self, self, ctx.limits());
      std::map<std::size_t, bool> memo;
      auto into = [&](ElementId a) {
        auto it = memo.find(a.index());
        if (it == memo.end()) {
          auto lower = interval(self, L.bottom(), a);
          it = memo.emplace(a.index(), cross(self, lower.lattice_ptr(), ctx.limits())).first;
        }
        return it->second;
      };
      for (auto const& family : ctx.decompositions()) {
        bool pieces = std::all_of(family.begin(), family.end(), into);
        auto out    = agree("rickart_into_whole", whole, "rickart_into_blocks", pieces,
                            Json{{"family", names_of(L, family)}});
        if (out.status == CheckStatus::fail) {
          return out;
        }
      }
      return Outcome::pass();
    }

    Outcome indecomposable_blocks(CheckContext& ctx) {
      Lattice const& L      = ctx.lattice();
      auto           d      = decompose(L);
      ElementId      joined = L.join_all(d.blocks);
      if (!d.independent || !is_independent(L, d.blocks) || joined != L.top()) {
        return Outcome::fail(Json{{"blocks", names_of(L, d.blocks)}});
      }
      for (ElementId b : d.blocks) {
        if (!indecomposable_interval(L, b)) {
          return Outcome::fail(Json{{"decomposable_block", L.element_name(b)}});
        }
      }
      return Outcome::pass();
    }

    Outcome singularity_implication(CheckContext& ctx, int which) {
      bool const projections = ctx.monoid().has_all_projections();
      if (which != 4 && which != 5 && !projections) {
        return Outcome::skip("monoid lacks a projection");
      }
      switch (which) {
        case 0:
          return implies("C1", condition(ctx, ConditionKind::C1), "K_cononsingular",
                         nonsing(ctx, NonsingularKind::K_co));
        case 1:
          return implies("D1", condition(ctx, ConditionKind::D1), "T_cononsingular",
                         nonsing(ctx, NonsingularKind::T_co));
        case 2:
          return implies("K_nonsingular_and_C1",
                         nonsing(ctx, NonsingularKind::K) && condition(ctx, ConditionKind::C1),
                         "baer", ctx.holds(RickartKind::baer));
        case 3:
          return implies("T_nonsingular_and_D1",
                         nonsing(ctx, NonsingularKind::T) && condition(ctx, ConditionKind::D1),
                         "dual_baer", ctx.holds(RickartKind::dual_baer));
        case 4:
          return implies("rickart", ctx.holds(RickartKind::rickart), "K_nonsingular",
                         nonsing(ctx, NonsingularKind::K));
        case 5:
          return implies("dual_rickart", ctx.holds(RickartKind::dual_rickart), "T_nonsingular",
                         nonsing(ctx, NonsingularKind::T));
        case 6:
          return implies("baer_and_K_cononsingular",
                         ctx.holds(RickartKind::baer) && nonsing(ctx, NonsingularKind::K_co),
                         "C1", condition(ctx, ConditionKind::C1));
        default:
          return implies("dual_baer_and_T_cononsingular",
                         ctx.holds(RickartKind::dual_baer) && nonsing(ctx, NonsingularKind::T_co),
                         "D1", condition(ctx, ConditionKind::D1));
      }
    }

    TheoremCheck entry(std::string name, std::string statement,
                       std::function<Outcome(CheckContext&)> run) {
      return TheoremCheck{std::move(name), std::move(statement), std::move(run)};
    }

  }  // namespace

  std::vector<TheoremCheck> const& check_registry() {
    static std::vector<TheoremCheck> const registry = [] {
      std::vector<TheoremCheck> r;
      // monoid-relative Rickart and Baer theory
      r.push_back(entry("riccipssp", "Rickart implies CIP; dual Rickart implies CSP.", riccipssp));
      r.push_back(entry("baerricscip", "Baer iff Rickart with SCIP; dually with SCSP.",
                        baerricscip));
      r.push_back(entry("acc_rickart_eq_baer",
                        "On finite lattices Rickart iff Baer and dual Rickart iff dual Baer.",
                        acc_rickart_eq_baer));
      r.push_back(entry("ricendoric",
                        "Rickart iff the monoid is right Rickart and kernels are generated "
                        "(equivalently, k-local retractable).",
                        ricendoric));
      r.push_back(entry("dricendodric",
                        "Dual Rickart iff the monoid is left Rickart and images are cogenerated.",
                        dricendodric));
      r.push_back(entry("kretract", "Rickart implies k-local retractable.", kretract));
      r.push_back(entry("baercar",
                        "Baer iff every vanishing set is a principal left ideal on an "
                        "idempotent iff the monoid is Baer and meets of kernels are generated.",
                        baercar));
      r.push_back(entry("dbaercar",
                        "Dual Baer iff every set of maps below a fixed element is a principal "
                        "right ideal iff the monoid is Baer and joins of images are cogenerated.",
                        dbaercar));
      r.push_back(entry("baer_symmetry", "The monoid is right Baer iff it is left Baer.",
                        baer_symmetry));
      r.push_back(entry("kercompkergenann",
                        "A kernel is complemented iff it is generated and the right annihilator "
                        "is principal on an idempotent.",
                        kercompkergenann));
      r.push_back(entry("imcompintkercogen",
                        "An image is complemented iff it is cogenerated and the left annihilator "
                        "is principal on an idempotent.",
                        imcompintkercogen));
      r.push_back(entry("ricd2",
                        "Rickart iff D2 relative to the monoid holds and every image transports "
                        "onto a complemented element inside the monoid.",
                        ricd2));
      r.push_back(entry("dricc2",
                        "Dual Rickart iff C2 relative to the monoid holds and every image is "
                        "reached from a complemented element inside the monoid.",
                        dricc2));
      r.push_back(entry("rickpix",
                        "A kernel is complemented iff the map factors through a projection onto "
                        "an element disjoint from the kernel.",
                        rickpix));
      r.push_back(entry("rickpix2", "Rickart iff every member has projection form.", rickpix2));
      r.push_back(entry("boolean_rickart_exists",
                        "Rickart with every upper interval transported into the monoid iff "
                        "complemented.",
                        [](CheckContext& c) { return boolean_rickart(c, false); }));
      r.push_back(entry("boolean_rickart_unique",
                        "Rickart with unique transport targets implies Boolean.",
                        [](CheckContext& c) { return boolean_rickart(c, true); }));
      // nonsingularity
      r.push_back(entry("baercarK",
                        "K-nonsingular with C1 iff Baer and K-cononsingular.", baercarK));
      r.push_back(entry("dbaercarT",
                        "T-nonsingular with D1 iff dual Baer and T-cononsingular.", dbaercarT));
      r.push_back(entry("c1_kco", "C1 implies K-cononsingular.",
                        [](CheckContext& c) { return singularity_implication(c, 0); }));
      r.push_back(entry("d1_tco", "D1 implies T-cononsingular.",
                        [](CheckContext& c) { return singularity_implication(c, 1); }));
      r.push_back(entry("kc1_baer", "K-nonsingular with C1 implies Baer.",
                        [](CheckContext& c) { return singularity_implication(c, 2); }));
      r.push_back(entry("td1_dbaer", "T-nonsingular with D1 implies dual Baer.",
                        [](CheckContext& c) { return singularity_implication(c, 3); }));
      r.push_back(entry("rickart_knonsingular", "Rickart implies K-nonsingular.",
                        [](CheckContext& c) { return singularity_implication(c, 4); }));
      r.push_back(entry("drickart_tnonsingular", "Dual Rickart implies T-nonsingular.",
                        [](CheckContext& c) { return singularity_implication(c, 5); }));
      r.push_back(entry("baer_kco_c1", "Baer and K-cononsingular imply C1.",
                        [](CheckContext& c) { return singularity_implication(c, 6); }));
      r.push_back(entry("dbaer_tco_d1", "Dual Baer and T-cononsingular imply D1.",
                        [](CheckContext& c) { return singularity_implication(c, 7); }));
      // order-theoretic facts
      r.push_back(entry("kerpi", "The composite of two projections has the predicted kernel.",
                        kerpi));
      r.push_back(entry("idemcomp", "Kernel and image of an idempotent are complements.",
                        idemcomp));
      r.push_back(entry("exmorf",
                        "A morphism out of a complemented lower interval extends to the whole "
                        "lattice.",
                        exmorf));
      r.push_back(entry("fi_join", "Joins of fully invariant elements are fully invariant.",
                        fi_join));
      r.push_back(entry("fipi1",
                        "Every element lies below the join of its projections onto the blocks "
                        "of a decomposition.",
                        fipi1));
      r.push_back(entry("fidis",
                        "A fully invariant element is the join of its meets with the blocks, "
                        "and its projections are those meets.",
                        fidis));
      r.push_back(entry("lemmaret", "Disjointness propagates through a join.", lemmaret));
      r.push_back(entry("complement_transitive",
                        "A complement inside a complemented lower interval is a complement.",
                        complement_transitive));
      r.push_back(entry("splits",
                        "Complemented iff the inclusion splits iff the quotient map splits.",
                        splits));
      r.push_back(entry("isolin",
                        "An iso from an upper interval onto a lower one gives a linear "
                        "endomorphism with that kernel.",
                        isolin));
      r.push_back(entry("boolean_meetmaps", "Boolean iff every meet map is linear.",
                        boolean_meetmaps));
      r.push_back(entry("cl_boolean_algebra",
                        "When complemented elements form a sublattice, projections commute to "
                        "meets iff that sublattice is Boolean.",
                        cl_boolean_algebra));
      r.push_back(entry("cl_complete",
                        "Baer or dual Baer makes the complemented elements a lattice.",
                        cl_complete));
      // intervals
      r.push_back(entry("compintric",
                        "A complemented lower interval inherits Rickart and dual Rickart for "
                        "the maps whose lift lies in the monoid.",
                        [](CheckContext& c) {
                          return interval_inheritance(c, false, RickartKind::rickart,
                                                      RickartKind::dual_rickart);
                        }));
      r.push_back(entry("complbaer",
                        "A complemented lower interval inherits Baer for the maps whose "
                        "extension lies in the monoid.",
                        [](CheckContext& c) {
                          return interval_inheritance(c, true, RickartKind::baer,
                                                      RickartKind::baer);
                        }));
      r.push_back(entry("compldbaer",
                        "A complemented lower interval inherits dual Baer for the maps whose "
                        "extension lies in the monoid.",
                        [](CheckContext& c) {
                          return interval_inheritance(c, true, RickartKind::dual_baer,
                                                      RickartKind::dual_baer);
                        }));
      r.push_back(entry("fi_extension_rickart",
                        "A fully invariant lower interval whose maps all extend inherits "
                        "Rickart.",
                        fi_extension_rickart));
      // decompositions
      r.push_back(entry("indecomposable_blocks",
                        "The lattice splits into independent indecomposable blocks.",
                        indecomposable_blocks));
      r.push_back(entry("ricind2", "Indecomposable and Rickart iff two-element.", ricind2));
      r.push_back(entry("if2",
                        "Rickart iff there is a decomposition into two-element blocks.", if2));
      r.push_back(entry("sumric",
                        "For any decomposition, Rickart iff every block is Rickart.",
                        [](CheckContext& c) { return family_rickart(c, false); }));
      r.push_back(entry("decomp_fi",
                        "For a decomposition into fully invariant blocks, Rickart iff every "
                        "block is Rickart.",
                        [](CheckContext& c) { return family_rickart(c, true); }));
      // products and relative Rickart
      r.push_back(entry("prod_projections_linear",
                        "Coordinate projections of a product are linear.",
                        prod_projections_linear));
      r.push_back(entry("prod_rickart_pairs",
                        "A finite product is Rickart iff every factor is Rickart relative to "
                        "every factor.",
                        prod_rickart_pairs));
      r.push_back(entry("ricdirsumsub",
                        "Relative Rickart passes to complemented lower intervals of the domain "
                        "and lower intervals of the codomain.",
                        ricdirsumsub));
      r.push_back(entry("cip_codomain_split",
                        "With CIP, Rickart relative to a lattice iff relative to each block of "
                        "a decomposition of it.",
                        cip_codomain_split));
      return r;
    }();
    return registry;
  }

}  // namespace latticelab
