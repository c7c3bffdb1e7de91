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

#include <doctest.h>

#include <latticelab/error.hpp>
#include <latticelab/monoid.hpp>
#include <latticelab/properties.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace testing;

namespace {

  bool holds(EndoMonoid const& m, std::string_view property) {
    return evaluate_property(m, property).holds;
  }

  LatticePtr single_point() {
    return build_lattice({"1pt", {"o"}, {}});
  }

}  // namespace

TEST_CASE("Rickart families on the fixtures") {
  auto c3 = fixture("c3");
  auto mc3 = full_monoid(c3);
  Verdict v = check_rickart_family(mc3, RickartKind::rickart);
  CHECK_FALSE(v.holds);
  CHECK(v.witness["kernel"] == "n");

  CHECK(check_rickart_family(full_monoid(fixture("m3")), RickartKind::baer).holds);

  auto ex = fixture("excip");
  Verdict e = check_rickart_family(full_monoid(ex), RickartKind::rickart);
  CHECK_FALSE(e.holds);
  CHECK_FALSE(is_complemented_element(*ex, ex->at(e.witness["kernel"].get<std::string>())));
}

TEST_CASE("full-monoid Rickart verdicts match brute-force kernels") {
  for (auto const& name : {"c2", "c3", "b2", "m3"}) {
    auto l = fixture(name);
    auto brute = oracle::all_linear_maps(*l, *l);
    bool kernels = true;
    bool images = true;
    for (auto const& f : brute.linear) {
      std::size_t k = 0;
      for (std::size_t x = 0; x < l->size(); ++x) {
        if (f[x] == oracle::bottom(*l)) {
          k = oracle::join(*l, k, x);
        }
      }
      kernels = kernels && !oracle::complements(*l, k).empty();
      images = images && !oracle::complements(*l, f[oracle::top(*l)]).empty();
    }
    auto m = full_monoid(l);
    CHECK(check_rickart_family(m, RickartKind::rickart).holds == kernels);
    CHECK(check_rickart_family(m, RickartKind::dual_rickart).holds == images);
  }
}

TEST_CASE("summand intersection and sum properties") {
  CHECK(check_summand_property(*fixture("excip"), SummandKind::CIP).holds);
  for (auto kind : {SummandKind::CIP, SummandKind::CSP, SummandKind::SCIP, SummandKind::SCSP}) {
    CHECK(check_summand_property(*fixture("b3"), kind).holds);
    CHECK(check_summand_property(*fixture("m3"), kind).holds);
  }
  for (auto const& l : sample_corpus(40)) {
    CHECK(check_summand_property(*l, SummandKind::CIP).holds ==
          check_summand_property(*l, SummandKind::SCIP).holds);
    CHECK(check_summand_property(*l, SummandKind::CSP).holds ==
          check_summand_property(*l, SummandKind::SCSP).holds);
  }
}

TEST_CASE("extending conditions on C3") {
  auto c3 = fixture("c3");
  auto m = full_monoid(c3);
  CHECK(check_condition(*c3, ConditionKind::C1).holds);
  CHECK(check_condition(*c3, ConditionKind::D1).holds);
  // the only iso out of [n, 1] lands on [0, n], and n is not complemented,
  // so the D2 hypothesis never fires
  CHECK(check_condition(m, ConditionKind::mD2).holds);
  CHECK(check_condition(m, ConditionKind::mC2).holds);
  CHECK_THROWS_AS((void)check_condition(*c3, ConditionKind::mD2), Error);
}

TEST_CASE("nonsingularity quartet") {
  auto c3m = full_monoid(fixture("c3"));
  Verdict k = check_nonsingularity(c3m, NonsingularKind::K);
  CHECK_FALSE(k.holds);
  CHECK(k.witness.contains("morphism"));
  CHECK(check_nonsingularity(c3m, NonsingularKind::K_co).holds);
  auto b2m = full_monoid(fixture("b2"));
  CHECK(check_nonsingularity(b2m, NonsingularKind::K).holds);
  CHECK(check_nonsingularity(b2m, NonsingularKind::T).holds);
}

TEST_CASE("retractability") {
  CHECK(check_retractable(full_monoid(fixture("c3"))).holds);
  CHECK(check_retractable(full_monoid(fixture("b2"))).holds);
  for (auto const& name : fixture_names()) {
    auto l = fixture(name);
    CHECK(check_retractable(trivial_monoid(l)).holds);
  }
}

TEST_CASE("generation and cogeneration") {
  auto c3 = fixture("c3");
  auto m = full_monoid(c3);
  CHECK(check_generation(m, id(c3, "n"), GenerationKind::generated).holds);
  for (auto const& name : fixture_names()) {
    auto l = fixture(name);
    auto trivial = trivial_monoid(l);
    CHECK(check_generation(trivial, l->bottom(), GenerationKind::generated).holds);
    CHECK(check_generation(trivial, l->top(), GenerationKind::cogenerated).holds);
  }
}

TEST_CASE("cross Rickart between lattices") {
  auto ex = fixture("excip");
  auto below_a = interval(ex, ex->bottom(), id(ex, "a")).lattice_ptr();
  auto below_b = interval(ex, ex->bottom(), id(ex, "b")).lattice_ptr();
  Verdict v = check_cross_rickart(below_a, below_b);
  CHECK_FALSE(v.holds);
  CHECK(v.witness["kernel"] == "k");
  for (auto const& name : fixture_names()) {
    auto l = fixture(name);
    CHECK(check_cross_rickart(l, single_point()).holds);
    CHECK(check_cross_rickart(fixture("c2"), l).holds);
  }
}

TEST_CASE("projection form agrees with Rickart") {
  Verdict b2 = check_rickpix(full_monoid(fixture("b2")));
  CHECK(b2.holds);
  CHECK(b2.witness["rickart"] == true);
  Verdict c3 = check_rickpix(full_monoid(fixture("c3")));
  CHECK(c3.holds);
  CHECK(c3.witness["rickart"] == false);
  CHECK(c3.witness["projection_form"] == false);
  CHECK(check_rickpix(full_monoid(single_point())).holds);
  auto partial = trivial_monoid(fixture("b2"));
  CHECK_THROWS_AS((void)check_rickpix(partial), Error);
}

TEST_CASE("finite lattices do not separate Rickart from Baer") {
  for (auto const& l : sample_corpus(60)) {
    CAPTURE(l->name());
    for (auto const& m : {full_monoid(l), build_monoid(l, MonoidSpec::generated({}, true))}) {
      CHECK(holds(m, "rickart") == holds(m, "baer"));
      CHECK(holds(m, "dual_rickart") == holds(m, "dual_baer"));
    }
  }
  CHECK(holds(full_monoid(fixture("b2")), "rickart") != holds(full_monoid(fixture("c3")), "rickart"));
}

TEST_CASE("summand implications from Rickart") {
  for (auto const& l : sample_corpus(60)) {
    auto m = full_monoid(l);
    if (holds(m, "rickart")) {
      CHECK(holds(m, "CIP"));
    }
    if (holds(m, "dual_rickart")) {
      CHECK(holds(m, "CSP"));
    }
    CHECK(holds(m, "baer") == (holds(m, "rickart") && holds(m, "SCIP")));
    CHECK(holds(m, "dual_baer") == (holds(m, "dual_rickart") && holds(m, "SCSP")));
  }
}

TEST_CASE("complemented lattices are Rickart and Rickart forces complemented coatoms") {
  for (auto const& l : sample_corpus(60)) {
    bool const rickart = holds(full_monoid(l), "rickart");
    if (is_complemented(*l)) {
      CHECK(rickart);
    }
    if (rickart) {
      // [c, 1] and [0, atom] are both the two-element chain
      for (ElementId c : l->coatoms()) {
        CHECK(is_complemented_element(*l, c));
      }
    }
  }
}

TEST_CASE("property dispatch and reports") {
  auto m = full_monoid(fixture("c3"));
  for (auto const& name : property_names()) {
    CHECK_NOTHROW((void)evaluate_property(m, name));
  }
  CHECK_THROWS_AS((void)evaluate_property(m, "nonsense"), Error);
  std::vector<Verdict> results{evaluate_property(m, "rickart")};
  Json report = make_report(m, to_json(MonoidSpec::full(), m.lattice()), results);
  CHECK(report["lattice"] == "C3");
  CHECK(report["results"].size() == 1);
  CHECK(report["results"][0]["property"] == "rickart");
}
