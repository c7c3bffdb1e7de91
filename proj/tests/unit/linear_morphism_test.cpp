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
#include <latticelab/lattice_io.hpp>
#include <latticelab/monoid.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <filesystem>

using namespace testing;

namespace {

  ErrorCode rejection(LatticePtr const& l, MapTable t) {
    try {
      (void)validate_linear(l, l, std::move(t));
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("map unexpectedly linear");
    return ErrorCode::invalid_input;
  }

  std::set<std::vector<std::size_t>> as_set(std::vector<LinearMorphism> const& ms) {
    std::set<std::vector<std::size_t>> out;
    for (auto const& m : ms) {
      out.insert(oracle::as_indices(m.table()));
    }
    return out;
  }

  LatticePtr chain(std::size_t n) {
    LatticeSpec spec{"C" + std::to_string(n), {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      spec.elements.push_back("e" + std::to_string(i));
      if (i > 0) {
        spec.covers.emplace_back(spec.elements[i - 1], spec.elements[i]);
      }
    }
    return build_lattice(spec);
  }

}  // namespace

TEST_CASE("validation of the collapsing endomorphism of C3") {
  auto c3 = fixture("c3");
  auto phi = validate_linear(c3, c3, table(c3, c3, {{"0", "0"}, {"n", "0"}, {"1", "n"}}));
  CHECK(phi.kernel() == id(c3, "n"));
  CHECK(phi.image_top() == id(c3, "n"));
  CHECK(phi == collapse_morphism(c3));

  auto twice = compose(phi, phi);
  CHECK(twice.is_zero());
  CHECK(twice.kernel() == c3->top());
}

TEST_CASE("identity is linear with kernel bottom") {
  for (auto const& name : fixture_names()) {
    auto l = fixture(name);
    auto idm = identity_morphism(l);
    CHECK(idm.kernel() == l->bottom());
    CHECK(idm.image_top() == l->top());
  }
}

TEST_CASE("rejections carry the failed clause") {
  auto m3 = fixture("m3");
  CHECK(rejection(m3, table(m3, m3, {{"0", "0"}, {"a", "a"}, {"b", "a"}, {"c", "a"}, {"1", "a"}})) ==
        ErrorCode::not_interval_iso);
  auto b2 = fixture("b2");
  CHECK(rejection(b2, table(b2, b2, {{"0", "0"}, {"a", "0"}, {"b", "0"}, {"1", "a"}})) ==
        ErrorCode::no_kernel);
  auto c3 = fixture("c3");
  CHECK(rejection(c3, table(c3, c3, {{"0", "0"}, {"n", "n"}, {"1", "n"}})) ==
        ErrorCode::not_interval_iso);
  CHECK_FALSE(try_linear(c3, c3, table(c3, c3, {{"0", "n"}, {"n", "n"}, {"1", "1"}})));
}

TEST_CASE("projections") {
  auto m3 = fixture("m3");
  auto pi = projection(m3, id(m3, "a"), id(m3, "b"));
  CHECK(pi(id(m3, "c")) == id(m3, "a"));
  CHECK(pi.kernel() == id(m3, "b"));
  CHECK(pi.image_top() == id(m3, "a"));
  CHECK(compose(pi, pi) == pi);
  auto pi_c = projection(m3, id(m3, "a"), id(m3, "c"));
  CHECK(pi_c != pi);
  auto c3 = fixture("c3");
  CHECK_THROWS_AS((void)projection(c3, id(c3, "n"), c3->top()), Error);
}

TEST_CASE("composition requires matching lattices") {
  auto c3 = fixture("c3");
  auto b2 = fixture("b2");
  CHECK_THROWS_AS((void)compose(identity_morphism(c3), identity_morphism(b2)), Error);
}

TEST_CASE("isomorphism enumeration") {
  auto m3 = fixture("m3");
  auto full = interval(m3, m3->bottom(), m3->top());
  CHECK(enumerate_interval_isos(full, full).size() == 6);
  CHECK(oracle::automorphism_count(*m3) == 6);
  auto isos = enumerate_isos(*m3, *m3);
  CHECK(std::is_sorted(isos.begin(), isos.end()));

  auto ex = fixture("excip");
  auto upper = interval(ex, id(ex, "k"), ex->top());
  auto lower = interval(ex, ex->bottom(), id(ex, "avc"));
  auto found = enumerate_interval_isos(upper, lower);
  REQUIRE(found.size() == 1);
  CHECK(found[0].apply(id(ex, "k")) == ex->bottom());
  CHECK(found[0].apply(id(ex, "a")) == id(ex, "f"));

  for (auto const& name : fixture_names()) {
    auto l = fixture(name);
    CHECK(enumerate_isos(*l, *l).size() == oracle::automorphism_count(*l));
  }
}

TEST_CASE("the EXCIP morphism with kernel k") {
  auto ex = fixture("excip");
  // 0 -> 0, k -> 0, a -> f along the iso [k,1] ~ [0,avc]
  auto iso = enumerate_interval_isos(interval(ex, id(ex, "k"), ex->top()),
                                     interval(ex, ex->bottom(), id(ex, "avc")));
  REQUIRE(iso.size() == 1);
  MapTable t(ex->size());
  for (ElementId x : ex->elements()) {
    t[x.index()] = iso[0].apply(ex->join(x, id(ex, "k")));
  }
  auto phi = validate_linear(ex, ex, t);
  CHECK(phi.kernel() == id(ex, "k"));
  CHECK(phi(id(ex, "a")) == id(ex, "f"));
  CHECK(full_monoid(ex).contains(phi));
}

TEST_CASE("enumeration matches the all-maps oracle") {
  struct Expect {
    char const* name;
    std::size_t candidates;
    std::size_t count;
  };
  for (auto e : {Expect{"c2", 4, 2}, Expect{"c3", 27, 3}, Expect{"b2", 256, 7},
                 Expect{"m3", 3125, 16}}) {
    CAPTURE(e.name);
    auto l = fixture(e.name);
    auto brute = oracle::all_linear_maps(*l, *l);
    CHECK(brute.candidates == e.candidates);
    CHECK(brute.linear.size() == e.count);
    auto got = enumerate_linmors(l, l);
    CHECK(got.size() == e.count);
    CHECK(as_set(got) == std::set<std::vector<std::size_t>>(brute.linear.begin(), brute.linear.end()));
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("cross-lattice enumeration matches the oracle") {
  std::vector<LatticePtr> small;
  for (auto const& name : {"c2", "c3", "b2", "m3", "n5"}) {
    small.push_back(fixture(name));
  }
  small.push_back(direct_product({fixture("c2"), fixture("c3")}).lattice);
  for (auto const& l : random_corpus(3, 6, 6, Limits{})) {
    small.push_back(l);
  }
  for (auto const& a : small) {
    for (auto const& b : small) {
      if (a->size() == 6 && b->size() == 6) {
        continue;
      }
      CAPTURE(a->name());
      CAPTURE(b->name());
      auto brute = oracle::all_linear_maps(*a, *b);
      CHECK(as_set(enumerate_linmors(a, b)) ==
            std::set<std::vector<std::size_t>>(brute.linear.begin(), brute.linear.end()));
    }
  }
}

TEST_CASE("enumeration respects the size cap") {
  auto big = chain(21);
  CHECK_THROWS_AS((void)enumerate_linmors(big, big), Error);
  Limits roomy;
  roomy.max_enumeration = 21;
  // one morphism per kernel on a chain
  CHECK(enumerate_linmors(big, big, roomy).size() == 21);
}

TEST_CASE("certified morphisms preserve joins and certify their kernel") {
  for (auto const& l : sample_corpus(25)) {
    for (auto const& phi : enumerate_linmors(l, l)) {
      CHECK(phi(l->bottom()) == l->bottom());
      CHECK(phi.image_top() == phi(l->top()));
      for (ElementId x : l->elements()) {
        CHECK((phi(x) == l->bottom()) == l->leq(x, phi.kernel()));
        CHECK(phi(x) == phi(l->join(x, phi.kernel())));
        for (ElementId y : l->elements()) {
          CHECK(phi(l->join(x, y)) == l->join(phi(x), phi(y)));
        }
      }
    }
  }
}

TEST_CASE("idempotents split the lattice") {
  for (auto const& l : sample_corpus(25)) {
    for (auto const& phi : enumerate_linmors(l, l)) {
      if (compose(phi, phi) != phi) {
        continue;
      }
      CHECK(l->meet(phi.kernel(), phi.image_top()) == l->bottom());
      CHECK(l->join(phi.kernel(), phi.image_top()) == l->top());
    }
  }
}

TEST_CASE("kernel of a composite of projections") {
  for (auto const& l : sample_corpus(25)) {
    for (ElementId x : complemented_elements(*l)) {
      for (ElementId xc : complements_of(*l, x)) {
        for (ElementId y : complemented_elements(*l)) {
          for (ElementId yc : complements_of(*l, y)) {
            auto composite = compose(projection(l, y, yc), projection(l, x, xc));
            CHECK(composite.kernel() == l->join(l->meet(x, yc), xc));
          }
        }
      }
    }
  }
}

TEST_CASE("projections onto an independent family dominate and split invariants") {
  for (auto const& l : sample_corpus(25)) {
    auto d = decompose(*l);
    std::vector<LinearMorphism> pis;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      std::vector<ElementId> rest;
      for (std::size_t j = 0; j < d.blocks.size(); ++j) {
        if (j != i) {
          rest.push_back(d.blocks[j]);
        }
      }
      pis.push_back(projection(l, d.blocks[i], l->join_all(rest)));
    }
    for (ElementId x : l->elements()) {
      std::vector<ElementId> images;
      for (auto const& pi : pis) {
        images.push_back(pi(x));
      }
      CHECK(l->leq(x, l->join_all(images)));
    }
    for (ElementId x : fully_invariant_elements(full_monoid(l))) {
      std::vector<ElementId> parts;
      for (std::size_t i = 0; i < pis.size(); ++i) {
        ElementId part = l->meet(x, d.blocks[i]);
        CHECK(pis[i](x) == part);
        parts.push_back(part);
      }
      CHECK(l->join_all(parts) == x);
    }
  }
}

TEST_CASE("fully invariant elements") {
  auto c3 = fixture("c3");
  CHECK(fully_invariant_elements(full_monoid(c3)).size() == 3);
  auto m3 = fixture("m3");
  CHECK(names_of(*m3, fully_invariant_elements(full_monoid(m3))) ==
        std::set<std::string>{"0", "1"});
}

TEST_CASE("complemented exactly when the inclusion splits") {
  for (auto const& l : sample_corpus(15)) {
    for (ElementId a : l->elements()) {
      IntervalView lower = interval(l, l->bottom(), a);
      auto iota = inclusion(lower);
      bool splits = false;
      for (auto const& psi : enumerate_linmors(l, lower.lattice_ptr())) {
        if (compose(psi, iota) == identity_morphism(lower.lattice_ptr())) {
          splits = true;
          break;
        }
      }
      CHECK(splits == is_complemented_element(*l, a));
    }
  }
}

TEST_CASE("extension from an interval goes through the projection") {
  auto b3 = fixture("b3");
  auto src = interval(b3, b3->bottom(), id(b3, "ab"));
  auto dst = interval(b3, b3->bottom(), id(b3, "bc"));
  auto isos = enumerate_interval_isos(src, dst);
  REQUIRE_FALSE(isos.empty());
  auto phi = validate_linear(src.lattice_ptr(), dst.lattice_ptr(), isos[0].forward);
  auto ext = extend_from_interval(phi, src, dst, id(b3, "c"));
  CHECK(ext.kernel() == id(b3, "c"));
  for (ElementId x : src.members()) {
    CHECK(ext(x) == isos[0].apply(x));
  }
  CHECK_THROWS_AS((void)extend_from_interval(phi, src, dst, id(b3, "a")), Error);
}

TEST_CASE("morphism JSON reloads and recomputes the kernel") {
  auto c3 = fixture("c3");
  auto json = read_json_file(std::filesystem::path(LATTICELAB_FIXTURE_DIR) / "fig1-morphism.json");
  auto phi = morphism_from_json(json, c3, c3);
  CHECK(phi == collapse_morphism(c3));
  CHECK(phi.kernel() == id(c3, "n"));
  CHECK(morphism_from_json(to_json(phi), c3, c3) == phi);
}
