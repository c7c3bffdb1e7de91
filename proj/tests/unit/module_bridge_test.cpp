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
#include <latticelab/module_bridge.hpp>
#include <latticelab/properties.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace testing;

namespace {

  Limits roomy() {
    Limits l;
    l.max_lattice = 512;
    return l;
  }

  oracle::Group as_oracle(AbelianGroup const& g) {
    return {std::vector<std::size_t>(g.factors().begin(), g.factors().end())};
  }

}  // namespace

TEST_CASE("group specs") {
  CHECK(AbelianGroup::parse("4").order() == 4);
  CHECK(AbelianGroup::parse("2,4").order() == 8);
  CHECK(AbelianGroup::parse("2,4").name() == "Z2xZ4");
  CHECK_THROWS_AS((void)AbelianGroup::parse("4,2"), Error);
  CHECK_THROWS_AS((void)AbelianGroup::parse("0"), Error);
  CHECK_THROWS_AS((void)AbelianGroup::parse("two"), Error);
  CHECK_THROWS_AS((void)AbelianGroup::parse("128"), Error);
}

TEST_CASE("invariant factor lists") {
  CHECK(abelian_groups_of_order(1).size() == 1);
  CHECK(abelian_groups_of_order(8).size() == 3);
  CHECK(abelian_groups_of_order(16).size() == 5);
  CHECK(abelian_groups_of_order(32).size() == 7);
  CHECK(abelian_groups_of_order(36).size() == 4);
  for (auto const& factors : abelian_groups_of_order(24)) {
    for (std::size_t i = 1; i < factors.size(); ++i) {
      CHECK(factors[i] % factors[i - 1] == 0);
    }
  }
}

TEST_CASE("subgroup counts match the subset oracle") {
  for (auto const* spec : {"1", "2", "4", "2,2", "6", "8", "2,4", "2,2,2", "3,3", "9", "2,6",
                           "4,4", "2,2,4"}) {
    CAPTURE(spec);
    auto g = AbelianGroup::parse(spec);
    CHECK(enumerate_subgroups(g).size() == oracle::subgroup_count(as_oracle(g)));
  }
}

TEST_CASE("endomorphism counts match the all-maps oracle") {
  for (auto const* spec : {"2", "3", "4", "2,2", "5", "6"}) {
    CAPTURE(spec);
    auto g = AbelianGroup::parse(spec);
    CHECK(endomorphism_count(g) == oracle::endomorphism_count(as_oracle(g)));
    CHECK(endomorphisms(g).size() == endomorphism_count(g));
  }
  CHECK(endomorphism_count(AbelianGroup::parse("4")) == 4);
  CHECK(endomorphism_count(AbelianGroup::parse("2,2")) == 16);
}

TEST_CASE("subgroup lattices") {
  auto klein = subgroup_lattice(AbelianGroup::parse("2,2"));
  CHECK(klein.lattice->size() == 5);
  CHECK(enumerate_isos(*klein.lattice, *fixture("m3")).size() == 6);
  auto z4 = subgroup_lattice(AbelianGroup::parse("4"));
  CHECK(enumerate_isos(*z4.lattice, *fixture("c3")).size() == 1);
  auto z6 = subgroup_lattice(AbelianGroup::parse("6"));
  CHECK(enumerate_isos(*z6.lattice, *fixture("b2")).size() == 2);
}

TEST_CASE("induced monoid of Z4 is the C3 monoid") {
  auto g = AbelianGroup::parse("4");
  auto sub = subgroup_lattice(g);
  auto m = induced_monoid(g, sub);
  CHECK(m.size() == 3);
  auto doubling = GroupHom::from_images(g, {2});
  auto star = induced_morphism(g, sub, doubling);
  CHECK(star.kernel() == sub.lattice->at("<2>"));
  CHECK(star(sub.lattice->top()) == sub.lattice->at("<2>"));
  CHECK(star(sub.lattice->at("<2>")) == sub.lattice->bottom());
}

TEST_CASE("automorphisms of the Klein group permute the three lines") {
  auto g = AbelianGroup::parse("2,2");
  auto sub = subgroup_lattice(g);
  std::set<MapTable> induced;
  for (auto const& f : endomorphisms(g)) {
    if (f.kernel_mask() == 1U && f.image_mask() == g.full_mask()) {
      induced.insert(induced_morphism(g, sub, f).table());
    }
  }
  // GL(2,2) acts faithfully on the lines, so this is all of Aut(M3)
  CHECK(induced.size() == 6);
  CHECK(induced.size() == oracle::automorphism_count(*sub.lattice));
  // zero, six automorphisms and nine rank-one maps: every linear endomorphism
  CHECK(induced_monoid(g, sub).size() == 16);
  CHECK(full_monoid(sub.lattice).size() == 16);
}

TEST_CASE("inducing respects composition and kernels") {
  for (auto const* spec : {"4", "2,2", "6", "8", "2,4", "3,3", "2,2,2"}) {
    CAPTURE(spec);
    auto g = AbelianGroup::parse(spec);
    auto sub = subgroup_lattice(g);
    auto ends = endomorphisms(g);
    for (auto const& f : ends) {
      auto fs = induced_morphism(g, sub, f);
      CHECK(fs.kernel() == sub.element_of(f.kernel_mask()));
      CHECK(fs.image_top() == sub.element_of(f.image_mask()));
    }
    if (ends.size() > 64) {
      continue;
    }
    for (auto const& f : ends) {
      for (auto const& h : ends) {
        CHECK(induced_morphism(g, sub, compose(f, h)) ==
              compose(induced_morphism(g, sub, f), induced_morphism(g, sub, h)));
      }
    }
  }
}

TEST_CASE("the induced monoid contains every lattice projection") {
  for (auto const* spec : {"2,2", "6", "2,4", "3,3", "2,2,2", "2,6"}) {
    CAPTURE(spec);
    auto g = AbelianGroup::parse(spec);
    auto sub = subgroup_lattice(g);
    auto m = induced_monoid(g, sub);
    for (auto const& pi : all_projections(sub.lattice)) {
      CHECK(m.contains(pi));
    }
  }
}

TEST_CASE("direct module verdicts") {
  auto z4 = AbelianGroup::parse("4");
  auto v = rickart_module_direct(z4, RickartKind::rickart);
  CHECK_FALSE(v.module_side.holds);
  CHECK_FALSE(v.lattice_side.holds);
  CHECK(v.module_side.witness["kernel"] == "<2>");
  CHECK(rickart_module_direct(AbelianGroup::parse("2,2"), RickartKind::rickart).module_side.holds);
  CHECK(rickart_module_direct(AbelianGroup::parse("2"), RickartKind::rickart).module_side.holds);
}

TEST_CASE("module and lattice sides agree on cyclic and rank-two groups") {
  std::vector<AbelianGroup> groups;
  groups.emplace_back(std::vector<std::uint32_t>{}, roomy());
  for (std::uint32_t n = 2; n <= 64; ++n) {
    groups.emplace_back(std::vector<std::uint32_t>{n}, roomy());
  }
  for (std::uint32_t a = 2; a <= 8; ++a) {
    for (std::uint32_t b = a; a * b <= 64; b += a) {
      groups.emplace_back(std::vector<std::uint32_t>{a, b}, roomy());
    }
  }
  for (auto const& g : groups) {
    CAPTURE(g.name());
    for (auto const& v : rickart_module_all(g, roomy())) {
      CHECK(v.agree());
    }
  }
}

TEST_CASE("direct summands") {
  auto g = AbelianGroup::parse("2,4");
  auto subs = enumerate_subgroups(g);
  CHECK(is_direct_summand(g, subs, 1U));
  CHECK(is_direct_summand(g, subs, g.full_mask()));
  // <(0,2)> sits inside every cyclic subgroup of order 4
  SubgroupMask h = g.extend(1U, g.encode(std::vector<std::uint32_t>{0, 2}));
  CHECK_FALSE(is_direct_summand(g, subs, h));
}
