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

#include "latticelab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "latticelab/error.hpp"

namespace latticelab {

  namespace {

    std::string join_names(std::vector<std::string> const& parts,
                           std::string_view         sep) {
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) {
          out += sep;
        }
        out += parts[i];
      }
      return out;
    }

  }  // namespace

  Lattice Lattice::from_spec(LatticeSpec const& spec, Limits const& limits) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < spec.elements.size(); ++i) {
      if (!index.emplace(spec.elements[i], i).second) {
        throw Error(ErrorCode::invalid_input,
                    "duplicate element name '" + spec.elements[i] + "'");
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> relation;
    relation.reserve(spec.covers.size());
    for (auto const& [lo, hi] : spec.covers) {
      auto a = index.find(lo);
      auto b = index.find(hi);
      if (a == index.end() || b == index.end()) {
        throw Error(ErrorCode::invalid_input,
                    "cover (" + lo + ", " + hi + ") names an undeclared element");
      }
      if (a->second == b->second) {
        throw Error(ErrorCode::not_a_poset, "cover (" + lo + ", " + hi + ") is a loop");
      }
      relation.emplace_back(a->second, b->second);
    }
    return from_relation(spec.name, spec.elements, relation, limits);
  }

  Lattice Lattice::from_relation(
      std::string                                          name,
      std::vector<std::string>                             names,
      std::span<std::pair<std::size_t, std::size_t> const> relation,
      Limits const&                                        limits) {
    std::size_t const n = names.size();
    if (n == 0) {
      throw Error(ErrorCode::empty, "lattice '" + name + "' has no elements");
    }
    if (n > limits.max_lattice) {
      throw Error(ErrorCode::size_limit_exceeded,
                  "lattice '" + name + "' has " + std::to_string(n)
                      + " elements, limit is " + std::to_string(limits.max_lattice));
    }
    {
      std::unordered_set<std::string> seen;
      for (auto const& s : names) {
        if (!seen.insert(s).second) {
          throw Error(ErrorCode::invalid_input, "duplicate element name '" + s + "'");
        }
      }
    }

    // reflexive-transitive closure
    std::vector<char> raw(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      raw[i * n + i] = 1;
    }
    for (auto [a, b] : relation) {
      if (a >= n || b >= n) {
        throw Error(ErrorCode::invalid_input, "relation index out of range");
      }
      raw[a * n + b] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (raw[i * n + k] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          raw[i * n + j] |= raw[k * n + j];
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (raw[i * n + j] && raw[j * n + i]) {
          throw Error(ErrorCode::not_a_poset,
                      "'" + names[i] + "' and '" + names[j] + "' lie on a cycle");
        }
      }
    }

    // rank = longest chain below; the count of strict lower bounds is a
    // linear extension, so process in that order
    std::vector<std::size_t> below(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        below[i] += (j != i && raw[j * n + i]) ? 1 : 0;
      }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](auto x, auto y) { return below[x] < below[y]; });
    std::vector<std::size_t> raw_rank(n, 0);
    for (std::size_t y : order) {
      for (std::size_t x = 0; x < n; ++x) {
        if (x != y && raw[x * n + y]) {
          raw_rank[y] = std::max(raw_rank[y], raw_rank[x] + 1);
        }
      }
    }

    std::vector<std::size_t> perm(n);  // perm[new] = old
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](auto x, auto y) {
      if (raw_rank[x] != raw_rank[y]) {
        return raw_rank[x] < raw_rank[y];
      }
      return names[x] < names[y];
    });

    Lattice L;
    L._name = std::move(name);
    L._names.resize(n);
    L._rank.resize(n);
    L._leq.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      L._names[i] = names[perm[i]];
      L._rank[i]  = raw_rank[perm[i]];
      for (std::size_t j = 0; j < n; ++j) {
        L._leq[i * n + j] = raw[perm[i] * n + perm[j]];
      }
    }

    // canonical order is a linear extension: the least upper bound, when
    // it exists, is the first upper bound met in index order
    L._join.resize(n * n);
    L._meet.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        std::optional<std::size_t> lub;
        for (std::size_t z = 0; z < n; ++z) {
          if (L._leq[a * n + z] && L._leq[b * n + z]) {
            lub = z;
            break;
          }
        }
        std::optional<std::size_t> glb;
        for (std::size_t z = n; z-- > 0;) {
          if (L._leq[z * n + a] && L._leq[z * n + b]) {
            glb = z;
            break;
          }
        }
        bool ok = lub.has_value() && glb.has_value();
        for (std::size_t z = 0; ok && z < n; ++z) {
          if (L._leq[a * n + z] && L._leq[b * n + z] && !L._leq[*lub * n + z]) {
            ok = false;
          }
          if (L._leq[z * n + a] && L._leq[z * n + b] && !L._leq[z * n + *glb]) {
            ok = false;
          }
        }
        if (!ok) {
          throw Error(ErrorCode::not_a_lattice,
                      "'" + L._names[a] + "' and '" + L._names[b]
                          + "' lack a least upper or greatest lower bound");
        }
        L._join[a * n + b] = L._join[b * n + a] = ElementId(*lub);
        L._meet[a * n + b] = L._meet[b * n + a] = ElementId(*glb);
      }
    }
    L._bottom = ElementId(0);
    L._top    = ElementId(n - 1);

    L._up.assign(n, {});
    L._down.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y || !L._leq[x * n + y]) {
          continue;
        }
        bool cover = true;
        for (std::size_t z = 0; z < n && cover; ++z) {
          if (z != x && z != y && L._leq[x * n + z] && L._leq[z * n + y]) {
            cover = false;
          }
        }
        if (cover) {
          L._covers.emplace_back(ElementId(x), ElementId(y));
          L._up[x].push_back(ElementId(y));
          L._down[y].push_back(ElementId(x));
        }
      }
    }
    L._modular = is_modular(L).holds;
    return L;
  }

  std::optional<ElementId> Lattice::find(std::string_view name) const {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (_names[i] == name) {
        return ElementId(i);
      }
    }
    return std::nullopt;
  }

  ElementId Lattice::at(std::string_view name) const {
    if (auto x = find(name)) {
      return *x;
    }
    throw Error(ErrorCode::invalid_input,
                "lattice '" + _name + "' has no element '" + std::string(name) + "'");
  }

  ElementId Lattice::join_all(std::span<ElementId const> xs) const noexcept {
    ElementId acc = _bottom;
    for (auto x : xs) {
      acc = join(acc, x);
    }
    return acc;
  }

  ElementId Lattice::meet_all(std::span<ElementId const> xs) const noexcept {
    ElementId acc = _top;
    for (auto x : xs) {
      acc = meet(acc, x);
    }
    return acc;
  }

  std::vector<ElementId> Lattice::elements() const {
    std::vector<ElementId> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      out.emplace_back(i);
    }
    return out;
  }

  LatticeSpec Lattice::to_spec() const {
    LatticeSpec spec{_name, _names, {}};
    for (auto [a, b] : _covers) {
      spec.covers.emplace_back(_names[a.index()], _names[b.index()]);
    }
    return spec;
  }

  Lattice Lattice::renamed(std::string name) const {
    Lattice copy = *this;
    copy._name   = std::move(name);
    return copy;
  }

  LatticePtr build_lattice(LatticeSpec const& spec, Limits const& limits) {
    return share(Lattice::from_spec(spec, limits));
  }

  ////////////////////////////////////////////////////////////////////////
  // IntervalView
  ////////////////////////////////////////////////////////////////////////

  IntervalView::IntervalView(LatticePtr parent, ElementId lo, ElementId hi)
      : _parent(std::move(parent)), _lo(lo), _hi(hi) {
    Lattice const& P = *_parent;
    if (!P.leq(lo, hi)) {
      throw Error(ErrorCode::not_comparable,
                  "'" + P.element_name(lo) + "' is not below '" + P.element_name(hi)
                      + "'");
    }
    std::vector<ElementId> raw;
    for (std::size_t i = 0; i < P.size(); ++i) {
      ElementId x(i);
      if (P.leq(lo, x) && P.leq(x, hi)) {
        raw.push_back(x);
      }
    }
    std::vector<std::string>                         names;
    std::vector<std::pair<std::size_t, std::size_t>> relation;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      names.push_back(P.element_name(raw[i]));
      for (ElementId up : P.upper_covers(raw[i])) {
        auto it = std::find(raw.begin(), raw.end(), up);
        if (it != raw.end()) {
          relation.emplace_back(i, static_cast<std::size_t>(it - raw.begin()));
        }
      }
    }
    Limits unlimited;
    unlimited.max_lattice = std::max(unlimited.max_lattice, P.size());
    _local = share(Lattice::from_relation(
        "[" + P.element_name(lo) + "," + P.element_name(hi) + "]",
        std::move(names), relation, unlimited));
    _local_of.assign(P.size(), -1);
    _members.resize(raw.size());
    for (ElementId x : raw) {
      ElementId local = _local->at(P.element_name(x));
      _members[local.index()] = x;
      _local_of[x.index()]    = static_cast<std::int32_t>(local.index());
    }
  }

  bool IntervalView::contains(ElementId parent_id) const noexcept {
    return parent_id.index() < _local_of.size() && _local_of[parent_id.index()] >= 0;
  }

  ElementId IntervalView::to_local(ElementId parent_id) const {
    if (!contains(parent_id)) {
      throw Error(ErrorCode::invalid_input,
                  "element outside interval " + _local->name());
    }
    return ElementId(static_cast<std::size_t>(_local_of[parent_id.index()]));
  }

  IntervalView interval(LatticePtr const& lattice, ElementId lo, ElementId hi) {
    return IntervalView(lattice, lo, hi);
  }

  ////////////////////////////////////////////////////////////////////////
  // Structural predicates
  ////////////////////////////////////////////////////////////////////////

  Verdict is_modular(Lattice const& L) {
    auto const n = L.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ElementId a(i), b(j);
        if (i == j || !L.leq(a, b)) {
          continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
          ElementId c(k);
          if (L.join(a, L.meet(c, b)) != L.meet(L.join(a, c), b)) {
            return make_verdict("modular", false,
                                Json{{"a", L.element_name(a)},
                                     {"b", L.element_name(b)},
                                     {"c", L.element_name(c)}});
          }
        }
      }
    }
    return make_verdict("modular", true);
  }

  bool is_distributive(Lattice const& L) {
    auto const n = L.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          ElementId a(i), b(j), c(k);
          if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<ElementId> complements_within(Lattice const& L, ElementId a,
                                            ElementId top) {
    std::vector<ElementId> out;
    for (std::size_t i = 0; i < L.size(); ++i) {
      ElementId b(i);
      if (L.leq(b, top) && L.meet(a, b) == L.bottom() && L.join(a, b) == top) {
        out.push_back(b);
      }
    }
    return out;
  }

  std::vector<ElementId> complements_of(Lattice const& L, ElementId a) {
    return complements_within(L, a, L.top());
  }

  bool is_complemented_element(Lattice const& L, ElementId a) {
    for (std::size_t i = 0; i < L.size(); ++i) {
      ElementId b(i);
      if (L.meet(a, b) == L.bottom() && L.join(a, b) == L.top()) {
        return true;
      }
    }
    return false;
  }

  std::vector<ElementId> complemented_elements(Lattice const& L) {
    std::vector<ElementId> out;
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (is_complemented_element(L, ElementId(i))) {
        out.emplace_back(i);
      }
    }
    return out;
  }

  bool is_complemented(Lattice const& L) {
    return complemented_elements(L).size() == L.size();
  }

  bool is_essential_in(Lattice const& L, ElementId a, ElementId lo, ElementId hi) {
    for (std::size_t i = 0; i < L.size(); ++i) {
      ElementId b(i);
      if (b != lo && L.leq(lo, b) && L.leq(b, hi) && L.meet(a, b) == lo) {
        return false;
      }
    }
    return true;
  }

  bool is_superfluous_in(Lattice const& L, ElementId a, ElementId lo, ElementId hi) {
    for (std::size_t i = 0; i < L.size(); ++i) {
      ElementId b(i);
      if (b != hi && L.leq(lo, b) && L.leq(b, hi) && L.join(a, b) == hi) {
        return false;
      }
    }
    return true;
  }

  bool is_essential(Lattice const& L, ElementId a) {
    return is_essential_in(L, a, L.bottom(), L.top());
  }

  bool is_superfluous(Lattice const& L, ElementId a) {
    return is_superfluous_in(L, a, L.bottom(), L.top());
  }

  bool is_essential(IntervalView const& scope, ElementId a) {
    return is_essential_in(scope.parent(), a, scope.lo(), scope.hi());
  }

  bool is_superfluous(IntervalView const& scope, ElementId a) {
    return is_superfluous_in(scope.parent(), a, scope.lo(), scope.hi());
  }

  std::pair<ElementId, ElementId> socle_radical(Lattice const& L) {
    return {L.join_all(L.atoms()), L.meet_all(L.coatoms())};
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  ElementId ProductLattice::element_of(std::span<ElementId const> coords) const {
    for (std::size_t x = 0; x < coordinates.size(); ++x) {
      if (std::equal(coords.begin(), coords.end(), coordinates[x].begin(),
                     coordinates[x].end())) {
        return ElementId(x);
      }
    }
    throw Error(ErrorCode::invalid_input, "coordinates do not name a product element");
  }

  ProductLattice direct_product(std::vector<LatticePtr> const& factors,
                                Limits const&                  limits) {
    if (factors.empty()) {
      throw Error(ErrorCode::empty, "direct product of no factors");
    }
    std::size_t total = 1;
    for (auto const& f : factors) {
      total *= f->size();
      if (total > limits.max_lattice) {
        throw Error(ErrorCode::size_limit_exceeded,
                    "product exceeds " + std::to_string(limits.max_lattice)
                        + " elements");
      }
    }
    std::size_t const             k = factors.size();
    std::vector<std::vector<ElementId>> tuples(total, std::vector<ElementId>(k));
    for (std::size_t t = 0; t < total; ++t) {
      std::size_t rest = t;
      for (std::size_t i = k; i-- > 0;) {
        tuples[t][i] = ElementId(rest % factors[i]->size());
        rest /= factors[i]->size();
      }
    }
    std::vector<std::string> names(total);
    std::vector<std::string> factor_names;
    for (auto const& f : factors) {
      factor_names.push_back(f->name());
    }
    for (std::size_t t = 0; t < total; ++t) {
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < k; ++i) {
        parts.push_back(factors[i]->element_name(tuples[t][i]));
      }
      names[t] = "(" + join_names(parts, ",") + ")";
    }
    // covers of the product: raise exactly one coordinate along a cover
    std::vector<std::pair<std::size_t, std::size_t>> relation;
    for (std::size_t t = 0; t < total; ++t) {
      std::size_t stride = 1;
      for (std::size_t i = k; i-- > 0;) {
        for (ElementId up : factors[i]->upper_covers(tuples[t][i])) {
          std::size_t u = t + (up.index() - tuples[t][i].index()) * stride;
          relation.emplace_back(t, u);
        }
        stride *= factors[i]->size();
      }
    }
    Limits relaxed      = limits;
    relaxed.max_lattice = std::max(relaxed.max_lattice, total);
    ProductLattice out;
    out.factors = factors;
    out.lattice = share(Lattice::from_relation(join_names(factor_names, "x"), names,
                                               relation, relaxed));
    out.coordinates.resize(total);
    for (std::size_t t = 0; t < total; ++t) {
      out.coordinates[out.lattice->at(names[t]).index()] = tuples[t];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition
  ////////////////////////////////////////////////////////////////////////

  bool is_independent(Lattice const& L, std::span<ElementId const> family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      ElementId rest = L.bottom();
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (j != i) {
          rest = L.join(rest, family[j]);
        }
      }
      if (L.meet(family[i], rest) != L.bottom()) {
        return false;
      }
    }
    return true;
  }

  namespace {

    void split(Lattice const& L, ElementId t, std::vector<ElementId>& out) {
      // smallest nontrivial a in [0,t] with a relative complement
      for (std::size_t i = 0; i < L.size(); ++i) {
        ElementId a(i);
        if (a == L.bottom() || a == t || !L.leq(a, t)) {
          continue;
        }
        auto comps = complements_within(L, a, t);
        if (!comps.empty()) {
          split(L, a, out);
          split(L, comps.front(), out);
          return;
        }
      }
      out.push_back(t);
    }

  }  // namespace

  Decomposition decompose(Lattice const& L) {
    if (!is_modular(L).holds) {
      throw Error(ErrorCode::not_modular, "decompose requires a modular lattice");
    }
    Decomposition d;
    if (L.size() == 1) {
      d.independent = true;
      return d;
    }
    split(L, L.top(), d.blocks);
    d.independent = is_independent(L, d.blocks) && L.join_all(d.blocks) == L.top();
    return d;
  }

}  // namespace latticelab
