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

// Brute-force reference implementations used to cross-check the library.
// They read only the order relation and recompute everything else by
// exhaustive search, so they share no code paths with the tables under test.

#ifndef LATTICELAB_TESTS_ORACLES_HPP
#define LATTICELAB_TESTS_ORACLES_HPP

#include <latticelab/lattice.hpp>
#include <latticelab/linear_morphism.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

  using latticelab::ElementId;
  using latticelab::Lattice;
  using Table = std::vector<std::size_t>;

  inline bool leq(Lattice const& l, std::size_t a, std::size_t b) {
    return l.leq(ElementId(a), ElementId(b));
  }

  inline std::size_t join(Lattice const& l, std::size_t a, std::size_t b) {
    std::size_t const n = l.size();
    for (std::size_t u = 0; u < n; ++u) {
      if (!leq(l, a, u) || !leq(l, b, u)) {
        continue;
      }
      bool least = true;
      for (std::size_t v = 0; v < n && least; ++v) {
        if (leq(l, a, v) && leq(l, b, v) && !leq(l, u, v)) {
          least = false;
        }
      }
      if (least) {
        return u;
      }
    }
    return n;
  }

  inline std::size_t meet(Lattice const& l, std::size_t a, std::size_t b) {
    std::size_t const n = l.size();
    for (std::size_t u = 0; u < n; ++u) {
      if (!leq(l, u, a) || !leq(l, u, b)) {
        continue;
      }
      bool greatest = true;
      for (std::size_t v = 0; v < n && greatest; ++v) {
        if (leq(l, v, a) && leq(l, v, b) && !leq(l, v, u)) {
          greatest = false;
        }
      }
      if (greatest) {
        return u;
      }
    }
    return n;
  }

  inline std::size_t bottom(Lattice const& l) {
    for (std::size_t u = 0; u < l.size(); ++u) {
      bool all = true;
      for (std::size_t v = 0; v < l.size(); ++v) {
        all = all && leq(l, u, v);
      }
      if (all) {
        return u;
      }
    }
    return l.size();
  }

  inline std::size_t top(Lattice const& l) {
    for (std::size_t u = 0; u < l.size(); ++u) {
      bool all = true;
      for (std::size_t v = 0; v < l.size(); ++v) {
        all = all && leq(l, v, u);
      }
      if (all) {
        return u;
      }
    }
    return l.size();
  }

  inline bool modular(Lattice const& l) {
    std::size_t const n = l.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!leq(l, a, b)) {
          continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (join(l, a, meet(l, c, b)) != meet(l, join(l, a, c), b)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline std::set<std::size_t> complements(Lattice const& l, std::size_t a) {
    std::set<std::size_t> out;
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (meet(l, a, b) == bottom(l) && join(l, a, b) == top(l)) {
        out.insert(b);
      }
    }
    return out;
  }

  // Linearity straight from the definition: some k with f(x) = f(x v k)
  // everywhere, and f restricted to [k, 1] an order isomorphism onto
  // [0, f(1)].
  inline bool linear(Lattice const& dom, Lattice const& cod, Table const& f) {
    std::size_t const n = dom.size();
    std::size_t const m = cod.size();
    std::size_t const zero = bottom(cod);
    std::size_t const image_top = f[top(dom)];
    for (std::size_t k = 0; k < n; ++k) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        ok = f[x] == f[join(dom, x, k)];
      }
      if (!ok) {
        continue;
      }
      std::vector<std::size_t> upper;
      for (std::size_t x = 0; x < n; ++x) {
        if (leq(dom, k, x)) {
          upper.push_back(x);
        }
      }
      std::vector<std::size_t> lower;
      for (std::size_t y = 0; y < m; ++y) {
        if (leq(cod, zero, y) && leq(cod, y, image_top)) {
          lower.push_back(y);
        }
      }
      if (upper.size() != lower.size()) {
        continue;
      }
      std::set<std::size_t> hit;
      for (std::size_t x : upper) {
        hit.insert(f[x]);
      }
      if (hit != std::set<std::size_t>(lower.begin(), lower.end())) {
        continue;
      }
      for (std::size_t x : upper) {
        for (std::size_t y : upper) {
          ok = ok && (leq(dom, x, y) == leq(cod, f[x], f[y]));
        }
      }
      if (ok) {
        return true;
      }
    }
    return false;
  }

  // Every total map dom -> cod, in lexicographic order of the table.
  template <typename Visit>
  void for_each_map(std::size_t n, std::size_t m, Visit&& visit) {
    Table f(n, 0);
    while (true) {
      visit(static_cast<Table const&>(f));
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++f[i] < m) {
          break;
        }
        f[i] = 0;
        if (i == 0) {
          return;
        }
      }
      if (n == 0) {
        return;
      }
    }
  }

  struct LinearCount {
    std::size_t         candidates = 0;
    std::vector<Table>  linear;
  };

  inline LinearCount all_linear_maps(Lattice const& dom, Lattice const& cod) {
    LinearCount out;
    for_each_map(dom.size(), cod.size(), [&](Table const& f) {
      ++out.candidates;
      if (linear(dom, cod, f)) {
        out.linear.push_back(f);
      }
    });
    return out;
  }

  // Order automorphisms by running through every permutation.
  inline std::size_t automorphism_count(Lattice const& l) {
    std::vector<std::size_t> p(l.size());
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::size_t count = 0;
    do {
      bool ok = true;
      for (std::size_t a = 0; a < p.size() && ok; ++a) {
        for (std::size_t b = 0; b < p.size() && ok; ++b) {
          ok = leq(l, a, b) == leq(l, p[a], p[b]);
        }
      }
      count += ok ? 1 : 0;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
  }

  inline std::vector<std::size_t> as_indices(latticelab::MapTable const& table) {
    std::vector<std::size_t> out;
    out.reserve(table.size());
    for (ElementId x : table) {
      out.push_back(x.index());
    }
    return out;
  }

  // Z_{d1} x ... x Z_{dr}, elements as mixed-radix integers, first factor
  // most significant.
  struct Group {
    std::vector<std::size_t> factors;

    [[nodiscard]] std::size_t order() const {
      std::size_t o = 1;
      for (std::size_t d : factors) {
        o *= d;
      }
      return o;
    }

    [[nodiscard]] std::vector<std::size_t> digits(std::size_t a) const {
      std::vector<std::size_t> out(factors.size());
      for (std::size_t i = factors.size(); i-- > 0;) {
        out[i] = a % factors[i];
        a /= factors[i];
      }
      return out;
    }

    [[nodiscard]] std::size_t add(std::size_t a, std::size_t b) const {
      auto da = digits(a);
      auto db = digits(b);
      std::size_t out = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        out = out * factors[i] + (da[i] + db[i]) % factors[i];
      }
      return out;
    }
  };

  inline std::size_t endomorphism_count(Group const& g) {
    std::size_t const n = g.order();
    std::size_t count = 0;
    for_each_map(n, n, [&](Table const& f) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          ok = f[g.add(a, b)] == g.add(f[a], f[b]);
        }
      }
      count += ok ? 1 : 0;
    });
    return count;
  }

  // Subsets containing 0 and closed under addition (finite, so subgroups).
  inline std::size_t subgroup_count(Group const& g) {
    std::size_t const n = g.order();
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      if ((mask & 1U) == 0) {
        continue;
      }
      bool closed = true;
      for (std::size_t a = 0; a < n && closed; ++a) {
        for (std::size_t b = 0; b < n && closed; ++b) {
          if ((mask >> a & 1U) && (mask >> b & 1U)) {
            closed = (mask >> g.add(a, b) & 1U) != 0;
          }
        }
      }
      count += closed ? 1 : 0;
    }
    return count;
  }

}  // namespace oracle

#endif  // LATTICELAB_TESTS_ORACLES_HPP
