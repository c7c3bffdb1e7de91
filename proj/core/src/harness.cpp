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


#include "latticelab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "latticelab/error.hpp"
#include "latticelab/fixtures.hpp"
#include "latticelab/lattice_io.hpp"

namespace latticelab {

  std::string_view to_string(HarnessMonoid kind) noexcept {
    return kind == HarnessMonoid::full ? "full" : "projections";
  }

  HarnessMonoid harness_monoid_from_string(std::string_view name) {
    if (name == "full") {
      return HarnessMonoid::full;
    }
    if (name == "projections") {
      return HarnessMonoid::projections;
    }
    throw Error(ErrorCode::invalid_input,
                "harness monoid must be 'full' or 'projections', got '" + std::string(name)
                    + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // CheckContext
  ////////////////////////////////////////////////////////////////////////

  CheckContext::CheckContext(LatticePtr lattice, HarnessMonoid monoid, Limits limits)
      : _lattice(std::move(lattice)), _kind(monoid), _limits(limits) {}

  EndoMonoid const& CheckContext::full() {
    if (!_full) {
      _full.emplace(full_monoid(_lattice, _limits));
    }
    return *_full;
  }

  EndoMonoid const& CheckContext::monoid() {
    if (_kind == HarnessMonoid::full) {
      return full();
    }
    if (!_monoid) {
      _monoid.emplace(build_monoid(_lattice, MonoidSpec::generated({}, true), _limits));
    }
    return *_monoid;
  }

  bool CheckContext::holds(RickartKind kind) {
    auto key = static_cast<int>(kind);
    auto it  = _verdicts.find(key);
    if (it == _verdicts.end()) {
      it = _verdicts.emplace(key, check_rickart_family(monoid(), kind).holds).first;
    }
    return it->second;
  }

  bool CheckContext::lower_interval_rickart(ElementId top) {
    auto it = _interval_rickart.find(top.index());
    if (it == _interval_rickart.end()) {
      auto view = interval(_lattice, _lattice->bottom(), top);
      bool ok   = check_cross_rickart(view.lattice_ptr(), view.lattice_ptr(), _limits).holds;
      it        = _interval_rickart.emplace(top.index(), ok).first;
    }
    return it->second;
  }

  std::vector<std::vector<ElementId>> const& CheckContext::decompositions() {
    if (_families) {
      return *_families;
    }
    Lattice const&                      L = *_lattice;
    std::vector<std::vector<ElementId>> out;
    std::vector<ElementId>              family;
    // elements in index order; a family is extended only while it stays
    // independent, which in a modular lattice is tested incrementally
    auto dfs = [&](auto&& self, std::size_t next, ElementId joined) -> void {
      if (joined == L.top()) {
        out.push_back(family);
        return;
      }
      for (std::size_t i = next; i < L.size(); ++i) {
        ElementId a(i);
        if (a == L.bottom() || L.meet(a, joined) != L.bottom()) {
          continue;
        }
        family.push_back(a);
        self(self, i + 1, L.join(joined, a));
        family.pop_back();
      }
    };
    dfs(dfs, 0, L.bottom());
    _families = std::move(out);
    return *_families;
  }

  ////////////////////////////////////////////////////////////////////////
  // Registry lookup
  ////////////////////////////////////////////////////////////////////////

  TheoremCheck const& find_check(std::string_view name) {
    auto const& registry = check_registry();
    auto        it       = std::find_if(registry.begin(), registry.end(),
                                        [&](TheoremCheck const& c) { return c.name == name; });
    if (it == registry.end()) {
      throw Error(ErrorCode::unknown_check, "no check named '" + std::string(name) + "'");
    }
    return *it;
  }

  std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (auto const& c : check_registry()) {
      out.push_back(c.name);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random lattices
  ////////////////////////////////////////////////////////////////////////

  namespace {

    constexpr std::size_t max_draws = 20000;

    std::optional<Lattice> draw(std::mt19937_64& rng, std::size_t n, std::string const& name,
                                Limits const& limits) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "0" : i + 1 == n ? "1" : "x" + std::to_string(i));
      }
      std::vector<std::pair<std::size_t, std::size_t>> relation;
      if (n <= 2) {
        if (n == 2) {
          relation.emplace_back(0, 1);
        }
        return Lattice::from_relation(name, names, relation, limits);
      }
      // Modular lattices are graded, so the middle points are dealt into
      // levels first. Each point then picks one to three lower neighbours on
      // the level below, and every point left without an upper neighbour is
      // attached to a random point above it.
      std::size_t const                          middle = n - 2;
      std::uniform_int_distribution<std::size_t> height_dist(1, middle);
      std::size_t const                          height = height_dist(rng);
      std::vector<std::size_t>                   width(height, 1);
      std::uniform_int_distribution<std::size_t> level_dist(0, height - 1);
      for (std::size_t extra = middle - height; extra > 0; --extra) {
        ++width[level_dist(rng)];
      }
      std::vector<std::vector<std::size_t>> levels{{0}};
      std::size_t                           next = 1;
      for (std::size_t w : width) {
        levels.emplace_back();
        for (std::size_t j = 0; j < w; ++j) {
          levels.back().push_back(next++);
        }
      }
      levels.push_back({n - 1});

      std::discrete_distribution<int> fan{0.0, 0.55, 0.35, 0.10};
      for (std::size_t l = 1; l < levels.size(); ++l) {
        auto const&            below = levels[l - 1];
        std::vector<bool>      covered(below.size(), false);
        for (std::size_t p : levels[l]) {
          std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(fan(rng)),
                                                   below.size());
          if (l + 1 == levels.size()) {
            want = below.size();
          }
          std::vector<std::size_t> pool(below.size());
          for (std::size_t j = 0; j < pool.size(); ++j) {
            pool[j] = j;
          }
          std::shuffle(pool.begin(), pool.end(), rng);
          for (std::size_t j = 0; j < want; ++j) {
            relation.emplace_back(below[pool[j]], p);
            covered[pool[j]] = true;
          }
        }
        std::uniform_int_distribution<std::size_t> pick(0, levels[l].size() - 1);
        for (std::size_t j = 0; j < below.size(); ++j) {
          if (!covered[j]) {
            relation.emplace_back(below[j], levels[l][pick(rng)]);
          }
        }
      }
      try {
        Lattice L = Lattice::from_relation(name, names, relation, limits);
        if (L.modular()) {
          return L;
        }
      } catch (Error const& e) {
        if (e.code() != ErrorCode::not_a_lattice) {
          throw;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  LatticePtr random_modular_lattice(std::uint64_t seed, std::size_t max_size,
                                    Limits const& limits) {
    if (max_size == 0) {
      throw Error(ErrorCode::invalid_input, "max_size must be positive");
    }
    if (max_size > limits.max_lattice) {
      throw Error(ErrorCode::size_limit_exceeded,
                  "max_size " + std::to_string(max_size) + " exceeds the lattice cap "
                      + std::to_string(limits.max_lattice));
    }
    std::mt19937_64                            rng(seed);
    // sizes weighted by n, so small degenerate lattices do not dominate
    std::vector<double> weights(max_size);
    for (std::size_t i = 0; i < max_size; ++i) {
      weights[i] = static_cast<double>(i + 1);
    }
    std::discrete_distribution<std::size_t> size_dist(weights.begin(), weights.end());
    std::size_t const                       n    = size_dist(rng) + 1;
    std::string const                          name = "random-" + std::to_string(seed);
    for (std::size_t attempt = 0; attempt < max_draws; ++attempt) {
      if (auto L = draw(rng, n, name, limits)) {
        return share(std::move(*L));
      }
    }
    throw Error(ErrorCode::give_up, "no modular lattice on " + std::to_string(n)
                                        + " points after " + std::to_string(max_draws)
                                        + " draws (seed " + std::to_string(seed) + ")");
  }

  std::uint64_t corpus_seed(std::uint64_t base, std::size_t index) noexcept {
    // splitmix64 finaliser, so neighbouring indices get unrelated streams
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::vector<LatticePtr> random_corpus(std::uint64_t seed, std::size_t count,
                                        std::size_t max_size, Limits const& limits) {
    std::vector<LatticePtr> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(random_modular_lattice(corpus_seed(seed, i), max_size, limits));
    }
    return out;
  }

  std::vector<LatticePtr> fixture_corpus() {
    std::vector<LatticePtr> out;
    for (auto const& name : fixture_names()) {
      auto L = fixture(name);
      if (L->modular()) {
        out.push_back(std::move(L));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Runner
  ////////////////////////////////////////////////////////////////////////

  namespace {

    CheckOutcome run_guarded(TheoremCheck const& check, CheckContext& ctx) {
      if (!ctx.lattice().modular()) {
        return CheckOutcome::skip("lattice is not modular");
      }
      try {
        return check.run(ctx);
      } catch (Error const& e) {
        if (e.code() == ErrorCode::size_limit_exceeded) {
          return CheckOutcome::skip(e.what());
        }
        return CheckOutcome::fail(Json{{"error", e.what()}});
      } catch (std::exception const& e) {
        return CheckOutcome::fail(Json{{"error", e.what()}});
      }
    }

  }  // namespace

  CorpusReport run_conformance(std::span<LatticePtr const>  corpus,
                               std::span<std::string const> checks,
                               ConformanceOptions const&    options) {
    std::vector<TheoremCheck const*> selected;
    for (auto const& name : checks) {
      selected.push_back(&find_check(name));
    }

    // outcomes[lattice][check]
    std::vector<std::vector<CheckOutcome>> outcomes(corpus.size());
    std::atomic<std::size_t>               cursor{0};
    auto worker = [&] {
      for (std::size_t i = cursor++; i < corpus.size(); i = cursor++) {
        CheckContext ctx(corpus[i], options.monoid, options.limits);
        outcomes[i].reserve(selected.size());
        for (auto const* check : selected) {
          outcomes[i].push_back(run_guarded(*check, ctx));
        }
      }
    };
    unsigned const threads =
        std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(corpus.size())));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
      }
    }

    CorpusReport report;
    report.seed   = options.seed;
    report.monoid = options.monoid;
    for (auto const& L : corpus) {
      report.lattices.push_back(L->name());
    }
    for (auto const* check : selected) {
      report.tallies.push_back(CheckTally{check->name});
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t c = 0; c < selected.size(); ++c) {
        auto& tally   = report.tallies[c];
        auto& outcome = outcomes[i][c];
        switch (outcome.status) {
          case CheckStatus::pass:
            ++tally.passed;
            break;
          case CheckStatus::skipped:
            ++tally.skipped;
            break;
          case CheckStatus::fail:
            ++tally.failed;
            report.failures.push_back(Counterexample{selected[c]->name,
                                                     lattice_to_json(*corpus[i]),
                                                     std::move(outcome.detail)});
            break;
        }
      }
    }
    return report;
  }

  Json to_json(CorpusReport const& report) {
    Json out;
    out["schema"]   = std::string(CorpusReport::schema);
    out["seed"]     = report.seed;
    out["monoid"]   = std::string(to_string(report.monoid));
    out["lattices"] = report.lattices.size();
    out["checks"]   = Json::array();
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (auto const& t : report.tallies) {
      out["checks"].push_back(
          Json{{"name", t.name}, {"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}});
      passed += t.passed;
      failed += t.failed;
      skipped += t.skipped;
    }
    out["totals"]   = Json{{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
    out["failures"] = Json::array();
    for (auto const& f : report.failures) {
      out["failures"].push_back(
          Json{{"check", f.check}, {"lattice", f.lattice}, {"counterexample", f.detail}});
    }
    return out;
  }

}  // namespace latticelab
