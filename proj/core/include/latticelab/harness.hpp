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


/**
 * @file harness.hpp
 *
 * Conformance registry: named theorem checks run over a corpus of small
 * modular lattices, plus the seeded random generator that feeds it.
 */

#ifndef LATTICELAB_HARNESS_HPP
#define LATTICELAB_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latticelab/limits.hpp"
#include "latticelab/properties.hpp"

namespace latticelab {

  //! Which monoid the monoid-relative checks quantify over.
  enum class HarnessMonoid { full, projections };

  std::string_view to_string(HarnessMonoid kind) noexcept;
  HarnessMonoid    harness_monoid_from_string(std::string_view name);

  enum class CheckStatus { pass, fail, skipped };

  struct CheckOutcome {
    CheckStatus status = CheckStatus::pass;
    Json        detail;

    static CheckOutcome pass() {
      return {CheckStatus::pass, Json()};
    }
    static CheckOutcome fail(Json detail) {
      return {CheckStatus::fail, std::move(detail)};
    }
    static CheckOutcome skip(std::string reason) {
      return {CheckStatus::skipped, Json{{"reason", std::move(reason)}}};
    }
  };

  //! Per-lattice state shared by all checks; monoids and interval verdicts
  //! are built on first use.
  class CheckContext {
   public:
    CheckContext(LatticePtr lattice, HarnessMonoid monoid, Limits limits);

    [[nodiscard]] Lattice const& lattice() const noexcept {
      return *_lattice;
    }
    [[nodiscard]] LatticePtr const& lattice_ptr() const noexcept {
      return _lattice;
    }
    [[nodiscard]] Limits const& limits() const noexcept {
      return _limits;
    }
    [[nodiscard]] HarnessMonoid monoid_kind() const noexcept {
      return _kind;
    }

    //! The configured monoid.
    EndoMonoid const& monoid();
    //! Every linear endomorphism.
    EndoMonoid const& full();
    //! Memoised verdict of check_rickart_family on the configured monoid.
    bool holds(RickartKind kind);
    //! Whether [0, top] is Rickart for its own full monoid.
    bool lower_interval_rickart(ElementId top);
    //! Every independent family with join equal to the top, in DFS order.
    std::vector<std::vector<ElementId>> const& decompositions();

   private:
    LatticePtr                                       _lattice;
    HarnessMonoid                                    _kind;
    Limits                                           _limits;
    std::optional<EndoMonoid>                        _monoid;
    std::optional<EndoMonoid>                        _full;
    std::map<int, bool>                              _verdicts;
    std::map<std::size_t, bool>                      _interval_rickart;
    std::optional<std::vector<std::vector<ElementId>>> _families;
  };

  struct TheoremCheck {
    std::string                                 name;
    std::string                                 statement;
    std::function<CheckOutcome(CheckContext&)> run;
  };

  //! Every registered check, in a fixed order.
  std::vector<TheoremCheck> const& check_registry();
  //! Throws InvalidInput(unknown_check) for unknown names.
  TheoremCheck const& find_check(std::string_view name);
  std::vector<std::string> check_names();

  //! Rejection sampler over graded posets: the size n in [1, max_size] is
  //! drawn with weight n, the middle points are dealt into random levels with
  //! random covers between neighbouring levels, and the draw is repeated until
  //! it is a modular lattice. Not uniform over isomorphism classes. Throws
  //! GiveUp after a bounded number of draws.
  LatticePtr random_modular_lattice(std::uint64_t seed, std::size_t max_size,
                                    Limits const& limits = Limits{});

  //! Seed of the i-th lattice in a random corpus.
  std::uint64_t corpus_seed(std::uint64_t base, std::size_t index) noexcept;
  std::vector<LatticePtr> random_corpus(std::uint64_t seed, std::size_t count,
                                        std::size_t max_size, Limits const& limits = Limits{});
  //! The modular built-in fixtures (the pentagon is left out).
  std::vector<LatticePtr> fixture_corpus();

  struct ConformanceOptions {
    std::uint64_t seed    = 0;
    HarnessMonoid monoid  = HarnessMonoid::full;
    unsigned      threads = 1;
    Limits        limits;
  };

  struct CheckTally {
    std::string name;
    std::size_t passed  = 0;
    std::size_t failed  = 0;
    std::size_t skipped = 0;
  };

  struct Counterexample {
    std::string check;
    Json        lattice;
    Json        detail;
  };

  struct CorpusReport {
    static constexpr std::string_view schema = "latticelab.conformance/1";

    std::uint64_t               seed = 0;
    HarnessMonoid               monoid = HarnessMonoid::full;
    std::vector<std::string>    lattices;
    std::vector<CheckTally>     tallies;
    std::vector<Counterexample> failures;

    [[nodiscard]] bool ok() const noexcept {
      return failures.empty();
    }
  };

  //! Runs every named check on every lattice. Work is split across threads
  //! by lattice and merged in corpus order, so the report does not depend on
  //! the thread count. Non-modular lattices are skipped by every check.
  CorpusReport run_conformance(std::span<LatticePtr const> corpus,
                               std::span<std::string const> checks,
                               ConformanceOptions const&    options);

  Json to_json(CorpusReport const& report);

}  // namespace latticelab

#endif  // LATTICELAB_HARNESS_HPP
