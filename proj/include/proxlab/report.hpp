#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "proxlab/symset.hpp"

namespace proxlab {

enum class Status { HoldsExhaustive, HoldsOnFamily, Counterexample, Inconclusive, Refused };

constexpr std::string_view status_name(Status s) {
  switch (s) {
    case Status::HoldsExhaustive: return "holds-exhaustive";
    case Status::HoldsOnFamily: return "holds-on-family";
    case Status::Counterexample: return "counterexample";
    case Status::Inconclusive: return "inconclusive";
    case Status::Refused: return "refused";
  }
  return "?";
}

constexpr bool holds(Status s) { return s == Status::HoldsExhaustive || s == Status::HoldsOnFamily; }

struct Witness {
  std::string kind;       // "set", "pair", "sequence", "map", "note", "evidence", ...
  std::string rendering;
  bool operator==(const Witness&) const = default;
};

/// Outcome of one law check. `sets` keeps the raw witness sets so a
/// counterexample can be replayed with an explicit strategy.
struct LawReport {
  std::string law;
  std::vector<std::string> subjects;
  Status status = Status::Inconclusive;
  std::vector<Witness> witnesses;
  std::uint64_t cases_checked = 0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  std::vector<SymSet> witness_sets;

  void note(std::string text) { witnesses.push_back({"note", std::move(text)}); }
  void evidence(std::string text) { witnesses.push_back({"evidence", std::move(text)}); }
  void witness_set(const std::string& role, const SymSet& s) {
    witnesses.push_back({"set", role + " = " + s.render()});
    witness_sets.push_back(s);
  }
};

enum class StrategyKind { Exhaustive, Family, Sampled, Explicit };

struct Strategy {
  StrategyKind kind = StrategyKind::Family;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::size_t depth = 16;
  bool first_counterexample = false;
  std::vector<SymSet> explicit_sets;

  static Strategy of_kind(StrategyKind k) {
    Strategy s;
    s.kind = k;
    return s;
  }
  static Strategy exhaustive() { return of_kind(StrategyKind::Exhaustive); }
  static Strategy family() { return of_kind(StrategyKind::Family); }
  static Strategy sampled(std::uint64_t seed, std::size_t n) {
    auto s = of_kind(StrategyKind::Sampled);
    s.seed = seed;
    s.samples = n;
    return s;
  }
  static Strategy on_witnesses(std::vector<SymSet> sets) {
    auto s = of_kind(StrategyKind::Explicit);
    s.explicit_sets = std::move(sets);
    return s;
  }

  /// Default: exhaustive on finite universes, canonical family otherwise.
  static Strategy for_universe(const Universe& u) { return u.is_finite() ? exhaustive() : family(); }

  Status success() const { return kind == StrategyKind::Exhaustive ? Status::HoldsExhaustive : Status::HoldsOnFamily; }
};

}  // namespace proxlab
