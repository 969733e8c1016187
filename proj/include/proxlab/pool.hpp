#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "proxlab/report.hpp"
#include "proxlab/symset.hpp"

namespace proxlab {

namespace detail {

inline void push_unique(std::vector<SymSet>& out, const SymSet& s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

inline std::vector<Rational> interval_grid() {
  return {Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4), Rational(1)};
}

}  // namespace detail

/// Residue patterns of period <= 4, one canonical representative each
/// (22 patterns including the empty set and Z).
inline std::vector<SymSet> periodic_bases(const Universe& u) {
  std::vector<SymSet> out;
  for (std::int64_t p = 1; p <= 4; ++p) {
    for (std::uint32_t bits = 0; bits < (1u << p); ++bits) {
      std::vector<std::int64_t> res;
      for (std::int64_t r = 0; r < p; ++r)
        if ((bits >> r) & 1u) res.push_back(r);
      detail::push_unique(out, SymSet::periodic(u, p, res));
    }
  }
  return out;
}

/// Canonical probe pool of a universe.
///
/// finite: every subset. integers: the 22 period-<=4 bases, each toggled on
/// ten exception sets drawn from {-2..2} (220 sets; doubled by the infinity
/// flag when present). unit_interval: single intervals over the grid
/// {0,1/4,1/3,1/2,2/3,3/4,1} with every endpoint flag, their complements and
/// two-piece unions with a gap (every third partner) until the pool holds
/// 240 sets.
inline constexpr std::size_t interval_pool_cap = 240;

inline std::vector<SymSet> canonical_pool(const Universe& u) {
  std::vector<SymSet> out;
  switch (u.kind) {
    case UniverseKind::Finite:
      return all_subsets(u);
    case UniverseKind::Integers: {
      static const std::vector<std::vector<std::int64_t>> toggles = {
          {}, {-2}, {-1}, {0}, {1}, {2}, {-1, 0}, {0, 1}, {-2, 2}, {-2, -1, 0, 1, 2}};
      for (const auto& base : periodic_bases(u)) {
        for (const auto& t : toggles) {
          std::vector<Point> pts(t.begin(), t.end());
          const auto toggled = SymSet::of(u, pts);
          const auto s = (base - toggled) | (toggled - base);
          detail::push_unique(out, s);
          if (u.with_infinity) detail::push_unique(out, s | singleton(u, Infinity{}));
        }
      }
      return out;
    }
    case UniverseKind::UnitInterval: {
      const auto grid = detail::interval_grid();
      std::vector<SymSet> singles;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        detail::push_unique(singles, SymSet::closed(grid[i], grid[i]));
        for (std::size_t j = i + 1; j < grid.size(); ++j)
          for (int flags = 0; flags < 4; ++flags)
            detail::push_unique(singles,
                                SymSet::intervals({Interval{grid[i], grid[j], (flags & 1) != 0, (flags & 2) != 0}}));
      }
      detail::push_unique(out, SymSet::empty(u));
      for (const auto& s : singles) detail::push_unique(out, s);
      for (const auto& s : singles) detail::push_unique(out, s.complement());
      // two-piece unions with a gap, in a fixed order, up to the cap
      for (std::size_t i = 0; i < singles.size(); ++i)
        for (std::size_t j = i + 1; j < singles.size() && out.size() < interval_pool_cap; j += 3) {
          const auto& a = singles[i];
          const auto& b = singles[j];
          if (a.is_empty() || b.is_empty() || distance(a, b) == Rational(0)) continue;
          detail::push_unique(out, a | b);
        }
      return out;
    }
  }
  return out;
}

/// Random symbolic set; deterministic for a given engine state.
inline SymSet random_set(const Universe& u, std::mt19937_64& rng) {
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  switch (u.kind) {
    case UniverseKind::Finite:
      return SymSet::from_mask(u, rng());
    case UniverseKind::Integers: {
      const auto p = uniform(1, 6);
      std::vector<std::int64_t> res;
      for (std::int64_t r = 0; r < p; ++r)
        if (uniform(0, 1)) res.push_back(r);
      std::vector<Point> add, rem;
      const auto nex = uniform(0, 4);
      for (std::int64_t i = 0; i < nex; ++i) (uniform(0, 1) ? add : rem).emplace_back(uniform(-8, 8));
      if (u.with_infinity && uniform(0, 1)) add.emplace_back(Infinity{});
      return SymSet::periodic(u, p, res, add, rem);
    }
    case UniverseKind::UnitInterval: {
      std::vector<Interval> parts;
      const auto n = uniform(0, 3);
      for (std::int64_t i = 0; i < n; ++i) {
        const auto den = uniform(1, 8);
        auto a = Rational(uniform(0, den), den);
        auto b = Rational(uniform(0, den), den);
        if (b < a) std::swap(a, b);
        parts.push_back(Interval{a, b, uniform(0, 1) != 0, uniform(0, 1) != 0});
      }
      return SymSet::intervals(std::move(parts));
    }
  }
  return SymSet::empty(u);
}

inline std::vector<SymSet> sampled_pool(const Universe& u, std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::vector<SymSet> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_set(u, rng));
  return out;
}

/// Probe sets for a strategy.
inline std::vector<SymSet> probe_sets(const Universe& u, const Strategy& s) {
  switch (s.kind) {
    case StrategyKind::Exhaustive:
      if (!u.is_finite()) throw Error(ErrorCode::InvalidArgument, "exhaustive strategy needs a finite universe");
      return all_subsets(u);
    case StrategyKind::Family: return canonical_pool(u);
    case StrategyKind::Sampled: return sampled_pool(u, s.seed, s.samples);
    case StrategyKind::Explicit: {
      for (const auto& x : s.explicit_sets) require_same(u, x.universe());
      return s.explicit_sets;
    }
  }
  return {};
}

/// Every k-th element, keeping at most `limit` entries. Used for the third
/// quantifier of triple laws.
inline std::vector<SymSet> thin(const std::vector<SymSet>& pool, std::size_t limit) {
  if (pool.size() <= limit) return pool;
  std::vector<SymSet> out;
  const std::size_t stride = (pool.size() + limit - 1) / limit;
  for (std::size_t i = 0; i < pool.size(); i += stride) out.push_back(pool[i]);
  return out;
}

}  // namespace proxlab
