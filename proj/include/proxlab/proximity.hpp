#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "proxlab/algebra.hpp"
#include "proxlab/symset.hpp"

namespace proxlab {

class Proximity;

namespace kinds {
struct Discrete {};
struct OnePoint {};
struct Metric {};
struct FromAlgebra {
  SetAlgebra algebra;
};
/// Explicit relation on P(X) x P(X) for a finite X, indexed by masks.
struct Table {
  std::vector<bool> relation;
};
struct Subspace {
  std::shared_ptr<const Proximity> parent;
  SymSet carrier;
};
}  // namespace kinds

enum class ProximityKind { Discrete, OnePoint, Metric, FromAlgebra, Table, Subspace };

/// A decidable nearness relation on subsets of a universe. Immutable.
class Proximity {
 public:
  using Kind = std::variant<kinds::Discrete, kinds::OnePoint, kinds::Metric, kinds::FromAlgebra, kinds::Table,
                            kinds::Subspace>;

  static Proximity discrete(const Universe& u) { return Proximity(u, kinds::Discrete{}); }

  static Proximity one_point(const Universe& u) {
    if (!u.is_integers()) throw Error(ErrorCode::WrongUniverseKind, "one_point needs an integer universe");
    return Proximity(u, kinds::OnePoint{});
  }

  static Proximity metric(const Universe& u) {
    if (!u.is_interval()) throw Error(ErrorCode::WrongUniverseKind, "metric needs unit_interval");
    return Proximity(u, kinds::Metric{});
  }

  static Proximity from_algebra(const SetAlgebra& m) {
    if (!m.top().is_full())
      throw Error(ErrorCode::InvalidArgument, "proximity needs an algebra on the whole universe");
    return Proximity(m.universe(), kinds::FromAlgebra{m});
  }

  /// Unvalidated table; check it with the axiom laws.
  static Proximity table(const Universe& u, std::vector<bool> relation) {
    if (!u.is_finite() || u.size > 6)
      throw Error(ErrorCode::InvalidArgument, "table proximities need a finite universe of at most 6 points");
    const std::size_t n = std::size_t{1} << u.size;
    if (relation.size() != n * n)
      throw Error(ErrorCode::InvalidArgument, "table must have 4^n entries");
    return Proximity(u, kinds::Table{std::move(relation)});
  }

  static Proximity table(const Universe& u, const std::function<bool(std::uint64_t, std::uint64_t)>& near) {
    if (!u.is_finite() || u.size > 6)
      throw Error(ErrorCode::InvalidArgument, "table proximities need a finite universe of at most 6 points");
    const std::size_t n = std::size_t{1} << u.size;
    std::vector<bool> rel(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) rel[a * n + b] = near(a, b);
    return Proximity(u, kinds::Table{std::move(rel)});
  }

  static Proximity subspace(const Proximity& parent, const SymSet& carrier) {
    require_same(parent.universe(), carrier.universe());
    if (!carrier.subset_of(parent.carrier()))
      throw Error(ErrorCode::InvalidArgument, "subspace carrier must lie in the parent carrier");
    return Proximity(parent.universe(), kinds::Subspace{std::make_shared<const Proximity>(parent), carrier});
  }

  const Universe& universe() const { return universe_; }
  const Kind& kind() const { return kind_; }
  ProximityKind kind_id() const { return static_cast<ProximityKind>(kind_.index()); }

  template <typename K>
  const K* as() const { return std::get_if<K>(&kind_); }

  /// Whole point set the proximity lives on (the carrier for subspaces).
  SymSet carrier() const {
    if (const auto* s = as<kinds::Subspace>()) return s->carrier;
    return SymSet::full(universe_);
  }

  /// Complement relative to the carrier.
  SymSet complement(const SymSet& a) const { return carrier() - a; }

  std::string render() const {
    switch (kind_id()) {
      case ProximityKind::Discrete: return "discrete(" + universe_.render() + ")";
      case ProximityKind::OnePoint: return "one_point(" + universe_.render() + ")";
      case ProximityKind::Metric: return "metric(" + universe_.render() + ")";
      case ProximityKind::FromAlgebra: return "from_algebra(" + as<kinds::FromAlgebra>()->algebra.render() + ")";
      case ProximityKind::Table: return "table(" + universe_.render() + ")";
      case ProximityKind::Subspace: {
        const auto* s = as<kinds::Subspace>();
        return "subspace(" + s->parent->render() + ", " + s->carrier.render() + ")";
      }
    }
    return "?";
  }

 private:
  Proximity(const Universe& u, Kind k) : universe_(u), kind_(std::move(k)) {}

  Universe universe_;
  Kind kind_;
};

namespace detail {
inline void check_args(const Proximity& d, const SymSet& a) {
  require_same(d.universe(), a.universe());
  if (d.kind_id() == ProximityKind::Subspace && !a.subset_of(d.carrier()))
    throw Error(ErrorCode::InvalidArgument, "set " + a.render() + " leaves the subspace carrier");
}
}  // namespace detail

/// A δ B.
inline bool near(const Proximity& d, const SymSet& a, const SymSet& b) {
  detail::check_args(d, a);
  detail::check_args(d, b);
  if (a.is_empty() || b.is_empty()) {
    if (d.kind_id() != ProximityKind::Table) return false;
  }
  switch (d.kind_id()) {
    case ProximityKind::Discrete: return a.intersects(b);
    case ProximityKind::OnePoint:
      return a.intersects(b) || (a.clusters_at_infinity() && b.clusters_at_infinity());
    case ProximityKind::Metric: return distance(a, b) == Rational(0);
    case ProximityKind::FromAlgebra: return !d.as<kinds::FromAlgebra>()->algebra.separates(a, b);
    case ProximityKind::Table: {
      const std::size_t n = std::size_t{1} << d.universe().size;
      return d.as<kinds::Table>()->relation[a.mask() * n + b.mask()];
    }
    case ProximityKind::Subspace: return near(*d.as<kinds::Subspace>()->parent, a, b);
  }
  return false;
}

/// A ≺ B, i.e. A is not near the (carrier-relative) complement of B.
inline bool strongly_below(const Proximity& d, const SymSet& a, const SymSet& b) {
  detail::check_args(d, b);
  return !near(d, a, d.complement(b));
}

/// {x | {x} δ A}.
inline SymSet closure(const Proximity& d, const SymSet& a) {
  detail::check_args(d, a);
  const auto& u = d.universe();
  switch (d.kind_id()) {
    case ProximityKind::Discrete: return a;
    case ProximityKind::OnePoint:
      if (u.with_infinity && a.clusters_at_infinity()) return a | singleton(u, Infinity{});
      return a;
    case ProximityKind::Metric: {
      const auto c = a.interval_payload().closure();
      return SymSet::intervals(c.parts);
    }
    case ProximityKind::FromAlgebra: {
      const auto& m = d.as<kinds::FromAlgebra>()->algebra;
      if (auto s = m.saturation(a)) return *s;
      // finite_cofinite: singletons are members, except that a pinned
      // infinity point sticks to every set clustering there.
      if (m.pinned_infinity() && a.clusters_at_infinity()) return a | singleton(u, Infinity{});
      return a;
    }
    case ProximityKind::Table: {
      SymSet out = SymSet::empty(u);
      for (const auto& p : finite_points(u)) {
        const auto x = singleton(u, p);
        if (near(d, x, a)) out = out | x;
      }
      return out;
    }
    case ProximityKind::Subspace: {
      const auto* s = d.as<kinds::Subspace>();
      return closure(*s->parent, a) & s->carrier;
    }
  }
  return a;
}

/// U is open iff {x} ≺ U for each x ∈ U, i.e. U misses the closure of its complement.
inline bool is_open(const Proximity& d, const SymSet& u) {
  detail::check_args(d, u);
  return !closure(d, d.complement(u)).intersects(u);
}

/// A witness C with a ≺ C ≺ b.
inline SymSet interpolate(const Proximity& d, const SymSet& a, const SymSet& b) {
  if (!strongly_below(d, a, b))
    throw Error(ErrorCode::NotStronglyBelow, a.render() + " is not strongly below " + b.render());
  auto works = [&](const SymSet& c) { return strongly_below(d, a, c) && strongly_below(d, c, b); };
  switch (d.kind_id()) {
    case ProximityKind::Discrete: return a;
    case ProximityKind::OnePoint:
      // A ≺ B forces A or B^c to stay away from infinity; that side is self-below.
      return strongly_below(d, a, a) ? a : b;
    case ProximityKind::Metric: {
      const auto rest = d.complement(b);
      if (a.is_empty() || rest.is_empty()) return a.is_empty() ? a : b;
      const auto half = distance(a, rest) / 2;
      return a.neighbourhood(half);
    }
    case ProximityKind::FromAlgebra: {
      const auto& m = d.as<kinds::FromAlgebra>()->algebra;
      if (auto c = m.member_between(a, b)) return *c;
      break;
    }
    case ProximityKind::Table: break;
    case ProximityKind::Subspace: {
      const auto* s = d.as<kinds::Subspace>();
      const auto outside = SymSet::full(d.universe()) - s->carrier;
      const auto c = interpolate(*s->parent, a, b | outside) & s->carrier;
      if (works(c)) return c;
      break;
    }
  }
  if (d.universe().is_finite()) {
    for (const auto& c : all_subsets(d.universe())) {
      if (!c.subset_of(d.carrier())) continue;
      if (works(c)) return c;
    }
  }
  throw Error(ErrorCode::NoWitnessFound, "no interpolant between " + a.render() + " and " + b.render());
}

/// {x}δ{y} implies x = y, decided on finite universes and by rule for the
/// symbolic built-in kinds.
inline std::optional<bool> is_separated(const Proximity& d) {
  const auto& u = d.universe();
  if (u.is_finite()) {
    const auto pts = finite_points(u);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const auto x = singleton(u, pts[i]), y = singleton(u, pts[j]);
        if (!x.subset_of(d.carrier()) || !y.subset_of(d.carrier())) continue;
        if (near(d, x, y)) return false;
      }
    return true;
  }
  switch (d.kind_id()) {
    case ProximityKind::Discrete:
    case ProximityKind::OnePoint:
    case ProximityKind::Metric: return true;
    case ProximityKind::FromAlgebra: return d.as<kinds::FromAlgebra>()->algebra.reduced();
    default: return std::nullopt;
  }
}

}  // namespace proxlab
