#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "proxlab/error.hpp"
#include "proxlab/rational.hpp"
#include "proxlab/universe.hpp"

namespace proxlab {

// ---------------------------------------------------------------------------
// Payloads
// ---------------------------------------------------------------------------

/// Eventually periodic subset of Z (optionally with the point at infinity).
///
/// Canonical form: `period` is minimal for `residues`, and every entry of
/// `exceptions` disagrees with the periodic prediction at that integer. The
/// infinity flag is independent of the pattern.
struct PeriodicSet {
  std::int64_t period = 1;
  std::vector<bool> residues{false};
  std::map<std::int64_t, bool> exceptions;
  bool infinity = false;

  static constexpr std::int64_t max_period = 4096;

  static std::int64_t mod(std::int64_t k, std::int64_t p) {
    const auto r = k % p;
    return r < 0 ? r + p : r;
  }

  bool pattern(std::int64_t k) const { return residues[static_cast<std::size_t>(mod(k, period))]; }

  bool contains(std::int64_t k) const {
    if (auto it = exceptions.find(k); it != exceptions.end()) return it->second;
    return pattern(k);
  }

  bool has_residues() const { return std::find(residues.begin(), residues.end(), true) != residues.end(); }
  bool all_residues() const { return std::find(residues.begin(), residues.end(), false) == residues.end(); }

  void canonicalize() {
    if (period < 1) throw Error(ErrorCode::InvalidArgument, "period must be >= 1");
    for (std::int64_t d = 1; d < period; ++d) {
      if (period % d != 0) continue;
      bool ok = true;
      for (std::int64_t i = 0; i < period && ok; ++i) ok = residues[static_cast<std::size_t>(i)] == residues[static_cast<std::size_t>(i % d)];
      if (ok) {
        residues.resize(static_cast<std::size_t>(d));
        period = d;
        break;
      }
    }
    for (auto it = exceptions.begin(); it != exceptions.end();) {
      if (it->second == pattern(it->first))
        it = exceptions.erase(it);
      else
        ++it;
    }
  }

  template <typename Op>
  static PeriodicSet combine(const PeriodicSet& a, const PeriodicSet& b, bool infinity_allowed, Op op) {
    const auto p = std::lcm(a.period, b.period);
    if (p > max_period)
      throw Error(ErrorCode::RepresentationLimit, "combined period " + std::to_string(p) + " exceeds limit");
    PeriodicSet out;
    out.period = p;
    out.residues.assign(static_cast<std::size_t>(p), false);
    for (std::int64_t i = 0; i < p; ++i) out.residues[static_cast<std::size_t>(i)] = op(a.pattern(i), b.pattern(i));
    auto visit = [&](std::int64_t k) {
      const bool v = op(a.contains(k), b.contains(k));
      if (v != out.pattern(k)) out.exceptions[k] = v;
    };
    for (const auto& [k, _] : a.exceptions) visit(k);
    for (const auto& [k, _] : b.exceptions) visit(k);
    out.infinity = infinity_allowed && op(a.infinity, b.infinity);
    out.canonicalize();
    return out;
  }

  bool operator==(const PeriodicSet&) const = default;
};

/// One interval of [0,1] with rational endpoints.
struct Interval {
  Rational lo{0};
  Rational hi{0};
  bool lo_closed = true;
  bool hi_closed = true;

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
  bool degenerate() const { return lo == hi && lo_closed && hi_closed; }
  bool contains(const Rational& q) const {
    if (q < lo || q > hi) return false;
    if (q == lo && !lo_closed) return false;
    if (q == hi && !hi_closed) return false;
    return true;
  }
  bool operator==(const Interval&) const = default;
};

/// Sorted, pairwise disjoint, non-mergeable intervals inside [0,1].
struct IntervalUnion {
  std::vector<Interval> parts;

  void canonicalize() {
    for (auto& iv : parts) {
      if (iv.lo < Rational(0)) iv.lo = Rational(0), iv.lo_closed = true;
      if (iv.hi > Rational(1)) iv.hi = Rational(1), iv.hi_closed = true;
    }
    std::erase_if(parts, [](const Interval& iv) { return iv.empty(); });
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      return a.lo_closed && !b.lo_closed;
    });
    std::vector<Interval> merged;
    for (const auto& iv : parts) {
      if (!merged.empty()) {
        auto& cur = merged.back();
        const bool touches = iv.lo < cur.hi || (iv.lo == cur.hi && (cur.hi_closed || iv.lo_closed));
        if (touches) {
          if (iv.hi > cur.hi) {
            cur.hi = iv.hi;
            cur.hi_closed = iv.hi_closed;
          } else if (iv.hi == cur.hi) {
            cur.hi_closed = cur.hi_closed || iv.hi_closed;
          }
          continue;
        }
      }
      merged.push_back(iv);
    }
    parts = std::move(merged);
  }

  bool contains(const Rational& q) const {
    return std::any_of(parts.begin(), parts.end(), [&](const Interval& iv) { return iv.contains(q); });
  }

  IntervalUnion complement() const {
    IntervalUnion out;
    Rational cursor(0);
    bool cursor_closed = true;  // whether `cursor` itself still belongs to the gap
    for (const auto& iv : parts) {
      out.parts.push_back(Interval{cursor, iv.lo, cursor_closed, !iv.lo_closed});
      cursor = iv.hi;
      cursor_closed = !iv.hi_closed;
    }
    out.parts.push_back(Interval{cursor, Rational(1), cursor_closed, true});
    out.canonicalize();
    return out;
  }

  IntervalUnion intersect(const IntervalUnion& other) const {
    IntervalUnion out;
    for (const auto& a : parts) {
      for (const auto& b : other.parts) {
        Interval iv;
        if (a.lo > b.lo) iv.lo = a.lo, iv.lo_closed = a.lo_closed;
        else if (b.lo > a.lo) iv.lo = b.lo, iv.lo_closed = b.lo_closed;
        else iv.lo = a.lo, iv.lo_closed = a.lo_closed && b.lo_closed;
        if (a.hi < b.hi) iv.hi = a.hi, iv.hi_closed = a.hi_closed;
        else if (b.hi < a.hi) iv.hi = b.hi, iv.hi_closed = b.hi_closed;
        else iv.hi = a.hi, iv.hi_closed = a.hi_closed && b.hi_closed;
        out.parts.push_back(iv);
      }
    }
    out.canonicalize();
    return out;
  }

  IntervalUnion unite(const IntervalUnion& other) const {
    IntervalUnion out;
    out.parts = parts;
    out.parts.insert(out.parts.end(), other.parts.begin(), other.parts.end());
    out.canonicalize();
    return out;
  }

  /// Topological closure inside [0,1].
  IntervalUnion closure() const {
    IntervalUnion out = *this;
    for (auto& iv : out.parts) iv.lo_closed = iv.hi_closed = true;
    out.canonicalize();
    return out;
  }

  bool operator==(const IntervalUnion&) const = default;
};

/// Result of cardinality classification.
struct Cardinality {
  bool infinite = false;
  std::size_t count = 0;  // meaningful when !infinite

  static Cardinality finite(std::size_t k) { return {false, k}; }
  static Cardinality infinite_class() { return {true, 0}; }
  bool operator==(const Cardinality&) const = default;
};

// ---------------------------------------------------------------------------
// SymSet
// ---------------------------------------------------------------------------

/// Canonical symbolic subset of a Universe. Structural equality is
/// extensional equality.
class SymSet {
 public:
  using Payload = std::variant<std::uint64_t, PeriodicSet, IntervalUnion>;

  SymSet() : SymSet(empty(Universe::finite(1))) {}

  static SymSet empty(const Universe& u) {
    switch (u.kind) {
      case UniverseKind::Finite: return SymSet(u, std::uint64_t{0});
      case UniverseKind::Integers: return SymSet(u, PeriodicSet{});
      case UniverseKind::UnitInterval: return SymSet(u, IntervalUnion{});
    }
    throw Error(ErrorCode::InvalidArgument, "bad universe");
  }

  static SymSet full(const Universe& u) { return empty(u).complement(); }

  static SymSet from_mask(const Universe& u, std::uint64_t mask) {
    if (!u.is_finite()) throw Error(ErrorCode::WrongUniverseKind, "bit mask needs a finite universe");
    return SymSet(u, mask & full_mask(u));
  }

  /// Finite set of points. Works for every universe kind.
  static SymSet of(const Universe& u, const std::vector<Point>& points) {
    switch (u.kind) {
      case UniverseKind::Finite: {
        std::uint64_t m = 0;
        for (const auto& p : points) {
          if (!point_in_universe(u, p))
            throw Error(ErrorCode::InvalidArgument, "point " + render_point(p) + " outside " + u.render());
          m |= std::uint64_t{1} << std::get<std::int64_t>(p);
        }
        return SymSet(u, m);
      }
      case UniverseKind::Integers: {
        PeriodicSet s;
        for (const auto& p : points) {
          if (!point_in_universe(u, p))
            throw Error(ErrorCode::InvalidArgument, "point " + render_point(p) + " outside " + u.render());
          if (std::holds_alternative<Infinity>(p))
            s.infinity = true;
          else
            s.exceptions[std::get<std::int64_t>(p)] = true;
        }
        return SymSet(u, std::move(s));
      }
      case UniverseKind::UnitInterval: {
        IntervalUnion iu;
        for (const auto& p : points) {
          if (!point_in_universe(u, p))
            throw Error(ErrorCode::InvalidArgument, "point " + render_point(p) + " outside " + u.render());
          const auto q = as_rational(p);
          iu.parts.push_back(Interval{q, q, true, true});
        }
        iu.canonicalize();
        return SymSet(u, std::move(iu));
      }
    }
    throw Error(ErrorCode::InvalidArgument, "bad universe");
  }

  static SymSet indices(const Universe& u, std::initializer_list<std::int64_t> ks) {
    std::vector<Point> pts(ks.begin(), ks.end());
    return of(u, pts);
  }

  /// periodic(p, residues) + added - removed, on an integer universe.
  static SymSet periodic(const Universe& u, std::int64_t period, const std::vector<std::int64_t>& residue_list,
                         const std::vector<Point>& added = {}, const std::vector<Point>& removed = {}) {
    if (!u.is_integers()) throw Error(ErrorCode::WrongUniverseKind, "periodic sets live in an integer universe");
    if (period < 1 || period > PeriodicSet::max_period)
      throw Error(ErrorCode::InvalidArgument, "period out of range: " + std::to_string(period));
    PeriodicSet s;
    s.period = period;
    s.residues.assign(static_cast<std::size_t>(period), false);
    for (auto r : residue_list) s.residues[static_cast<std::size_t>(PeriodicSet::mod(r, period))] = true;
    auto apply = [&](const std::vector<Point>& pts, bool value) {
      for (const auto& p : pts) {
        if (!point_in_universe(u, p))
          throw Error(ErrorCode::InvalidArgument, "point " + render_point(p) + " outside " + u.render());
        if (std::holds_alternative<Infinity>(p))
          s.infinity = value;
        else
          s.exceptions[std::get<std::int64_t>(p)] = value;
      }
    };
    apply(added, true);
    apply(removed, false);
    s.canonicalize();
    return SymSet(u, std::move(s));
  }

  static SymSet intervals(std::vector<Interval> parts) {
    IntervalUnion iu{std::move(parts)};
    for (const auto& iv : iu.parts)
      if (iv.lo < Rational(0) || iv.hi > Rational(1))
        throw Error(ErrorCode::InvalidArgument, "interval endpoint outside [0,1]");
    iu.canonicalize();
    return SymSet(Universe::unit_interval(), std::move(iu));
  }

  static SymSet closed(Rational lo, Rational hi) { return intervals({Interval{lo, hi, true, true}}); }

  const Universe& universe() const { return universe_; }
  const Payload& payload() const { return payload_; }
  std::uint64_t mask() const { return std::get<std::uint64_t>(payload_); }
  const PeriodicSet& periodic_payload() const { return std::get<PeriodicSet>(payload_); }
  const IntervalUnion& interval_payload() const { return std::get<IntervalUnion>(payload_); }

  bool contains(const Point& p) const {
    if (!point_in_universe(universe_, p)) return false;
    switch (universe_.kind) {
      case UniverseKind::Finite: return (mask() >> std::get<std::int64_t>(p)) & 1u;
      case UniverseKind::Integers:
        if (std::holds_alternative<Infinity>(p)) return periodic_payload().infinity;
        return periodic_payload().contains(std::get<std::int64_t>(p));
      case UniverseKind::UnitInterval: return interval_payload().contains(as_rational(p));
    }
    return false;
  }

  SymSet complement() const {
    switch (universe_.kind) {
      case UniverseKind::Finite: return SymSet(universe_, ~mask() & full_mask(universe_));
      case UniverseKind::Integers: {
        PeriodicSet s = periodic_payload();
        s.residues.flip();
        for (auto& [k, v] : s.exceptions) v = !v;
        s.infinity = universe_.with_infinity && !s.infinity;
        s.canonicalize();
        return SymSet(universe_, std::move(s));
      }
      case UniverseKind::UnitInterval: return SymSet(universe_, interval_payload().complement());
    }
    throw Error(ErrorCode::InvalidArgument, "bad universe");
  }

  SymSet unite(const SymSet& o) const {
    return binary(o, [](bool a, bool b) { return a || b; });
  }
  SymSet intersect(const SymSet& o) const {
    return binary(o, [](bool a, bool b) { return a && b; });
  }
  SymSet minus(const SymSet& o) const {
    return binary(o, [](bool a, bool b) { return a && !b; });
  }

  friend SymSet operator|(const SymSet& a, const SymSet& b) { return a.unite(b); }
  friend SymSet operator&(const SymSet& a, const SymSet& b) { return a.intersect(b); }
  friend SymSet operator-(const SymSet& a, const SymSet& b) { return a.minus(b); }
  SymSet operator~() const { return complement(); }

  bool is_empty() const {
    switch (universe_.kind) {
      case UniverseKind::Finite: return mask() == 0;
      case UniverseKind::Integers: {
        const auto& s = periodic_payload();
        return !s.has_residues() && s.exceptions.empty() && !s.infinity;
      }
      case UniverseKind::UnitInterval: return interval_payload().parts.empty();
    }
    return false;
  }
  bool is_full() const { return complement().is_empty(); }
  bool subset_of(const SymSet& o) const { return minus(o).is_empty(); }
  bool intersects(const SymSet& o) const { return !intersect(o).is_empty(); }

  Cardinality cardinality() const {
    switch (universe_.kind) {
      case UniverseKind::Finite: return Cardinality::finite(static_cast<std::size_t>(std::popcount(mask())));
      case UniverseKind::Integers: {
        const auto& s = periodic_payload();
        if (s.has_residues()) return Cardinality::infinite_class();
        // With no residues every exception is an added point.
        return Cardinality::finite(s.exceptions.size() + (s.infinity ? 1 : 0));
      }
      case UniverseKind::UnitInterval: {
        const auto& iu = interval_payload();
        for (const auto& iv : iu.parts)
          if (!iv.degenerate()) return Cardinality::infinite_class();
        return Cardinality::finite(iu.parts.size());
      }
    }
    return Cardinality::infinite_class();
  }
  bool is_finite() const { return !cardinality().infinite; }

  /// Integer part infinite or containing infinity: the set clusters at the
  /// added point of the one-point compactification.
  bool clusters_at_infinity() const {
    require_kind(UniverseKind::Integers);
    const auto& s = periodic_payload();
    return s.infinity || s.has_residues();
  }

  /// Points of a finite universe, ascending.
  std::vector<std::int64_t> elements() const {
    require_kind(UniverseKind::Finite);
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < universe_.size; ++i)
      if ((mask() >> i) & 1u) out.push_back(static_cast<std::int64_t>(i));
    return out;
  }

  /// Members among the integers of [-radius, radius].
  std::vector<std::int64_t> window(std::int64_t radius) const {
    require_kind(UniverseKind::Integers);
    std::vector<std::int64_t> out;
    for (std::int64_t k = -radius; k <= radius; ++k)
      if (periodic_payload().contains(k)) out.push_back(k);
    return out;
  }

  /// Probe radius sufficient to decide equality of integer sets a and b by
  /// membership over [-r, r]: 3*lcm(periods) + largest exception magnitude.
  static std::int64_t probe_radius(const SymSet& a, const SymSet& b) {
    const auto& pa = a.periodic_payload();
    const auto& pb = b.periodic_payload();
    std::int64_t r = 3 * std::lcm(pa.period, pb.period);
    std::int64_t ex = 0;
    for (const auto* s : {&pa, &pb})
      for (const auto& [k, _] : s->exceptions) ex = std::max(ex, k < 0 ? -k : k);
    return r + ex;
  }

  /// First n members in the canonical enumeration of the universe
  /// (finite: 0,1,2,..; integers: inf, 0, 1, -1, 2, -2, ...).
  std::vector<Point> first_elements(std::size_t n) const {
    std::vector<Point> out;
    if (n == 0) return out;
    switch (universe_.kind) {
      case UniverseKind::Finite:
        for (auto k : elements()) {
          if (out.size() == n) break;
          out.emplace_back(k);
        }
        return out;
      case UniverseKind::Integers: {
        const auto& s = periodic_payload();
        if (s.infinity) out.emplace_back(Infinity{});
        std::int64_t bound = 0;
        for (const auto& [k, _] : s.exceptions) bound = std::max(bound, k < 0 ? -k : k);
        const bool unbounded = s.has_residues();
        for (std::int64_t m = 0; out.size() < n; ++m) {
          if (!unbounded && m > bound) break;
          if (s.contains(m)) out.emplace_back(m);
          if (out.size() < n && m > 0 && s.contains(-m)) out.emplace_back(-m);
        }
        return out;
      }
      case UniverseKind::UnitInterval:
        throw Error(ErrorCode::WrongUniverseKind, "unit interval subsets are not enumerable");
    }
    return out;
  }

  /// {k + offset : k ∈ this}; infinity stays put.
  SymSet translate(std::int64_t offset) const {
    require_kind(UniverseKind::Integers);
    const auto& s = periodic_payload();
    PeriodicSet out;
    out.period = s.period;
    out.residues.assign(s.residues.size(), false);
    for (std::int64_t r = 0; r < s.period; ++r)
      out.residues[static_cast<std::size_t>(PeriodicSet::mod(r + offset, s.period))] = s.residues[static_cast<std::size_t>(r)];
    for (const auto& [k, v] : s.exceptions) out.exceptions[k + offset] = v;
    out.infinity = s.infinity;
    out.canonicalize();
    return SymSet(universe_, std::move(out));
  }

  /// Exact infimum distance between two nonempty subsets of [0,1].
  friend Rational distance(const SymSet& a, const SymSet& b) {
    if (!a.universe_.is_interval() || !b.universe_.is_interval())
      throw Error(ErrorCode::WrongUniverseKind, "distance needs unit_interval sets");
    if (a.is_empty() || b.is_empty()) throw Error(ErrorCode::EmptyInput, "distance of an empty set");
    std::optional<Rational> best;
    for (const auto& x : a.interval_payload().parts) {
      for (const auto& y : b.interval_payload().parts) {
        Rational d(0);
        if (y.lo > x.hi) d = y.lo - x.hi;
        else if (x.lo > y.hi) d = x.lo - y.hi;
        if (!best || d < *best) best = d;
      }
    }
    return *best;
  }

  /// Closed r-neighbourhood {x : dist(x, this) <= r} (or open when `open`).
  SymSet neighbourhood(const Rational& r, bool open = false) const {
    require_kind(UniverseKind::UnitInterval);
    IntervalUnion out;
    for (const auto& iv : interval_payload().parts) {
      if (open)
        out.parts.push_back(Interval{iv.lo - r, iv.hi + r, iv.lo - r < Rational(0), iv.hi + r > Rational(1)});
      else
        out.parts.push_back(Interval{iv.lo - r, iv.hi + r, true, true});
    }
    out.canonicalize();
    return SymSet(universe_, std::move(out));
  }

  std::string render() const {
    switch (universe_.kind) {
      case UniverseKind::Finite: {
        std::string s = "{";
        bool first = true;
        for (auto k : elements()) {
          if (!first) s += ",";
          s += std::to_string(k);
          first = false;
        }
        return s + "}";
      }
      case UniverseKind::Integers: return render_periodic(periodic_payload());
      case UniverseKind::UnitInterval: {
        const auto& iu = interval_payload();
        if (iu.parts.empty()) return "{}";
        std::string s;
        for (std::size_t i = 0; i < iu.parts.size(); ++i) {
          const auto& iv = iu.parts[i];
          if (i) s += " ∪ ";
          s += iv.lo_closed ? "[" : "(";
          s += to_string(iv.lo) + "," + to_string(iv.hi);
          s += iv.hi_closed ? "]" : ")";
        }
        return s;
      }
    }
    return "?";
  }

  bool operator==(const SymSet&) const = default;

 private:
  SymSet(const Universe& u, Payload p) : universe_(u), payload_(std::move(p)) {}

  static std::uint64_t full_mask(const Universe& u) { return (std::uint64_t{1} << u.size) - 1; }

  static Rational as_rational(const Point& p) {
    if (const auto* q = std::get_if<Rational>(&p)) return *q;
    return Rational(std::get<std::int64_t>(p));
  }

  void require_kind(UniverseKind k) const {
    if (universe_.kind != k) throw Error(ErrorCode::WrongUniverseKind, "operation unsupported on " + universe_.render());
  }

  template <typename Op>
  SymSet binary(const SymSet& o, Op op) const {
    require_same(universe_, o.universe_);
    switch (universe_.kind) {
      case UniverseKind::Finite: {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < universe_.size; ++i)
          if (op(((mask() >> i) & 1u) != 0, ((o.mask() >> i) & 1u) != 0)) m |= std::uint64_t{1} << i;
        return SymSet(universe_, m);
      }
      case UniverseKind::Integers:
        return SymSet(universe_, PeriodicSet::combine(periodic_payload(), o.periodic_payload(),
                                                      universe_.with_infinity, op));
      case UniverseKind::UnitInterval: {
        const auto& a = interval_payload();
        const auto& b = o.interval_payload();
        const bool tt = op(true, true), tf = op(true, false), ft = op(false, true);
        if (tt && tf && ft) return SymSet(universe_, a.unite(b));
        if (tt && !tf && !ft) return SymSet(universe_, a.intersect(b));
        if (!tt && tf && !ft) return SymSet(universe_, a.intersect(b.complement()));
        throw Error(ErrorCode::InvalidArgument, "unsupported interval operation");
      }
    }
    throw Error(ErrorCode::InvalidArgument, "bad universe");
  }

  static std::string render_list(const std::vector<std::string>& items) {
    std::string s = "{";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) s += ",";
      s += items[i];
    }
    return s + "}";
  }

  static std::string render_periodic(const PeriodicSet& s) {
    std::vector<std::string> added, removed;
    for (const auto& [k, v] : s.exceptions) (v ? added : removed).push_back(std::to_string(k));
    if (s.infinity) added.emplace_back("inf");
    if (!s.has_residues()) return render_list(added);
    std::vector<std::string> res;
    for (std::int64_t i = 0; i < s.period; ++i)
      if (s.residues[static_cast<std::size_t>(i)]) res.push_back(std::to_string(i));
    std::string out = "periodic(p=" + std::to_string(s.period) + ", residues=" + render_list(res) + ")";
    if (!added.empty()) out += " + " + render_list(added);
    if (!removed.empty()) out += " - " + render_list(removed);
    return out;
  }

  Universe universe_;
  Payload payload_;
};

/// Singleton {p}.
inline SymSet singleton(const Universe& u, const Point& p) { return SymSet::of(u, {p}); }

/// All points of a universe that can be listed: finite universes only.
inline std::vector<Point> finite_points(const Universe& u) {
  if (!u.is_finite()) throw Error(ErrorCode::WrongUniverseKind, "points are enumerable only for finite universes");
  std::vector<Point> out;
  for (std::size_t i = 0; i < u.size; ++i) out.emplace_back(static_cast<std::int64_t>(i));
  return out;
}

/// Every subset of a finite universe, by ascending mask.
inline std::vector<SymSet> all_subsets(const Universe& u) {
  if (!u.is_finite()) throw Error(ErrorCode::WrongUniverseKind, "subset enumeration needs a finite universe");
  if (u.size > 16) throw Error(ErrorCode::RepresentationLimit, "subset enumeration capped at 16 points");
  std::vector<SymSet> out;
  const std::uint64_t n = std::uint64_t{1} << u.size;
  out.reserve(n);
  for (std::uint64_t m = 0; m < n; ++m) out.push_back(SymSet::from_mask(u, m));
  return out;
}

}  // namespace proxlab
