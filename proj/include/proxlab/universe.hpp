#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>

#include "proxlab/error.hpp"
#include "proxlab/rational.hpp"

namespace proxlab {

enum class UniverseKind { Finite, Integers, UnitInterval };

/// Ground set of a SymSet. Universes are compared by value.
struct Universe {
  UniverseKind kind = UniverseKind::Finite;
  std::size_t size = 0;        // Finite only
  bool with_infinity = false;  // Integers only

  static constexpr std::size_t max_finite_size = 63;

  static Universe finite(std::size_t n) {
    if (n == 0 || n > max_finite_size)
      throw Error(ErrorCode::InvalidArgument, "finite universe size must be in 1..63, got " + std::to_string(n));
    return Universe{UniverseKind::Finite, n, false};
  }
  static Universe integers(bool include_infinity = false) {
    return Universe{UniverseKind::Integers, 0, include_infinity};
  }
  static Universe unit_interval() { return Universe{UniverseKind::UnitInterval, 0, false}; }

  bool is_finite() const { return kind == UniverseKind::Finite; }
  bool is_integers() const { return kind == UniverseKind::Integers; }
  bool is_interval() const { return kind == UniverseKind::UnitInterval; }

  std::string render() const {
    switch (kind) {
      case UniverseKind::Finite: return "finite(" + std::to_string(size) + ")";
      case UniverseKind::Integers: return with_infinity ? "integers with_infinity" : "integers";
      case UniverseKind::UnitInterval: return "unit_interval";
    }
    return "?";
  }

  bool operator==(const Universe&) const = default;
};

inline void require_same(const Universe& a, const Universe& b) {
  if (!(a == b)) throw Error(ErrorCode::UniverseMismatch, a.render() + " vs " + b.render());
}

/// The extra point of integers with_infinity.
struct Infinity {
  auto operator<=>(const Infinity&) const = default;
};

/// A single element: an index / integer, the point at infinity, or a rational of [0,1].
using Point = std::variant<std::int64_t, Infinity, Rational>;

inline std::string render_point(const Point& p) {
  if (const auto* i = std::get_if<std::int64_t>(&p)) return std::to_string(*i);
  if (std::holds_alternative<Infinity>(p)) return "inf";
  return to_string(std::get<Rational>(p));
}

inline bool point_less(const Point& a, const Point& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* i = std::get_if<std::int64_t>(&a)) return *i < std::get<std::int64_t>(b);
  if (std::holds_alternative<Infinity>(a)) return false;
  return std::get<Rational>(a) < std::get<Rational>(b);
}

inline bool point_in_universe(const Universe& u, const Point& p) {
  switch (u.kind) {
    case UniverseKind::Finite: {
      const auto* i = std::get_if<std::int64_t>(&p);
      return i != nullptr && *i >= 0 && static_cast<std::size_t>(*i) < u.size;
    }
    case UniverseKind::Integers:
      return std::holds_alternative<std::int64_t>(p) || (u.with_infinity && std::holds_alternative<Infinity>(p));
    case UniverseKind::UnitInterval: {
      if (const auto* q = std::get_if<Rational>(&p)) return *q >= Rational(0) && *q <= Rational(1);
      if (const auto* i = std::get_if<std::int64_t>(&p)) return *i == 0 || *i == 1;
      return false;
    }
  }
  return false;
}

}  // namespace proxlab
