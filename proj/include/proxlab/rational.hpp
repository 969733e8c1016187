#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "proxlab/error.hpp"

namespace proxlab {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Parses "3", "-2", "1/3".
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty rational component");
    std::size_t pos = 0;
    const std::string owned(s);
    long long v = 0;
    try {
      v = std::stoll(owned, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad rational '" + std::string(text) + "'");
    }
    if (pos != owned.size()) throw Error(ErrorCode::InvalidArgument, "bad rational '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

/// Exact limit of q^n as n grows, for 0 <= q <= 1.
inline Rational power_limit(const Rational& q) {
  if (q < Rational(0) || q > Rational(1)) throw Error(ErrorCode::LimitNotComputable, "q^n limit needs q in [0,1], got " + to_string(q));
  return q == Rational(1) ? Rational(1) : Rational(0);
}

/// q^n, exact. Throws RepresentationLimit when a component leaves int64.
inline Rational power(const Rational& q, unsigned n) {
  __int128 num = 1, den = 1;
  constexpr __int128 limit = std::numeric_limits<std::int64_t>::max();
  for (unsigned i = 0; i < n; ++i) {
    num *= q.numerator();
    den *= q.denominator();
    if (num > limit || num < -limit || den > limit)
      throw Error(ErrorCode::RepresentationLimit, to_string(q) + "^" + std::to_string(n) + " exceeds 64-bit rationals");
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace proxlab
