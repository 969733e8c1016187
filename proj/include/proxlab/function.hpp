#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proxlab/symset.hpp"

namespace proxlab {

enum class FunctionKind { Pieces, Identity, Shift, Decay, PiecewiseLinear, Compose };

/// A total map between universes with computable images and preimages.
///
/// Pieces: finitely many domain blocks, each sent to one value (tables,
/// residue maps, characteristic maps, step maps). Identity and Shift act on
/// integer universes. Decay(s, e) sends s to 1 and k outside s to
/// ((|k|+1)/(|k|+2))^e. PiecewiseLinear is a continuous self-map of [0,1].
class FunctionSpec {
 public:
  struct Piece {
    SymSet where;
    Point value;
  };

  static FunctionSpec pieces(const Universe& dom, const Universe& cod, std::vector<Piece> ps,
                             std::string label = "step") {
    FunctionSpec f(dom, cod, FunctionKind::Pieces);
    f.label_ = std::move(label);
    SymSet cover = SymSet::empty(dom);
    for (auto& p : ps) {
      require_same(dom, p.where.universe());
      if (!point_in_universe(cod, p.value))
        throw Error(ErrorCode::InvalidArgument, "value " + render_point(p.value) + " outside " + cod.render());
      p.value = normalize(cod, p.value);
      if (p.where.intersects(cover)) throw Error(ErrorCode::InvalidArgument, "map pieces overlap");
      cover = cover | p.where;
      if (p.where.is_empty()) continue;
      auto same = std::find_if(f.pieces_.begin(), f.pieces_.end(), [&](const Piece& q) { return q.value == p.value; });
      if (same != f.pieces_.end())
        same->where = same->where | p.where;
      else
        f.pieces_.push_back(std::move(p));
    }
    if (!cover.is_full()) throw Error(ErrorCode::InvalidArgument, "map undefined on " + cover.complement().render());
    return f;
  }

  /// Value list indexed by the points of a finite domain.
  static FunctionSpec table(const Universe& dom, const Universe& cod, const std::vector<Point>& values) {
    if (!dom.is_finite()) throw Error(ErrorCode::WrongUniverseKind, "table maps need a finite domain");
    if (values.size() != dom.size)
      throw Error(ErrorCode::InvalidArgument, "table needs " + std::to_string(dom.size) + " values");
    std::vector<Piece> ps;
    for (std::size_t i = 0; i < values.size(); ++i)
      ps.push_back({SymSet::from_mask(dom, std::uint64_t{1} << i), values[i]});
    auto f = pieces(dom, cod, std::move(ps), "table");
    f.table_values_ = values;
    for (auto& v : f.table_values_) v = normalize(cod, v);
    return f;
  }

  static FunctionSpec constant(const Universe& dom, const Universe& cod, const Point& v) {
    auto f = pieces(dom, cod, {{SymSet::full(dom), v}}, "constant");
    return f;
  }

  /// χ_a into Finite(n >= 2) or the unit interval.
  static FunctionSpec characteristic(const SymSet& a, const Universe& cod) {
    const auto& dom = a.universe();
    Point one, zero;
    if (cod.is_finite() && cod.size >= 2)
      one = std::int64_t{1}, zero = std::int64_t{0};
    else if (cod.is_interval())
      one = Rational(1), zero = Rational(0);
    else
      throw Error(ErrorCode::WrongUniverseKind, "characteristic maps go into finite(n>=2) or unit_interval");
    auto f = pieces(dom, cod, {{a, one}, {a.complement(), zero}}, "chi");
    f.chi_of_ = a;
    return f;
  }

  /// Value per residue class mod p, with finitely many exceptional points.
  static FunctionSpec residue_map(const Universe& dom, const Universe& cod, std::int64_t p,
                                  const std::vector<Point>& residue_values,
                                  const std::vector<std::pair<Point, Point>>& exceptions = {}) {
    if (!dom.is_integers()) throw Error(ErrorCode::WrongUniverseKind, "residue maps need an integer domain");
    if (p < 1 || static_cast<std::size_t>(p) != residue_values.size())
      throw Error(ErrorCode::InvalidArgument, "residue map needs one value per residue class");
    std::vector<Point> values;
    auto add_value = [&](const Point& v) {
      const auto n = normalize(cod, v);
      if (std::find(values.begin(), values.end(), n) == values.end()) values.push_back(n);
    };
    for (const auto& v : residue_values) add_value(v);
    for (const auto& [_, v] : exceptions) add_value(v);
    bool inf_given = false;
    for (const auto& [k, _] : exceptions) inf_given = inf_given || std::holds_alternative<Infinity>(k);
    if (dom.with_infinity && !inf_given)
      throw Error(ErrorCode::InvalidArgument, "residue map on integers with_infinity needs a value at inf");
    std::vector<Piece> ps;
    for (const auto& v : values) {
      std::vector<std::int64_t> res;
      for (std::int64_t r = 0; r < p; ++r)
        if (normalize(cod, residue_values[static_cast<std::size_t>(r)]) == v) res.push_back(r);
      std::vector<Point> added, removed;
      for (const auto& [k, w] : exceptions) (normalize(cod, w) == v ? added : removed).push_back(k);
      ps.push_back({SymSet::periodic(dom, p, res, added, removed), v});
    }
    auto f = pieces(dom, cod, std::move(ps), "residue_map");
    return f;
  }

  static FunctionSpec identity(const Universe& u) {
    if (u.is_finite()) {
      std::vector<Point> vs;
      for (const auto& p : finite_points(u)) vs.push_back(p);
      auto f = table(u, u, vs);
      f.label_ = "identity";
      return f;
    }
    return FunctionSpec(u, u, FunctionKind::Identity);
  }

  static FunctionSpec shift(const Universe& u, std::int64_t offset) {
    if (!u.is_integers()) throw Error(ErrorCode::WrongUniverseKind, "shift needs an integer universe");
    FunctionSpec f(u, u, FunctionKind::Shift);
    f.offset_ = offset;
    return f;
  }

  static FunctionSpec decay(const SymSet& s, unsigned exponent = 1) {
    if (!s.universe().is_integers()) throw Error(ErrorCode::WrongUniverseKind, "decay needs an integer domain");
    FunctionSpec f(s.universe(), Universe::unit_interval(), FunctionKind::Decay);
    f.chi_of_ = s;
    f.exponent_ = exponent;
    return f;
  }

  /// Continuous map through the knots (x_i, y_i); x runs from 0 to 1.
  static FunctionSpec piecewise_linear(std::vector<std::pair<Rational, Rational>> knots) {
    if (knots.size() < 2 || knots.front().first != Rational(0) || knots.back().first != Rational(1))
      throw Error(ErrorCode::InvalidArgument, "knots must start at 0 and end at 1");
    for (std::size_t i = 0; i < knots.size(); ++i) {
      if (i && !(knots[i - 1].first < knots[i].first))
        throw Error(ErrorCode::InvalidArgument, "knot abscissae must increase");
      if (knots[i].second < Rational(0) || knots[i].second > Rational(1))
        throw Error(ErrorCode::InvalidArgument, "knot values must lie in [0,1]");
    }
    const auto I = Universe::unit_interval();
    FunctionSpec f(I, I, FunctionKind::PiecewiseLinear);
    f.knots_ = std::move(knots);
    return f;
  }

  /// g ∘ f.
  static FunctionSpec compose(const FunctionSpec& g, const FunctionSpec& f) {
    if (!(f.codomain() == g.domain()))
      throw Error(ErrorCode::UniverseMismatch, "cannot compose: " + f.codomain().render() + " vs " + g.domain().render());
    if (f.finite_image()) {
      std::vector<Piece> ps;
      for (const auto& p : f.fibers()) ps.push_back({p.where, g.eval(p.value)});
      auto out = pieces(f.domain(), g.codomain(), std::move(ps), "compose");
      out.inner_ = std::make_shared<const FunctionSpec>(f);
      out.outer_ = std::make_shared<const FunctionSpec>(g);
      return out;
    }
    FunctionSpec out(f.domain(), g.codomain(), FunctionKind::Compose);
    out.inner_ = std::make_shared<const FunctionSpec>(f);
    out.outer_ = std::make_shared<const FunctionSpec>(g);
    return out;
  }

  const Universe& domain() const { return dom_; }
  const Universe& codomain() const { return cod_; }
  FunctionKind kind() const { return kind_; }
  std::int64_t offset() const { return offset_; }
  unsigned exponent() const { return exponent_; }
  const std::optional<SymSet>& characteristic_of() const { return chi_of_; }
  const std::shared_ptr<const FunctionSpec>& inner() const { return inner_; }
  const std::shared_ptr<const FunctionSpec>& outer() const { return outer_; }

  Point eval(const Point& x) const {
    if (!point_in_universe(dom_, x)) throw Error(ErrorCode::InvalidArgument, render_point(x) + " outside " + dom_.render());
    switch (kind_) {
      case FunctionKind::Pieces:
        for (const auto& p : pieces_)
          if (p.where.contains(x)) return p.value;
        break;
      case FunctionKind::Identity: return x;
      case FunctionKind::Shift:
        if (std::holds_alternative<Infinity>(x)) return x;
        return std::get<std::int64_t>(x) + offset_;
      case FunctionKind::Decay: {
        if (std::holds_alternative<Infinity>(x) || chi_of_->contains(x)) return Rational(1);
        const auto k = std::get<std::int64_t>(x);
        const auto m = k < 0 ? -k : k;
        return power(Rational(m + 1, m + 2), exponent_);
      }
      case FunctionKind::PiecewiseLinear: {
        const auto q = std::holds_alternative<Rational>(x) ? std::get<Rational>(x) : Rational(std::get<std::int64_t>(x));
        for (std::size_t i = 1; i < knots_.size(); ++i) {
          const auto& [x0, y0] = knots_[i - 1];
          const auto& [x1, y1] = knots_[i];
          if (q <= x1) return y0 + (y1 - y0) * (q - x0) / (x1 - x0);
        }
        return knots_.back().second;
      }
      case FunctionKind::Compose: return outer_->eval(inner_->eval(x));
    }
    throw Error(ErrorCode::InvalidArgument, "map undefined at " + render_point(x));
  }

  bool finite_image() const { return kind_ == FunctionKind::Pieces; }

  /// Nonempty fibres of a finite-image map, one per value.
  const std::vector<Piece>& fibers() const {
    if (!finite_image()) throw Error(ErrorCode::UnsupportedKind, render() + " does not have a finite image");
    return pieces_;
  }

  /// Values of the fibres, in fibre order.
  std::vector<Point> image_values() const {
    std::vector<Point> out;
    for (const auto& p : fibers()) out.push_back(p.value);
    return out;
  }

  /// f(a).
  SymSet image(const SymSet& a) const {
    require_same(dom_, a.universe());
    switch (kind_) {
      case FunctionKind::Pieces: {
        std::vector<Point> vs;
        for (const auto& p : pieces_)
          if (p.where.intersects(a)) vs.push_back(p.value);
        return SymSet::of(cod_, vs);
      }
      case FunctionKind::Identity: return a;
      case FunctionKind::Shift: return a.translate(offset_);
      case FunctionKind::Compose: return outer_->image(inner_->image(a));
      case FunctionKind::Decay:
      case FunctionKind::PiecewiseLinear: break;
    }
    if (a.is_finite() && !a.universe().is_interval()) {
      std::vector<Point> vs;
      for (const auto& x : a.first_elements(a.cardinality().count)) vs.push_back(eval(x));
      return SymSet::of(cod_, vs);
    }
    if (a.universe().is_interval() && a.is_finite()) {
      std::vector<Point> vs;
      for (const auto& iv : a.interval_payload().parts) vs.push_back(eval(iv.lo));
      return SymSet::of(cod_, vs);
    }
    throw Error(ErrorCode::UnsupportedKind, "image of an infinite set under " + render() + " is not representable");
  }

  /// f^{-1}(b).
  SymSet preimage(const SymSet& b) const {
    require_same(cod_, b.universe());
    switch (kind_) {
      case FunctionKind::Pieces: {
        SymSet out = SymSet::empty(dom_);
        for (const auto& p : pieces_)
          if (b.contains(p.value)) out = out | p.where;
        return out;
      }
      case FunctionKind::Identity: return b;
      case FunctionKind::Shift: return b.translate(-offset_);
      case FunctionKind::Compose: return inner_->preimage(outer_->preimage(b));
      case FunctionKind::Decay:
      case FunctionKind::PiecewiseLinear: break;
    }
    throw Error(ErrorCode::UnsupportedKind, "preimages under " + render() + " are not representable");
  }

  /// Pointwise n-th power of a map into [0,1].
  FunctionSpec power_of(unsigned n) const {
    if (!cod_.is_interval()) throw Error(ErrorCode::WrongUniverseKind, "powers need values in unit_interval");
    if (kind_ == FunctionKind::Decay) return decay(*chi_of_, exponent_ * n);
    if (!finite_image()) throw Error(ErrorCode::UnsupportedKind, "powers of " + render() + " are not representable");
    std::vector<Piece> ps;
    for (const auto& p : pieces_) ps.push_back({p.where, power(std::get<Rational>(p.value), n)});
    return pieces(dom_, cod_, std::move(ps), "step");
  }

  /// Pointwise limit of the powers f^n, exact.
  FunctionSpec power_limit_map() const {
    if (!cod_.is_interval()) throw Error(ErrorCode::LimitNotComputable, "powers need values in unit_interval");
    if (kind_ == FunctionKind::Decay) return characteristic(*chi_of_, cod_);
    if (!finite_image()) throw Error(ErrorCode::LimitNotComputable, "limit of powers of " + render());
    SymSet ones = SymSet::empty(dom_);
    for (const auto& p : pieces_)
      if (power_limit(std::get<Rational>(p.value)) == Rational(1)) ones = ones | p.where;
    return characteristic(ones, cod_);
  }

  /// Values approached along every infinite subset of an integer domain,
  /// when this is a single point.
  std::optional<Point> tail_limit() const {
    if (!dom_.is_integers()) return std::nullopt;
    switch (kind_) {
      case FunctionKind::Decay: return Rational(1);
      case FunctionKind::Pieces: {
        std::optional<Point> v;
        for (const auto& p : pieces_) {
          if (!p.where.clusters_at_infinity()) continue;
          if (v && !(*v == p.value)) return std::nullopt;
          v = p.value;
        }
        return v;
      }
      case FunctionKind::Compose: {
        const auto t = inner_->tail_limit();
        if (t && outer_->kind() == FunctionKind::PiecewiseLinear) return outer_->eval(*t);
        return std::nullopt;
      }
      default: return std::nullopt;
    }
  }

  /// Bijections of Z that send finite sets to finite sets and infinite to infinite.
  bool proper_bijection() const {
    if (kind_ == FunctionKind::Identity || kind_ == FunctionKind::Shift) return dom_.is_integers();
    if (kind_ == FunctionKind::Compose) return inner_->proper_bijection() && outer_->proper_bijection();
    return false;
  }

  std::string render() const {
    switch (kind_) {
      case FunctionKind::Pieces: {
        if (inner_) return "compose(" + outer_->render() + ", " + inner_->render() + ")";
        if (label_ == "chi") return "chi(" + chi_of_->render() + ")";
        if (label_ == "identity") return "identity(" + dom_.render() + ")";
        if (label_ == "table") {
          std::string s = "table{";
          for (std::size_t i = 0; i < table_values_.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(i) + ":" + render_point(table_values_[i]);
          }
          return s + "}";
        }
        std::string s = label_ + "{";
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
          if (i) s += "; ";
          s += pieces_[i].where.render() + ": " + render_point(pieces_[i].value);
        }
        return s + "}";
      }
      case FunctionKind::Identity: return "identity(" + dom_.render() + ")";
      case FunctionKind::Shift: return "shift(" + std::to_string(offset_) + ")";
      case FunctionKind::Decay:
        return "decay(" + chi_of_->render() + (exponent_ == 1 ? "" : ", e=" + std::to_string(exponent_)) + ")";
      case FunctionKind::PiecewiseLinear: {
        std::string s = "pl{";
        for (std::size_t i = 0; i < knots_.size(); ++i) {
          if (i) s += ", ";
          s += to_string(knots_[i].first) + ":" + to_string(knots_[i].second);
        }
        return s + "}";
      }
      case FunctionKind::Compose: return "compose(" + outer_->render() + ", " + inner_->render() + ")";
    }
    return "?";
  }

  /// Pointwise equality on a finite domain.
  bool same_on_finite_domain(const FunctionSpec& o) const {
    if (!(dom_ == o.dom_) || !(cod_ == o.cod_)) return false;
    for (const auto& x : finite_points(dom_))
      if (!(eval(x) == o.eval(x))) return false;
    return true;
  }

 private:
  FunctionSpec(const Universe& dom, const Universe& cod, FunctionKind k) : dom_(dom), cod_(cod), kind_(k) {}

  static Point normalize(const Universe& cod, const Point& v) {
    if (cod.is_interval())
      if (const auto* i = std::get_if<std::int64_t>(&v)) return Rational(*i);
    return v;
  }

  Universe dom_;
  Universe cod_;
  FunctionKind kind_;
  std::string label_;
  std::vector<Piece> pieces_;
  std::vector<Point> table_values_;
  std::int64_t offset_ = 0;
  unsigned exponent_ = 1;
  std::optional<SymSet> chi_of_;
  std::vector<std::pair<Rational, Rational>> knots_;
  std::shared_ptr<const FunctionSpec> inner_;
  std::shared_ptr<const FunctionSpec> outer_;
};

/// Every map Finite(n) -> Finite(k), in lexicographic value order.
inline std::vector<FunctionSpec> all_maps(const Universe& dom, const Universe& cod) {
  if (!dom.is_finite() || !cod.is_finite()) throw Error(ErrorCode::WrongUniverseKind, "map enumeration needs finite universes");
  std::vector<FunctionSpec> out;
  std::vector<Point> vals(dom.size, Point{std::int64_t{0}});
  while (true) {
    out.push_back(FunctionSpec::table(dom, cod, vals));
    std::size_t i = dom.size;
    while (i-- > 0) {
      auto& v = std::get<std::int64_t>(vals[i]);
      if (static_cast<std::size_t>(v + 1) < cod.size) {
        ++v;
        break;
      }
      v = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
    if (out.size() > 100000) throw Error(ErrorCode::RepresentationLimit, "too many maps");
  }
  return out;
}

}  // namespace proxlab
