#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "proxlab/symset.hpp"

namespace proxlab {

enum class AlgebraKind { Atomic, FiniteCofinite, PowerSet };

/// An algebra of subsets of a universe, held as a membership rule plus
/// atoms where the algebra is finitely atomic.
///
/// Atomic algebras are the unions of `atoms`, which partition `top` (the
/// universe, except for quotient algebras). FiniteCofinite lives on an
/// integer universe; with `pinned_infinity` the point at infinity is glued to
/// the cofinite side, so its members are the finite subsets of Z and their
/// complements.
class SetAlgebra {
 public:
  static SetAlgebra power_set(const Universe& u) { return SetAlgebra(u, AlgebraKind::PowerSet, "powerset"); }

  static SetAlgebra finite_cofinite(const Universe& u, bool pinned_infinity = false) {
    if (!u.is_integers()) throw Error(ErrorCode::WrongUniverseKind, "finite_cofinite needs an integer universe");
    SetAlgebra m(u, AlgebraKind::FiniteCofinite, pinned_infinity ? "clopen_one_point" : "finite_cofinite");
    m.pinned_ = pinned_infinity && u.with_infinity;
    return m;
  }

  /// Algebra whose atoms are the given pairwise disjoint nonempty sets.
  /// Unless `partial_top` is set, the atoms must cover the universe.
  static SetAlgebra from_atoms(const Universe& u, std::vector<SymSet> atoms, std::string origin = "atoms",
                               bool partial_top = false) {
    SetAlgebra m(u, AlgebraKind::Atomic, std::move(origin));
    SymSet cover = SymSet::empty(u);
    for (const auto& a : atoms) {
      require_same(u, a.universe());
      if (a.is_empty()) throw Error(ErrorCode::InvalidArgument, "atoms must be nonempty");
      if (a.intersects(cover)) throw Error(ErrorCode::InvalidArgument, "atoms must be pairwise disjoint");
      cover = cover | a;
    }
    if (!partial_top && !cover.is_full())
      throw Error(ErrorCode::InvalidArgument, "atoms do not cover the universe; missing " + cover.complement().render());
    m.top_ = cover;
    m.atoms_ = std::move(atoms);
    m.sort_atoms();
    return m;
  }

  /// Algebra generated by finitely many sets; its atoms are the nonempty
  /// membership-signature classes.
  static SetAlgebra generated(const Universe& u, const std::vector<SymSet>& generators) {
    std::vector<SymSet> atoms{SymSet::full(u)};
    for (const auto& g : generators) {
      require_same(u, g.universe());
      std::vector<SymSet> next;
      for (const auto& a : atoms) {
        auto in = a & g;
        auto out = a - g;
        if (!in.is_empty()) next.push_back(std::move(in));
        if (!out.is_empty()) next.push_back(std::move(out));
      }
      atoms = std::move(next);
      if (atoms.size() > 64) throw Error(ErrorCode::RepresentationLimit, "generated algebra exceeds 64 atoms");
    }
    return from_atoms(u, std::move(atoms), "generated");
  }

  const Universe& universe() const { return universe_; }
  AlgebraKind kind() const { return kind_; }
  const std::string& origin() const { return origin_; }
  bool pinned_infinity() const { return pinned_; }
  const SymSet& top() const { return top_; }

  bool finitely_atomic() const { return kind_ == AlgebraKind::Atomic || (kind_ == AlgebraKind::PowerSet && universe_.is_finite()); }

  /// Atoms of a finitely atomic algebra (singletons for a finite power set).
  std::vector<SymSet> atoms() const {
    if (kind_ == AlgebraKind::Atomic) return atoms_;
    if (kind_ == AlgebraKind::PowerSet && universe_.is_finite()) {
      std::vector<SymSet> out;
      for (const auto& p : finite_points(universe_)) out.push_back(singleton(universe_, p));
      return out;
    }
    throw Error(ErrorCode::NotFinitelyAtomic, render() + " has no finite atom list" +
                                                  (kind_ == AlgebraKind::FiniteCofinite
                                                       ? " (its Stone space is the one-point compactification Z u {inf})"
                                                       : ""));
  }

  bool contains(const SymSet& r) const {
    require_same(universe_, r.universe());
    switch (kind_) {
      case AlgebraKind::PowerSet: return true;
      case AlgebraKind::FiniteCofinite:
        if (pinned_) return !r.clusters_at_infinity() || !r.complement().clusters_at_infinity();
        return r.is_finite() || r.complement().is_finite();
      case AlgebraKind::Atomic:
        if (!r.subset_of(top_)) return false;
        return std::all_of(atoms_.begin(), atoms_.end(),
                           [&](const SymSet& a) { return a.subset_of(r) || !a.intersects(r); });
    }
    return false;
  }

  /// Union of the atoms meeting `a` (atomic) or `a` itself (power set).
  std::optional<SymSet> saturation(const SymSet& a) const {
    require_same(universe_, a.universe());
    switch (kind_) {
      case AlgebraKind::PowerSet: return a;
      case AlgebraKind::Atomic: {
        SymSet out = SymSet::empty(universe_);
        for (const auto& at : atoms_)
          if (at.intersects(a)) out = out | at;
        return out;
      }
      case AlgebraKind::FiniteCofinite: return std::nullopt;
    }
    return std::nullopt;
  }

  /// Some member R with a ⊆ R ⊆ b, if any exists. Exact for every kind.
  std::optional<SymSet> member_between(const SymSet& a, const SymSet& b) const {
    if (!a.subset_of(b)) return std::nullopt;
    if (kind_ == AlgebraKind::FiniteCofinite) {
      if (contains(a)) return a;
      if (contains(b)) return b;
      // Any member containing a is "co-small"; then b would be too.
      return std::nullopt;
    }
    auto s = saturation(a);
    if (s && s->subset_of(b)) return s;
    return std::nullopt;
  }

  /// Membership-based separation: no member R with a ⊆ R and b ∩ R = ∅.
  bool separates(const SymSet& a, const SymSet& b) const { return member_between(a, b.complement()).has_value(); }

  bool sigma_closed() const { return kind_ != AlgebraKind::FiniteCofinite; }

  /// Distinct points are split by some member.
  bool reduced() const {
    switch (kind_) {
      case AlgebraKind::PowerSet:
      case AlgebraKind::FiniteCofinite: return true;
      case AlgebraKind::Atomic:
        return std::all_of(atoms_.begin(), atoms_.end(), [](const SymSet& a) {
          const auto c = a.cardinality();
          return !c.infinite && c.count == 1;
        });
    }
    return false;
  }

  /// All members of a finitely atomic algebra with at most 16 atoms.
  std::vector<SymSet> members() const {
    const auto as = atoms();
    if (as.size() > 16) throw Error(ErrorCode::RepresentationLimit, "member listing capped at 16 atoms");
    std::vector<SymSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << as.size()); ++m) {
      SymSet r = SymSet::empty(universe_);
      for (std::size_t i = 0; i < as.size(); ++i)
        if ((m >> i) & 1u) r = r | as[i];
      out.push_back(std::move(r));
    }
    return out;
  }

  std::string render() const {
    switch (kind_) {
      case AlgebraKind::PowerSet: return "powerset(" + universe_.render() + ")";
      case AlgebraKind::FiniteCofinite: return origin_ + "(" + universe_.render() + ")";
      case AlgebraKind::Atomic: {
        std::string s = "atoms(";
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
          if (i) s += ",";
          s += atoms_[i].render();
        }
        return s + ")";
      }
    }
    return "?";
  }

 private:
  SetAlgebra(const Universe& u, AlgebraKind k, std::string origin)
      : universe_(u), kind_(k), origin_(std::move(origin)), top_(SymSet::full(u)) {}

  void sort_atoms() {
    if (!universe_.is_finite()) return;
    std::sort(atoms_.begin(), atoms_.end(), [](const SymSet& a, const SymSet& b) {
      return (a.mask() & (~a.mask() + 1)) < (b.mask() & (~b.mask() + 1));
    });
  }

  Universe universe_;
  AlgebraKind kind_;
  std::string origin_;
  bool pinned_ = false;
  SymSet top_;
  std::vector<SymSet> atoms_;
};

/// Algebra of a partition of a finite universe given as block masks.
inline SetAlgebra partition_algebra(const Universe& u, const std::vector<std::uint64_t>& blocks) {
  std::vector<SymSet> atoms;
  for (auto b : blocks) atoms.push_back(SymSet::from_mask(u, b));
  return SetAlgebra::from_atoms(u, std::move(atoms));
}

/// Every algebra of subsets of Finite(n), one per set partition, in
/// restricted-growth-string order. Bell(n) entries.
inline std::vector<SetAlgebra> all_algebras(std::size_t n) {
  const auto u = Universe::finite(n);
  if (n > 10) throw Error(ErrorCode::RepresentationLimit, "partition enumeration capped at 10 points");
  std::vector<SetAlgebra> out;
  std::vector<std::size_t> rgs(n, 0);
  while (true) {
    const std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::uint64_t> masks(blocks, 0);
    for (std::size_t i = 0; i < n; ++i) masks[rgs[i]] |= std::uint64_t{1} << i;
    out.push_back(partition_algebra(u, masks));
    // next restricted growth string
    std::size_t i = n;
    while (i-- > 1) {
      const std::size_t prefix_max = *std::max_element(rgs.begin(), rgs.begin() + static_cast<std::ptrdiff_t>(i));
      if (rgs[i] <= prefix_max) {
        ++rgs[i];
        std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace proxlab
