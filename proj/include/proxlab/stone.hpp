#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "proxlab/duality.hpp"

namespace proxlab {

/// An ultrafilter of a finitely atomic algebra: the members containing `atom`.
struct Ultrafilter {
  std::size_t index = 0;
  SymSet atom;

  bool contains(const SymSet& member) const { return atom.subset_of(member); }
  std::string render() const { return "U" + std::to_string(index) + " " + atom.render(); }
};

namespace detail {

inline void require_finitely_atomic(const SetAlgebra& m) {
  if (m.finitely_atomic()) return;
  if (m.kind() == AlgebraKind::FiniteCofinite)
    throw Error(ErrorCode::NotFinitelyAtomic, m.render() + " has no finite atom list; its ultrafilters are the " +
                                                  "principal ones and one free ultrafilter, i.e. integers with_infinity");
  throw Error(ErrorCode::NotFinitelyAtomic, m.render() + " has no finite atom list");
}

}  // namespace detail

inline std::vector<Ultrafilter> ultrafilters(const SetAlgebra& m) {
  detail::require_finitely_atomic(m);
  std::vector<Ultrafilter> out;
  const auto as = m.atoms();
  for (std::size_t i = 0; i < as.size(); ++i) out.push_back({i, as[i]});
  return out;
}

/// The ultrafilter space of a finitely atomic algebra with its embedding of
/// ground points. Points outside the algebra's top (null points of a
/// quotient) have no image.
class StoneSpace {
 public:
  explicit StoneSpace(SetAlgebra m) : m_(std::move(m)), points_(ultrafilters(m_)) {}

  const SetAlgebra& algebra() const { return m_; }
  const std::vector<Ultrafilter>& points() const { return points_; }

  std::optional<std::size_t> embed(const Point& x) const {
    for (const auto& p : points_)
      if (p.atom.contains(x)) return p.index;
    return std::nullopt;
  }

  /// Basic clopen set {U : r ∈ U}, as ultrafilter indices.
  std::vector<std::size_t> basic_open(const SymSet& r) const {
    std::vector<std::size_t> out;
    for (const auto& p : points_)
      if (p.contains(r)) out.push_back(p.index);
    return out;
  }

 private:
  SetAlgebra m_;
  std::vector<Ultrafilter> points_;
};

/// Ultrafilter axioms, density of the embedding, and one ultrafilter per atom.
inline LawReport check_stone_space(const SetAlgebra& m, const std::string& subject = {}) {
  LawRun run("stone", {subject.empty() ? m.render() : subject}, Strategy::for_universe(m.universe()));
  const StoneSpace space(m);
  const auto& top = m.top();
  const bool small = m.atoms().size() <= 10;
  std::vector<SymSet> members;
  if (small) {
    members = m.members();
  } else {
    for (const auto& a : m.atoms()) {
      members.push_back(a);
      members.push_back(top - a);
    }
  }
  for (const auto& u : space.points()) {
    if (!u.contains(top) || u.contains(SymSet::empty(m.universe())))
      run.fail("ultrafilter must contain the top and exclude the empty set", {{"atom", u.atom}});
    for (const auto& r : members) {
      run.count();
      if (u.contains(r) == u.contains(top - r)) run.fail("exactly one of R and its complement", {{"atom", u.atom}, {"R", r}});
      if (small && u.contains(r))
        for (const auto& t : members)
          if (r.subset_of(t) && !u.contains(t)) run.fail("not upward closed", {{"atom", u.atom}, {"R", r}, {"T", t}});
    }
  }
  for (const auto& r : members)
    if (!r.is_empty() && space.basic_open(r).empty()) run.fail("basic open set misses the embedding", {{"R", r}});
  for (const auto& u : space.points()) run.report().witnesses.push_back({"ultrafilter", u.render()});
  run.report().evidence(std::to_string(space.points().size()) + " ultrafilters");
  return run.finish(Status::HoldsExhaustive);
}

/// Some atom meeting both sets: a common point of their Stone closures.
inline std::optional<SymSet> shared_atom(const SetAlgebra& m, const SymSet& a, const SymSet& b) {
  for (const auto& u : ultrafilters(m))
    if (u.atom.intersects(a) && u.atom.intersects(b)) return u.atom;
  return std::nullopt;
}

/// A δ_M B iff the Stone closures of A and B meet. The left side is decided
/// by searching every member for a separator.
inline LawReport check_smirnov_identity(const SetAlgebra& m, const Strategy& s, const std::string& subject = {}) {
  detail::require_finitely_atomic(m);
  LawRun run("smirnov", {subject.empty() ? m.render() : subject}, s);
  const auto members = m.members();
  const auto d = proximity_from_algebra(m);
  const auto probes = proximity_probes(d, s);
  for (const auto& a : probes) {
    if (run.stop()) break;
    for (const auto& b : probes) {
      run.count();
      bool separated = false;
      for (const auto& r : members)
        if (a.subset_of(r) && !r.intersects(b)) {
          separated = true;
          break;
        }
      const bool closures_meet = shared_atom(m, a, b).has_value();
      if (separated == closures_meet) run.fail("separation and Stone closures disagree", {{"A", a}, {"B", b}});
      if (near(d, a, b) == separated) run.fail("proximity disagrees with separator search", {{"A", a}, {"B", b}});
    }
  }
  return run.finish(s.success());
}

// ---------------------------------------------------------------------------
// Ideals and quotients
// ---------------------------------------------------------------------------

enum class IdealKind { Principal, FiniteSets };

/// An order ideal of an algebra.
struct Ideal {
  IdealKind kind = IdealKind::Principal;
  std::optional<SymSet> generator;

  static Ideal principal(const SymSet& g) { return {IdealKind::Principal, g}; }
  static Ideal finite_sets() { return {IdealKind::FiniteSets, std::nullopt}; }

  bool contains(const SymSet& r) const {
    if (kind == IdealKind::FiniteSets) return r.is_finite();
    return r.subset_of(*generator);
  }

  std::string render() const {
    if (kind == IdealKind::FiniteSets) return "finite_sets";
    return "principal(" + generator->render() + ")";
  }
};

inline void require_ideal(const SetAlgebra& m, const Ideal& i) {
  if (i.kind == IdealKind::FiniteSets) {
    if (m.kind() != AlgebraKind::FiniteCofinite || m.pinned_infinity())
      throw Error(ErrorCode::NotAnIdeal, "finite_sets is an ideal here only of finite_cofinite on integers");
    return;
  }
  require_same(m.universe(), i.generator->universe());
  if (!m.contains(*i.generator)) throw Error(ErrorCode::NotAnIdeal, i.generator->render() + " is not a member of " + m.render());
}

/// m / i. Principal(g) on a finitely atomic m: the atoms outside g, with a
/// member's class represented by R - g. FiniteSets on finite_cofinite: the
/// two-element algebra, R mapping to its cofiniteness.
inline SetAlgebra quotient_algebra(const SetAlgebra& m, const Ideal& i) {
  require_ideal(m, i);
  if (i.kind == IdealKind::FiniteSets) return SetAlgebra::from_atoms(m.universe(), {SymSet::full(m.universe())}, "quotient");
  detail::require_finitely_atomic(m);
  if (i.generator->is_empty()) return m;
  std::vector<SymSet> atoms;
  for (const auto& a : m.atoms())
    if (!a.subset_of(*i.generator)) atoms.push_back(a);
  return SetAlgebra::from_atoms(m.universe(), std::move(atoms), "quotient", true);
}

/// Canonical representative of the class of r in m / i.
inline SymSet quotient_class(const SetAlgebra& m, const Ideal& i, const SymSet& r) {
  require_ideal(m, i);
  if (!m.contains(r)) throw Error(ErrorCode::InvalidArgument, r.render() + " is not a member of " + m.render());
  if (i.kind == IdealKind::FiniteSets) return r.is_finite() ? SymSet::empty(m.universe()) : SymSet::full(m.universe());
  return r - *i.generator;
}

// ---------------------------------------------------------------------------
// Induced maps
// ---------------------------------------------------------------------------

struct StoneMap {
  StoneSpace source;
  StoneSpace target;
  std::vector<std::size_t> image;  // ultrafilter index of source -> of target

  /// embed_N(f(x)) equals the image of embed_M(x) at every ground point.
  bool commutes(const FunctionSpec& f) const {
    const auto& u = source.algebra().universe();
    if (!u.is_finite()) return true;
    for (const auto& x : SymSet::full(u).elements()) {
      const auto ex = source.embed(x);
      if (!ex) continue;
      const auto ey = target.embed(f.eval(x));
      if (!ey || *ey != image[*ex]) return false;
    }
    return true;
  }

  std::string render() const {
    std::string s = "{";
    for (std::size_t i = 0; i < image.size(); ++i) s += (i ? ", " : "") + ("U" + std::to_string(i) + "->U" + std::to_string(image[i]));
    return s + "}";
  }
};

inline StoneMap stone_map(const FunctionSpec& f, const SetAlgebra& m, const SetAlgebra& n) {
  detail::require_finitely_atomic(m);
  detail::require_finitely_atomic(n);
  const auto meas = measurable(f, m, n, Strategy::for_universe(m.universe()));
  if (!meas.measurable)
    throw Error(ErrorCode::NotMeasurable, f.render() + " pulls " + meas.witness->render() + " outside " + m.render());
  StoneMap out{StoneSpace(m), StoneSpace(n), {}};
  for (const auto& a : out.source.points()) {
    std::optional<std::size_t> hit;
    for (const auto& b : out.target.points())
      if (a.atom.subset_of(f.preimage(b.atom))) hit = b.index;
    if (!hit) throw Error(ErrorCode::NotMeasurable, "atom " + a.atom.render() + " has no target ultrafilter");
    out.image.push_back(*hit);
  }
  return out;
}

/// Graphviz text for a Stone space: one node per ultrafilter, labelled by its
/// atom (its class in a quotient), and an edge from each ground point.
inline std::string emit_dot(const StoneSpace& s) {
  std::ostringstream os;
  const auto& m = s.algebra();
  const bool quotient = m.origin() == "quotient";
  os << "digraph stone {\n";
  os << "  // algebra: " << m.render() << "\n";
  for (const auto& u : s.points()) {
    const auto label = quotient ? "[" + u.atom.render() + "]" : u.atom.render();
    os << "  u" << u.index << " [shape=box, label=\"U" << u.index << " " << label << "\", clopen=\"{U : "
       << u.atom.render() << " in U}\"];\n";
  }
  const auto& univ = m.universe();
  if (univ.is_finite()) {
    for (const auto& x : SymSet::full(univ).elements()) {
      const auto e = s.embed(x);
      if (!e) continue;
      os << "  p" << render_point(x) << " [shape=point, xlabel=\"" << render_point(x) << "\"];\n";
      os << "  p" << render_point(x) << " -> u" << *e << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace proxlab
