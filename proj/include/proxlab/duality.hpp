#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "proxlab/function.hpp"
#include "proxlab/laws.hpp"

namespace proxlab {

/// {R : R ≺ R}.
///
/// Finite universes: computed by exhaustion, atoms are the membership
/// signature classes of the points. Symbolic kinds: by rule (one_point gives
/// finite/cofinite, metric gives the trivial clopen algebra, an algebra
/// proximity gives back its algebra).
inline SetAlgebra algebra_from_proximity(const Proximity& d) {
  const auto& u = d.universe();
  if (u.is_finite()) {
    const auto carrier = d.carrier();
    std::vector<SymSet> members;
    for (const auto& r : all_subsets(u))
      if (r.subset_of(carrier) && strongly_below(d, r, r)) members.push_back(r);
    std::vector<SymSet> atoms;
    for (const auto& x : finite_points(u)) {
      const auto sx = singleton(u, x);
      if (!sx.subset_of(carrier)) continue;
      SymSet atom = carrier;
      for (const auto& r : members) atom = sx.subset_of(r) ? atom & r : atom - r;
      if (std::find(atoms.begin(), atoms.end(), atom) == atoms.end()) atoms.push_back(atom);
    }
    return SetAlgebra::from_atoms(u, std::move(atoms), "m_delta", !carrier.is_full());
  }
  switch (d.kind_id()) {
    case ProximityKind::Discrete: return SetAlgebra::power_set(u);
    case ProximityKind::OnePoint: return SetAlgebra::finite_cofinite(u, u.with_infinity);
    case ProximityKind::Metric: return SetAlgebra::from_atoms(u, {SymSet::full(u)}, "clopen");
    case ProximityKind::FromAlgebra: return d.as<kinds::FromAlgebra>()->algebra;
    default: break;
  }
  throw Error(ErrorCode::UnsupportedKind, "no algebra of self-below sets for " + d.render());
}

inline Proximity proximity_from_algebra(const SetAlgebra& m) { return Proximity::from_algebra(m); }

namespace detail {

/// A few points of a set, for basis checks on symbolic universes.
inline std::vector<Point> sample_points(const SymSet& a, std::size_t n) {
  const auto& u = a.universe();
  if (u.is_finite()) {
    std::vector<Point> out;
    for (auto k : a.elements()) out.emplace_back(k);
    return out;
  }
  if (u.is_integers()) return a.first_elements(n);
  std::vector<Point> out;
  for (const auto& iv : a.interval_payload().parts) {
    if (iv.lo_closed) out.emplace_back(iv.lo);
    if (iv.hi_closed && iv.hi != iv.lo) out.emplace_back(iv.hi);
    if (iv.lo != iv.hi) out.emplace_back((iv.lo + iv.hi) / 2);
  }
  return out;
}

inline bool discrete_like(const Proximity& d) {
  if (d.kind_id() == ProximityKind::Discrete) return true;
  if (const auto* m = d.as<kinds::FromAlgebra>()) return m->algebra.kind() == AlgebraKind::PowerSet;
  return false;
}

/// Integer proximities with A δ B iff A∩B ≠ ∅ or both sets cluster at
/// infinity (one_point, and the finite/cofinite algebra proximities).
inline bool cluster_like(const Proximity& d) {
  if (!d.universe().is_integers()) return false;
  if (d.kind_id() == ProximityKind::OnePoint) return true;
  if (const auto* m = d.as<kinds::FromAlgebra>())
    return m->algebra.kind() == AlgebraKind::FiniteCofinite && (m->algebra.pinned_infinity() || !d.universe().with_infinity);
  return false;
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// Every a ≺ b admits C with a ≺ C ≺ C ≺ b.
///
/// Witnesses come from the algebra of self-below sets when it is
/// representable (then the search is exact), otherwise from up to eight
/// interpolation iterates, and a miss is inconclusive.
inline LawReport is_zero_dimensional(const Proximity& d, const Strategy& s, const std::string& subject = {}) {
  LawRun run("zero_dim", {subject.empty() ? d.render() : subject}, s);
  std::optional<SetAlgebra> m;
  try {
    m = algebra_from_proximity(d);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedKind) throw;
    run.report().note("self-below algebra not representable; using interpolation iterates");
  }
  bool missed = false;
  const auto probes = proximity_probes(d, s);
  for (const auto& a : probes)
    for (const auto& b : probes) {
      if (run.stop()) break;
      if (!strongly_below(d, a, b)) continue;
      run.count();
      if (m) {
        if (!m->member_between(a, b)) run.fail("no self-below set between", {{"A", a}, {"B", b}});
        continue;
      }
      bool found = false;
      SymSet lo = a;
      for (int depth = 0; depth < 8 && !found; ++depth) {
        const auto c = interpolate(d, lo, b);
        found = strongly_below(d, c, c);
        lo = c;
      }
      if (!found && !missed) {
        missed = true;
        run.report().note("no witness among interpolation iterates for A = " + a.render() + ", B = " + b.render());
      }
    }
  if (!run.failed() && missed) return run.finish_with(Status::Inconclusive);
  return run.finish(s.success());
}

/// M_δ contains ∅ and X and is closed under complement and union (probed).
inline LawReport check_m_delta_algebra(const Proximity& d, const Strategy& s, const std::string& subject = {}) {
  LawRun run("thm.2.1.1", {subject.empty() ? d.render() : subject}, s);
  auto member = [&](const SymSet& r) { return strongly_below(d, r, r); };
  const auto x = d.carrier();
  run.count(2);
  if (!member(SymSet::empty(d.universe()))) run.fail("empty set is not self-below");
  if (!member(x)) run.fail("whole space is not self-below");
  std::vector<SymSet> ms;
  for (const auto& r : proximity_probes(d, s))
    if (member(r)) ms.push_back(r);
  const auto third = s.kind == StrategyKind::Exhaustive ? ms : thin(ms, 64);
  for (const auto& r : ms) {
    run.count();
    if (!member(d.complement(r))) run.fail("complement of a member is not a member", {{"R", r}});
    for (const auto& t : third) {
      if (run.stop()) break;
      run.count();
      if (!member(r | t)) run.fail("union of members is not a member", {{"R", r}, {"S", t}});
    }
  }
  run.report().evidence(std::to_string(ms.size()) + " self-below probe sets");
  return run.finish(s.success());
}

/// δ_M is a zero-dimensional proximity.
inline LawReport check_algebra_proximity(const SetAlgebra& m, const Strategy& s, const std::string& subject = {}) {
  const auto d = proximity_from_algebra(m);
  const auto name = subject.empty() ? m.render() : subject;
  LawRun run("thm.2.1.2", {name}, s);
  for (const auto& sub : {check_proximity_axioms(d, s, name), check_prec_properties(d, s, name), is_zero_dimensional(d, s, name)}) {
    run.count(sub.cases_checked);
    if (sub.status == Status::Counterexample) {
      std::vector<Witness> ws(sub.witnesses.begin(), sub.witnesses.end());
      run.fail_with(sub.law + " fails", ws, sub.witness_sets);
    } else if (!holds(sub.status)) {
      run.report().note(sub.law + " " + std::string(status_name(sub.status)));
      return run.finish_with(Status::Inconclusive);
    }
  }
  return run.finish(s.success());
}

/// δ_{M_δ} = δ for a zero-dimensional δ.
inline LawReport check_proximity_roundtrip(const Proximity& d, const Strategy& s, const std::string& subject = {}) {
  const auto name = subject.empty() ? d.render() : subject;
  const auto z = is_zero_dimensional(d, s, name);
  if (z.status == Status::Counterexample)
    throw Error(ErrorCode::NotZeroDimensional, name + " is not zero-dimensional");
  if (!holds(z.status)) throw Error(ErrorCode::PreconditionNotEstablished, "zero-dimensionality of " + name + " is undecided");
  auto r = check_same_relation("thm.2.1.3", d, proximity_from_algebra(algebra_from_proximity(d)), s, {name});
  r.note("M_delta = " + algebra_from_proximity(d).render());
  return r;
}

/// M = M_{δ_M}: membership agrees with self-belowness under δ_M.
inline LawReport check_algebra_roundtrip(const SetAlgebra& m, const Strategy& s, const std::string& subject = {}) {
  const auto d = proximity_from_algebra(m);
  LawRun run("thm.2.1.4", {subject.empty() ? m.render() : subject}, s);
  for (const auto& r : probe_sets(m.universe(), s)) {
    if (run.stop()) break;
    run.count();
    if (m.contains(r) != strongly_below(d, r, r))
      run.fail(m.contains(r) ? "member is not self-below" : "self-below set is not a member", {{"R", r}});
  }
  if (m.universe().is_finite()) {
    run.count();
    const auto back = algebra_from_proximity(d);
    if (back.atoms() != m.atoms()) run.fail("atoms differ: " + back.render() + " vs " + m.render());
  }
  return run.finish(s.success());
}

/// M is a basis for the topology of δ_M: every open set is the union of the
/// members it contains, and members are open.
inline LawReport check_basis(const SetAlgebra& m, const Strategy& s, const std::string& subject = {}) {
  const auto d = proximity_from_algebra(m);
  LawRun run("thm.2.1.5", {subject.empty() ? m.render() : subject}, s);
  std::size_t opens = 0;
  for (const auto& u : probe_sets(m.universe(), s)) {
    if (run.stop()) break;
    run.count();
    if (m.contains(u) && !is_open(d, u)) run.fail("member is not open", {{"R", u}});
    if (!is_open(d, u)) continue;
    ++opens;
    for (const auto& x : detail::sample_points(u, 8)) {
      run.count();
      if (!m.member_between(singleton(m.universe(), x), u))
        run.fail("open set is not a union of members at " + render_point(x), {{"U", u}});
    }
  }
  run.report().evidence(std::to_string(opens) + " open probe sets");
  return run.finish(s.success());
}

/// f is a proximity map (A δ B implies f(A) ρ f(B)).
///
/// Decided exactly for finite-image maps (near fibres must have near values),
/// for discrete sources, and for the integer cluster rules; otherwise a
/// refutation search over the probe pairs that ends inconclusive.
inline LawReport is_proximity_map(const FunctionSpec& f, const Proximity& d, const Proximity& r, const Strategy& s,
                                  std::vector<std::string> subjects = {}) {
  require_same(f.domain(), d.universe());
  require_same(f.codomain(), r.universe());
  if (subjects.empty()) subjects = {f.render(), d.render(), r.render()};
  LawRun run("prox.map", std::move(subjects), s);
  auto image_pair_fails = [&](const SymSet& a, const SymSet& b) {
    const auto fa = f.image(a) & r.carrier(), fb = f.image(b) & r.carrier();
    return !near(r, fa, fb);
  };
  auto fail_pair = [&](const SymSet& a, const SymSet& b) {
    run.fail("near sets with far images", {{"A", a}, {"B", b}, {"f(A)", f.image(a)}, {"f(B)", f.image(b)}});
  };
  if (f.finite_image()) {
    std::vector<FunctionSpec::Piece> fib;
    for (const auto& p : f.fibers()) {
      auto w = p.where & d.carrier();
      if (!w.is_empty()) fib.push_back({std::move(w), p.value});
    }
    for (std::size_t i = 0; i < fib.size(); ++i)
      for (std::size_t j = i; j < fib.size(); ++j) {
        if (run.stop()) break;
        run.count();
        if (near(d, fib[i].where, fib[j].where) && image_pair_fails(fib[i].where, fib[j].where))
          fail_pair(fib[i].where, fib[j].where);
      }
    run.report().evidence("decided on " + std::to_string(fib.size()) + " fibres");
    return run.finish(Status::HoldsExhaustive);
  }
  if (detail::discrete_like(d)) {
    run.count();
    run.report().evidence("source is discrete");
    return run.finish(Status::HoldsExhaustive);
  }
  if (detail::cluster_like(d)) {
    if (f.proper_bijection() && detail::cluster_like(r)) {
      run.count();
      run.report().evidence("bijection preserving finite and infinite sets");
      return run.finish(Status::HoldsExhaustive);
    }
    if (const auto t = f.tail_limit(); t && r.kind_id() == ProximityKind::Metric) {
      run.count();
      run.report().evidence("every infinite set accumulates at " + render_point(*t));
      return run.finish(Status::HoldsExhaustive);
    }
  }
  const bool pl = [&] {
    const auto is_pl = [](const FunctionSpec& g) { return g.kind() == FunctionKind::PiecewiseLinear; };
    if (is_pl(f)) return true;
    return f.kind() == FunctionKind::Compose && is_pl(*f.inner()) && is_pl(*f.outer());
  }();
  if (pl && d.kind_id() == ProximityKind::Metric && r.kind_id() == ProximityKind::Metric) {
    run.count();
    run.report().evidence("continuous piecewise linear, hence uniformly continuous");
    return run.finish(Status::HoldsExhaustive);
  }
  const auto probes = proximity_probes(d, s);
  std::uint64_t skipped = 0;
  for (const auto& a : probes)
    for (const auto& b : probes) {
      if (run.stop()) break;
      if (!near(d, a, b)) continue;
      try {
        run.count();
        if (image_pair_fails(a, b)) fail_pair(a, b);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::UnsupportedKind) throw;
        ++skipped;
      }
    }
  if (skipped) run.report().note(std::to_string(skipped) + " pairs with unrepresentable images skipped");
  return run.finish_with(run.failed() ? Status::Counterexample : Status::Inconclusive);
}

/// Measurability: f^{-1}(U) ∈ M for every U ∈ N. Returns the verdict, whether
/// it is exact, and a failing U if any.
struct Measurability {
  bool measurable = true;
  bool exact = true;
  std::optional<SymSet> witness;
};

inline Measurability measurable(const FunctionSpec& f, const SetAlgebra& m, const SetAlgebra& n, const Strategy& s) {
  require_same(f.domain(), m.universe());
  require_same(f.codomain(), n.universe());
  Measurability out;
  auto test = [&](const SymSet& u) {
    if (!out.measurable) return;
    if (!m.contains(f.preimage(u))) {
      out.measurable = false;
      out.witness = u;
    }
  };
  if (n.finitely_atomic()) {
    for (const auto& a : n.atoms()) test(a);
    return out;
  }
  if (f.finite_image()) {
    // Only U ∩ image matters; each subset S of the image is realised by a
    // member iff some member lies between S and S ∪ (complement of image).
    const auto vals = f.image_values();
    if (vals.size() > 16) throw Error(ErrorCode::RepresentationLimit, "image too large");
    const auto img = SymSet::of(n.universe(), vals);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vals.size()); ++mask) {
      std::vector<Point> pts;
      for (std::size_t i = 0; i < vals.size(); ++i)
        if ((mask >> i) & 1u) pts.push_back(vals[i]);
      const auto sset = SymSet::of(n.universe(), pts);
      if (const auto u = n.member_between(sset, sset | img.complement())) test(*u);
    }
    return out;
  }
  if (f.proper_bijection() && n.kind() == AlgebraKind::FiniteCofinite &&
      (m.kind() == AlgebraKind::PowerSet ||
       (m.kind() == AlgebraKind::FiniteCofinite && m.pinned_infinity() == n.pinned_infinity())))
    return out;
  out.exact = false;
  for (const auto& u : probe_sets(n.universe(), s))
    if (n.contains(u)) test(u);
  return out;
}

/// Proximity map between δ_M and δ_N iff measurable.
inline LawReport check_prox_iff_measurable(const FunctionSpec& f, const SetAlgebra& m, const SetAlgebra& n,
                                           const Strategy& s, std::vector<std::string> subjects = {}) {
  if (subjects.empty()) subjects = {f.render(), m.render(), n.render()};
  LawRun run("thm.2.2", subjects, s);
  const auto lhs = is_proximity_map(f, proximity_from_algebra(m), proximity_from_algebra(n), s);
  const auto rhs = measurable(f, m, n, s);
  run.count(lhs.cases_checked + 1);
  const bool pm = lhs.status == Status::Counterexample ? false : true;
  run.report().evidence("proximity map = " + (lhs.status == Status::Inconclusive ? std::string("unknown") : detail::yes_no(pm)));
  run.report().evidence("measurable = " + detail::yes_no(rhs.measurable));
  if (rhs.witness) run.report().witness_set("U", *rhs.witness);
  if (lhs.status == Status::Inconclusive) return run.finish_with(Status::Inconclusive);
  if (pm != rhs.measurable) {
    std::vector<Witness> ws(lhs.witnesses.begin(), lhs.witnesses.end());
    run.fail_with("the two sides disagree", ws, lhs.witness_sets);
    return run.finish(Status::Counterexample);
  }
  return run.finish(rhs.exact ? Status::HoldsExhaustive : Status::HoldsOnFamily);
}

/// Identities are proximity maps, and g∘f is one whenever f and g are.
inline LawReport check_functoriality(const FunctionSpec& f, const FunctionSpec& g, const Proximity& a,
                                     const Proximity& b, const Proximity& c, const Strategy& s,
                                     std::vector<std::string> subjects = {}) {
  if (subjects.empty()) subjects = {f.render(), g.render()};
  LawRun run("cor.2.5", subjects, s);
  for (const auto* p : {&a, &b, &c}) {
    run.count();
    const auto id = is_proximity_map(FunctionSpec::identity(p->universe()), *p, *p, s);
    if (id.status == Status::Counterexample) run.fail("identity is not a proximity map on " + p->render());
  }
  const auto rf = is_proximity_map(f, a, b, s);
  const auto rg = is_proximity_map(g, b, c, s);
  const auto rgf = is_proximity_map(FunctionSpec::compose(g, f), a, c, s);
  run.count(rf.cases_checked + rg.cases_checked + rgf.cases_checked);
  if (holds(rf.status) && holds(rg.status) && rgf.status == Status::Counterexample) {
    std::vector<Witness> ws(rgf.witnesses.begin(), rgf.witnesses.end());
    run.fail_with("composite of proximity maps is not one", ws, rgf.witness_sets);
  }
  if (!holds(rf.status) || !holds(rg.status)) run.report().note("a factor is not a proximity map; composite unconstrained");
  return run.finish(Status::HoldsExhaustive);
}

// ---------------------------------------------------------------------------
// Finite proximity census
// ---------------------------------------------------------------------------

struct TableCensus {
  std::uint64_t candidates = 0;
  std::uint64_t valid = 0;
  std::uint64_t of_algebra_form = 0;
  std::vector<Proximity> proximities;
};

namespace detail {

/// Axioms 1-5 for a relation on masks of Finite(n), exhaustively.
inline bool table_is_proximity(std::size_t n, const std::vector<bool>& rel) {
  const std::uint64_t sz = std::uint64_t{1} << n, full = sz - 1;
  auto nr = [&](std::uint64_t a, std::uint64_t b) { return rel[a * sz + b]; };
  for (std::uint64_t a = 0; a < sz; ++a)
    for (std::uint64_t b = 0; b < sz; ++b) {
      if (nr(a, b) != nr(b, a)) return false;
      if ((a == 0 || b == 0) && nr(a, b)) return false;
      if ((a & b) && !nr(a, b)) return false;
      for (std::uint64_t c = 0; c < sz; ++c)
        if (nr(a | b, c) != (nr(a, c) || nr(b, c))) return false;
      if (!nr(a, b)) {
        bool found = false;
        for (std::uint64_t e = 0; e < sz && !found; ++e) found = !nr(a, e) && !nr(full & ~e, b);
        if (!found) return false;
      }
    }
  return true;
}

}  // namespace detail

/// Every proximity on Finite(n). For n <= 2 all 2^(4^n) relations are
/// filtered by the axioms; for larger n additivity reduces the candidates to
/// symmetric relations on points (A δ B iff some a∈A, b∈B have {a} δ {b}).
inline TableCensus table_census(std::size_t n) {
  if (n == 0 || n > 4) throw Error(ErrorCode::RepresentationLimit, "census supports 1..4 points");
  const auto u = Universe::finite(n);
  const std::uint64_t sz = std::uint64_t{1} << n;
  TableCensus out;
  std::vector<Proximity> algebra_forms;
  for (const auto& m : all_algebras(n)) algebra_forms.push_back(Proximity::from_algebra(m));
  auto record = [&](const std::vector<bool>& rel) {
    ++out.candidates;
    if (!detail::table_is_proximity(n, rel)) return;
    ++out.valid;
    auto d = Proximity::table(u, rel);
    for (const auto& e : algebra_forms) {
      bool same = true;
      for (std::uint64_t a = 0; a < sz && same; ++a)
        for (std::uint64_t b = 0; b < sz && same; ++b)
          same = near(e, SymSet::from_mask(u, a), SymSet::from_mask(u, b)) == rel[a * sz + b];
      if (same) {
        ++out.of_algebra_form;
        break;
      }
    }
    out.proximities.push_back(std::move(d));
  };
  if (n <= 2) {
    const std::uint64_t bits = sz * sz;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
      std::vector<bool> rel(bits);
      for (std::uint64_t i = 0; i < bits; ++i) rel[i] = ((code >> i) & 1u) != 0;
      record(rel);
    }
    return out;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
    std::vector<std::vector<bool>> pt(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) pt[i][i] = true;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((code >> k) & 1u) pt[pairs[k].first][pairs[k].second] = pt[pairs[k].second][pairs[k].first] = true;
    std::vector<bool> rel(sz * sz);
    for (std::uint64_t a = 0; a < sz; ++a)
      for (std::uint64_t b = 0; b < sz; ++b) {
        bool v = false;
        for (std::size_t i = 0; i < n && !v; ++i)
          for (std::size_t j = 0; j < n && !v; ++j) v = ((a >> i) & 1u) && ((b >> j) & 1u) && pt[i][j];
        rel[a * sz + b] = v;
      }
    record(rel);
  }
  return out;
}

inline LawReport check_table_census(std::size_t n) {
  LawRun run("prox.table_census", {Universe::finite(n).render()}, Strategy::exhaustive());
  const auto c = table_census(n);
  run.count(c.candidates);
  run.report().evidence("candidates = " + std::to_string(c.candidates));
  run.report().evidence("proximities = " + std::to_string(c.valid));
  run.report().evidence("of the form delta_M = " + std::to_string(c.of_algebra_form));
  if (c.of_algebra_form != c.valid) run.fail("a finite proximity is not induced by an algebra");
  return run.finish(Status::HoldsExhaustive);
}

}  // namespace proxlab
