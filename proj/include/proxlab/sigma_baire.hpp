#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "proxlab/duality.hpp"

namespace proxlab {

enum class SequenceKind { Constant, List, Prefixes, ShrinkTail, Neighbourhoods, Erosions };

/// A countable family of sets given in closed form.
///
/// List: the listed terms, then `tail` forever. Prefixes(s): term n is the
/// first n points of s. ShrinkTail(p, q): p ∪ (q ∩ {|k| >= n}), the point at
/// infinity counting as arbitrarily far out. Neighbourhoods(s): closed
/// 1/(n+1)-neighbourhoods in [0,1]. Erosions(s): points at distance at least
/// 1/(n+2) from the complement of s.
class SetSequence {
 public:
  static SetSequence constant(const SymSet& a) { return SetSequence(SequenceKind::Constant, a); }

  static SetSequence list(std::vector<SymSet> terms, const SymSet& tail) {
    for (const auto& t : terms) require_same(tail.universe(), t.universe());
    SetSequence z(SequenceKind::List, tail);
    z.terms_ = std::move(terms);
    return z;
  }

  static SetSequence prefixes(const SymSet& s) {
    if (s.universe().is_interval()) throw Error(ErrorCode::WrongUniverseKind, "prefixes need an enumerable universe");
    return SetSequence(SequenceKind::Prefixes, s);
  }

  static SetSequence shrink_tail(const SymSet& core, const SymSet& tail) {
    require_same(core.universe(), tail.universe());
    if (!core.universe().is_integers()) throw Error(ErrorCode::WrongUniverseKind, "shrink_tail needs an integer universe");
    SetSequence z(SequenceKind::ShrinkTail, core);
    z.q_ = tail;
    return z;
  }

  static SetSequence neighbourhoods(const SymSet& s) {
    if (!s.universe().is_interval()) throw Error(ErrorCode::WrongUniverseKind, "neighbourhoods need unit_interval");
    return SetSequence(SequenceKind::Neighbourhoods, s);
  }

  static SetSequence erosions(const SymSet& s) {
    if (!s.universe().is_interval()) throw Error(ErrorCode::WrongUniverseKind, "erosions need unit_interval");
    return SetSequence(SequenceKind::Erosions, s);
  }

  SequenceKind kind() const { return kind_; }
  const Universe& universe() const { return p_.universe(); }
  const SymSet& base() const { return p_; }
  const std::optional<SymSet>& tail_set() const { return q_; }
  const std::vector<SymSet>& listed() const { return terms_; }

  SymSet term(std::size_t n) const {
    switch (kind_) {
      case SequenceKind::Constant: return p_;
      case SequenceKind::List: return n < terms_.size() ? terms_[n] : p_;
      case SequenceKind::Prefixes: return SymSet::of(universe(), p_.first_elements(n));
      case SequenceKind::ShrinkTail: return p_ | (*q_ & far_out(static_cast<std::int64_t>(n)));
      case SequenceKind::Neighbourhoods: return p_.is_empty() ? p_ : p_.neighbourhood(Rational(1, static_cast<std::int64_t>(n) + 1));
      case SequenceKind::Erosions: {
        const auto rest = p_.complement();
        if (rest.is_empty()) return p_;
        return rest.neighbourhood(Rational(1, static_cast<std::int64_t>(n) + 2), true).complement();
      }
    }
    return p_;
  }

  /// Union of all terms, in closed form.
  SymSet limit_union() const {
    switch (kind_) {
      case SequenceKind::Constant: return p_;
      case SequenceKind::List: {
        SymSet out = p_;
        for (const auto& t : terms_) out = out | t;
        return out;
      }
      case SequenceKind::Prefixes: return p_;
      case SequenceKind::ShrinkTail: return p_ | *q_;
      case SequenceKind::Neighbourhoods: return term(0);
      case SequenceKind::Erosions: {
        // interior of p relative to [0,1]
        const auto rest = p_.complement();
        if (rest.is_empty()) return p_;
        return SymSet::intervals(rest.interval_payload().closure().parts).complement();
      }
    }
    return p_;
  }

  /// Intersection of all terms, in closed form.
  SymSet limit_intersection() const {
    switch (kind_) {
      case SequenceKind::Constant: return p_;
      case SequenceKind::List: {
        SymSet out = p_;
        for (const auto& t : terms_) out = out & t;
        return out;
      }
      case SequenceKind::Prefixes: return term(0);
      case SequenceKind::ShrinkTail: {
        if (universe().with_infinity) return p_ | (*q_ & singleton(universe(), Infinity{}));
        return p_;
      }
      case SequenceKind::Neighbourhoods: return SymSet::intervals(p_.interval_payload().closure().parts);
      case SequenceKind::Erosions: return term(0);
    }
    return p_;
  }

  /// Index from which the sequence is constant, when there is one.
  std::optional<std::size_t> stabilises_at() const {
    switch (kind_) {
      case SequenceKind::Constant: return 0;
      case SequenceKind::List: return terms_.size();
      case SequenceKind::Prefixes: {
        const auto c = p_.cardinality();
        if (c.infinite) return std::nullopt;
        return c.count;
      }
      case SequenceKind::ShrinkTail: {
        const auto rest = *q_ - p_;
        const auto& s = rest.periodic_payload();
        if (s.has_residues()) return std::nullopt;
        std::int64_t m = 0;
        for (const auto& [k, v] : s.exceptions)
          if (v) m = std::max(m, (k < 0 ? -k : k) + 1);
        return static_cast<std::size_t>(m);
      }
      case SequenceKind::Neighbourhoods:
      case SequenceKind::Erosions: {
        if (p_.is_empty() || p_.is_full()) return 0;
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  bool nonincreasing() const {
    switch (kind_) {
      case SequenceKind::Constant:
      case SequenceKind::ShrinkTail:
      case SequenceKind::Neighbourhoods: return true;
      case SequenceKind::Prefixes: return p_.is_empty();
      case SequenceKind::Erosions: return stabilises_at().has_value();
      case SequenceKind::List: {
        for (std::size_t i = 0; i < terms_.size(); ++i)
          if (!term(i + 1).subset_of(term(i))) return false;
        return true;
      }
    }
    return false;
  }

  bool nondecreasing() const {
    switch (kind_) {
      case SequenceKind::Constant:
      case SequenceKind::Prefixes:
      case SequenceKind::Erosions: return true;
      case SequenceKind::ShrinkTail: return (*q_ - p_).is_empty() || stabilises_at() == std::size_t{0};
      case SequenceKind::Neighbourhoods: return stabilises_at().has_value();
      case SequenceKind::List: {
        for (std::size_t i = 0; i < terms_.size(); ++i)
          if (!term(i).subset_of(term(i + 1))) return false;
        return true;
      }
    }
    return false;
  }

  std::string render() const {
    switch (kind_) {
      case SequenceKind::Constant: return "constant(" + p_.render() + ")";
      case SequenceKind::List: {
        std::string s = "list(";
        for (std::size_t i = 0; i < terms_.size(); ++i) s += (i ? ", " : "") + terms_[i].render();
        return s + "; tail=" + p_.render() + ")";
      }
      case SequenceKind::Prefixes: return "prefixes(" + p_.render() + ")";
      case SequenceKind::ShrinkTail: return "shrink_tail(core=" + p_.render() + ", tail=" + q_->render() + ")";
      case SequenceKind::Neighbourhoods: return "neighborhoods(" + p_.render() + ")";
      case SequenceKind::Erosions: return "erosions(" + p_.render() + ")";
    }
    return "?";
  }

 private:
  SetSequence(SequenceKind k, SymSet p) : kind_(k), p_(std::move(p)) {}

  SymSet far_out(std::int64_t n) const {
    const auto& u = universe();
    std::vector<Point> near_zero;
    for (std::int64_t k = -(n - 1); k <= n - 1; ++k) near_zero.emplace_back(k);
    return SymSet::full(u) - SymSet::of(u, near_zero);
  }

  SequenceKind kind_;
  SymSet p_;
  std::optional<SymSet> q_;
  std::vector<SymSet> terms_;
};

enum class FunctionSequenceKind { Constant, Eventually, Powers };

/// A sequence of maps with an exactly computable pointwise limit.
class FunctionSequence {
 public:
  static FunctionSequence constant(const FunctionSpec& f) { return FunctionSequence(FunctionSequenceKind::Constant, f); }

  static FunctionSequence eventually(std::vector<FunctionSpec> head, const FunctionSpec& limit) {
    for (const auto& g : head)
      if (!(g.domain() == limit.domain()) || !(g.codomain() == limit.codomain()))
        throw Error(ErrorCode::UniverseMismatch, "sequence terms must share domain and codomain");
    FunctionSequence s(FunctionSequenceKind::Eventually, limit);
    s.head_ = std::move(head);
    return s;
  }

  static FunctionSequence powers(const FunctionSpec& f) {
    if (!f.codomain().is_interval()) throw Error(ErrorCode::WrongUniverseKind, "powers need values in unit_interval");
    return FunctionSequence(FunctionSequenceKind::Powers, f);
  }

  FunctionSequenceKind kind() const { return kind_; }
  const FunctionSpec& base() const { return f_; }
  const Universe& domain() const { return f_.domain(); }
  const Universe& codomain() const { return f_.codomain(); }

  /// Term n, counting from 0 (powers: f^(n+1)).
  FunctionSpec term(std::size_t n) const {
    switch (kind_) {
      case FunctionSequenceKind::Constant: return f_;
      case FunctionSequenceKind::Eventually: return n < head_.size() ? head_[n] : f_;
      case FunctionSequenceKind::Powers: return f_.power_of(static_cast<unsigned>(n + 1));
    }
    return f_;
  }

  FunctionSpec limit() const {
    if (kind_ == FunctionSequenceKind::Powers) return f_.power_limit_map();
    return f_;
  }

  std::string render() const {
    switch (kind_) {
      case FunctionSequenceKind::Constant: return "constant(" + f_.render() + ")";
      case FunctionSequenceKind::Eventually: {
        std::string s = "eventually(";
        for (std::size_t i = 0; i < head_.size(); ++i) s += (i ? ", " : "") + head_[i].render();
        return s + "; limit=" + f_.render() + ")";
      }
      case FunctionSequenceKind::Powers: return "powers(" + f_.render() + ")";
    }
    return "?";
  }

 private:
  FunctionSequence(FunctionSequenceKind k, FunctionSpec f) : kind_(k), f_(std::move(f)) {}

  FunctionSequenceKind kind_;
  FunctionSpec f_;
  std::vector<FunctionSpec> head_;
};

// ---------------------------------------------------------------------------
// Chains and proximally zero sets
// ---------------------------------------------------------------------------

struct ChainVerdict {
  bool all_levels = false;                // decided for every n
  std::optional<std::size_t> failure;     // first n with term(n+1) not ≺ term(n)
  std::string reason;
};

/// Decides term(n+1) ≺ term(n) for every n where a rule applies, and
/// probes the first `depth` levels in any case.
inline ChainVerdict chain_verdict(const Proximity& d, const SetSequence& z, std::size_t depth) {
  require_same(d.universe(), z.universe());
  ChainVerdict v;
  for (std::size_t n = 0; n < depth; ++n)
    if (!strongly_below(d, z.term(n + 1), z.term(n))) {
      v.failure = n;
      v.reason = "level " + std::to_string(n) + " fails";
      return v;
    }
  if (const auto st = z.stabilises_at()) {
    const auto k = *st;
    for (std::size_t n = depth; n < k; ++n)
      if (!strongly_below(d, z.term(n + 1), z.term(n))) {
        v.failure = n;
        v.reason = "level " + std::to_string(n) + " fails";
        return v;
      }
    const auto t = z.term(k);
    if (!strongly_below(d, t, t)) {
      v.failure = k;
      v.reason = "stable term is not self-below";
      return v;
    }
    v.all_levels = true;
    v.reason = "constant from level " + std::to_string(k) + ", stable term self-below";
    return v;
  }
  if (z.kind() == SequenceKind::ShrinkTail && detail::cluster_like(d)) {
    // Z_{n+1} misses Z_n^c, and clusters at infinity exactly when p ∪ q
    // does; Z_n^c clusters exactly when (p ∪ q)^c does.
    const auto top = z.limit_union();
    if (top.clusters_at_infinity() && top.complement().clusters_at_infinity()) {
      v.failure = depth;
      v.reason = "core and tail leave an infinite remainder";
      return v;
    }
    v.all_levels = true;
    v.reason = "every complement Z_n^c stays away from infinity";
    return v;
  }
  if (z.kind() == SequenceKind::Neighbourhoods && d.kind_id() == ProximityKind::Metric) {
    v.all_levels = true;
    v.reason = "consecutive closed neighbourhoods are a positive distance apart";
    return v;
  }
  if (detail::discrete_like(d) && z.nonincreasing()) {
    v.all_levels = true;
    v.reason = "nonincreasing under a discrete proximity";
    return v;
  }
  v.reason = "only the first " + std::to_string(depth) + " levels probed";
  return v;
}

inline LawReport is_prec_chain(const Proximity& d, const SetSequence& z, std::size_t depth,
                               std::vector<std::string> subjects = {}) {
  if (subjects.empty()) subjects = {d.render(), z.render()};
  auto s = Strategy::family();
  s.depth = depth;
  LawRun run("thm.2.7", std::move(subjects), s);
  const auto v = chain_verdict(d, z, depth);
  run.count(v.failure ? *v.failure + 1 : depth);
  if (v.failure) {
    run.fail_with(v.reason, {{"sequence", z.render()}}, {z.term(*v.failure + 1), z.term(*v.failure)});
    run.report().witness_set("Z_n+1", z.term(*v.failure + 1));
    run.report().witness_set("Z_n", z.term(*v.failure));
    return run.finish(Status::Counterexample);
  }
  run.report().evidence(v.reason);
  if (!v.all_levels) return run.finish_with(Status::Inconclusive);
  run.report().evidence("proximally zero: " + z.limit_intersection().render());
  return run.finish(Status::HoldsExhaustive);
}

/// The intersection of a certified ≺-chain.
inline SymSet proximally_zero_from_chain(const Proximity& d, const SetSequence& z, std::size_t depth = 16) {
  const auto v = chain_verdict(d, z, depth);
  if (v.failure) throw Error(ErrorCode::NotAChain, z.render() + ": " + v.reason);
  if (!v.all_levels) throw Error(ErrorCode::ChainOnlyProbed, z.render() + ": " + v.reason);
  return z.limit_intersection();
}

// ---------------------------------------------------------------------------
// P_aleph1
// ---------------------------------------------------------------------------

namespace detail {

/// Every term of `a` is ≺ b, decided for all n, or nullopt when no rule applies.
inline std::optional<bool> all_terms_below(const Proximity& d, const SetSequence& a, const SymSet& b, std::size_t depth) {
  for (std::size_t n = 0; n < depth; ++n)
    if (!strongly_below(d, a.term(n), b)) return false;
  if (const auto st = a.stabilises_at()) {
    for (std::size_t n = depth; n <= *st; ++n)
      if (!strongly_below(d, a.term(n), b)) return false;
    return true;
  }
  switch (a.kind()) {
    case SequenceKind::Prefixes:
      if (!a.base().subset_of(b)) return false;
      if (discrete_like(d)) return true;
      if (cluster_like(d)) {
        // finite prefixes cluster only through the point at infinity
        const bool inf = a.base().contains(Infinity{});
        return !(inf && b.complement().clusters_at_infinity());
      }
      return std::nullopt;
    case SequenceKind::Erosions:
      if (d.kind_id() == ProximityKind::Metric && a.base() == b) return true;
      return std::nullopt;
    default: return std::nullopt;
  }
}

/// Sequence families probed against a target b.
inline std::vector<SetSequence> candidate_sequences(const Proximity& d, const SymSet& b) {
  std::vector<SetSequence> out;
  if (d.universe().is_interval()) {
    out.push_back(SetSequence::erosions(b));
  } else {
    out.push_back(SetSequence::prefixes(b));
  }
  return out;
}

}  // namespace detail

struct PAleph1Result {
  LawReport report;
  std::optional<SetSequence> sequence;
  std::optional<SymSet> target;
};

inline PAleph1Result p_aleph1(const Proximity& d, const Strategy& s, const std::string& subject = {}) {
  LawRun run("p_aleph1", {subject.empty() ? d.render() : subject}, s);
  const auto& u = d.universe();
  if (u.is_finite()) {
    // countable unions of subsets of a finite set are finite unions
    const auto sets = all_subsets(u);
    for (const auto& b : sets) {
      std::vector<SymSet> below;
      for (const auto& a : sets)
        if (a.subset_of(d.carrier()) && strongly_below(d, a, b)) below.push_back(a);
      SymSet all = SymSet::empty(u);
      for (const auto& a : below) all = all | a;
      run.count(below.size() + 1);
      if (!strongly_below(d, all, b)) run.fail("union of sets below B is not below B", {{"union", all}, {"B", b}});
    }
    run.report().evidence("countable unions reduce to finite unions");
    return {run.finish(Status::HoldsExhaustive), std::nullopt, std::nullopt};
  }
  std::optional<SetSequence> seq;
  std::optional<SymSet> target;
  for (const auto& b : proximity_probes(d, s)) {
    if (run.stop() || seq) break;
    for (const auto& a : detail::candidate_sequences(d, b)) {
      run.count();
      const auto below = detail::all_terms_below(d, a, b, s.depth);
      if (!below || !*below) continue;
      const auto un = a.limit_union();
      if (!strongly_below(d, un, b)) {
        run.fail_with("every term is below B but the union is not",
                      {{"sequence", "A_n = " + a.render()}, {"set", "B = " + b.render()}, {"set", "union = " + un.render()}},
                      {b, un});
        seq = a;
        target = b;
        break;
      }
    }
  }
  if (seq) return {run.finish(Status::Counterexample), seq, target};
  if (detail::discrete_like(d)) {
    run.report().evidence("A ≺ B iff A ⊆ B, which unions preserve");
    return {run.finish(Status::HoldsOnFamily), std::nullopt, std::nullopt};
  }
  run.report().note("no counterexample among the sequence families");
  return {run.finish_with(Status::Inconclusive), std::nullopt, std::nullopt};
}

inline LawReport is_p_aleph1(const Proximity& d, const Strategy& s, const std::string& subject = {}) {
  return p_aleph1(d, s, subject).report;
}

/// M is a σ-algebra iff δ_M is P_aleph1.
inline LawReport check_sigma_iff_p_aleph1(const SetAlgebra& m, const Strategy& s, const std::string& subject = {}) {
  const auto name = subject.empty() ? m.render() : subject;
  LawRun run("thm.2.4", {name}, s);
  const auto d = proximity_from_algebra(m);
  // σ side: look for members whose countable union leaves M
  std::optional<SetSequence> sigma_witness;
  if (!m.universe().is_finite() && !m.universe().is_interval()) {
    for (const auto& b : probe_sets(m.universe(), s)) {
      run.count();
      if (m.contains(b)) continue;
      const auto a = SetSequence::prefixes(b);
      const auto st = a.stabilises_at();
      if (!st) {
        // prefixes are finite sets; finite sets are members unless M is atomic on Z
        bool members = m.kind() != AlgebraKind::Atomic;
        if (m.kind() == AlgebraKind::FiniteCofinite && m.pinned_infinity() && b.contains(Infinity{})) members = false;
        if (members) {
          sigma_witness = a;
          break;
        }
      }
    }
  }
  const bool sigma = m.sigma_closed();
  if (sigma == sigma_witness.has_value()) run.fail("σ-closure rule contradicts the sequence search");
  const auto p = p_aleph1(d, s, name);
  run.count(p.report.cases_checked);
  run.report().evidence("sigma = " + detail::yes_no(sigma));
  if (p.report.status == Status::Inconclusive) {
    run.report().evidence("p_aleph1 = unknown");
    return run.finish_with(Status::Inconclusive);
  }
  const bool pa = holds(p.report.status);
  run.report().evidence("p_aleph1 = " + detail::yes_no(pa));
  if (sigma_witness) run.report().witnesses.push_back({"sequence", "A_n = " + sigma_witness->render()});
  if (p.sequence) run.report().witnesses.push_back({"sequence", "p_aleph1 witness A_n = " + p.sequence->render() + ", B = " + p.target->render()});
  if (sigma != pa) run.fail("σ-closure and P_aleph1 disagree");
  if (m.universe().is_finite() || !pa) return run.finish(Status::HoldsExhaustive);
  return run.finish(p.report.status);
}

/// A P_aleph1 proximity is zero-dimensional.
inline LawReport check_p_aleph1_implies_zerodim(const Proximity& d, const Strategy& s, const std::string& subject = {}) {
  const auto name = subject.empty() ? d.render() : subject;
  const auto p = is_p_aleph1(d, s, name);
  if (!holds(p.status))
    throw Error(ErrorCode::PreconditionNotEstablished, name + " is not established as P_aleph1 (" +
                                                           std::string(status_name(p.status)) + ")");
  LawRun run("thm.2.3", {name}, s);
  const auto z = is_zero_dimensional(d, s, name);
  run.count(p.cases_checked + z.cases_checked);
  if (z.status == Status::Counterexample) {
    std::vector<Witness> ws(z.witnesses.begin(), z.witnesses.end());
    run.fail_with("P_aleph1 proximity that is not zero-dimensional (contradiction alarm)", ws, z.witness_sets);
  }
  run.report().evidence("p_aleph1: " + std::string(status_name(p.status)));
  run.report().evidence("zero_dim: " + std::string(status_name(z.status)));
  if (z.status == Status::Inconclusive) return run.finish_with(Status::Inconclusive);
  const bool exhaustive = p.status == Status::HoldsExhaustive && z.status == Status::HoldsExhaustive;
  return run.finish(exhaustive ? Status::HoldsExhaustive : Status::HoldsOnFamily);
}

namespace detail {

/// Chains whose intersections are certified proximally zero, one per probe.
inline std::vector<std::pair<SetSequence, SymSet>> certified_zero_sets(const Proximity& d, const Strategy& s) {
  std::vector<std::pair<SetSequence, SymSet>> out;
  for (const auto& r : proximity_probes(d, s)) {
    std::vector<SetSequence> chains{SetSequence::constant(r)};
    if (cluster_like(d) && !d.universe().with_infinity) chains.push_back(SetSequence::shrink_tail(r, r.complement()));
    if (d.kind_id() == ProximityKind::Metric) chains.push_back(SetSequence::neighbourhoods(r));
    for (const auto& z : chains) {
      const auto v = chain_verdict(d, z, s.depth);
      if (v.all_levels && !v.failure) out.emplace_back(z, z.limit_intersection());
    }
  }
  return out;
}

}  // namespace detail

/// P_aleph1 iff M_δ contains every proximally zero set.
inline LawReport check_cor_zero_sets(const Proximity& d, const Strategy& s, const std::string& subject = {}) {
  const auto name = subject.empty() ? d.render() : subject;
  LawRun run("cor.2.8", {name}, s);
  const auto p = p_aleph1(d, s, name);
  const auto m = algebra_from_proximity(d);
  std::optional<std::pair<SetSequence, SymSet>> outside;
  const auto zs = detail::certified_zero_sets(d, s);
  for (const auto& [z, set] : zs) {
    run.count();
    if (!m.contains(set)) {
      outside.emplace(z, set);
      break;
    }
  }
  const bool contains_all = !outside.has_value();
  run.report().evidence("p_aleph1 = " + (p.report.status == Status::Inconclusive ? std::string("unknown") : detail::yes_no(holds(p.report.status))));
  run.report().evidence("zero sets in M_delta = " + detail::yes_no(contains_all));
  run.report().evidence(std::to_string(zs.size()) + " certified zero sets");
  if (outside) {
    run.report().witnesses.push_back({"sequence", "Z_n = " + outside->first.render()});
    run.report().witness_set("Z", outside->second);
  }
  if (p.report.status == Status::Inconclusive) return run.finish_with(Status::Inconclusive);
  if (holds(p.report.status) != contains_all) run.fail("the two sides disagree");
  if (d.universe().is_finite() || !contains_all) return run.finish(Status::HoldsExhaustive);
  return run.finish(Status::HoldsOnFamily);
}

// ---------------------------------------------------------------------------
// Proximally Baire sets and the coreflection
// ---------------------------------------------------------------------------

/// The σ-algebra generated by the proximally zero sets.
///
/// Finite universes: a descending ≺-chain is eventually constant at a
/// self-below set, so the zero sets are exactly the self-below sets and the
/// generated algebra is M_δ. one_point and finite/cofinite on Z, and discrete
/// proximities: every set is the intersection of the chain
/// R ∪ (R^c ∩ {|k| >= n}), so the result is the power set.
inline SetAlgebra proximally_baire(const Proximity& d) {
  const auto& u = d.universe();
  if (u.is_finite()) {
    std::vector<SymSet> zero;
    for (const auto& r : all_subsets(u))
      if (r.subset_of(d.carrier()) && strongly_below(d, r, r)) zero.push_back(r);
    auto m = SetAlgebra::generated(u, zero);
    if (!d.carrier().is_full()) m = algebra_from_proximity(d);
    return m;
  }
  if (detail::discrete_like(d)) return SetAlgebra::power_set(u);
  if (detail::cluster_like(d) && !u.with_infinity) {
    const auto e = SymSet::periodic(u, 2, {0});
    const auto v = chain_verdict(d, SetSequence::shrink_tail(e, e.complement()), 16);
    if (!v.all_levels || v.failure)
      throw Error(ErrorCode::PreconditionFailed, "universal chain constructor not validated: " + v.reason);
    return SetAlgebra::power_set(u);
  }
  throw Error(ErrorCode::UnsupportedKind, "proximally Baire sets of " + d.render() + " are not representable");
}

/// δ induced by the proximally Baire algebra.
inline Proximity coreflection(const Proximity& d) {
  const auto b = proximally_baire(d);
  if (b.kind() == AlgebraKind::PowerSet) return Proximity::discrete(d.universe());
  return proximity_from_algebra(b);
}

/// Idempotence of the coreflection on the probe pairs.
inline LawReport check_coreflection_idempotent(const Proximity& d, const Strategy& s, const std::string& subject = {}) {
  const auto c = coreflection(d);
  return check_same_relation("coreflection.idempotent", c, coreflection(c), s, {subject.empty() ? d.render() : subject});
}

/// For σ-closed N: f is a proximity map into δ iff it is one into the coreflection of δ.
inline LawReport check_factorization(const FunctionSpec& f, const SetAlgebra& n, const Proximity& target,
                                     const Strategy& s, std::vector<std::string> subjects = {}) {
  if (subjects.empty()) subjects = {f.render(), n.render(), target.render()};
  if (!n.sigma_closed()) throw Error(ErrorCode::SourceNotSigma, n.render() + " is not a σ-algebra");
  std::optional<Proximity> c;
  try {
    c = coreflection(target);
  } catch (const Error& e) {
    throw Error(ErrorCode::TargetUnsupported, e.what());
  }
  LawRun run("thm.2.12", subjects, s);
  const auto src = proximity_from_algebra(n);
  const auto lhs = is_proximity_map(f, src, target, s);
  const auto rhs = is_proximity_map(f, src, *c, s);
  run.count(lhs.cases_checked + rhs.cases_checked);
  run.report().evidence("coreflection = " + c->render());
  auto verdict = [](const LawReport& r) {
    return r.status == Status::Inconclusive ? std::string("unknown") : detail::yes_no(r.status != Status::Counterexample);
  };
  run.report().evidence("into target = " + verdict(lhs));
  run.report().evidence("into coreflection = " + verdict(rhs));
  if (lhs.status == Status::Inconclusive || rhs.status == Status::Inconclusive) return run.finish_with(Status::Inconclusive);
  if ((lhs.status == Status::Counterexample) != (rhs.status == Status::Counterexample)) {
    const auto& bad = lhs.status == Status::Counterexample ? lhs : rhs;
    std::vector<Witness> ws(bad.witnesses.begin(), bad.witnesses.end());
    run.fail_with("the two sides disagree", ws, bad.witness_sets);
  }
  return run.finish(Status::HoldsExhaustive);
}

// ---------------------------------------------------------------------------
// Pointwise limits
// ---------------------------------------------------------------------------

/// Continuous self-maps of [0,1] composed with maps into [0,1].
inline std::vector<FunctionSpec> unit_interval_map_pool() {
  using P = std::pair<Rational, Rational>;
  const Rational z(0), h(1, 2), o(1);
  return {
      FunctionSpec::piecewise_linear({P{z, z}, P{o, o}}),
      FunctionSpec::piecewise_linear({P{z, o}, P{o, z}}),
      FunctionSpec::piecewise_linear({P{z, z}, P{h, o}, P{o, z}}),
      FunctionSpec::piecewise_linear({P{z, h}, P{o, h}}),
      FunctionSpec::piecewise_linear({P{z, z}, P{h, Rational(1, 4)}, P{o, o}}),
      FunctionSpec::piecewise_linear({P{z, z}, P{h, o}, P{o, o}}),
  };
}

/// g ∘ f is a proximity map for each g in the pool, when f is one.
inline LawReport check_composition_lemma(const FunctionSpec& f, const Proximity& d, const Strategy& s,
                                         std::vector<std::string> subjects = {}) {
  if (subjects.empty()) subjects = {f.render(), d.render()};
  const auto metric = Proximity::metric(Universe::unit_interval());
  LawRun run("lem.2.14", std::move(subjects), s);
  const auto base = is_proximity_map(f, d, metric, s);
  run.count(base.cases_checked);
  if (!holds(base.status))
    throw Error(ErrorCode::PreconditionFailed, f.render() + " is not established as a proximity map (" +
                                                   std::string(status_name(base.status)) + ")");
  bool undecided = false;
  for (const auto& g : unit_interval_map_pool()) {
    const auto gf = FunctionSpec::compose(g, f);
    const auto r = is_proximity_map(gf, d, metric, s);
    run.count(r.cases_checked);
    if (r.status == Status::Counterexample) {
      std::vector<Witness> ws{{"map", "g = " + g.render()}};
      ws.insert(ws.end(), r.witnesses.begin(), r.witnesses.end());
      run.fail_with("composite is not a proximity map", ws, r.witness_sets);
    }
    undecided = undecided || r.status == Status::Inconclusive;
  }
  if (undecided && !run.failed()) return run.finish_with(Status::Inconclusive);
  return run.finish(Status::HoldsExhaustive);
}

/// Over a P_aleph1 source, pointwise limits of proximity maps into [0,1]
/// are proximity maps. A non-P_aleph1 source makes the implication vacuous;
/// the report then records whether the limit still is a proximity map.
inline LawReport check_pointwise_closure(const Proximity& d, const FunctionSequence& fs, const Proximity& r,
                                         const Strategy& s, std::vector<std::string> subjects = {}) {
  if (subjects.empty()) subjects = {d.render(), fs.render(), r.render()};
  require_same(d.universe(), fs.domain());
  require_same(r.universe(), fs.codomain());
  LawRun run("thm.2.15", std::move(subjects), s);
  for (std::size_t n = 0; n < s.depth; ++n) {
    FunctionSpec t = fs.term(n);
    const auto rep = is_proximity_map(t, d, r, s);
    run.count(rep.cases_checked);
    if (!holds(rep.status))
      throw Error(ErrorCode::PreconditionFailed,
                  "term " + std::to_string(n) + " (" + t.render() + ") is not established as a proximity map");
  }
  const auto limit = fs.limit();
  const auto p = is_p_aleph1(d, s);
  const auto lm = is_proximity_map(limit, d, r, s);
  run.count(p.cases_checked + lm.cases_checked);
  run.report().witnesses.push_back({"map", "limit = " + limit.render()});
  const std::string pv = p.status == Status::Inconclusive ? "unknown" : detail::yes_no(holds(p.status));
  const std::string lv = lm.status == Status::Inconclusive ? "unknown" : detail::yes_no(holds(lm.status));
  run.report().evidence("p_aleph1 = " + pv);
  run.report().evidence("limit is a proximity map = " + lv);
  if (p.status == Status::Inconclusive || lm.status == Status::Inconclusive) return run.finish_with(Status::Inconclusive);
  if (!holds(p.status)) {
    if (lm.status == Status::Counterexample) {
      run.report().note("source is not P_aleph1 and the limit fails: the hypothesis is needed");
      for (const auto& w : lm.witnesses) run.report().witnesses.push_back(w);
      for (const auto& w : lm.witness_sets) run.report().witness_sets.push_back(w);
    }
    return run.finish(Status::HoldsExhaustive);
  }
  if (lm.status == Status::Counterexample) {
    std::vector<Witness> ws(lm.witnesses.begin(), lm.witnesses.end());
    run.fail_with("limit over a P_aleph1 source is not a proximity map (contradiction alarm)", ws, lm.witness_sets);
    return run.finish(Status::Counterexample);
  }
  if (r.kind_id() == ProximityKind::Metric) {
    const auto lem = check_composition_lemma(limit, d, s);
    run.count(lem.cases_checked);
    if (lem.status == Status::Counterexample) {
      std::vector<Witness> ws(lem.witnesses.begin(), lem.witnesses.end());
      run.fail_with("composite with the limit is not a proximity map", ws, lem.witness_sets);
    }
  }
  return run.finish(p.status == Status::HoldsExhaustive ? Status::HoldsExhaustive : Status::HoldsOnFamily);
}

// ---------------------------------------------------------------------------
// Lindelöf open sets
// ---------------------------------------------------------------------------

/// A chain certifying the complement of an open u as proximally zero. The
/// integer universe is countable, hence Lindelöf.
inline SetSequence lindelof_cozero_chain(const Proximity& d, const SymSet& u) {
  if (!detail::cluster_like(d) || d.universe().with_infinity)
    throw Error(ErrorCode::UnsupportedKind, "cozero chains are built for one_point on integers");
  if (!is_open(d, u)) throw Error(ErrorCode::NotOpen, u.render() + " is not open");
  if (u.is_full()) return SetSequence::constant(SymSet::empty(d.universe()));
  return SetSequence::shrink_tail(u.complement(), u);
}

inline LawReport check_lindelof(const Proximity& d, const SymSet& u, const Strategy& s,
                                std::vector<std::string> subjects = {}) {
  if (subjects.empty()) subjects = {d.render(), u.render()};
  LawRun run("thm.2.9", std::move(subjects), s);
  const auto z = lindelof_cozero_chain(d, u);
  const auto v = chain_verdict(d, z, s.depth);
  run.count(s.depth);
  run.report().witnesses.push_back({"sequence", "Z_n = " + z.render()});
  if (v.failure) run.fail("certificate is not a ≺-chain: " + v.reason);
  if (!(z.limit_intersection() == u.complement())) run.fail("chain does not cut out the complement");
  if (!v.all_levels && !v.failure) return run.finish_with(Status::Inconclusive);
  run.report().evidence("proximally cozero: " + u.render());
  return run.finish(Status::HoldsExhaustive);
}

}  // namespace proxlab
