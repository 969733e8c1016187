#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "proxlab/pool.hpp"
#include "proxlab/proximity.hpp"
#include "proxlab/report.hpp"

namespace proxlab {

/// Accumulates cases of one law evaluation. Iteration order is fixed by the
/// caller; the first violation in that order is the reported witness.
class LawRun {
 public:
  LawRun(std::string law, std::vector<std::string> subjects, const Strategy& strategy)
      : strategy_(strategy), start_(std::chrono::steady_clock::now()) {
    report_.law = std::move(law);
    report_.subjects = std::move(subjects);
    report_.seed = strategy.seed;
  }

  /// True once a counterexample is recorded under first-counterexample mode.
  bool stop() const { return strategy_.first_counterexample && failures_ > 0; }
  bool failed() const { return failures_ > 0; }
  std::uint64_t failures() const { return failures_; }
  const Strategy& strategy() const { return strategy_; }

  void count(std::uint64_t n = 1) { report_.cases_checked += n; }

  /// Records a violation. Only the first one keeps its witnesses.
  void fail(const std::string& what, const std::vector<std::pair<std::string, SymSet>>& sets = {}) {
    if (failures_++ == 0) {
      report_.witnesses.push_back({"violation", what});
      for (const auto& [role, s] : sets) report_.witness_set(role, s);
    }
  }

  /// Records a violation whose witness is not a set (a map, sequence...).
  void fail_with(const std::string& what, std::vector<Witness> ws, std::vector<SymSet> sets = {}) {
    if (failures_++ == 0) {
      report_.witnesses.push_back({"violation", what});
      for (auto& w : ws) report_.witnesses.push_back(std::move(w));
      for (auto& s : sets) report_.witness_sets.push_back(std::move(s));
    }
  }

  LawReport& report() { return report_; }

  LawReport finish(Status success) { return finish_with(failures_ > 0 ? Status::Counterexample : success); }

  LawReport finish_with(Status status) {
    report_.status = status;
    if (failures_ > 1) report_.note(std::to_string(failures_) + " violations in total");
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  Strategy strategy_;
  LawReport report_;
  std::uint64_t failures_ = 0;
  std::chrono::steady_clock::time_point start_;
};

/// Probe sets restricted to the proximity's carrier.
inline std::vector<SymSet> proximity_probes(const Proximity& d, const Strategy& s) {
  auto pool = probe_sets(d.universe(), s);
  if (d.kind_id() != ProximityKind::Subspace) return pool;
  const auto c = d.carrier();
  std::vector<SymSet> out;
  for (const auto& p : pool) detail::push_unique(out, p & c);
  return out;
}

inline constexpr std::size_t triple_thin_limit = 16;

/// Proximity axioms 1-5 on the probe sets.
inline LawReport check_proximity_axioms(const Proximity& d, const Strategy& s, const std::string& subject = {}) {
  LawRun run("prox.axioms", {subject.empty() ? d.render() : subject}, s);
  const auto probes = proximity_probes(d, s);
  const auto third = s.kind == StrategyKind::Exhaustive ? probes : thin(probes, triple_thin_limit);
  for (const auto& a : probes) {
    for (const auto& b : probes) {
      if (run.stop()) break;
      const bool ab = near(d, a, b);
      run.count(4);
      if (ab != near(d, b, a)) run.fail("axiom 1 (symmetry)", {{"A", a}, {"B", b}});
      if (ab && (a.is_empty() || b.is_empty())) run.fail("axiom 3 (empty set near)", {{"A", a}, {"B", b}});
      if (a.intersects(b) && !ab) run.fail("axiom 5 (meeting sets far)", {{"A", a}, {"B", b}});
      if (!ab) {
        try {
          const auto c = interpolate(d, a, d.complement(b));
          const auto e = d.complement(c);
          if (near(d, a, e) || near(d, d.complement(e), b))
            run.fail("axiom 4 (interpolant fails)", {{"A", a}, {"B", b}, {"E", e}});
        } catch (const Error& err) {
          if (err.code() != ErrorCode::NoWitnessFound) throw;
          run.fail("axiom 4 (no separating E)", {{"A", a}, {"B", b}});
        }
      }
      for (const auto& c : third) {
        run.count();
        if (near(d, a | b, c) != (near(d, a, c) || near(d, b, c)))
          run.fail("axiom 2 (additivity)", {{"A", a}, {"B", b}, {"C", c}});
      }
    }
  }
  return run.finish(s.success());
}

/// Properties 1-6 of ≺ (property 4 with two-fold intersections).
inline LawReport check_prec_properties(const Proximity& d, const Strategy& s, const std::string& subject = {}) {
  LawRun run("prec.props", {subject.empty() ? d.render() : subject}, s);
  const auto probes = proximity_probes(d, s);
  const auto third = s.kind == StrategyKind::Exhaustive ? probes : thin(probes, triple_thin_limit);
  const auto x = d.carrier();
  run.count();
  if (!strongly_below(d, x, x)) run.fail("property 1 (X ≺ X)");
  for (const auto& a : probes) {
    for (const auto& b : probes) {
      if (run.stop()) break;
      const bool ab = strongly_below(d, a, b);
      run.count();
      if (!ab) continue;
      run.count(3);
      if (!a.subset_of(b)) run.fail("property 2 (≺ implies ⊆)", {{"A", a}, {"B", b}});
      if (!strongly_below(d, d.complement(b), d.complement(a)))
        run.fail("property 5 (complement reversal)", {{"A", a}, {"B", b}});
      try {
        const auto c = interpolate(d, a, b);
        if (!strongly_below(d, a, c) || !strongly_below(d, c, b))
          run.fail("property 6 (interpolant fails)", {{"A", a}, {"B", b}, {"C", c}});
      } catch (const Error& err) {
        if (err.code() != ErrorCode::NoWitnessFound) throw;
        run.fail("property 6 (no interpolant)", {{"A", a}, {"B", b}});
      }
      for (const auto& p : third) {
        run.count(2);
        // property 3 with A = a∩p ⊆ a and D = b∪p ⊇ b
        if (!strongly_below(d, a & p, b | p))
          run.fail("property 3 (monotone widening)", {{"A", a & p}, {"B", a}, {"C", b}, {"D", b | p}});
        if (strongly_below(d, a, p) && !strongly_below(d, a, b & p))
          run.fail("property 4 (finite intersections)", {{"A", a}, {"B1", b}, {"B2", p}});
      }
    }
  }
  return run.finish(s.success());
}

/// The induced closure is a Kuratowski closure.
inline LawReport check_kuratowski(const Proximity& d, const Strategy& s, const std::string& subject = {}) {
  LawRun run("prox.kuratowski", {subject.empty() ? d.render() : subject}, s);
  const auto probes = proximity_probes(d, s);
  run.count();
  if (!closure(d, SymSet::empty(d.universe())).is_empty()) run.fail("closure of the empty set is nonempty");
  for (const auto& a : probes) {
    const auto ca = closure(d, a);
    run.count(2);
    if (!a.subset_of(ca)) run.fail("not extensive", {{"A", a}});
    if (!(closure(d, ca) == ca)) run.fail("not idempotent", {{"A", a}});
    for (const auto& b : probes) {
      if (run.stop()) break;
      run.count();
      if (!(closure(d, a | b) == (ca | closure(d, b)))) run.fail("does not preserve unions", {{"A", a}, {"B", b}});
    }
  }
  return run.finish(s.success());
}

/// Separatedness, reported rather than assumed.
inline LawReport check_separated(const Proximity& d, const std::string& subject = {}) {
  LawRun run("prox.separated", {subject.empty() ? d.render() : subject}, Strategy::for_universe(d.universe()));
  run.count();
  const auto sep = is_separated(d);
  if (!sep) return run.finish_with(Status::Inconclusive);
  if (!*sep) {
    const auto& u = d.universe();
    if (u.is_finite()) {
      for (const auto& p : finite_points(u))
        for (const auto& q : finite_points(u)) {
          if (run.failed() || !point_less(p, q)) continue;
          const auto x = singleton(u, p), y = singleton(u, q);
          if (x.subset_of(d.carrier()) && y.subset_of(d.carrier()) && near(d, x, y))
            run.fail("distinct points are near", {{"x", x}, {"y", y}});
        }
    } else {
      run.fail("distinct points are near (non-reduced algebra)");
    }
  }
  // Decided by enumeration (finite) or by the kind's rule (symbolic).
  return run.finish(Status::HoldsExhaustive);
}

/// Relation equality of two proximities on the probe pairs.
inline LawReport check_same_relation(const std::string& law, const Proximity& d, const Proximity& e,
                                     const Strategy& s, std::vector<std::string> subjects) {
  require_same(d.universe(), e.universe());
  LawRun run(law, std::move(subjects), s);
  const auto probes = proximity_probes(d, s);
  for (const auto& a : probes)
    for (const auto& b : probes) {
      if (run.stop()) break;
      run.count();
      if (near(d, a, b) != near(e, a, b)) run.fail("relations differ", {{"A", a}, {"B", b}});
    }
  return run.finish(s.success());
}

/// Single evaluation: holds iff A δ B.
inline LawReport check_near(const Proximity& d, const SymSet& a, const SymSet& b, std::vector<std::string> subjects) {
  LawRun run("prox.near", std::move(subjects), Strategy::on_witnesses({a, b}));
  run.count();
  const bool v = near(d, a, b);
  run.report().evidence(std::string("near = ") + (v ? "true" : "false"));
  if (!v) run.fail("sets are far", {{"A", a}, {"B", b}});
  return run.finish(Status::HoldsExhaustive);
}

/// Single evaluation: holds iff A ≺ B.
inline LawReport check_below(const Proximity& d, const SymSet& a, const SymSet& b, std::vector<std::string> subjects) {
  LawRun run("prox.below", std::move(subjects), Strategy::on_witnesses({a, b}));
  run.count();
  const bool v = strongly_below(d, a, b);
  run.report().evidence(std::string("strongly_below = ") + (v ? "true" : "false"));
  if (!v) run.fail("not strongly below", {{"A", a}, {"B", b}});
  return run.finish(Status::HoldsExhaustive);
}

}  // namespace proxlab
