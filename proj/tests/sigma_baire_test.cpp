#include "proxlab/sigma_baire.hpp"

#include "gtest/gtest.h"

namespace px = proxlab;
using px::FunctionSequence;
using px::FunctionSpec;
using px::Point;
using px::Proximity;
using px::Rational;
using px::SetAlgebra;
using px::SetSequence;
using px::Status;
using px::Strategy;
using px::SymSet;
using px::Universe;

namespace {

const Universe Z = Universe::integers();
const Universe Zinf = Universe::integers(true);
const Universe I = Universe::unit_interval();

SymSet evens() { return SymSet::periodic(Z, 2, {0}); }
SymSet odds() { return SymSet::periodic(Z, 2, {1}); }

bool has_witness(const px::LawReport& r, const std::string& needle) {
  for (const auto& w : r.witnesses)
    if (w.rendering.find(needle) != std::string::npos) return true;
  return false;
}

// One-point oracle on a window: sets with a point far out are taken to
// cluster, which is exact for the small-period sets used below.
bool window_clusters(const SymSet& a) {
  for (std::int64_t k = 30; k <= 40; ++k)
    if (a.contains(Point{k}) || a.contains(Point{-k})) return true;
  return false;
}

bool one_point_below(const SymSet& a, const SymSet& b) {
  const auto c = b.complement();
  for (std::int64_t k = -40; k <= 40; ++k)
    if (a.contains(Point{k}) && c.contains(Point{k})) return false;
  return !(window_clusters(a) && window_clusters(c));
}

Rational rat(const Point& p) {
  if (const auto* k = std::get_if<std::int64_t>(&p)) return Rational(*k);
  return std::get<Rational>(p);
}

}  // namespace

TEST(SetSequence, ShrinkTailTermsMatchDefinition) {
  const auto z = SetSequence::shrink_tail(odds(), evens());
  for (std::size_t n = 0; n < 8; ++n)
    for (std::int64_t k = -20; k <= 20; ++k) {
      const bool expected = k % 2 != 0 || (k < 0 ? -k : k) >= static_cast<std::int64_t>(n);
      EXPECT_EQ(z.term(n).contains(Point{k}), expected) << n << " " << k;
    }
  EXPECT_EQ(z.limit_intersection(), odds());
  EXPECT_TRUE(z.limit_union().is_full());
  EXPECT_TRUE(z.nonincreasing());
  EXPECT_FALSE(z.stabilises_at().has_value());
}

TEST(SetSequence, PrefixesAndLists) {
  const auto p = SetSequence::prefixes(evens());
  EXPECT_EQ(p.term(3), SymSet::of(Z, {Point{0}, Point{2}, Point{-2}}));
  EXPECT_EQ(p.limit_union(), evens());
  EXPECT_TRUE(p.limit_intersection().is_empty());
  EXPECT_TRUE(p.nondecreasing());

  const auto f = SetSequence::prefixes(SymSet::of(Z, {Point{5}, Point{7}}));
  EXPECT_EQ(f.stabilises_at(), std::size_t{2});

  const auto l = SetSequence::list({SymSet::of(Z, {Point{1}, Point{2}}), SymSet::of(Z, {Point{1}})}, SymSet::empty(Z));
  EXPECT_EQ(l.term(7), SymSet::empty(Z));
  EXPECT_TRUE(l.nonincreasing());
  EXPECT_EQ(l.render(), "list({1,2}, {1}; tail={})");
}

TEST(SetSequence, MetricNeighbourhoodsAndErosions) {
  const auto b = SymSet::intervals({px::Interval{Rational(0), Rational(1, 2), true, false}});
  const auto e = SetSequence::erosions(b);
  EXPECT_EQ(e.term(0), SymSet::closed(Rational(0), Rational(0)));
  EXPECT_EQ(e.term(2), SymSet::closed(Rational(0), Rational(1, 4)));
  EXPECT_EQ(e.limit_union(), b);

  const auto n = SetSequence::neighbourhoods(SymSet::closed(Rational(1, 2), Rational(1, 2)));
  EXPECT_EQ(n.term(3), SymSet::closed(Rational(1, 4), Rational(3, 4)));
  EXPECT_EQ(n.limit_intersection(), SymSet::closed(Rational(1, 2), Rational(1, 2)));
}

TEST(PrecChain, EvensOddsChainUnderOnePoint) {
  const auto d = Proximity::one_point(Z);
  const auto z = SetSequence::shrink_tail(odds(), evens());
  const auto r = px::is_prec_chain(d, z, 16);
  EXPECT_EQ(r.status, Status::HoldsExhaustive);
  EXPECT_EQ(px::proximally_zero_from_chain(d, z), odds());
  EXPECT_FALSE(px::algebra_from_proximity(d).contains(odds()));
  for (std::size_t n = 0; n < 12; ++n) EXPECT_TRUE(one_point_below(z.term(n + 1), z.term(n))) << n;
}

TEST(PrecChain, RuleAgreesWithWindowOracle) {
  const auto d = Proximity::one_point(Z);
  const std::vector<SymSet> sets{evens(), odds(), SymSet::periodic(Z, 3, {0}), SymSet::periodic(Z, 3, {1, 2}),
                                 SymSet::of(Z, {Point{0}}), SymSet::full(Z), SymSet::empty(Z)};
  for (const auto& p : sets)
    for (const auto& q : sets) {
      const auto z = SetSequence::shrink_tail(p, q);
      bool oracle = true;
      for (std::size_t n = 0; n < 10 && oracle; ++n) oracle = one_point_below(z.term(n + 1), z.term(n));
      const auto v = px::chain_verdict(d, z, 4);
      ASSERT_TRUE(v.all_levels || v.failure.has_value());
      EXPECT_EQ(!v.failure.has_value(), oracle) << z.render();
      // a chain unless p ∪ q and its complement are both infinite
      const auto top = p | q;
      EXPECT_EQ(oracle, top.is_finite() || top.complement().is_finite()) << z.render();
    }
}

TEST(PrecChain, RefusalsAndProbing) {
  const auto d = Proximity::one_point(Z);
  EXPECT_EQ(px::is_prec_chain(d, SetSequence::prefixes(evens()), 16).status, Status::Counterexample);
  try {
    px::proximally_zero_from_chain(d, SetSequence::shrink_tail(evens(), SymSet::periodic(Z, 4, {1})));
    FAIL();
  } catch (const px::Error& e) {
    EXPECT_EQ(e.name(), "NotAChain");
  }
  const auto t = Proximity::subspace(Proximity::one_point(Z), SymSet::full(Z));
  try {
    px::proximally_zero_from_chain(t, SetSequence::shrink_tail(odds(), evens()));
    FAIL();
  } catch (const px::Error& e) {
    EXPECT_EQ(e.name(), "ChainOnlyProbed");
  }
  const auto m = Proximity::metric(I);
  const auto c = SetSequence::neighbourhoods(SymSet::closed(Rational(1, 3), Rational(1, 2)));
  EXPECT_EQ(px::is_prec_chain(m, c, 16).status, Status::HoldsExhaustive);
}

TEST(PAleph1, FiniteProximitiesAlwaysHold) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& m : px::all_algebras(n))
      EXPECT_EQ(px::is_p_aleph1(Proximity::from_algebra(m), Strategy::exhaustive()).status, Status::HoldsExhaustive);
}

TEST(PAleph1, FiniteCofiniteFailsWithPrefixesOfEvens) {
  const auto d = Proximity::from_algebra(SetAlgebra::finite_cofinite(Z));
  const auto r = px::p_aleph1(d, Strategy::family());
  EXPECT_EQ(r.report.status, Status::Counterexample);
  ASSERT_TRUE(r.sequence.has_value());
  EXPECT_EQ(r.sequence->render(), "prefixes(" + evens().render() + ")");
  EXPECT_EQ(*r.target, evens());
  // the oracle: each prefix is a finite subset of evens, so below it; evens is not
  for (std::size_t n = 0; n < 10; ++n) EXPECT_TRUE(one_point_below(r.sequence->term(n), evens()));
  EXPECT_FALSE(one_point_below(evens(), evens()));
}

TEST(PAleph1, DiscreteHoldsMetricFails) {
  EXPECT_EQ(px::is_p_aleph1(Proximity::discrete(Z), Strategy::family()).status, Status::HoldsOnFamily);
  const auto b = SymSet::intervals({px::Interval{Rational(0), Rational(1, 2), true, false}});
  const auto r = px::p_aleph1(Proximity::metric(I), Strategy::on_witnesses({b}));
  EXPECT_EQ(r.report.status, Status::Counterexample);
  EXPECT_EQ(r.sequence->kind(), px::SequenceKind::Erosions);
  EXPECT_EQ(px::is_p_aleph1(Proximity::metric(I), Strategy::family()).status, Status::Counterexample);
}

TEST(SigmaIffPAleph1, AllFiniteAlgebrasAndSymbolicOnes) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& m : px::all_algebras(n))
      EXPECT_EQ(px::check_sigma_iff_p_aleph1(m, Strategy::exhaustive()).status, Status::HoldsExhaustive);
  const auto fc = px::check_sigma_iff_p_aleph1(SetAlgebra::finite_cofinite(Z), Strategy::family());
  EXPECT_EQ(fc.status, Status::HoldsExhaustive);
  EXPECT_TRUE(has_witness(fc, "sigma = false"));
  EXPECT_TRUE(has_witness(fc, "p_aleph1 = false"));
  EXPECT_TRUE(has_witness(fc, "prefixes"));
  EXPECT_EQ(px::check_sigma_iff_p_aleph1(SetAlgebra::power_set(Z), Strategy::family()).status, Status::HoldsOnFamily);
}

TEST(PAleph1ZeroDim, RefusesWithoutPrecondition) {
  try {
    px::check_p_aleph1_implies_zerodim(Proximity::one_point(Z), Strategy::family());
    FAIL();
  } catch (const px::Error& e) {
    EXPECT_EQ(e.name(), "PreconditionNotEstablished");
  }
  EXPECT_TRUE(px::holds(px::check_p_aleph1_implies_zerodim(Proximity::discrete(Z), Strategy::family()).status));
  for (const auto& m : px::all_algebras(3))
    EXPECT_EQ(px::check_p_aleph1_implies_zerodim(Proximity::from_algebra(m), Strategy::exhaustive()).status,
              Status::HoldsExhaustive);
}

TEST(CorZeroSets, OnePointWitnessAndFinite) {
  const auto r = px::check_cor_zero_sets(Proximity::one_point(Z), Strategy::family());
  EXPECT_EQ(r.status, Status::HoldsExhaustive);
  EXPECT_TRUE(has_witness(r, "zero sets in M_delta = false"));
  EXPECT_TRUE(has_witness(r, "shrink_tail"));
  for (const auto& m : px::all_algebras(3))
    EXPECT_EQ(px::check_cor_zero_sets(Proximity::from_algebra(m), Strategy::exhaustive()).status,
              Status::HoldsExhaustive);
  EXPECT_EQ(px::check_cor_zero_sets(Proximity::metric(I), Strategy::family()).status, Status::HoldsExhaustive);
}

TEST(ProximallyBaire, FiniteMatchesBruteForceChains) {
  const auto u = Universe::finite(3);
  const auto subsets = px::all_subsets(u);
  for (const auto& m : px::all_algebras(3)) {
    const auto d = Proximity::from_algebra(m);
    // zero sets = intersections of certified chains of length <= 3
    std::vector<SymSet> zero;
    for (const auto& a : subsets)
      for (const auto& b : subsets)
        for (const auto& c : subsets) {
          const auto z = SetSequence::list({a, b}, c);
          const auto v = px::chain_verdict(d, z, 4);
          if (v.all_levels && !v.failure) zero.push_back(z.limit_intersection());
        }
    const auto brute = SetAlgebra::generated(u, zero);
    const auto got = px::proximally_baire(d);
    for (const auto& r : subsets) EXPECT_EQ(got.contains(r), brute.contains(r)) << m.render() << " " << r.render();
    for (const auto& r : subsets) EXPECT_EQ(got.contains(r), m.contains(r));
  }
}

TEST(ProximallyBaire, IntegerKindsGivePowerSet) {
  EXPECT_EQ(px::proximally_baire(Proximity::one_point(Z)).kind(), px::AlgebraKind::PowerSet);
  EXPECT_EQ(px::proximally_baire(Proximity::from_algebra(SetAlgebra::finite_cofinite(Z))).kind(),
            px::AlgebraKind::PowerSet);
  EXPECT_THROW(px::proximally_baire(Proximity::metric(I)), px::Error);
  EXPECT_THROW(px::proximally_baire(Proximity::one_point(Zinf)), px::Error);
}

TEST(Coreflection, OnePointBecomesDiscreteAndIsIdempotent) {
  const auto c = px::coreflection(Proximity::one_point(Z));
  EXPECT_EQ(c.kind_id(), px::ProximityKind::Discrete);
  EXPECT_EQ(px::check_coreflection_idempotent(Proximity::one_point(Z), Strategy::family()).status,
            Status::HoldsOnFamily);
  for (const auto& m : px::all_algebras(3))
    EXPECT_EQ(px::check_coreflection_idempotent(Proximity::from_algebra(m), Strategy::exhaustive()).status,
              Status::HoldsExhaustive);
}

TEST(Factorization, ExamplesAndRefusals) {
  const auto ps = SetAlgebra::power_set(Z);
  const auto s = Strategy::family();
  EXPECT_EQ(px::check_factorization(FunctionSpec::identity(Z), ps, Proximity::one_point(Z), s).status,
            Status::HoldsExhaustive);
  EXPECT_EQ(px::check_factorization(FunctionSpec::characteristic(evens(), Universe::finite(2)), ps,
                                    Proximity::discrete(Universe::finite(2)), s)
                .status,
            Status::HoldsExhaustive);
  const auto f4 = Universe::finite(4);
  const auto f = FunctionSpec::table(f4, Z, {Point{0}, Point{0}, Point{1}, Point{2}});
  for (const auto& m : px::all_algebras(4))
    EXPECT_EQ(px::check_factorization(f, m, Proximity::one_point(Z), Strategy::exhaustive()).status,
              Status::HoldsExhaustive);
  try {
    px::check_factorization(FunctionSpec::identity(Z), SetAlgebra::finite_cofinite(Z), Proximity::one_point(Z), s);
    FAIL();
  } catch (const px::Error& e) {
    EXPECT_EQ(e.name(), "SourceNotSigma");
  }
  try {
    px::check_factorization(FunctionSpec::identity(I), SetAlgebra::power_set(I), Proximity::metric(I), s);
    FAIL();
  } catch (const px::Error& e) {
    EXPECT_EQ(e.name(), "TargetUnsupported");
  }
}

TEST(PointwiseClosure, PowersConvergeToIndicator) {
  const auto f = FunctionSpec::decay(evens(), 1);
  const auto lim = f.power_limit_map();
  for (std::int64_t k = -10; k <= 10; ++k) {
    const auto v = rat(f.eval(Point{k}));
    const auto expected = v == Rational(1) ? Rational(1) : Rational(0);
    EXPECT_EQ(rat(lim.eval(Point{k})), expected);
    // oracle: powers agree with floating-point exponentiation
    const double x = boost::rational_cast<double>(v);
    EXPECT_NEAR(boost::rational_cast<double>(rat(f.power_of(5).eval(Point{k}))), x * x * x * x * x, 1e-12);
  }
}

TEST(PointwiseClosure, DiscreteHoldsOnePointNegativeControl) {
  const auto s = Strategy::family();
  const auto metric = Proximity::metric(I);
  const auto fs = FunctionSequence::powers(FunctionSpec::decay(evens(), 1));
  const auto pos = px::check_pointwise_closure(Proximity::discrete(Z), fs, metric, s);
  EXPECT_EQ(pos.status, Status::HoldsOnFamily);
  EXPECT_TRUE(has_witness(pos, "limit is a proximity map = true"));

  const auto neg = px::check_pointwise_closure(Proximity::one_point(Z), fs, metric, s);
  EXPECT_TRUE(px::holds(neg.status));
  EXPECT_TRUE(has_witness(neg, "p_aleph1 = false"));
  EXPECT_TRUE(has_witness(neg, "limit is a proximity map = false"));
}

TEST(PointwiseClosure, FiniteSourcesExhaustive) {
  const auto f3 = Universe::finite(3);
  const auto f = FunctionSpec::table(f3, I, {Point{Rational(1, 2)}, Point{Rational(1)}, Point{Rational(1, 3)}});
  for (const auto& m : px::all_algebras(3)) {
    const auto d = Proximity::from_algebra(m);
    if (px::is_proximity_map(f, d, Proximity::metric(I), Strategy::exhaustive()).status != Status::HoldsExhaustive) {
      EXPECT_THROW(px::check_pointwise_closure(d, FunctionSequence::powers(f), Proximity::metric(I), Strategy::exhaustive()),
                   px::Error);
      continue;
    }
    EXPECT_EQ(px::check_pointwise_closure(d, FunctionSequence::powers(f), Proximity::metric(I), Strategy::exhaustive()).status,
              Status::HoldsExhaustive)
        << m.render();
  }
}

TEST(Composites, PoolComposites) {
  const auto r = px::check_composition_lemma(FunctionSpec::characteristic(evens(), I), Proximity::discrete(Z), Strategy::family());
  EXPECT_EQ(r.status, Status::HoldsExhaustive);
}

TEST(Lindelof, CozeroChains) {
  const auto d = Proximity::one_point(Z);
  EXPECT_EQ(px::lindelof_cozero_chain(d, evens()).render(), SetSequence::shrink_tail(odds(), evens()).render());
  EXPECT_EQ(px::lindelof_cozero_chain(d, SymSet::full(Z)).kind(), px::SequenceKind::Constant);
  const auto punctured = SymSet::full(Z) - SymSet::of(Z, {Point{0}});
  const auto z = px::lindelof_cozero_chain(d, punctured);
  EXPECT_EQ(z.base(), SymSet::of(Z, {Point{0}}));
  EXPECT_EQ(px::check_lindelof(d, punctured, Strategy::family()).status, Status::HoldsExhaustive);
  EXPECT_THROW(px::lindelof_cozero_chain(Proximity::metric(I), SymSet::full(I)), px::Error);
}
