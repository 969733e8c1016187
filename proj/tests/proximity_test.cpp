#include "proxlab/laws.hpp"
#include "proxlab/proximity.hpp"

#include "gtest/gtest.h"

namespace px = proxlab;
using px::Proximity;
using px::Rational;
using px::Status;
using px::Strategy;
using px::SymSet;
using px::Universe;

namespace {

const Universe Z = Universe::integers();
const Universe Zinf = Universe::integers(true);
const Universe I = Universe::unit_interval();

SymSet evens(const Universe& u = Z) { return SymSet::periodic(u, 2, {0}); }
SymSet odds(const Universe& u = Z) { return SymSet::periodic(u, 2, {1}); }

// Closure in Z ∪ {inf} computed independently: inf is adjoined exactly when
// the integer part is infinite (window count grows with the radius).
SymSet oracle_closure_inf(const SymSet& a) {
  const bool infinite_part = a.window(64).size() > a.window(32).size() + 4;
  auto out = SymSet::periodic(Zinf, a.periodic_payload().period, [&] {
    std::vector<std::int64_t> r;
    for (std::size_t i = 0; i < a.periodic_payload().residues.size(); ++i)
      if (a.periodic_payload().residues[i]) r.push_back(static_cast<std::int64_t>(i));
    return r;
  }());
  for (const auto& [k, v] : a.periodic_payload().exceptions)
    out = v ? out | SymSet::indices(Zinf, {k}) : out - SymSet::indices(Zinf, {k});
  if (infinite_part) out = out | px::singleton(Zinf, px::Infinity{});
  return out;
}

void expect_holds(const px::LawReport& r) {
  EXPECT_TRUE(px::holds(r.status)) << r.law << " " << px::status_name(r.status) << " "
                                   << (r.witnesses.empty() ? "" : r.witnesses.front().rendering)
                                   << (r.witnesses.size() > 1 ? " " + r.witnesses[1].rendering : "");
}

}  // namespace

TEST(Near, DiscreteDisjointSingletonsFar) {
  const auto u = Universe::finite(3);
  EXPECT_FALSE(near(Proximity::discrete(u), SymSet::indices(u, {0}), SymSet::indices(u, {1})));
}

TEST(Near, OnePointEvensNearOdds) {
  EXPECT_TRUE(near(Proximity::one_point(Z), evens(), odds()));
}

TEST(Near, OnePointFiniteFarFromDisjoint) {
  const auto d = Proximity::one_point(Z);
  const auto a = SymSet::indices(Z, {0, 2});
  EXPECT_FALSE(near(d, a, odds()));
  // oracle: closures in Z ∪ {inf} are disjoint
  EXPECT_FALSE(oracle_closure_inf(a).intersects(oracle_closure_inf(odds())));
}

TEST(Near, OnePointAgreesWithClosureIntersectionInCompactification) {
  const auto d = Proximity::one_point(Z);
  const auto pool = px::canonical_pool(Z);
  for (std::size_t i = 0; i < pool.size(); i += 3)
    for (std::size_t j = 0; j < pool.size(); j += 5) {
      const auto& a = pool[i];
      const auto& b = pool[j];
      EXPECT_EQ(near(d, a, b), oracle_closure_inf(a).intersects(oracle_closure_inf(b)))
          << a.render() << " / " << b.render();
    }
}

TEST(StronglyBelow, Examples) {
  const auto u = Universe::finite(3);
  EXPECT_TRUE(strongly_below(Proximity::discrete(u), SymSet::indices(u, {0}), SymSet::indices(u, {0, 1})));
  const auto d = Proximity::one_point(Z);
  for (std::int64_t n = -10; n <= 10; ++n) EXPECT_TRUE(strongly_below(d, SymSet::indices(Z, {2 * n}), evens()));
  EXPECT_FALSE(strongly_below(d, evens(), evens()));
}

TEST(Closure, Examples) {
  const auto u = Universe::finite(3);
  EXPECT_EQ(closure(Proximity::discrete(u), SymSet::indices(u, {0, 1})), SymSet::indices(u, {0, 1}));
  EXPECT_EQ(closure(Proximity::one_point(Zinf), evens(Zinf)), evens(Zinf) | px::singleton(Zinf, px::Infinity{}));
  const auto half_open = SymSet::intervals({px::Interval{Rational(0), Rational(1, 2), true, false}});
  EXPECT_EQ(closure(Proximity::metric(I), half_open), SymSet::closed(Rational(0), Rational(1, 2)));
  EXPECT_EQ(distance(SymSet::closed(Rational(1, 2), Rational(1, 2)), half_open), Rational(0));
}

TEST(IsOpen, Examples) {
  const auto u = Universe::finite(3);
  for (const auto& s : px::all_subsets(u)) EXPECT_TRUE(is_open(Proximity::discrete(u), s));
  const auto d = Proximity::one_point(Zinf);
  EXPECT_TRUE(is_open(d, evens(Zinf)));
  EXPECT_FALSE(is_open(d, evens(Zinf) | px::singleton(Zinf, px::Infinity{})));
}

TEST(IsOpen, TableAgreesWithBruteForce) {
  const auto u = Universe::finite(2);
  // indiscrete-style proximity: nonempty sets are all near
  const auto d = Proximity::table(u, [](std::uint64_t a, std::uint64_t b) { return a != 0 && b != 0; });
  for (const auto& s : px::all_subsets(u)) {
    bool every_point_below = true;
    for (auto k : s.elements())
      every_point_below = every_point_below && strongly_below(d, SymSet::indices(u, {k}), s);
    EXPECT_EQ(is_open(d, s), every_point_below) << s.render();
  }
}

TEST(Interpolate, Examples) {
  const auto u = Universe::finite(3);
  const auto a = SymSet::indices(u, {0});
  EXPECT_EQ(interpolate(Proximity::discrete(u), a, SymSet::indices(u, {0, 1})), a);
  EXPECT_EQ(interpolate(Proximity::one_point(Z), SymSet::indices(Z, {0}), evens()), SymSet::indices(Z, {0}));
  // evens on the nonnegative side is not representable; use its finite stand-in
  const auto fc = Proximity::from_algebra(px::SetAlgebra::finite_cofinite(Z));
  const auto b = SymSet::full(Z) - SymSet::indices(Z, {1});
  const auto c = interpolate(fc, SymSet::indices(Z, {0, 2, 4}), b);
  EXPECT_TRUE(px::SetAlgebra::finite_cofinite(Z).contains(c));
  EXPECT_TRUE(strongly_below(fc, SymSet::indices(Z, {0, 2, 4}), c));
  EXPECT_TRUE(strongly_below(fc, c, b));
  EXPECT_THROW((void)interpolate(Proximity::one_point(Z), evens(), evens()), px::Error);
}

TEST(Interpolate, MetricWitness) {
  const auto d = Proximity::metric(I);
  const auto a = SymSet::closed(Rational(0), Rational(1, 4));
  const auto b = SymSet::closed(Rational(0), Rational(1, 2));
  const auto c = interpolate(d, a, b);
  EXPECT_TRUE(strongly_below(d, a, c));
  EXPECT_TRUE(strongly_below(d, c, b));
}

TEST(Laws, DiscreteExhaustiveOnFinite3) {
  const auto d = Proximity::discrete(Universe::finite(3));
  const auto r = check_proximity_axioms(d, Strategy::exhaustive());
  EXPECT_EQ(r.status, Status::HoldsExhaustive);
  expect_holds(check_prec_properties(d, Strategy::exhaustive()));
  expect_holds(check_kuratowski(d, Strategy::exhaustive()));
}

TEST(Laws, OnePointOnCanonicalPool) {
  const auto d = Proximity::one_point(Z);
  const auto r = check_proximity_axioms(d, Strategy::family());
  EXPECT_EQ(r.status, Status::HoldsOnFamily);
  EXPECT_GE(px::canonical_pool(Z).size(), 200u);
  expect_holds(check_prec_properties(d, Strategy::family()));
  expect_holds(check_prec_properties(Proximity::one_point(Zinf), Strategy::family()));
}

TEST(Laws, MetricOnCanonicalPool) {
  const auto d = Proximity::metric(I);
  expect_holds(check_proximity_axioms(d, Strategy::family()));
  expect_holds(check_prec_properties(d, Strategy::family()));
}

TEST(Laws, FiniteCofiniteOnCanonicalPool) {
  const auto d = Proximity::from_algebra(px::SetAlgebra::finite_cofinite(Z));
  expect_holds(check_prec_properties(d, Strategy::family()));
  expect_holds(check_proximity_axioms(d, Strategy::sampled(3, 120)));
}

TEST(Laws, KuratowskiForEveryFiniteAlgebra) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& m : px::all_algebras(n)) expect_holds(check_kuratowski(Proximity::from_algebra(m), Strategy::exhaustive()));
}

TEST(Laws, BrokenTableIsCaught) {
  const auto u = Universe::finite(2);
  // not symmetric
  const auto d = Proximity::table(u, [](std::uint64_t a, std::uint64_t b) { return (a & b) != 0 || (a == 1 && b == 2); });
  const auto r = check_proximity_axioms(d, Strategy::exhaustive());
  EXPECT_EQ(r.status, Status::Counterexample);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses.front().kind, "violation");
  // replay on the witnesses
  const auto replay = check_proximity_axioms(d, Strategy::on_witnesses(r.witness_sets));
  EXPECT_EQ(replay.status, Status::Counterexample);
}

TEST(Subspace, AgreesWithParent) {
  const auto parent = Proximity::one_point(Z);
  const auto carrier = evens();
  const auto d = Proximity::subspace(parent, carrier);
  const auto pool = px::canonical_pool(Z);
  for (std::size_t i = 0; i < pool.size(); i += 4)
    for (std::size_t j = 0; j < pool.size(); j += 7) {
      const auto a = pool[i] & carrier, b = pool[j] & carrier;
      EXPECT_EQ(near(d, a, b), near(parent, a, b));
    }
  expect_holds(check_proximity_axioms(d, Strategy::sampled(11, 60)));
  EXPECT_THROW((void)near(d, odds(), evens()), px::Error);
}

TEST(Separated, FlaggedNotAssumed) {
  const auto coarse = px::partition_algebra(Universe::finite(3), {0b001, 0b110});
  const auto r = check_separated(Proximity::from_algebra(coarse));
  EXPECT_EQ(r.status, Status::Counterexample);
  EXPECT_EQ(check_separated(Proximity::discrete(Universe::finite(3))).status, Status::HoldsExhaustive);
  EXPECT_EQ(check_separated(Proximity::one_point(Z)).status, Status::HoldsExhaustive);
}
