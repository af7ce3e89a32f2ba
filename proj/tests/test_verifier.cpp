#include <random>

#include <gtest/gtest.h>

#include "affine_basis/verifier.hpp"

using namespace affine_basis;

namespace {

std::vector<LoopElement> random_word(std::mt19937& rng, std::size_t length) {
  std::vector<LoopElement> w;
  for (std::size_t i = 0; i < length; ++i)
    w.push_back({kAllBasis[rng() % kBasisCount], -static_cast<int>(rng() % 3)});
  return w;
}

ColoredPartition make(std::initializer_list<std::tuple<Color, int, int>> entries) {
  ColoredPartition p;
  for (auto [c, j, f] : entries) p.set(c, j, f);
  return p;
}

}  // namespace

TEST(Derivation, ScalarsMatchTheStructureTable) {
  const DerivationTable t;
  EXPECT_TRUE(t.image(Basis::x11).is_zero());
  EXPECT_TRUE(t.image(Basis::x12).is_zero());
  EXPECT_TRUE(t.image(Basis::x22).is_zero());
  EXPECT_EQ(t.image(Basis::h1), t.lambda1() * FiniteVector::unit(Basis::x12));
  EXPECT_EQ(t.image(Basis::x1b1b), t.lambda2() * FiniteVector::unit(Basis::x21b));
  EXPECT_EQ(t.image(Basis::x21b), t.lambda3() * FiniteVector::unit(Basis::x22));
  EXPECT_NE(t.lambda1() * t.lambda2() * t.lambda3(), 0);
}

TEST(Derivation, IsADerivationOfTheEnvelopingAlgebra) {
  // T(uv) = T(u) v + u T(v), compared after straightening, and T agrees with
  // the commutator [x12(0), -] on ordered monomials.
  std::mt19937 rng(13);
  const DerivationTable t;
  Straightener s;
  for (int trial = 0; trial < 25; ++trial) {
    const auto u = random_word(rng, 1 + trial % 3);
    const auto v = random_word(rng, 1 + trial % 2);
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    const Combination lhs = straighten(t.apply(uv), s);
    Combination rhs = s.multiply(straighten(t.apply(u), s), s.straighten(v));
    rhs.add(s.multiply(s.straighten(u), straighten(t.apply(v), s)));
    EXPECT_EQ(lhs, rhs);

    const Combination ordered = s.straighten(uv);
    const LoopElement x12{Basis::x12, 0};
    const Combination commutator =
        s.left_multiply(x12, ordered) - s.multiply(ordered, Combination(Monomial::from_letters({x12})));
    EXPECT_EQ(t_apply(t, ordered, s), commutator);
  }
}

TEST(Derivation, PowerScalarIsTheRecordedProduct) {
  const DerivationTable t;
  Straightener s;
  const auto pi = make({{Color::b, 1, 1}, {Color::c, 2, 1}});
  const StepReport r = verify_t_power(pi, ModuleKind::a1(1, 1), t, s);
  ASSERT_TRUE(r.pass) << r.to_json().dump();
  // N' = 3: 3!/2 * lambda1 * lambda2 lambda3.
  EXPECT_EQ(*r.scalar, Rational(3) * t.lambda1() * t.lambda2() * t.lambda3());
}

TEST(Derivation, SweepsPassOnSmallSpecs) {
  const DerivationTable t;
  for (const auto& kind : {ModuleKind::a1(1, 0), ModuleKind::a1(0, 1), ModuleKind::a1(1, 1)}) {
    EXPECT_TRUE(sweep_t_power(kind, 3, t).pass()) << kind.label();
    EXPECT_TRUE(sweep_translation(kind, 2, t).pass()) << kind.label();
    EXPECT_TRUE(sweep_ic_propagation(kind, 3).pass()) << kind.label();
  }
}

TEST(Derivation, MutatedTableIsCaught) {
  const DerivationTable bad(c2_table(), DerivationTable::Mutation::annihilator);
  const SweepReport tp = sweep_t_power(ModuleKind::a1(1, 1), 2, bad);
  EXPECT_FALSE(tp.pass());
  ASSERT_NE(tp.first_failure(), nullptr);
  EXPECT_FALSE(tp.first_failure()->witness.is_null());
  EXPECT_FALSE(sweep_translation(ModuleKind::a1(1, 1), 2, bad).pass());
}

TEST(Translation, ExampleWithModeZeroFactor) {
  // pi = {a_1 = 1, c_0 = 1} for (1, 1): N = 1 and
  // x12(0) x11(-1) x1b1b(0) v = mu x11(-1) x21b(0) v.
  const DerivationTable t;
  TruncatedModule m({1, 1, 0}, 1);
  const auto pi = make({{Color::a, 1, 1}, {Color::c, 0, 1}});
  const StepReport r = verify_translation(pi, ModuleKind::a1(1, 1), t, m);
  EXPECT_TRUE(r.pass) << r.to_json().dump();
  EXPECT_EQ(*r.scalar, t.lambda2());
}

TEST(Translation, ModeZeroPowersVanishBeyondK1) {
  TruncatedModule m({0, 2, 0}, 0);
  for (int c0 = 0; c0 <= 3; ++c0) EXPECT_TRUE(verify_c0_nonvanishing(c0, m).pass) << c0;
}

TEST(Sweeps, IndependenceAndSpanningOnSmallSpecs) {
  for (const auto& kind : {ModuleKind::a1(1, 0), ModuleKind::a1(0, 2)}) {
    const SweepReport ind = verify_independence(kind, 3);
    EXPECT_TRUE(ind.pass()) << kind.label();
    const SweepReport span = verify_spanning(kind, 3);
    EXPECT_TRUE(span.pass()) << kind.label();
  }
  EXPECT_TRUE(verify_independence(ModuleKind::c2fs(0, 1, 1), 3).pass());
}

TEST(Sweeps, ParallelRunsGiveIdenticalReports) {
  const auto one = verify_independence(ModuleKind::a1(1, 1), 3, {1, nullptr});
  const auto many = verify_independence(ModuleKind::a1(1, 1), 3, {3, nullptr});
  EXPECT_EQ(one.to_json(), many.to_json());
}

TEST(Sweeps, DroppingTheInitialConditionBreaksIndependence) {
  // With a_1 = 2 > k0 = 1 at level 2 the family becomes dependent.
  VermaModule v({1, 1, 0});
  const ModuleKind kind = ModuleKind::a1(1, 1);
  const auto bad = make({{Color::a, 1, 2}});
  ASSERT_FALSE(satisfies_ic_a1(bad, 1, 1));
  EXPECT_TRUE(is_zero_in_irreducible(partition_vector(bad, kind, v), v, Algebra::a1));
}

TEST(Sweeps, NegativeControlsAllShowRankDeficit) {
  for (const auto& kind : {ModuleKind::a1(1, 0), ModuleKind::a1(0, 1)}) {
    const SweepReport r = negative_controls(kind, 3);
    EXPECT_FALSE(r.reports.empty());
    EXPECT_TRUE(r.pass()) << kind.label();
  }
}
