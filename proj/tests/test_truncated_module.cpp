#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "affine_basis/truncated_module.hpp"

using namespace affine_basis;

namespace {

std::vector<Root> top_weights(const TruncatedModule& m) {
  std::vector<Root> out;
  for (const Grade& g : m.grades(0))
    for (std::size_t i = 0; i < m.dimension(g); ++i) out.push_back(g.weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> sorted(std::vector<Root> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(TruncatedModule, LevelOneTops) {
  TruncatedModule l0({1, 0, 0}, 0), l1({0, 1, 0}, 0), l2({0, 0, 1}, 0);
  EXPECT_EQ(top_weights(l0), (std::vector<Root>{{0, 0}}));
  EXPECT_EQ(top_weights(l1), sorted({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  EXPECT_EQ(top_weights(l2), sorted({{1, 1}, {1, -1}, {0, 0}, {-1, 1}, {-1, -1}}));
}

TEST(TruncatedModule, DimensionsMatchVermaGramRanks) {
  for (const HighestWeightSpec spec : {HighestWeightSpec{1, 0, 0}, HighestWeightSpec{0, 1, 0},
                                       HighestWeightSpec{0, 0, 1}, HighestWeightSpec{1, 1, 0}}) {
    TruncatedModule t(spec, 2);
    VermaModule v(spec);
    for (int d = 0; d <= 2; ++d) {
      if (spec.level() > 1 && d == 2) continue;  // kept short
      for (Root w : weight_window(Algebra::c2, spec, d))
        EXPECT_EQ(t.dimension(Grade{d, w}), graded_dimension(Algebra::c2, v, d, w, 2)) << spec.label() << d;
    }
  }
}

TEST(TruncatedModule, ActionRespectsBrackets) {
  std::mt19937 rng(4);
  TruncatedModule m({0, 1, 0}, 3);
  const auto grades = m.grades();
  for (int trial = 0; trial < 80; ++trial) {
    const LoopElement x{kAllBasis[rng() % kBasisCount], static_cast<int>(rng() % 3) - 1};
    const LoopElement y{kAllBasis[rng() % kBasisCount], static_cast<int>(rng() % 3) - 1};
    const Grade g = grades[rng() % grades.size()];
    if (g.degree - x.mode - y.mode > 3 || g.degree - x.mode > 3 || g.degree - y.mode > 3) continue;
    const auto v = m.basis_vector(g, rng() % m.dimension(g));
    const auto xy = m.act(x, m.act(y, v));
    const auto yx = m.act(y, m.act(x, v));
    auto expected = m.zero(xy.grade);
    const AffineTerm b = loop_bracket(x, y);
    for (const auto& [e, c] : b.terms) expected = m.add(expected, m.act(e, v), c);
    if (b.central != 0) expected = m.add(expected, m.act_central(v), b.central);
    const auto got = m.add(xy, yx, -1);
    for (std::size_t i = 0; i < got.coords.size(); ++i)
      EXPECT_EQ(got.coords[i], i < expected.coords.size() ? expected.coords[i] : Rational(0))
          << to_string(x) << " " << to_string(y) << " on " << to_string(g);
  }
}

TEST(TruncatedModule, FormIsContravariant) {
  std::mt19937 rng(8);
  TruncatedModule m({0, 0, 1}, 3);
  const auto grades = m.grades();
  for (int trial = 0; trial < 60; ++trial) {
    const LoopElement x{kAllBasis[rng() % kBasisCount], -static_cast<int>(rng() % 2)};
    const Grade g = grades[rng() % grades.size()];
    const Grade t = TruncatedModule::shifted(g, x);
    if (t.degree > 3 || m.dimension(t) == 0) continue;
    const auto u = m.basis_vector(g, rng() % m.dimension(g));
    const auto v = m.basis_vector(t, rng() % m.dimension(t));
    EXPECT_EQ(m.form(m.act(x, u), v), m.form(u, m.act(contravariant(x), v)));
  }
}

TEST(TruncatedModule, GramBlocksAreNondegenerate) {
  TruncatedModule m({1, 0, 0}, 3);
  EXPECT_EQ(m.dimension(1), 10u);
  for (const Grade& g : m.grades()) EXPECT_EQ(rank_exact(m.gram(g)), m.dimension(g));
}

TEST(TruncatedModule, DepthIsEnforced) {
  TruncatedModule m({1, 0, 0}, 1);
  EXPECT_THROW(m.action_matrix({Basis::x11, -1}, Grade{1, {0, 0}}), DepthExceeded);
  EXPECT_TRUE(m.act({Basis::x11, 1}, m.highest_weight_vector()).is_zero());
}

TEST(TensorModule, TopOfLevelTwoAgreesWithCharacterOfTensorSquare) {
  LevelOneFactors f(1);
  const TensorModule t = f.tensor({0, 2, 0});
  EXPECT_EQ(t.slots(), 2u);
  EXPECT_EQ(t.level(), 2);
  const auto v = t.highest_weight_vector();
  EXPECT_EQ(t.form(v, v), Rational(1));
  // x21b(0) v = v1 (x) v2 + v2 (x) v1 has norm 2.
  const auto x = t.act({Basis::x21b, 0}, v);
  EXPECT_EQ(x.size(), 2u);
  EXPECT_EQ(t.form(x, x), Rational(2));
  // The coproduct kills x21b(0)^3 v on two copies of the 4-dim top.
  const std::vector<LoopElement> cube(3, LoopElement{Basis::x21b, 0});
  EXPECT_TRUE(is_zero(t.apply_word(cube, v)));
}
