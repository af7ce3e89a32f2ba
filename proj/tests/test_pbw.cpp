#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "affine_basis/gram_cache.hpp"
#include "affine_basis/pbw.hpp"
#include "oracles.hpp"

using namespace affine_basis;

namespace {

std::vector<LoopElement> random_word(std::mt19937& rng, std::size_t length, int min_mode, int max_mode) {
  std::uniform_int_distribution<int> base(0, kBasisCount - 1), mode(min_mode, max_mode);
  std::vector<LoopElement> w;
  for (std::size_t i = 0; i < length; ++i) w.push_back({kAllBasis[base(rng)], mode(rng)});
  return w;
}

}  // namespace

TEST(Monomial, ParseInvertsToString) {
  const Monomial m = Monomial::from_letters({{Basis::x12, -1}, {Basis::h1, -2}, {Basis::x12, -1}}, 2);
  EXPECT_EQ(Monomial::parse(m.to_string()), m);
  EXPECT_EQ(m.degree(), 4);
  EXPECT_EQ(m.weight(), (Root{2, 2}));
}

TEST(Straightener, ConfluentUnderAllSwapStrategies) {
  std::mt19937 rng(42);
  Straightener s;
  for (int trial = 0; trial < 40; ++trial) {
    const auto w = random_word(rng, 2 + trial % 4, -2, 1);
    const Combination memo = s.straighten(w);
    EXPECT_EQ(s.straighten_by_swaps(w, SwapStrategy::leftmost), memo);
    EXPECT_EQ(s.straighten_by_swaps(w, SwapStrategy::rightmost), memo);
    EXPECT_EQ(s.straighten_by_swaps(w, SwapStrategy::random, trial), memo);
  }
}

TEST(Straightener, OrderedWordsAreFixed) {
  const Monomial m = Monomial::from_letters({{Basis::x11, 0}, {Basis::x12, -1}, {Basis::x1b1b, -2}});
  Straightener s;
  EXPECT_EQ(s.straighten(m.letters()), Combination(m));
}

TEST(Straightener, MultiplicationIsAssociative) {
  std::mt19937 rng(9);
  Straightener s;
  for (int trial = 0; trial < 15; ++trial) {
    const Combination a = s.straighten(random_word(rng, 2, -1, 1));
    const Combination b = s.straighten(random_word(rng, 2, -1, 1));
    const Combination c = s.straighten(random_word(rng, 1, -1, 1));
    EXPECT_EQ(s.multiply(s.multiply(a, b), c), s.multiply(a, s.multiply(b, c)));
  }
}

TEST(VermaModule, FormIsContravariant) {
  std::mt19937 rng(21);
  VermaModule m({1, 1, 0});
  for (int trial = 0; trial < 30; ++trial) {
    // u of degree 1 and v of degree 2; x lowers degree by 1.
    const auto x = LoopElement{kAllBasis[rng() % kBasisCount], 1};
    ModuleVector u = m.apply_word(random_word(rng, 1, -1, -1), VermaModule::highest_weight_vector());
    ModuleVector v = m.apply_word(random_word(rng, 2, -1, -1), VermaModule::highest_weight_vector());
    EXPECT_EQ(m.form(u, m.act(x, v)), m.form(m.act(contravariant(x), u), v));
  }
}

TEST(VermaModule, GramIsSymmetric) {
  VermaModule m({0, 1, 0});
  for (Root w : weight_window(Algebra::c2, m.spec(), 1)) {
    const auto monos = pbw_monomials(Algebra::c2, m.spec(), 1, w);
    if (monos.empty()) continue;
    EXPECT_TRUE(gram_matrix(monos, m).matrix.is_symmetric());
  }
}

TEST(VermaModule, RaisingOperatorsKillTheVacuum) {
  VermaModule m({0, 1, 1});
  for (Basis b : kAllBasis) {
    const ModuleVector v = m.act({b, 1}, VermaModule::highest_weight_vector());
    EXPECT_TRUE(v.is_zero()) << name(b);
  }
  EXPECT_TRUE(m.act({Basis::x11, 0}, VermaModule::highest_weight_vector()).is_zero());
  // Finite weight omega1 + omega2 = 2 eps1 + eps2.
  EXPECT_EQ(m.act({Basis::h1, 0}, VermaModule::highest_weight_vector()),
            VermaModule::highest_weight_vector().scaled(2));
  EXPECT_EQ(m.act({Basis::h2, 0}, VermaModule::highest_weight_vector()),
            VermaModule::highest_weight_vector().scaled(1));
}

TEST(GradedDimension, A1VacuumMatchesLatticeCharacter) {
  const auto expected = oracle::lattice_character(5);
  VermaModule m(HighestWeightSpec::a1(1, 0));
  for (int d = 0; d <= 5; ++d) EXPECT_EQ(graded_dimension_total(Algebra::a1, m, d, 5), expected[d]) << d;
}

TEST(GradedDimension, C2LevelOneLowDegrees) {
  // Degree 1 of L(Lambda0) is the adjoint module (dim 10); the tops of
  // L(Lambda1) and L(Lambda2) are the 4- and 5-dimensional modules.
  VermaModule l0({1, 0, 0}), l1({0, 1, 0}), l2({0, 0, 1});
  EXPECT_EQ(graded_dimension_total(Algebra::c2, l0, 0, 1), 1u);
  EXPECT_EQ(graded_dimension_total(Algebra::c2, l0, 1, 1), 10u);
  EXPECT_EQ(graded_dimension_total(Algebra::c2, l1, 0, 1), 4u);
  EXPECT_EQ(graded_dimension_total(Algebra::c2, l2, 0, 1), 5u);
  EXPECT_THROW(graded_dimension(Algebra::c2, l0, 2, Root{}, 1), DepthExceeded);
}

TEST(GradedDimension, RadicalVectorsAreZero) {
  VermaModule m({1, 0, 0});
  // x1b1b(0) v = 0 in L(Lambda0), but not in the Verma module.
  const ModuleVector v = m.act({Basis::x1b1b, 0}, VermaModule::highest_weight_vector());
  EXPECT_FALSE(v.is_zero());
  EXPECT_TRUE(is_zero_in_irreducible(v, m));
  // x1b1b(-1)^2 v = 0 at level 1.
  const ModuleVector w = m.apply_word(std::vector<LoopElement>{{Basis::x1b1b, -1}, {Basis::x1b1b, -1}},
                                      VermaModule::highest_weight_vector());
  EXPECT_TRUE(is_zero_in_irreducible(w, m, Algebra::a1));
  EXPECT_FALSE(is_zero_in_irreducible(m.act({Basis::x1b1b, -1}, VermaModule::highest_weight_vector()), m));
}

TEST(GramCache, RoundTripAndVersionCheck) {
  const auto dir = std::filesystem::temp_directory_path() / "affine_basis_gram_cache_test";
  std::filesystem::remove_all(dir);
  GramCache cache(dir);
  VermaModule m({0, 1, 0});
  const auto monos = pbw_monomials(Algebra::c2, m.spec(), 1, Root{1, 0});
  const GramBlock first = gram_matrix(monos, m, &cache);
  EXPECT_EQ(cache.hits(), 0u);
  const GramBlock second = gram_matrix(monos, m, &cache);
  EXPECT_EQ(cache.hits(), 1u);
  EXPECT_EQ(second.matrix, first.matrix);
  EXPECT_EQ(second.rank, first.rank);

  GramCacheKey key{m.spec(), 1, Root{1, 0}, basis_hash(monos), "other-table"};
  EXPECT_FALSE(cache.load(key).has_value());
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1u);
  std::filesystem::remove_all(dir);
}
