#include <array>

#include <gtest/gtest.h>

#include "affine_basis/affine.hpp"
#include "affine_basis/cartan.hpp"
#include "affine_basis/linalg.hpp"
#include "oracles.hpp"

using namespace affine_basis;

namespace {

using oracle::Dense;

// The commutator of two oracle matrices, decoded in the oracle basis.
std::array<int, kBasisCount> oracle_bracket(Basis x, Basis y) {
  const Dense m = oracle::bracket(oracle::matrix(x), oracle::matrix(y));
  EXPECT_TRUE(oracle::symplectic(m));
  return oracle::coordinates(m);
}

}  // namespace

TEST(Rational, RendersCanonicalFractions) {
  EXPECT_EQ(to_string(Rational(6, 4) * 1), "3/2");
  EXPECT_EQ(to_string(Rational(-4)), "-4");
  EXPECT_EQ(parse_rational("-10/4"), Rational(-5, 2));
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, BinomialMatchesPascalTriangle) {
  std::vector<std::vector<long>> pascal(15);
  for (unsigned n = 0; n < pascal.size(); ++n) {
    pascal[n].assign(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), Integer(pascal[n][k])) << n << " " << k;
  }
  EXPECT_EQ(factorial(10), Integer(3628800));
  EXPECT_EQ(factorial(0), Integer(1));
}

TEST(StructureTable, OracleMatricesAreSymplectic) {
  for (Basis x : kAllBasis) {
    EXPECT_TRUE(oracle::symplectic(oracle::matrix(x))) << name(x);
    const auto c = oracle::coordinates(oracle::matrix(x));
    for (int k = 0; k < kBasisCount; ++k) EXPECT_EQ(c[k], kAllBasis[k] == x ? 1 : 0) << name(x);
  }
}

TEST(StructureTable, BracketEqualsMatrixCommutator) {
  const StructureTable& t = c2_table();
  for (Basis x : kAllBasis)
    for (Basis y : kAllBasis) {
      const auto coords = oracle_bracket(x, y);
      for (int k = 0; k < kBasisCount; ++k)
        EXPECT_EQ(t.bracket(x, y).coeff[k], Rational(coords[k])) << name(x) << " " << name(y) << " " << name(kAllBasis[k]);
    }
}

TEST(StructureTable, FormIsTraceForm) {
  const StructureTable& t = c2_table();
  for (Basis x : kAllBasis)
    for (Basis y : kAllBasis)
      EXPECT_EQ(t.form(x, y), Rational(oracle::trace_of_product(oracle::matrix(x), oracle::matrix(y)))) << name(x) << name(y);
  EXPECT_EQ(root_inner(kTheta, kTheta), Rational(2));
  EXPECT_EQ(root_inner(kAlpha2, kAlpha2), Rational(2));
  EXPECT_EQ(root_inner(kAlpha1, kAlpha1), Rational(1));
}

TEST(StructureTable, JacobiAndInvarianceHoldExhaustively) {
  const StructureTable& t = c2_table();
  for (Basis x : kAllBasis)
    for (Basis y : kAllBasis)
      for (Basis z : kAllBasis) {
        const auto ex = FiniteVector::unit(x), ey = FiniteVector::unit(y), ez = FiniteVector::unit(z);
        const FiniteVector jacobi = t.bracket(ex, t.bracket(ey, ez)) + t.bracket(ey, t.bracket(ez, ex)) +
                                    t.bracket(ez, t.bracket(ex, ey));
        EXPECT_TRUE(jacobi.is_zero());
        EXPECT_EQ(t.form(t.bracket(ex, ey), ez), t.form(ex, t.bracket(ey, ez)));
      }
  EXPECT_NO_THROW(t.validate());
}

TEST(StructureTable, WeightsMatchTheCartanAction) {
  const StructureTable& t = c2_table();
  for (Basis x : kAllBasis) {
    if (is_cartan(x)) continue;
    for (Basis h : {Basis::h1, Basis::h2})
      EXPECT_EQ(t.bracket(h, x), Rational(cartan_eval(weight_of(x), h)) * FiniteVector::unit(x)) << name(x);
  }
}

TEST(StructureTable, JsonRoundTripKeepsVersion) {
  const StructureTable& t = c2_table();
  const StructureTable back = StructureTable::from_json(t.to_json());
  EXPECT_EQ(back.version(), t.version());
  for (Basis x : kAllBasis)
    for (Basis y : kAllBasis) EXPECT_EQ(back.bracket(x, y), t.bracket(x, y));
  EXPECT_EQ(t.to_json()["format"], kStructureTableFormat);
}

TEST(Order, BasisOrderIsLexicographicOnIndexPairs) {
  const std::vector<Basis> descending = {Basis::x11, Basis::x12, Basis::x12b, Basis::h1,    Basis::x22,
                                         Basis::h2,  Basis::x21b, Basis::x2b2b, Basis::x2b1b, Basis::x1b1b};
  for (std::size_t i = 0; i + 1 < descending.size(); ++i)
    EXPECT_TRUE(succeeds(descending[i], descending[i + 1])) << name(descending[i]);
}

TEST(LoopElements, HigherModeComesFirst) {
  EXPECT_TRUE(succeeds(LoopElement{Basis::x1b1b, 0}, LoopElement{Basis::x11, -1}));
  EXPECT_TRUE(succeeds(LoopElement{Basis::x11, -1}, LoopElement{Basis::x12, -1}));
  EXPECT_EQ(parse_loop_element(to_string(LoopElement{Basis::x2b1b, -3})), (LoopElement{Basis::x2b1b, -3}));
}

TEST(LoopElements, BracketCarriesCentralTerm) {
  const AffineTerm t = loop_bracket({Basis::x11, 2}, {Basis::x1b1b, -2});
  EXPECT_EQ(t.coefficient({Basis::h1, 0}), Rational(1));
  EXPECT_EQ(t.central, Rational(2));  // 2 <x11, x1b1b> = 2
  EXPECT_TRUE(loop_bracket({Basis::x11, 1}, {Basis::x12, -3}).is_zero());
}

TEST(LoopElements, ContravariantMapIsAnInvolutiveAntiautomorphism) {
  for (Basis x : kAllBasis)
    for (int n = -2; n <= 2; ++n) {
      const LoopElement e{x, n};
      EXPECT_EQ(contravariant(contravariant(e)), e);
      EXPECT_EQ(weight_of(contravariant(e)), -weight_of(e));
    }
  // Transpose: w([x, y]) = [w(y), w(x)].
  for (Basis x : kAllBasis)
    for (Basis y : kAllBasis) {
      const AffineTerm lhs = loop_bracket({x, 1}, {y, -1});
      const AffineTerm rhs = loop_bracket(contravariant(LoopElement{y, -1}), contravariant(LoopElement{x, 1}));
      for (const auto& [e, c] : lhs.terms) EXPECT_EQ(rhs.coefficient(contravariant(e)), c);
      EXPECT_EQ(lhs.terms.size(), rhs.terms.size());
      EXPECT_EQ(lhs.central, rhs.central);
    }
}

TEST(Gradation, ColorsAreTheRootsOfValueOne) {
  std::vector<Root> ones;
  for (Root r : kRoots)
    if (grade_by_omega(r) == 1) ones.push_back(r);
  ASSERT_EQ(ones.size(), 3u);
  for (Basis b : kColorVectors) EXPECT_EQ(grade_by_omega(b), 1);
  for (Root r : kRoots) EXPECT_LE(std::abs(grade_by_omega(r)), 1);
}
