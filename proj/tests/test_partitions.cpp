#include <set>

#include <gtest/gtest.h>

#include "affine_basis/partitions.hpp"
#include "oracles.hpp"

using namespace affine_basis;


TEST(Partitions, AdmissibleSetsMatchBruteForce) {
  for (const auto& kind : {ModuleKind::a1(1, 0), ModuleKind::a1(0, 1), ModuleKind::a1(1, 1), ModuleKind::a1(0, 2),
                           ModuleKind::c2fs(1, 0, 0), ModuleKind::c2fs(0, 1, 1), ModuleKind::c2fs(0, 0, 2),
                           ModuleKind::c2fs(1, 1, 0)}) {
    std::set<std::string> got;
    for (const auto& p : enumerate_admissible(kind, 3)) got.insert(p.to_string());
    EXPECT_EQ(got, oracle::admissible_by_brute_force(kind, 3)) << kind.label();
  }
}

TEST(Partitions, CountsForTheA1Vacuum) {
  std::vector<int> per_degree(7);
  for (const auto& p : enumerate_admissible(ModuleKind::a1(1, 0), 6)) ++per_degree[p.degree()];
  EXPECT_EQ(per_degree, (std::vector<int>{1, 3, 4, 7, 13, 19, 29}));
  EXPECT_EQ(enumerate_admissible(ModuleKind::a1(1, 0), 2).size(), 8u);
  EXPECT_EQ(enumerate_admissible(ModuleKind::c2fs(1, 1, 0), 0).size(), 1u);
}

TEST(Partitions, EnumerationIsSortedAndUnique) {
  const auto parts = enumerate_admissible(ModuleKind::a1(1, 1), 4);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) EXPECT_TRUE(parts[i] < parts[i + 1]);
}

TEST(Partitions, JsonRoundTrip) {
  for (const auto& p : enumerate_admissible(ModuleKind::a1(0, 2), 3)) {
    const auto j = p.to_json();
    EXPECT_EQ(ColoredPartition::from_json(j), p);
    EXPECT_EQ(j["degree"], p.degree());
    EXPECT_EQ(j["N"], n_of(p));
    EXPECT_EQ(j["Nprime"], n_prime(p));
  }
}

TEST(Partitions, WeightsAndCounts) {
  ColoredPartition p;
  p.set(Color::a, 1, 1);
  p.set(Color::b, 2, 2);
  p.set(Color::c, 0, 1);
  EXPECT_EQ(p.degree(), 5);
  EXPECT_EQ(n_prime(p), 4);
  EXPECT_EQ(n_of(p), 3);
  EXPECT_EQ(p.weight_a1(), (Root{0, 0}));
  EXPECT_EQ(p.weight_c2fs(), (Root{4, 4}));
  const auto [rest, c0] = split_c0(p);
  EXPECT_EQ(c0, 1);
  EXPECT_EQ(rest.c(0), 0);
}

TEST(Partitions, LiteralWordPutsModeZeroFactorsRight) {
  ColoredPartition p;
  p.set(Color::c, 0, 1);
  p.set(Color::a, 1, 1);
  const auto m = monomial_a1(p);
  ASSERT_EQ(m.word.size(), 2u);
  EXPECT_EQ(m.word.front(), (LoopElement{Basis::x11, -1}));
  EXPECT_EQ(m.word.back(), (LoopElement{Basis::x1b1b, 0}));
  EXPECT_EQ(monomial_c2fs(p).canonical, Monomial::from_letters({{Basis::x11, -1}, {Basis::x22, 0}}));
}

TEST(Partitions, InitialConditionsPropagate) {
  for (const auto& kind : {ModuleKind::a1(1, 1), ModuleKind::a1(0, 2), ModuleKind::a1(2, 0)})
    for (const auto& p : enumerate_admissible(kind, 4)) {
      const IcPropagation r = ic_propagation(p, kind.k0, kind.k1);
      EXPECT_TRUE(r.ok) << p.to_string() << ": " << r.failure;
      EXPECT_EQ(r.lambda_prime.k2, p.c(0));
      EXPECT_TRUE(satisfies_dc(r.rest, kind.level()));
    }
  ColoredPartition bad;
  bad.set(Color::c, 0, 2);
  EXPECT_FALSE(ic_propagation(bad, 1, 1).ok);
}

TEST(Partitions, UnrestrictedContainsAdmissible) {
  std::set<std::string> all;
  for (const auto& p : enumerate_unrestricted(3, 1)) all.insert(p.to_string());
  for (const auto& p : enumerate_admissible(ModuleKind::a1(0, 1), 3)) EXPECT_TRUE(all.count(p.to_string()));
}
