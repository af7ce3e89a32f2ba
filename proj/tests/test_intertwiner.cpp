#include <gtest/gtest.h>

#include "affine_basis/intertwiner.hpp"
#include "affine_basis/verifier.hpp"

using namespace affine_basis;

namespace {

// One solve shared by the tests below.
struct Fixture {
  LevelOneFactors factors{2};
  IntertwinerMap w = solve_w(factors.fundamental(1), factors.fundamental(2));
};

Fixture& fixture() {
  static Fixture f;
  return f;
}

}  // namespace

TEST(Intertwiner, TopDegreeMapping) {
  LevelOneFactors f(0);
  TruncatedModule& l1 = f.fundamental(1);
  TruncatedModule& l2 = f.fundamental(2);
  const IntertwinerMap w = solve_w(l1, l2);
  const auto v1 = l1.highest_weight_vector();
  const auto v2 = l1.act({Basis::x21b, 0}, v1);
  EXPECT_TRUE(w.apply(v1).is_zero());
  const auto image = w.apply(v2);
  EXPECT_EQ(image.grade, l2.highest_weight_vector().grade);
  EXPECT_EQ(image.coords, l2.highest_weight_vector().coords);
}

TEST(Intertwiner, CommutesWithG1WithinTheWindow) {
  Fixture& f = fixture();
  EXPECT_GT(f.w.unknowns, 0u);
  const StepReport c = verify_w_commutation(f.w, f.factors.fundamental(1), f.factors.fundamental(2));
  EXPECT_TRUE(c.pass) << c.to_json().dump();
  const StepReport o = verify_w_on_g1_orbits(f.w, f.factors.fundamental(1), f.factors.fundamental(2), 2);
  EXPECT_TRUE(o.pass) << o.to_json().dump();
}

TEST(Intertwiner, ConsistencyExampleAtDegreeOne) {
  // w(x22(-1) v2) = x22(-1) v12.
  Fixture& f = fixture();
  TruncatedModule& l1 = f.factors.fundamental(1);
  TruncatedModule& l2 = f.factors.fundamental(2);
  const LoopElement x{Basis::x22, -1};
  const auto v2 = l1.act({Basis::x21b, 0}, l1.highest_weight_vector());
  const auto lhs = f.w.apply(l1.act(x, v2));
  const auto rhs = l2.act(x, l2.highest_weight_vector());
  EXPECT_EQ(lhs.grade, rhs.grade);
  EXPECT_EQ(lhs.coords, rhs.coords);
}

TEST(Intertwiner, SolutionIsDeterministicAndSerializes) {
  Fixture& f = fixture();
  const IntertwinerMap again = solve_w(f.factors.fundamental(1), f.factors.fundamental(2));
  EXPECT_EQ(again.to_json(), f.w.to_json());
  const auto j = f.w.to_json();
  EXPECT_EQ(j["depth"], 2);
  EXPECT_EQ(j["blocks"].size(), f.w.blocks.size());
  EXPECT_EQ(f.w.solution_table_csv().substr(0, 42), "degree,weight,rows,cols,solution_dimension");
  for (const auto& b : f.w.blocks) EXPECT_GE(b.solution_dimension, 0u);
}

TEST(Intertwiner, SlotOperators) {
  Fixture& f = fixture();
  const TensorModule t = f.factors.tensor({1, 2, 0});
  const auto v = t.apply_word(std::vector<LoopElement>{{Basis::x12, -1}, {Basis::x21b, 0}}, t.highest_weight_vector());
  EXPECT_EQ(apply_w_ks(f.w, 1, 2, 0, v), v);
  EXPECT_THROW(apply_w_ks(f.w, 1, 2, 3, v), std::invalid_argument);
  // Operators on disjoint slots commute: w on slot 2, then on slot 1, equals w_{k1,2}.
  const auto last = apply_w_ks(f.w, 1, 2, 1, v);
  const auto both = apply_w_ks(f.w, 1, 2, 2, v);
  TensorModule::Vector swapped;
  for (const auto& [key, c] : last) {
    // Move the Lambda2 slot out of the way and apply w to the remaining Lambda1 slot.
    TensorModule::Vector single{{TensorModule::Key(key.begin(), key.end() - 1), c}};
    for (const auto& [k2, c2] : apply_w_ks(f.w, 1, 1, 1, single)) {
      auto full = k2;
      full.push_back(key.back());
      add_to(swapped, {{full, c2}});
    }
  }
  EXPECT_EQ(swapped, both);
}

TEST(ProjectionChain, SmallExamples) {
  Fixture& f = fixture();
  VermaModule verma({0, 1, 0});
  ColoredPartition c0;
  c0.set(Color::c, 0, 1);
  const StepReport r = verify_projection_chain(c0, ModuleKind::a1(0, 1), f.factors, f.w, verma);
  EXPECT_TRUE(r.pass) << r.to_json().dump();
  EXPECT_EQ(*r.scalar, Rational(1));
  VermaModule verma2({1, 1, 0});
  EXPECT_TRUE(verify_projection_chain(ColoredPartition{}, ModuleKind::a1(1, 1), f.factors, f.w, verma2).pass);
}

TEST(ProjectionChain, SweepsPassAtLevelTwo) {
  Fixture& f = fixture();
  for (const auto& kind : {ModuleKind::a1(1, 1), ModuleKind::a1(0, 2)}) {
    const SweepReport s = sweep_projection_chain(kind, 2, f.factors, f.w);
    EXPECT_TRUE(s.pass()) << kind.label();
  }
}

TEST(CrossModel, TensorAndVermaGramsAgree) {
  Fixture& f = fixture();
  for (const auto& kind : {ModuleKind::a1(1, 1), ModuleKind::a1(0, 2), ModuleKind::c2fs(0, 1, 1),
                           ModuleKind::c2fs(1, 0, 1)})
    EXPECT_TRUE(verify_cross_model(kind, 2, f.factors).pass()) << kind.label();
}
