#pragma once

#include <map>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "affine_basis/pbw.hpp"

namespace affine_basis {

// (degree, absolute finite weight) of a homogeneous piece of L(Lambda).
struct Grade {
  int degree = 0;
  Root weight;

  auto tie() const { return std::tuple(degree, weight.e1, weight.e2); }
  bool operator==(const Grade& o) const { return tie() == o.tie(); }
  bool operator<(const Grade& o) const { return tie() < o.tie(); }
};

std::string to_string(const Grade& g);

// The standard module L(Lambda) of C2^(1) up to degree `depth`, built block
// by block as the quotient of the Verma module by the radical of the
// contravariant form.
//
// Every block is spanned by f v for the Chevalley lowering generators
// f in {x11(-1), x21b(0), x2b2b(0)} and v in the bases of the source blocks.
// The Gram matrix of these candidates is computed from already finished
// blocks, and its pivot columns become the basis. Action matrices of
// arbitrary loop elements are derived from the generator coordinates by
// commutation (raising side) and by adjointness (lowering side).
//
// Not thread-safe: action matrices are memoized.
class TruncatedModule {
 public:
  struct Vector {
    Grade grade;
    std::vector<Rational> coords;  // empty when the block is zero

    bool is_zero() const;
  };

  TruncatedModule(HighestWeightSpec spec, int depth, const StructureTable& table = c2_table());

  const HighestWeightSpec& spec() const { return spec_; }
  int depth() const { return depth_; }
  const StructureTable& table() const { return *table_; }

  // The three lowering generators in candidate order.
  static const std::vector<LoopElement>& generators();

  std::size_t dimension(const Grade& g) const;
  std::size_t dimension(int degree) const;
  // Grades of the nonzero blocks, sorted.
  std::vector<Grade> grades() const;
  std::vector<Grade> grades(int degree) const;

  // Words w with basis vector = w v_Lambda (letters applied right to left).
  const std::vector<std::vector<LoopElement>>& basis_words(const Grade& g) const;
  std::vector<std::string> basis_labels(const Grade& g) const;
  const Matrix& gram(const Grade& g) const;

  Vector highest_weight_vector() const;
  Vector basis_vector(const Grade& g, std::size_t i) const;
  Vector zero(const Grade& g) const;

  // Target grade of x acting on grade g.
  static Grade shifted(const Grade& g, const LoopElement& x) { return {g.degree - x.mode, g.weight + weight_of(x)}; }

  // Matrix of x from block g to block shifted(g, x). Throws DepthExceeded if
  // the target degree exceeds the depth.
  const Matrix& action_matrix(const LoopElement& x, const Grade& g);

  Vector act(const LoopElement& x, const Vector& v);
  Vector act_central(const Vector& v) const;
  Vector apply_word(std::span<const LoopElement> word, Vector v);
  Vector add(const Vector& u, const Vector& v, const Rational& scale = 1) const;

  Rational form(const Vector& u, const Vector& v) const;

 private:
  struct Label {
    int generator = -1;  // -1 for v_Lambda
    std::size_t source = 0;
  };
  struct Block {
    Grade grade;
    std::vector<Label> basis;
    std::vector<std::vector<LoopElement>> words;
    Matrix gram;
    Matrix gram_inverse;
    // Coordinates of f_g times each source basis vector, per generator.
    std::map<int, Matrix> from_generator;
  };

  int key(const Grade& g) const;
  const Block* find(const Grade& g) const;
  bool is_final(const Grade& g) const;
  void build();
  void build_block(const Grade& g);
  Matrix zero_matrix(const Grade& from, const Grade& to) const;
  Matrix compute_action(const LoopElement& x, const Grade& g);
  Matrix bracket_action(const AffineTerm& term, const Grade& from, const Grade& to);

  HighestWeightSpec spec_;
  int depth_;
  const StructureTable* table_;
  std::map<Grade, Block> blocks_;  // includes finished zero blocks
  int frontier_key_ = 0;
  bool finished_ = false;
  std::map<std::pair<Grade, std::pair<int, int>>, Matrix> action_memo_;
  static const std::vector<std::vector<LoopElement>> kNoWords;
};

// Tensor product of truncated level-1 modules with the coproduct action.
// A pure tensor of basis vectors is keyed by (grade, index) per slot.
class TensorModule {
 public:
  using Slot = std::pair<Grade, std::size_t>;
  using Key = std::vector<Slot>;
  using Vector = std::map<Key, Rational>;

  explicit TensorModule(std::vector<TruncatedModule*> factors);

  std::size_t slots() const { return factors_.size(); }
  TruncatedModule& factor(std::size_t i) const { return *factors_[i]; }
  int level() const;

  // v_{Lambda_(1)} (x) ... (x) v_{Lambda_(n)}.
  Vector highest_weight_vector() const;

  Vector act(const LoopElement& x, const Vector& v) const;
  Vector apply_word(std::span<const LoopElement> word, Vector v) const;
  // Product of the factor forms, extended bilinearly.
  Rational form(const Vector& u, const Vector& v) const;

 private:
  std::vector<TruncatedModule*> factors_;
};

bool is_zero(const TensorModule::Vector& v);
void add_to(TensorModule::Vector& acc, const TensorModule::Vector& v, const Rational& scale = 1);

// Owns the level-1 modules L(Lambda_0), L(Lambda_1), L(Lambda_2) at one depth
// and hands out tensor models of L(k0 Lambda_0 + k1 Lambda_1 + k2 Lambda_2).
class LevelOneFactors {
 public:
  explicit LevelOneFactors(int depth, const StructureTable& table = c2_table());

  int depth() const { return depth_; }
  // i = 0, 1, 2.
  TruncatedModule& fundamental(int i) { return modules_[i]; }
  TensorModule tensor(const HighestWeightSpec& spec);

 private:
  int depth_;
  std::vector<TruncatedModule> modules_;
};

}  // namespace affine_basis
