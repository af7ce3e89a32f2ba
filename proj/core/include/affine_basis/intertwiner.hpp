#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "affine_basis/partitions.hpp"
#include "affine_basis/report.hpp"
#include "affine_basis/truncated_module.hpp"

namespace affine_basis {

// Exact sparse linear system kept in reduced row echelon form while rows
// are added. The pivot of a new row is its smallest surviving column, so
// the result does not depend on anything but the order of the rows.
class SparseSystem {
 public:
  using Row = std::map<std::size_t, Rational>;

  explicit SparseSystem(std::size_t variables) : variables_(variables) {}

  // Adds row . x = rhs. Returns false if the system became inconsistent.
  bool add(Row row, const Rational& rhs = 0);

  std::size_t variables() const { return variables_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t nullity() const { return variables_ - rows_.size(); }
  bool consistent() const { return consistent_; }

  // Free variables set to zero. Requires consistent().
  std::vector<Rational> particular_solution() const;

  // Dimension of the projection of the homogeneous solution space onto the
  // given variables.
  std::size_t projected_nullity(const std::vector<std::size_t>& vars) const;

 private:
  struct Pivot {
    Row row;  // includes the pivot column with coefficient 1
    Rational rhs;
  };

  void reduce(Row& row, Rational& rhs) const;

  std::size_t variables_;
  std::map<std::size_t, Pivot> rows_;                          // by pivot column
  std::map<std::size_t, std::vector<std::size_t>> occurrences_;  // non-pivot column -> pivots (may be stale)
  bool consistent_ = true;
};

// One block of w: L(Lambda1)_source -> L(Lambda2)_target, target weight
// = source weight + eps1, same degree.
struct IntertwinerBlock {
  Grade source;
  Grade target;
  std::vector<std::string> source_basis;
  std::vector<std::string> target_basis;
  Matrix matrix;  // target dim x source dim
  // Dimension of the homogeneous solution space projected onto this block.
  std::size_t solution_dimension = 0;

  nlohmann::json to_json() const;
};

// The coefficient w: L(Lambda1) -> L(Lambda2) up to degree `depth`,
// commuting with x_gamma(n) (gamma in {x11, x12, x22}, |n| <= depth) where
// both degrees stay within the window, with v2 -> v12. w is assumed to
// preserve the degree.
struct IntertwinerMap {
  int depth = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::vector<IntertwinerBlock> blocks;  // sorted by source grade

  const IntertwinerBlock* find(const Grade& source) const;

  // w on a vector of L(Lambda1); the result lies in L(Lambda2).
  TruncatedModule::Vector apply(const TruncatedModule::Vector& v) const;

  nlohmann::json to_json() const;
  // Columns: degree, weight, rows, cols, solution_dimension.
  std::string solution_table_csv() const;
};

class IntertwinerInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// lambda1 = L(Lambda1), lambda2 = L(Lambda2), both at the same depth.
// Throws IntertwinerInfeasible if the constraints admit no solution.
IntertwinerMap solve_w(TruncatedModule& lambda1, TruncatedModule& lambda2);

// Every commutation constraint of solve_w holds exactly for `w`.
StepReport verify_w_commutation(const IntertwinerMap& w, TruncatedModule& lambda1, TruncatedModule& lambda2);

// For every g1-monomial xbar of degree <= max_degree:
// w(xbar v1) = 0 and w(xbar v2) = xbar v12.
StepReport verify_w_on_g1_orbits(const IntertwinerMap& w, TruncatedModule& lambda1, TruncatedModule& lambda2,
                                 int max_degree);

// w_{k1,s} = 1 x ... x 1 x w x ... x w on the tensor model of
// (k0, k1, 0): w on the last s of the k1 Lambda1 slots. The result is keyed
// like the tensor model of (k0, k1 - s, s). Throws std::invalid_argument if
// s > k1 or s < 0.
TensorModule::Vector apply_w_ks(const IntertwinerMap& w, int k0, int k1, int s, const TensorModule::Vector& v);

// For admissible A1 pi with pi_1, c0 as in split_c0 and
// Lambda' = (kbar0, kbar1 - c0, c0), in the tensor models:
//   (i)   w_{k1,c0} xbar(pi_1) x21b(0)^{c0} v_Lambda = c0! xbar(pi_1) v_Lambda' != 0,
//   (ii)  w_{k1,s}  xbar(pi_1) x21b(0)^{c0} v_Lambda = 0 for c0 < s <= k1,
//   (iii) <x(pi) v, x(pi') v> agrees with the Verma model for admissible pi'
//         of the same degree and weight.
StepReport verify_projection_chain(const ColoredPartition& pi, const ModuleKind& kind, LevelOneFactors& factors,
                                   const IntertwinerMap& w, VermaModule& verma);

// All admissible pi of degree <= max_degree.
SweepReport sweep_projection_chain(const ModuleKind& kind, int max_degree, LevelOneFactors& factors,
                                   const IntertwinerMap& w);

// Per block of admissible vectors: the Gram matrix in the tensor model
// equals the Gram matrix in the Verma model.
SweepReport verify_cross_model(const ModuleKind& kind, int max_degree, LevelOneFactors& factors);

}  // namespace affine_basis
