#pragma once

#include <map>
#include <vector>

#include "affine_basis/gram_cache.hpp"
#include "affine_basis/partitions.hpp"
#include "affine_basis/pbw.hpp"
#include "affine_basis/report.hpp"
#include "affine_basis/truncated_module.hpp"

namespace affine_basis {

using Word = std::vector<LoopElement>;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

// Formal combination of words (products in U(g^) in the written order).
using WordCombination = std::map<Word, Rational, WordLess>;

// T = ad x12 on g, as images of the basis. The three scalars
// T h1 = lambda1 x12, T x1b1b = lambda2 x21b, T x21b = lambda3 x22 are read
// off the structure table.
class DerivationTable {
 public:
  // `annihilator` replaces T x11 = 0 by T x11 = x12: a deliberately wrong
  // table used to exercise the failure paths.
  enum class Mutation { none, annihilator };

  explicit DerivationTable(const StructureTable& table = c2_table(), Mutation mutation = Mutation::none);

  const FiniteVector& image(Basis b) const { return image_[index_of(b)]; }
  const Rational& lambda1() const { return lambda1_; }
  const Rational& lambda2() const { return lambda2_; }
  const Rational& lambda3() const { return lambda3_; }
  Mutation mutation() const { return mutation_; }

  // Leibniz rule across the letters; modes are preserved.
  WordCombination apply(const WordCombination& u) const;
  WordCombination apply(const Word& w) const { return apply(WordCombination{{w, Rational(1)}}); }
  WordCombination power(const Word& w, int n) const;

  // Scalar predicted for T^{N'} x(pi) = lambda xbar(pi):
  // N'! / 2^{sum c} * lambda1^{sum b} * (lambda2 lambda3)^{sum c}.
  Rational predicted_power_scalar(const ColoredPartition& pi) const;

 private:
  std::array<FiniteVector, kBasisCount> image_{};
  Rational lambda1_, lambda2_, lambda3_;
  Mutation mutation_;
};

// T on ordered combinations, straightened back to ordered form.
Combination t_apply(const DerivationTable& t, const Combination& u, Straightener& straightener);

Combination straighten(const WordCombination& u, Straightener& straightener);

// T^{N'} x(pi) = lambda xbar(pi) and T^{N'+1} x(pi) = 0 in U(g^).
StepReport verify_t_power(const ColoredPartition& pi, const ModuleKind& kind, const DerivationTable& t,
                          Straightener& straightener);

// In L(Lambda), Lambda = (kbar0, kbar1, 0):
//   x12(0)^N x(pi) v = mu xbar(pi_1) x21b(0)^{c0} v,  x12(0)^{N+1} x(pi) v = 0,
// computed both by the module action of x12(0) and by T^N x(pi) acting on v.
// `module` must be L(Lambda) with depth >= degree(pi).
StepReport verify_translation(const ColoredPartition& pi, const ModuleKind& kind, const DerivationTable& t,
                              TruncatedModule& module);

// mu = C(N, N(pi_1)) * lambda(pi_1) * c0! * lambda2^{c0}.
Rational predicted_translation_scalar(const ColoredPartition& pi, const DerivationTable& t);

// x21b(0)^{c0} v_Lambda != 0 iff c0 <= k1 (for k2 = 0).
StepReport verify_c0_nonvanishing(int c0, TruncatedModule& module);

StepReport verify_ic_propagation(const ColoredPartition& pi, const ModuleKind& kind);

struct VerifyOptions {
  int jobs = 1;
  GramCache* cache = nullptr;
};

// x(pi) v (A1 kind, literal order) or xbar(pi) v (C2FS kind) in the Verma model.
ModuleVector partition_vector(const ColoredPartition& pi, const ModuleKind& kind, VermaModule& verma);
Word partition_word(const ColoredPartition& pi, const ModuleKind& kind);
Root partition_weight(const ColoredPartition& pi, const ModuleKind& kind);

// Per (degree, weight) block: Gram rank of the admissible vectors equals
// their number.
SweepReport verify_independence(const ModuleKind& kind, int max_degree, const VerifyOptions& options = {});

// Per block: rank of all PBW monomials (all g1-monomials for C2FS) equals
// the rank of the admissible vectors.
SweepReport verify_spanning(const ModuleKind& kind, int max_degree, const VerifyOptions& options = {});

// Sweeps over all admissible partitions of degree <= max_degree.
SweepReport sweep_t_power(const ModuleKind& kind, int max_degree, const DerivationTable& t);
SweepReport sweep_translation(const ModuleKind& kind, int max_degree, const DerivationTable& t);
SweepReport sweep_ic_propagation(const ModuleKind& kind, int max_degree);

// Each partition of degree <= max_degree that satisfies the A1 initial
// conditions but violates a difference condition, appended to the
// admissible family of its block, must produce a rank deficit.
SweepReport negative_controls(const ModuleKind& kind, int max_degree);

}  // namespace affine_basis
