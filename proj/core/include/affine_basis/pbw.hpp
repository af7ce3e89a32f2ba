#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affine_basis/affine.hpp"
#include "affine_basis/linalg.hpp"

namespace affine_basis {

// Highest weight k0 Lambda0 + k1 Lambda1 + k2 Lambda2 of C2^(1). An A1^(1)
// weight (kbar0, kbar1) is carried as (kbar0, kbar1, 0): the A1 module is
// U(A1^(1)) v_Lambda inside the C2^(1) module.
struct HighestWeightSpec {
  int k0 = 0;
  int k1 = 0;
  int k2 = 0;

  static HighestWeightSpec a1(int kbar0, int kbar1) { return {kbar0, kbar1, 0}; }

  int level() const { return k0 + k1 + k2; }
  // Finite part k1 omega1 + k2 omega2.
  Root finite_weight() const { return {k1 + k2, k2}; }
  int eigenvalue(Basis h) const { return cartan_eval(finite_weight(), h); }
  void validate() const;
  std::string label() const;
  bool operator==(const HighestWeightSpec&) const = default;
};

// Ordered product of loop elements, stored expanded and non-increasing
// under the order on loop elements, times c^central.
class Monomial {
 public:
  Monomial() = default;
  // Sorts; the letters need not be ordered on input.
  static Monomial from_letters(std::vector<LoopElement> letters, int central = 0);

  const std::vector<LoopElement>& letters() const { return letters_; }
  int central() const { return central_; }
  bool empty() const { return letters_.empty() && central_ == 0; }
  std::size_t length() const { return letters_.size(); }

  // (element, exponent) pairs in order.
  std::vector<std::pair<LoopElement, int>> factors() const;
  // -sum of modes.
  int degree() const;
  Root weight() const;

  Monomial with_central(int c) const;
  Monomial tail() const;  // drops the leading letter

  std::string to_string() const;
  // Inverse of to_string.
  static Monomial parse(const std::string& text);

  bool operator==(const Monomial&) const = default;
  // Total order used for deterministic output: length, then letters.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<LoopElement> letters_;
  int central_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Finitely supported rational combination of monomials. Zero coefficients
// are never stored.
class Combination {
 public:
  Combination() = default;
  explicit Combination(const Monomial& m, const Rational& c = 1) { add(m, c); }

  void add(const Monomial& m, const Rational& c);
  void add(const Combination& o, const Rational& scale = 1);
  Combination scaled(const Rational& s) const;
  Rational coefficient(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  // Terms in the deterministic monomial order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;
  std::string to_string() const;

  bool operator==(const Combination& o) const { return terms_ == o.terms_; }
  Combination operator-(const Combination& o) const;

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> terms_;
};

// A vector in the Verma model M(Lambda), as a combination of PBW monomials
// applied to v_Lambda.
using ModuleVector = Combination;

// (degree, weight) shared by all terms, or nullopt if mixed or zero.
std::optional<std::pair<int, Root>> grading_of(const ModuleVector& v, const HighestWeightSpec& spec);

enum class SwapStrategy { leftmost, rightmost, random };

// Straightening in U(g^): rewrites words as combinations of ordered
// monomials by swapping adjacent out-of-order letters.
class Straightener {
 public:
  explicit Straightener(const StructureTable& table = c2_table()) : table_(&table) {}

  Combination straighten(std::span<const LoopElement> word);

  // f * m, with m ordered.
  const Combination& left_multiply(const LoopElement& f, const Monomial& m);
  Combination left_multiply(const LoopElement& f, const Combination& v);
  // u * v for ordered combinations.
  Combination multiply(const Combination& u, const Combination& v);

  // Reference rewriting: repeatedly swap one out-of-order adjacent pair
  // chosen by the strategy. Unmemoized.
  Combination straighten_by_swaps(std::span<const LoopElement> word, SwapStrategy strategy,
                                  std::uint64_t seed = 0) const;

  const StructureTable& table() const { return *table_; }

 private:
  struct Key {
    LoopElement f;
    Monomial m;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  const StructureTable* table_;
  std::unordered_map<Key, std::unique_ptr<Combination>, KeyHash> memo_;
};

enum class Algebra { a1, c2 };

// Loop elements usable as PBW letters in the Verma model: negative modes,
// and mode-0 negative root vectors. Restricted to the A1 subalgebra on request.
bool is_pbw_letter(const LoopElement& x, Algebra algebra);
std::vector<LoopElement> lowering_generators(Algebra algebra, int max_degree);

// Contravariant transpose of a monomial: reversed word of images.
std::vector<LoopElement> contravariant_transpose(const Monomial& m);

// The Verma model M(Lambda) with the contravariant form normalized by
// <v_Lambda, v_Lambda> = 1. Not thread-safe (memoized).
class VermaModule {
 public:
  explicit VermaModule(HighestWeightSpec spec, const StructureTable& table = c2_table());

  const HighestWeightSpec& spec() const { return spec_; }
  const StructureTable& table() const { return straightener_.table(); }
  Straightener& straightener() { return straightener_; }

  static ModuleVector highest_weight_vector() { return ModuleVector(Monomial{}); }

  const ModuleVector& act(const LoopElement& x, const Monomial& m);
  ModuleVector act(const LoopElement& x, const ModuleVector& v);
  ModuleVector act_central(const ModuleVector& v) const { return v.scaled(spec_.level()); }
  // Applies the word right to left: w = x1 x2 ... xr gives x1(x2(...xr v)).
  ModuleVector apply_word(std::span<const LoopElement> word, ModuleVector v);
  ModuleVector apply(const Combination& u, const ModuleVector& v);

  // <a v_Lambda, b v_Lambda>.
  Rational pairing(const Monomial& a, const Monomial& b);
  Rational form(const ModuleVector& u, const ModuleVector& v);

  // Coefficient of v_Lambda.
  static Rational vacuum_coefficient(const ModuleVector& v) { return v.coefficient(Monomial{}); }

  std::size_t memo_size() const { return act_memo_.size() + pair_memo_.size(); }

 private:
  struct ActKey {
    LoopElement x;
    Monomial m;
    bool operator==(const ActKey&) const = default;
  };
  struct ActKeyHash {
    std::size_t operator()(const ActKey& k) const noexcept;
  };
  struct PairKey {
    Monomial a;
    Monomial b;
    bool operator==(const PairKey&) const = default;
  };
  struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept;
  };

  HighestWeightSpec spec_;
  Straightener straightener_;
  std::unordered_map<ActKey, std::unique_ptr<ModuleVector>, ActKeyHash> act_memo_;
  std::unordered_map<PairKey, Rational, PairKeyHash> pair_memo_;
};

struct GramBlock {
  std::vector<Monomial> basis;
  Matrix matrix;
  std::size_t rank = 0;
};

class GramCache;

// Entry (i, j) = <monos[i] v, monos[j] v>. Throws std::invalid_argument on
// mixed grading.
GramBlock gram_matrix(const std::vector<Monomial>& monos, VermaModule& module,
                      GramCache* cache = nullptr);

// Gram matrix of arbitrary homogeneous vectors.
Matrix gram_of_vectors(const std::vector<ModuleVector>& vectors, VermaModule& module);

// All PBW monomials of the given (degree, weight) in the Verma model, in
// deterministic order.
std::vector<Monomial> pbw_monomials(Algebra algebra, const HighestWeightSpec& spec, int degree, Root weight);

// Weights that can carry nonzero vectors of L(Lambda) at this degree. The
// window uses Weyl symmetry of each degree piece: |e_i| <= max + 2 degree.
std::vector<Root> weight_window(Algebra algebra, const HighestWeightSpec& spec, int degree);

class DepthExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// dim L(Lambda)_{(degree, weight)} as the Gram rank of all PBW monomials.
std::size_t graded_dimension(Algebra algebra, VermaModule& module, int degree, Root weight,
                             int max_depth, GramCache* cache = nullptr);

// Sum of graded_dimension over the weight window.
std::size_t graded_dimension_total(Algebra algebra, VermaModule& module, int degree, int max_depth,
                                   GramCache* cache = nullptr);

// True iff v lies in the radical: <m, v> = 0 for every PBW monomial m of
// v's grading.
bool is_zero_in_irreducible(const ModuleVector& v, VermaModule& module, Algebra algebra = Algebra::c2);

}  // namespace affine_basis
