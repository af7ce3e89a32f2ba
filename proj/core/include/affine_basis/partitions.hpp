#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "affine_basis/pbw.hpp"

namespace affine_basis {

enum class Color { a, b, c };

// Colored partition with parts -j (j >= 0) in colors a, b, c; frequencies
// are stored sparsely and never hold zeros.
class ColoredPartition {
 public:
  int frequency(Color color, int j) const;
  void set(Color color, int j, int freq);
  ColoredPartition with(Color color, int j, int freq) const {
    ColoredPartition p = *this;
    p.set(color, j, freq);
    return p;
  }

  int a(int j) const { return frequency(Color::a, j); }
  int b(int j) const { return frequency(Color::b, j); }
  int c(int j) const { return frequency(Color::c, j); }

  const std::map<int, int>& frequencies(Color color) const;

  int degree() const;
  int max_part() const;  // largest j with a nonzero frequency, -1 if empty
  int total(Color color) const;
  bool empty() const { return a_.empty() && b_.empty() && c_.empty(); }

  // Weight of x(pi): a -> theta, b -> 0, c -> -theta.
  Root weight_a1() const;
  // Weight of xbar(pi): a -> 2eps1, b -> eps1 + eps2, c -> 2eps2.
  Root weight_c2fs() const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static ColoredPartition from_json(const nlohmann::json& doc);

  bool operator==(const ColoredPartition&) const = default;
  // Degree-major, then frequency tuples (c_j, b_j, a_j) for increasing j.
  friend bool operator<(const ColoredPartition& x, const ColoredPartition& y);

 private:
  std::map<int, int>& slot(Color color);
  std::map<int, int> a_, b_, c_;
};

struct ModuleKind {
  enum class Type { a1_standard, c2_fs };
  Type type = Type::a1_standard;
  int k0 = 0;
  int k1 = 0;
  int k2 = 0;

  static ModuleKind a1(int kbar0, int kbar1) { return {Type::a1_standard, kbar0, kbar1, 0}; }
  static ModuleKind c2fs(int k0, int k1, int k2) { return {Type::c2_fs, k0, k1, k2}; }

  int level() const { return k0 + k1 + k2; }
  // The C2^(1) highest weight whose module hosts the monomial vectors.
  HighestWeightSpec spec() const { return {k0, k1, k2}; }
  std::string label() const;
};

bool satisfies_dc(const ColoredPartition& pi, int level);
bool satisfies_ic_a1(const ColoredPartition& pi, int kbar0, int kbar1);
bool satisfies_ic_c2fs(const ColoredPartition& pi, int k0, int k1, int k2);
bool is_admissible(const ColoredPartition& pi, const ModuleKind& kind);

// All admissible partitions of degree <= max_degree, in the canonical order.
std::vector<ColoredPartition> enumerate_admissible(const ModuleKind& kind, int max_degree);

// Every partition of degree <= max_degree with a_0 = b_0 = 0 and
// c_0 <= max_c0, with no difference conditions, in the canonical order.
std::vector<ColoredPartition> enumerate_unrestricted(int max_degree, int max_c0);

// N' = sum b_j + 2 sum c_j and N = N' - c_0.
int n_prime(const ColoredPartition& pi);
int n_of(const ColoredPartition& pi);

struct SplitC0 {
  ColoredPartition rest;  // pi_1
  int c0 = 0;
};
SplitC0 split_c0(const ColoredPartition& pi);

// A monomial in the literal factor order of the basis formulas, together
// with its canonical (ordered) form.
struct ShapedMonomial {
  std::vector<LoopElement> word;
  Monomial canonical;
};

// prod_j x1b1b(-j)^{c_j} h1(-j)^{b_j} x11(-j)^{a_j}, j decreasing from left
// to right, so the mode-0 factors act on v_Lambda first.
ShapedMonomial monomial_a1(const ColoredPartition& pi);
// prod_j x22(-j)^{c_j} x12(-j)^{b_j} x11(-j)^{a_j}, j decreasing.
ShapedMonomial monomial_c2fs(const ColoredPartition& pi);

struct IcPropagation {
  bool ok = false;
  HighestWeightSpec lambda_prime;
  ColoredPartition rest;
  std::string failure;
};

// Lambda' = (kbar0, kbar1 - c0, c0); checks that pi_1 satisfies the
// Feigin-Stoyanovsky initial conditions for Lambda'.
IcPropagation ic_propagation(const ColoredPartition& pi, int kbar0, int kbar1);

}  // namespace affine_basis
