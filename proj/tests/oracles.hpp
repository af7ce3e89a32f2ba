#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls into the library's algorithms.

#include <array>
#include <set>
#include <string>
#include <vector>

#include "affine_basis/cartan.hpp"
#include "affine_basis/partitions.hpp"

namespace oracle {

using affine_basis::Basis;

using Dense = std::array<std::array<int, 4>, 4>;

inline Dense elementary(int r, int c) {
  Dense m{};
  m[r][c] = 1;
  return m;
}

inline Dense plus(const Dense& a, const Dense& b, int s = 1) {
  Dense m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = a[i][j] + s * b[i][j];
  return m;
}

inline Dense product(const Dense& a, const Dense& b) {
  Dense m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m[i][j] += a[i][k] * b[k][j];
  return m;
}

inline Dense bracket(const Dense& a, const Dense& b) { return plus(product(a, b), product(b, a), -1); }

inline int trace_of_product(const Dense& a, const Dense& b) {
  int t = 0;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) t += a[i][k] * b[k][i];
  return t;
}

// Hand-written 4x4 realizations on (e1, e2, e2bar, e1bar).
inline Dense matrix(Basis x) {
  switch (x) {
    case Basis::x11: return elementary(0, 3);
    case Basis::x22: return elementary(1, 2);
    case Basis::x2b2b: return elementary(2, 1);
    case Basis::x1b1b: return elementary(3, 0);
    case Basis::x12: return plus(elementary(0, 2), elementary(1, 3));
    case Basis::x12b: return plus(elementary(0, 1), elementary(2, 3), -1);
    case Basis::x21b: return plus(elementary(1, 0), elementary(3, 2), -1);
    case Basis::x2b1b: return plus(elementary(2, 0), elementary(3, 1));
    case Basis::h1: return plus(elementary(0, 0), elementary(3, 3), -1);
    case Basis::h2: return plus(elementary(1, 1), elementary(2, 2), -1);
  }
  return {};
}

// X^T J + J X = 0 for J = antidiag(1, 1, -1, -1).
inline bool symplectic(const Dense& x) {
  const Dense j = {{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}};
  Dense xt{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) xt[r][c] = x[c][r];
  const Dense s = plus(product(xt, j), product(j, x));
  for (const auto& row : s)
    for (int v : row)
      if (v != 0) return false;
  return true;
}

// Coordinates of a traceless symplectic matrix in the basis above, read
// off entries where exactly one basis matrix is supported.
inline std::array<int, affine_basis::kBasisCount> coordinates(const Dense& m) {
  std::array<int, affine_basis::kBasisCount> c{};
  auto set = [&](Basis b, int v) { c[affine_basis::index_of(b)] = v; };
  set(Basis::x11, m[0][3]);
  set(Basis::x22, m[1][2]);
  set(Basis::x2b2b, m[2][1]);
  set(Basis::x1b1b, m[3][0]);
  set(Basis::x12, m[0][2]);
  set(Basis::x12b, m[0][1]);
  set(Basis::x21b, m[1][0]);
  set(Basis::x2b1b, m[2][0]);
  set(Basis::h1, m[0][0]);
  set(Basis::h2, m[1][1]);
  return c;
}

// Coefficients of sum_n q^{n^2} / prod_j (1 - q^j): the character of the
// A1 level-1 vacuum module from its lattice realization.
inline std::vector<long> lattice_character(int top) {
  std::vector<long> partitions(top + 1, 0);
  partitions[0] = 1;
  for (int part = 1; part <= top; ++part)
    for (int n = part; n <= top; ++n) partitions[n] += partitions[n - part];
  std::vector<long> out(top + 1, 0);
  for (int n = -top; n <= top; ++n)
    for (int d = n * n; d <= top; ++d) out[d] += partitions[d - n * n];
  return out;
}

struct Freq {
  std::vector<int> a, b, c;  // indexed by j
};

inline int at(const std::vector<int>& v, int j) { return j < static_cast<int>(v.size()) ? v[j] : 0; }

inline bool difference_conditions(const Freq& f, int k) {
  const int n = static_cast<int>(f.a.size());
  for (int i = 0; i < n; ++i) {
    const int a = at(f.a, i), b = at(f.b, i), c = at(f.c, i);
    const int a1 = at(f.a, i + 1), b1 = at(f.b, i + 1), c1 = at(f.c, i + 1);
    if (a + b + a1 > k || c + b + a1 > k || c + b1 + a1 > k || c + b1 + c1 > k) return false;
  }
  return true;
}

inline bool initial_conditions(const Freq& f, const affine_basis::ModuleKind& kind) {
  const int k = kind.level();
  if (f.a[0] != 0 || f.b[0] != 0) return false;
  if (kind.type == affine_basis::ModuleKind::Type::a1_standard) return f.c[0] <= kind.k1 && at(f.a, 1) <= kind.k0;
  return f.c[0] == 0 && at(f.a, 1) <= kind.k0 && at(f.a, 1) + at(f.b, 1) <= k - kind.k2 &&
         at(f.b, 1) + at(f.c, 1) <= k - kind.k2;
}

inline affine_basis::ColoredPartition to_partition(const Freq& f) {
  affine_basis::ColoredPartition p;
  for (int j = 0; j < static_cast<int>(f.a.size()); ++j) {
    p.set(affine_basis::Color::a, j, f.a[j]);
    p.set(affine_basis::Color::b, j, f.b[j]);
    p.set(affine_basis::Color::c, j, f.c[j]);
  }
  return p;
}

// Admissible partitions by exhausting every frequency table with entries
// <= k at parts j <= max_degree.
inline std::set<std::string> admissible_by_brute_force(const affine_basis::ModuleKind& kind, int max_degree) {
  const int k = kind.level();
  const int slots = 3 * (max_degree + 1);
  std::vector<int> digits(slots, 0);
  std::set<std::string> out;
  while (true) {
    Freq f{std::vector<int>(max_degree + 1), std::vector<int>(max_degree + 1), std::vector<int>(max_degree + 1)};
    int degree = 0;
    for (int j = 0; j <= max_degree; ++j) {
      f.a[j] = digits[3 * j];
      f.b[j] = digits[3 * j + 1];
      f.c[j] = digits[3 * j + 2];
      degree += j * (f.a[j] + f.b[j] + f.c[j]);
    }
    if (degree <= max_degree && difference_conditions(f, k) && initial_conditions(f, kind))
      out.insert(to_partition(f).to_string());
    int i = 0;
    while (i < slots && digits[i] == k) digits[i++] = 0;
    if (i == slots) break;
    ++digits[i];
  }
  return out;
}

}  // namespace oracle
