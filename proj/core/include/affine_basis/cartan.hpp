#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

#include <json.hpp>

#include "affine_basis/rational.hpp"

namespace affine_basis {

// Weight in the (eps1, eps2) coordinates of the C2 weight lattice.
struct Root {
  int e1 = 0;
  int e2 = 0;

  constexpr Root operator+(Root o) const { return {e1 + o.e1, e2 + o.e2}; }
  constexpr Root operator-(Root o) const { return {e1 - o.e1, e2 - o.e2}; }
  constexpr Root operator-() const { return {-e1, -e2}; }
  constexpr Root operator*(int k) const { return {k * e1, k * e2}; }
  constexpr Root& operator+=(Root o) {
    e1 += o.e1;
    e2 += o.e2;
    return *this;
  }
  constexpr bool is_zero() const { return e1 == 0 && e2 == 0; }
  constexpr auto operator<=>(const Root&) const = default;
};

std::string to_string(Root r);

// The eight roots of C2 in the canonical listing order.
inline constexpr std::array<Root, 8> kRoots = {{
    {2, 0}, {1, 1}, {0, 2}, {1, -1}, {-1, 1}, {0, -2}, {-1, -1}, {-2, 0}}};

inline constexpr Root kAlpha1{1, -1};
inline constexpr Root kAlpha2{0, 2};
inline constexpr Root kTheta{2, 0};
inline constexpr Root kOmega1{1, 0};
inline constexpr Root kOmega2{1, 1};

bool is_root(Root r);

// Normalized invariant form on weights; <theta, theta> = 2.
Rational root_inner(Root a, Root b);

// Weight basis of C2. The first eight tags are root vectors listed in the
// order of kRoots; h1 = x_{1,1bar} and h2 = x_{2,2bar} are the simple
// coroots of 2eps1 and 2eps2.
enum class Basis : std::uint8_t { x11, x12, x22, x12b, x21b, x2b2b, x2b1b, x1b1b, h1, h2 };

inline constexpr int kBasisCount = 10;
inline constexpr std::array<Basis, kBasisCount> kAllBasis = {
    Basis::x11,  Basis::x12,   Basis::x22,   Basis::x12b, Basis::x21b,
    Basis::x2b2b, Basis::x2b1b, Basis::x1b1b, Basis::h1,   Basis::h2};

constexpr int index_of(Basis b) { return static_cast<int>(b); }
constexpr bool is_cartan(Basis b) { return b == Basis::h1 || b == Basis::h2; }

std::string_view name(Basis b);
std::optional<Basis> parse_basis(std::string_view text);

Root weight_of(Basis b);
std::optional<Basis> root_vector(Root r);

// alpha(h) for h in {h1, h2}.
int cartan_eval(Root alpha, Basis h);

// Position of b in the total order; a larger rank means "succeeds".
// The order is lexicographic on index pairs with 1 > 2 > 2bar > 1bar.
int order_rank(Basis b);
inline bool succeeds(Basis a, Basis b) { return order_rank(a) > order_rank(b); }

// Image under the contravariant anti-involution (matrix transpose):
// x_alpha -> x_{-alpha}, h -> h.
Basis contravariant(Basis b);

// The 4x4 symplectic matrix of a basis element. Rows/columns are indexed
// by the natural-representation weights eps1, eps2, -eps2, -eps1.
using Mat4 = std::array<std::array<int, 4>, 4>;
Mat4 matrix_of(Basis b);

// Dense coordinates in the weight basis.
struct FiniteVector {
  std::array<Rational, kBasisCount> coeff{};

  Rational& operator[](Basis b) { return coeff[index_of(b)]; }
  const Rational& operator[](Basis b) const { return coeff[index_of(b)]; }
  bool is_zero() const;
  FiniteVector& operator+=(const FiniteVector& o);
  FiniteVector& operator-=(const FiniteVector& o);
  FiniteVector& operator*=(const Rational& s);
  friend FiniteVector operator+(FiniteVector a, const FiniteVector& b) { return a += b; }
  friend FiniteVector operator-(FiniteVector a, const FiniteVector& b) { return a -= b; }
  friend FiniteVector operator*(const Rational& s, FiniteVector a) { return a *= s; }
  bool operator==(const FiniteVector& o) const { return coeff == o.coeff; }

  static FiniteVector unit(Basis b);
};

class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class StructureTable {
 public:
  const FiniteVector& bracket(Basis x, Basis y) const {
    return bracket_[index_of(x)][index_of(y)];
  }
  const Rational& form(Basis x, Basis y) const { return form_[index_of(x)][index_of(y)]; }

  // Bilinear extensions.
  FiniteVector bracket(const FiniteVector& x, const FiniteVector& y) const;
  Rational form(const FiniteVector& x, const FiniteVector& y) const;

  // Content hash of the exported document (hex), used to key caches.
  const std::string& version() const { return version_; }

  nlohmann::json to_json() const;
  static StructureTable from_json(const nlohmann::json& doc);

  // Throws ConstructionError naming the first failing triple.
  void validate() const;

 private:
  friend StructureTable build_c2();
  void seal();

  std::array<std::array<FiniteVector, kBasisCount>, kBasisCount> bracket_{};
  std::array<std::array<Rational, kBasisCount>, kBasisCount> form_{};
  std::string version_;
};

inline constexpr int kStructureTableFormat = 1;

// Builds the table from the symplectic matrix realization, normalizes the
// form as the trace form (which already gives <theta, theta> = 2) and
// validates every invariant.
StructureTable build_c2();

// The process-wide table; built once on first use.
const StructureTable& c2_table();

// (x11, h1, x1b1b): the sl2 triple with simple root theta.
std::tuple<Basis, Basis, Basis> a1_subalgebra();

}  // namespace affine_basis
