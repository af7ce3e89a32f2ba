#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "affine_basis/cartan.hpp"

namespace affine_basis {

// b(n) = b (x) t^n. Degree equals the mode.
struct LoopElement {
  Basis base = Basis::x11;
  int mode = 0;

  bool operator==(const LoopElement&) const = default;
};

// Strict total order: higher mode first, then the finite order.
std::strong_ordering compare(const LoopElement& x, const LoopElement& y);
inline bool succeeds(const LoopElement& x, const LoopElement& y) { return compare(x, y) > 0; }

std::string to_string(const LoopElement& x);
// Parses "x11(-2)" style tokens.
LoopElement parse_loop_element(const std::string& text);

inline Root weight_of(const LoopElement& x) { return weight_of(x.base); }

// Contravariant image x_alpha(n) -> x_{-alpha}(-n), h(n) -> h(-n).
inline LoopElement contravariant(const LoopElement& x) { return {contravariant(x.base), -x.mode}; }

// Which side of the triangular decomposition relative to v_Lambda.
enum class Side { lowering, neutral, raising };
Side side_of(const LoopElement& x);

// Rational combination of loop elements plus a multiple of c.
struct AffineTerm {
  std::vector<std::pair<LoopElement, Rational>> terms;
  Rational central = 0;

  bool is_zero() const { return terms.empty() && central == 0; }
  Rational coefficient(const LoopElement& x) const;
};

// [x(i), y(j)] = [x,y](i+j) + i <x,y> delta_{i+j,0} c.
AffineTerm loop_bracket(const LoopElement& x, const LoopElement& y,
                        const StructureTable& table = c2_table());

// Z-gradation by the minuscule coweight omega_2.
struct ColorGradation {
  Root omega = kOmega2;
  std::vector<Root> colors;
};

const ColorGradation& omega2_gradation();

int grade_by_omega(Root alpha);
inline int grade_by_omega(Basis b) { return grade_by_omega(weight_of(b)); }
inline int grade_by_omega(const LoopElement& x) { return grade_by_omega(x.base); }

// Root vectors spanning g_1: x11, x12, x22.
inline constexpr std::array<Basis, 3> kColorVectors = {Basis::x11, Basis::x12, Basis::x22};

struct LoopElementHash {
  std::size_t operator()(const LoopElement& x) const noexcept {
    return std::hash<int>()(x.mode * 16 + index_of(x.base));
  }
};

}  // namespace affine_basis
