#include "affine_basis/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace affine_basis {

std::strong_ordering compare(const LoopElement& x, const LoopElement& y) {
  if (x.mode != y.mode) return x.mode <=> y.mode;
  return order_rank(x.base) <=> order_rank(y.base);
}

std::string to_string(const LoopElement& x) {
  return std::string(name(x.base)) + "(" + std::to_string(x.mode) + ")";
}

LoopElement parse_loop_element(const std::string& text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string::npos || close != text.size() - 1 || close <= open + 1)
    throw std::invalid_argument("malformed loop element '" + text + "'");
  auto base = parse_basis(std::string_view(text).substr(0, open));
  if (!base) throw std::invalid_argument("unknown basis tag in '" + text + "'");
  return {*base, std::stoi(text.substr(open + 1, close - open - 1))};
}

Side side_of(const LoopElement& x) {
  if (x.mode < 0) return Side::lowering;
  if (x.mode > 0) return Side::raising;
  if (is_cartan(x.base)) return Side::neutral;
  const Root r = weight_of(x.base);
  // Positive roots are the nonnegative combinations of alpha1 = eps1 - eps2
  // and alpha2 = 2 eps2; equivalently e1 > 0, or e1 == 0 and e2 > 0.
  const bool positive = r.e1 > 0 || (r.e1 == 0 && r.e2 > 0);
  return positive ? Side::raising : Side::lowering;
}

Rational AffineTerm::coefficient(const LoopElement& x) const {
  for (const auto& [y, c] : terms)
    if (y == x) return c;
  return 0;
}

AffineTerm loop_bracket(const LoopElement& x, const LoopElement& y, const StructureTable& table) {
  AffineTerm out;
  const FiniteVector& v = table.bracket(x.base, y.base);
  for (Basis b : kAllBasis)
    if (v[b] != 0) out.terms.emplace_back(LoopElement{b, x.mode + y.mode}, v[b]);
  if (x.mode + y.mode == 0 && x.mode != 0) out.central = x.mode * table.form(x.base, y.base);
  return out;
}

const ColorGradation& omega2_gradation() {
  static const ColorGradation g = [] {
    ColorGradation c;
    for (Root r : kRoots)
      if (grade_by_omega(r) == 1) c.colors.push_back(r);
    return c;
  }();
  return g;
}

int grade_by_omega(Root alpha) {
  // Integral on the root lattice.
  const Rational g = root_inner(kOmega2, alpha);
  if (g.get_den() != 1) throw std::invalid_argument("grade_by_omega: weight outside root lattice");
  return static_cast<int>(g.get_num().get_si());
}

}  // namespace affine_basis
