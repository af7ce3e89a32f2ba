#include "affine_basis/rational.hpp"

#include <stdexcept>

namespace affine_basis {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  const auto slash = s.find('/');
  auto parse_int = [](const std::string& part) {
    Integer z;
    if (part.empty() || z.set_str(part, 10) != 0)
      throw std::invalid_argument("malformed integer '" + part + "'");
    return z;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer num = parse_int(s.substr(0, slash));
  Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace affine_basis
