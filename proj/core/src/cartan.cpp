#include "affine_basis/cartan.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <vector>

namespace affine_basis {

namespace {

// Index pair (a, b) of x_{ab}; 0,1,2,3 stand for 1, 2, 2bar, 1bar.
struct IndexPair {
  int a;
  int b;
};

constexpr std::array<IndexPair, kBasisCount> kPairs = {{
    {0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}, {0, 3}, {1, 2}}};

constexpr std::array<std::string_view, kBasisCount> kNames = {
    "x11", "x12", "x22", "x12b", "x21b", "x2b2b", "x2b1b", "x1b1b", "h1", "h2"};

constexpr int bar(int p) { return 3 - p; }
constexpr int tau(int p) { return p < 2 ? -1 : 1; }

struct MatrixTerm {
  int coef;
  int row;
  int col;
};

// x_{ab} = E_{a,bbar} + tau(a) tau(b) E_{b,abar}; x_{aa} = E_{a,abar}.
std::vector<MatrixTerm> terms_of(Basis x) {
  const auto [a, b] = kPairs[index_of(x)];
  if (a == b) return {{1, a, bar(a)}};
  return {{1, a, bar(b)}, {tau(a) * tau(b), b, bar(a)}};
}

using SparseMat = std::array<std::array<Rational, 4>, 4>;

SparseMat commutator(Basis x, Basis y) {
  SparseMat m{};
  for (const auto& s : terms_of(x))
    for (const auto& t : terms_of(y)) {
      if (s.col == t.row) m[s.row][t.col] += s.coef * t.coef;
      if (t.col == s.row) m[t.row][s.col] -= s.coef * t.coef;
    }
  return m;
}

// Reads a symplectic matrix back in the weight basis: root coefficients
// from the leading entry E_{a,bbar}, Cartan coefficients from the diagonal.
FiniteVector decompose(const SparseMat& m) {
  FiniteVector v;
  for (Basis x : kAllBasis) {
    if (is_cartan(x)) continue;
    const auto [a, b] = kPairs[index_of(x)];
    v[x] = m[a][bar(b)];
  }
  v[Basis::h1] = m[0][0];
  v[Basis::h2] = m[1][1];
  return v;
}

Rational trace_form(Basis x, Basis y) {
  Rational t = 0;
  for (const auto& s : terms_of(x))
    for (const auto& r : terms_of(y))
      if (s.col == r.row && r.col == s.row) t += s.coef * r.coef;
  return t;
}

std::string triple_name(Basis x, Basis y, Basis z) {
  std::ostringstream os;
  os << "(" << name(x) << ", " << name(y) << ", " << name(z) << ")";
  return os.str();
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string to_string(Root r) {
  std::ostringstream os;
  os << "(" << r.e1 << "," << r.e2 << ")";
  return os.str();
}

bool is_root(Root r) { return std::find(kRoots.begin(), kRoots.end(), r) != kRoots.end(); }

Rational root_inner(Root a, Root b) {
  Rational r(a.e1 * b.e1 + a.e2 * b.e2, 2);
  r.canonicalize();
  return r;
}

std::string_view name(Basis b) { return kNames[index_of(b)]; }

std::optional<Basis> parse_basis(std::string_view text) {
  for (Basis b : kAllBasis)
    if (kNames[index_of(b)] == text) return b;
  return std::nullopt;
}

Root weight_of(Basis b) {
  if (is_cartan(b)) return {};
  return kRoots[index_of(b)];
}

std::optional<Basis> root_vector(Root r) {
  for (int i = 0; i < 8; ++i)
    if (kRoots[i] == r) return static_cast<Basis>(i);
  return std::nullopt;
}

int cartan_eval(Root alpha, Basis h) {
  if (h == Basis::h1) return alpha.e1;
  if (h == Basis::h2) return alpha.e2;
  throw std::invalid_argument("cartan_eval: not a Cartan element");
}

int order_rank(Basis b) {
  const auto [a, c] = kPairs[index_of(b)];
  return (3 - a) * 4 + (3 - c);
}

Basis contravariant(Basis b) {
  if (is_cartan(b)) return b;
  return *root_vector(-weight_of(b));
}

Mat4 matrix_of(Basis b) {
  Mat4 m{};
  for (const auto& t : terms_of(b)) m[t.row][t.col] += t.coef;
  return m;
}

bool FiniteVector::is_zero() const {
  return std::all_of(coeff.begin(), coeff.end(), [](const Rational& q) { return q == 0; });
}

FiniteVector& FiniteVector::operator+=(const FiniteVector& o) {
  for (int i = 0; i < kBasisCount; ++i) coeff[i] += o.coeff[i];
  return *this;
}

FiniteVector& FiniteVector::operator-=(const FiniteVector& o) {
  for (int i = 0; i < kBasisCount; ++i) coeff[i] -= o.coeff[i];
  return *this;
}

FiniteVector& FiniteVector::operator*=(const Rational& s) {
  for (auto& c : coeff) c *= s;
  return *this;
}

FiniteVector FiniteVector::unit(Basis b) {
  FiniteVector v;
  v[b] = 1;
  return v;
}

FiniteVector StructureTable::bracket(const FiniteVector& x, const FiniteVector& y) const {
  FiniteVector r;
  for (Basis a : kAllBasis) {
    if (x[a] == 0) continue;
    for (Basis b : kAllBasis) {
      if (y[b] == 0) continue;
      r += (x[a] * y[b]) * bracket(a, b);
    }
  }
  return r;
}

Rational StructureTable::form(const FiniteVector& x, const FiniteVector& y) const {
  Rational r = 0;
  for (Basis a : kAllBasis)
    for (Basis b : kAllBasis) r += x[a] * y[b] * form(a, b);
  return r;
}

void StructureTable::validate() const {
  for (Basis x : kAllBasis)
    for (Basis y : kAllBasis) {
      if (!(bracket(x, y) + bracket(y, x)).is_zero())
        throw ConstructionError("antisymmetry fails for " + triple_name(x, y, y));
      if (form(x, y) != form(y, x))
        throw ConstructionError("form not symmetric on " + triple_name(x, y, y));
    }
  for (Basis x : kAllBasis)
    for (Basis y : kAllBasis)
      for (Basis z : kAllBasis) {
        const FiniteVector ex = FiniteVector::unit(x);
        const FiniteVector ey = FiniteVector::unit(y);
        const FiniteVector ez = FiniteVector::unit(z);
        FiniteVector jac = bracket(ex, bracket(ey, ez)) + bracket(ey, bracket(ez, ex)) +
                           bracket(ez, bracket(ex, ey));
        if (!jac.is_zero()) throw ConstructionError("Jacobi identity fails on " + triple_name(x, y, z));
        if (form(bracket(x, y), ez) != form(ex, bracket(y, z)))
          throw ConstructionError("form invariance fails on " + triple_name(x, y, z));
      }
  for (Basis h : {Basis::h1, Basis::h2})
    for (Basis x : kAllBasis) {
      if (is_cartan(x)) {
        if (!bracket(h, x).is_zero()) throw ConstructionError("Cartan not abelian on " + triple_name(h, x, x));
        continue;
      }
      if (!(bracket(h, x) == Rational(cartan_eval(weight_of(x), h)) * FiniteVector::unit(x)))
        throw ConstructionError("Cartan action mismatch on " + triple_name(h, x, x));
    }
  // <theta, theta> = 2 through the coroot: h_theta = h1 and <h1, h1> = 4 / <theta, theta>.
  if (form(Basis::h1, Basis::h1) != 2 || root_inner(kTheta, kTheta) != 2)
    throw ConstructionError("form normalization <theta,theta> = 2 violated");
}

nlohmann::json StructureTable::to_json() const {
  nlohmann::json brackets = nlohmann::json::array();
  for (Basis x : kAllBasis)
    for (Basis y : kAllBasis) {
      nlohmann::json terms = nlohmann::json::array();
      const auto& v = bracket(x, y);
      for (Basis z : kAllBasis)
        if (v[z] != 0) terms.push_back({to_string(v[z]), std::string(name(z))});
      brackets.push_back({std::string(name(x)), std::string(name(y)), terms});
    }
  nlohmann::json form_entries = nlohmann::json::array();
  for (Basis x : kAllBasis)
    for (Basis y : kAllBasis)
      if (form(x, y) != 0)
        form_entries.push_back({std::string(name(x)), std::string(name(y)), to_string(form(x, y))});
  return {{"format", kStructureTableFormat},
          {"algebra", "C2"},
          {"basis", [] {
             nlohmann::json names = nlohmann::json::array();
             for (Basis b : kAllBasis) names.push_back(std::string(name(b)));
             return names;
           }()},
          {"brackets", brackets},
          {"form", form_entries}};
}

StructureTable StructureTable::from_json(const nlohmann::json& doc) {
  if (doc.value("format", 0) != kStructureTableFormat || doc.value("algebra", "") != "C2")
    throw std::invalid_argument("unsupported structure-table document");
  auto basis = [](const nlohmann::json& j) {
    auto b = parse_basis(j.get<std::string>());
    if (!b) throw std::invalid_argument("unknown basis tag " + j.dump());
    return *b;
  };
  StructureTable t;
  for (const auto& entry : doc.at("brackets")) {
    FiniteVector v;
    for (const auto& term : entry.at(2)) v[basis(term.at(1))] = parse_rational(term.at(0).get<std::string>());
    t.bracket_[index_of(basis(entry.at(0)))][index_of(basis(entry.at(1)))] = v;
  }
  for (const auto& entry : doc.at("form"))
    t.form_[index_of(basis(entry.at(0)))][index_of(basis(entry.at(1)))] =
        parse_rational(entry.at(2).get<std::string>());
  t.validate();
  t.seal();
  return t;
}

void StructureTable::seal() {
  std::ostringstream os;
  os << std::hex << fnv1a(to_json().dump());
  version_ = os.str();
}

StructureTable build_c2() {
  StructureTable t;
  for (Basis x : kAllBasis)
    for (Basis y : kAllBasis) {
      t.bracket_[index_of(x)][index_of(y)] = decompose(commutator(x, y));
      t.form_[index_of(x)][index_of(y)] = trace_form(x, y);
    }
  t.validate();
  t.seal();
  return t;
}

const StructureTable& c2_table() {
  static const StructureTable table = build_c2();
  return table;
}

std::tuple<Basis, Basis, Basis> a1_subalgebra() { return {Basis::x11, Basis::h1, Basis::x1b1b}; }

}  // namespace affine_basis
