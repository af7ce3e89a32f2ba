#include "affine_basis/pbw.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "affine_basis/gram_cache.hpp"

namespace affine_basis {

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

bool is_ordered(const std::vector<LoopElement>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (succeeds(w[i + 1], w[i])) return false;
  return true;
}

int height(Root r) {
  // Height in simple roots alpha1 = eps1 - eps2, alpha2 = 2 eps2 (doubled to stay integral).
  return 3 * r.e1 + r.e2;
}

}  // namespace

void HighestWeightSpec::validate() const {
  if (k0 < 0 || k1 < 0 || k2 < 0) throw std::invalid_argument("highest weight labels must be nonnegative");
}

std::string HighestWeightSpec::label() const {
  std::ostringstream os;
  os << "(" << k0 << "," << k1 << "," << k2 << ")";
  return os.str();
}

Monomial Monomial::from_letters(std::vector<LoopElement> letters, int central) {
  std::stable_sort(letters.begin(), letters.end(),
                   [](const LoopElement& a, const LoopElement& b) { return succeeds(a, b); });
  Monomial m;
  m.letters_ = std::move(letters);
  m.central_ = central;
  return m;
}

std::vector<std::pair<LoopElement, int>> Monomial::factors() const {
  std::vector<std::pair<LoopElement, int>> out;
  for (const auto& x : letters_) {
    if (!out.empty() && out.back().first == x)
      ++out.back().second;
    else
      out.emplace_back(x, 1);
  }
  return out;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& x : letters_) d -= x.mode;
  return d;
}

Root Monomial::weight() const {
  Root r;
  for (const auto& x : letters_) r += weight_of(x);
  return r;
}

Monomial Monomial::with_central(int c) const {
  Monomial m = *this;
  m.central_ = c;
  return m;
}

Monomial Monomial::tail() const {
  Monomial m;
  m.letters_.assign(letters_.begin() + 1, letters_.end());
  m.central_ = central_;
  return m;
}

std::string Monomial::to_string() const {
  if (empty()) return "1";
  std::ostringstream os;
  bool first = true;
  if (central_ != 0) {
    os << "c";
    if (central_ > 1) os << "^" << central_;
    first = false;
  }
  for (const auto& [x, e] : factors()) {
    if (!first) os << " ";
    os << affine_basis::to_string(x);
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

Monomial Monomial::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<LoopElement> letters;
  int central = 0;
  while (in >> tok) {
    if (tok == "1") continue;
    int exponent = 1;
    if (const auto caret = tok.find('^'); caret != std::string::npos) {
      exponent = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    if (tok == "c") {
      central += exponent;
      continue;
    }
    const LoopElement x = parse_loop_element(tok);
    for (int i = 0; i < exponent; ++i) letters.push_back(x);
  }
  return from_letters(std::move(letters), central);
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
  for (std::size_t i = 0; i < a.letters_.size(); ++i) {
    const auto c = compare(a.letters_[i], b.letters_[i]);
    if (c != 0) return c > 0;
  }
  return a.central_ < b.central_;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = std::hash<int>()(m.central());
  for (const auto& x : m.letters()) h = mix(h, LoopElementHash()(x));
  return h;
}

void Combination::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Combination::add(const Combination& o, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [m, c] : o.terms_) add(m, c * scale);
}

Combination Combination::scaled(const Rational& s) const {
  Combination r;
  r.add(*this, s);
  return r;
}

Rational Combination::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Monomial, Rational>> Combination::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::string Combination::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    if (!first) os << " + ";
    os << "(" << affine_basis::to_string(c) << ")";
    if (!m.empty()) os << " " << m.to_string();
    first = false;
  }
  return os.str();
}

Combination Combination::operator-(const Combination& o) const {
  Combination r = *this;
  r.add(o, -1);
  return r;
}

std::optional<std::pair<int, Root>> grading_of(const ModuleVector& v, const HighestWeightSpec& spec) {
  std::optional<std::pair<int, Root>> g;
  for (const auto& [m, c] : v) {
    std::pair<int, Root> here{m.degree(), spec.finite_weight() + m.weight()};
    if (g && *g != here) return std::nullopt;
    g = here;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Straightener

std::size_t Straightener::KeyHash::operator()(const Key& k) const noexcept {
  return mix(LoopElementHash()(k.f), MonomialHash()(k.m));
}

const Combination& Straightener::left_multiply(const LoopElement& f, const Monomial& m) {
  if (m.central() != 0) throw std::invalid_argument("left_multiply: central power must be stripped");
  Key key{f, m};
  if (auto it = memo_.find(key); it != memo_.end()) return *it->second;

  auto result = std::make_unique<Combination>();
  const auto& letters = m.letters();
  if (letters.empty() || !succeeds(letters.front(), f)) {
    std::vector<LoopElement> w;
    w.reserve(letters.size() + 1);
    w.push_back(f);
    w.insert(w.end(), letters.begin(), letters.end());
    result->add(Monomial::from_letters(std::move(w)), 1);
  } else {
    // f first rest = first (f rest) + [f, first] rest
    const LoopElement first = letters.front();
    const Monomial rest = m.tail();
    Combination inner = left_multiply(f, rest);
    result->add(left_multiply(first, inner));
    const AffineTerm br = loop_bracket(f, first, *table_);
    for (const auto& [g, c] : br.terms) result->add(left_multiply(g, rest), c);
    if (br.central != 0) result->add(rest.with_central(1), br.central);
  }
  auto [it, _] = memo_.emplace(std::move(key), std::move(result));
  return *it->second;
}

Combination Straightener::left_multiply(const LoopElement& f, const Combination& v) {
  Combination out;
  for (const auto& [m, c] : v) {
    if (m.central() == 0) {
      out.add(left_multiply(f, m), c);
      continue;
    }
    const Combination& r = left_multiply(f, m.with_central(0));
    for (const auto& [rm, rc] : r) out.add(rm.with_central(rm.central() + m.central()), rc * c);
  }
  return out;
}

Combination Straightener::multiply(const Combination& u, const Combination& v) {
  Combination out;
  for (const auto& [m, c] : u) {
    Combination acc = v;
    const auto& letters = m.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) acc = left_multiply(*it, acc);
    for (const auto& [am, ac] : acc) out.add(am.with_central(am.central() + m.central()), ac * c);
  }
  return out;
}

Combination Straightener::straighten(std::span<const LoopElement> word) {
  Combination acc(Monomial{});
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_multiply(*it, acc);
  return acc;
}

Combination Straightener::straighten_by_swaps(std::span<const LoopElement> word, SwapStrategy strategy,
                                              std::uint64_t seed) const {
  using Word = std::pair<std::vector<LoopElement>, int>;
  auto less = [](const Word& a, const Word& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    for (std::size_t i = 0; i < a.first.size(); ++i) {
      const auto c = compare(a.first[i], b.first[i]);
      if (c != 0) return c > 0;
    }
    return a.second < b.second;
  };
  std::map<Word, Rational, decltype(less)> pending(less);
  pending[{std::vector<LoopElement>(word.begin(), word.end()), 0}] = 1;
  Combination done;
  std::mt19937_64 rng(seed);

  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));  // longest words first
    const auto& [w, central] = node.key();
    const Rational coef = node.mapped();
    if (coef == 0) continue;
    if (is_ordered(w)) {
      done.add(Monomial::from_letters(w, central), coef);
      continue;
    }
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (succeeds(w[i + 1], w[i])) spots.push_back(i);
    std::size_t i = spots.front();
    if (strategy == SwapStrategy::rightmost) i = spots.back();
    if (strategy == SwapStrategy::random) i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];

    std::vector<LoopElement> swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    pending[{swapped, central}] += coef;

    const AffineTerm br = loop_bracket(w[i], w[i + 1], *table_);
    for (const auto& [g, c] : br.terms) {
      std::vector<LoopElement> shorter(w.begin(), w.begin() + i);
      shorter.push_back(g);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      pending[{shorter, central}] += coef * c;
    }
    if (br.central != 0) {
      std::vector<LoopElement> shorter(w.begin(), w.begin() + i);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      pending[{shorter, central + 1}] += coef * br.central;
    }
  }
  return done;
}

// ---------------------------------------------------------------------------
// Letters and enumeration

bool is_pbw_letter(const LoopElement& x, Algebra algebra) {
  if (algebra == Algebra::a1 && x.base != Basis::x11 && x.base != Basis::h1 && x.base != Basis::x1b1b)
    return false;
  return side_of(x) == Side::lowering;
}

std::vector<LoopElement> lowering_generators(Algebra algebra, int max_degree) {
  std::vector<LoopElement> gens;
  for (int n = 0; n <= max_degree; ++n)
    for (Basis b : kAllBasis) {
      LoopElement x{b, -n};
      if (is_pbw_letter(x, algebra)) gens.push_back(x);
    }
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return succeeds(a, b); });
  return gens;
}

std::vector<LoopElement> contravariant_transpose(const Monomial& m) {
  std::vector<LoopElement> out;
  const auto& letters = m.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push_back(contravariant(*it));
  return out;
}

std::vector<Monomial> pbw_monomials(Algebra algebra, const HighestWeightSpec& spec, int degree, Root weight) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const Root target = weight - spec.finite_weight();

  std::vector<LoopElement> moving;  // negative modes
  std::vector<LoopElement> zero;    // mode-0 negative roots
  for (const auto& x : lowering_generators(algebra, degree)) (x.mode < 0 ? moving : zero).push_back(x);

  std::vector<LoopElement> chosen;

  // Mode-0 part: nonnegative combinations of negative roots summing to `rest`.
  auto fill_zero = [&](auto&& self, std::size_t idx, Root rest) -> void {
    if (idx == zero.size()) {
      if (rest.is_zero()) out.push_back(Monomial::from_letters(chosen));
      return;
    }
    const Root w = weight_of(zero[idx]);
    const std::size_t mark = chosen.size();
    Root r = rest;
    // Every negative root lowers the (doubled) height by at least 2.
    for (int k = 0; height(r) <= 0; ++k) {
      self(self, idx + 1, r);
      chosen.push_back(zero[idx]);
      r = r - w;
      if (k > 64) break;
    }
    chosen.resize(mark);
  };

  auto fill_moving = [&](auto&& self, std::size_t idx, int deg_left, Root rest) -> void {
    if (deg_left == 0) {
      fill_zero(fill_zero, 0, rest);
      return;
    }
    if (idx == moving.size()) return;
    const LoopElement x = moving[idx];
    const int cost = -x.mode;
    const std::size_t mark = chosen.size();
    int used = 0;
    Root r = rest;
    while (true) {
      self(self, idx + 1, deg_left - used, r);
      used += cost;
      if (used > deg_left) break;
      chosen.push_back(x);
      r = r - weight_of(x);
    }
    chosen.resize(mark);
  };

  fill_moving(fill_moving, 0, degree, target);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Root> weight_window(Algebra algebra, const HighestWeightSpec& spec, int degree) {
  const Root top = spec.finite_weight();
  std::vector<Root> out;
  if (algebra == Algebra::a1) {
    const int bound = std::abs(top.e1) + 2 * degree;
    for (int e1 = bound; e1 >= -bound; --e1)
      if ((e1 - top.e1) % 2 == 0) out.push_back({e1, top.e2});
    return out;
  }
  const int bound = std::max(std::abs(top.e1), std::abs(top.e2)) + 2 * degree;
  for (int e1 = bound; e1 >= -bound; --e1)
    for (int e2 = bound; e2 >= -bound; --e2) {
      const Root d = Root{e1, e2} - top;
      if ((d.e1 + d.e2) % 2 == 0) out.push_back({e1, e2});  // root lattice coset
    }
  return out;
}

// ---------------------------------------------------------------------------
// Verma module

std::size_t VermaModule::ActKeyHash::operator()(const ActKey& k) const noexcept {
  return mix(LoopElementHash()(k.x), MonomialHash()(k.m));
}

std::size_t VermaModule::PairKeyHash::operator()(const PairKey& k) const noexcept {
  return mix(MonomialHash()(k.a), MonomialHash()(k.b));
}

VermaModule::VermaModule(HighestWeightSpec spec, const StructureTable& table)
    : spec_(spec), straightener_(table) {
  spec_.validate();
}

const ModuleVector& VermaModule::act(const LoopElement& x, const Monomial& m) {
  const Side side = side_of(x);
  if (side == Side::lowering) return straightener_.left_multiply(x, m);

  ActKey key{x, m};
  if (auto it = act_memo_.find(key); it != act_memo_.end()) return *it->second;

  auto result = std::make_unique<ModuleVector>();
  if (side == Side::neutral) {
    const int value = cartan_eval(spec_.finite_weight() + m.weight(), x.base);
    result->add(m, value);
  } else if (!m.letters().empty()) {
    // x first rest v = [x, first] rest v + first (x rest v)
    const LoopElement first = m.letters().front();
    const Monomial rest = m.tail();
    const AffineTerm br = loop_bracket(x, first, table());
    for (const auto& [g, c] : br.terms) result->add(act(g, rest), c);
    if (br.central != 0) result->add(rest, br.central * spec_.level());
    ModuleVector moved = act(x, rest);
    result->add(straightener_.left_multiply(first, moved));
  }
  auto [it, _] = act_memo_.emplace(std::move(key), std::move(result));
  return *it->second;
}

ModuleVector VermaModule::act(const LoopElement& x, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [m, c] : v) out.add(act(x, m), c);
  return out;
}

ModuleVector VermaModule::apply_word(std::span<const LoopElement> word, ModuleVector v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
  return v;
}

ModuleVector VermaModule::apply(const Combination& u, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [m, c] : u) {
    Rational scale = c;
    for (int i = 0; i < m.central(); ++i) scale *= spec_.level();
    out.add(apply_word(m.letters(), v), scale);
  }
  return out;
}

Rational VermaModule::pairing(const Monomial& a0, const Monomial& b0) {
  if (a0.degree() != b0.degree() || a0.weight() != b0.weight()) return 0;
  const bool swap = b0 < a0;
  const Monomial& a = swap ? b0 : a0;
  const Monomial& b = swap ? a0 : b0;
  if (a.letters().empty()) return b.letters().empty() ? 1 : 0;

  PairKey key{a, b};
  if (auto it = pair_memo_.find(key); it != pair_memo_.end()) return it->second;

  // <first rest v, b v> = <rest v, omega(first) b v>
  const LoopElement up = contravariant(a.letters().front());
  const Monomial rest = a.tail();
  const ModuleVector& image = act(up, b);
  Rational sum = 0;
  for (const auto& [m, c] : image) sum += c * pairing(rest, m);
  pair_memo_.emplace(std::move(key), sum);
  return sum;
}

Rational VermaModule::form(const ModuleVector& u, const ModuleVector& v) {
  Rational s = 0;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) s += ca * cb * pairing(a, b);
  return s;
}

// ---------------------------------------------------------------------------
// Gram blocks

GramBlock gram_matrix(const std::vector<Monomial>& monos, VermaModule& module, GramCache* cache) {
  std::optional<std::pair<int, Root>> grading;
  for (const auto& m : monos) {
    std::pair<int, Root> g{m.degree(), m.weight()};
    if (grading && *grading != g) throw std::invalid_argument("gram_matrix: monomials of mixed grading");
    grading = g;
  }
  std::optional<GramCacheKey> key;
  if (cache && grading) {
    key = GramCacheKey{module.spec(), grading->first, module.spec().finite_weight() + grading->second,
                       basis_hash(monos), module.table().version()};
    if (auto hit = cache->load(*key); hit && hit->basis == monos) return *hit;
  }
  GramBlock block;
  block.basis = monos;
  block.matrix = Matrix(monos.size(), monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = i; j < monos.size(); ++j) {
      const Rational q = module.pairing(monos[i], monos[j]);
      block.matrix(i, j) = q;
      block.matrix(j, i) = q;
    }
  block.rank = rank_exact(block.matrix);
  if (key) cache->store(*key, block);
  return block;
}

Matrix gram_of_vectors(const std::vector<ModuleVector>& vectors, VermaModule& module) {
  Matrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i; j < vectors.size(); ++j) {
      const Rational q = module.form(vectors[i], vectors[j]);
      g(i, j) = q;
      g(j, i) = q;
    }
  return g;
}

std::size_t graded_dimension(Algebra algebra, VermaModule& module, int degree, Root weight, int max_depth,
                             GramCache* cache) {
  if (degree > max_depth)
    throw DepthExceeded("degree " + std::to_string(degree) + " exceeds configured depth " +
                        std::to_string(max_depth));
  const auto monos = pbw_monomials(algebra, module.spec(), degree, weight);
  if (monos.empty()) return 0;
  return gram_matrix(monos, module, cache).rank;
}

std::size_t graded_dimension_total(Algebra algebra, VermaModule& module, int degree, int max_depth,
                                   GramCache* cache) {
  std::size_t total = 0;
  for (Root w : weight_window(algebra, module.spec(), degree))
    total += graded_dimension(algebra, module, degree, w, max_depth, cache);
  return total;
}

bool is_zero_in_irreducible(const ModuleVector& v, VermaModule& module, Algebra algebra) {
  if (v.is_zero()) return true;
  const auto g = grading_of(v, module.spec());
  if (!g) throw std::invalid_argument("is_zero_in_irreducible: vector is not homogeneous");
  for (const auto& m : pbw_monomials(algebra, module.spec(), g->first, g->second)) {
    Rational s = 0;
    for (const auto& [b, c] : v) s += c * module.pairing(m, b);
    if (s != 0) return false;
  }
  return true;
}

}  // namespace affine_basis
