#include "affine_basis/truncated_module.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace affine_basis {

std::string to_string(const Grade& g) {
  std::ostringstream os;
  os << "(" << g.degree << ", " << to_string(g.weight) << ")";
  return os.str();
}

const std::vector<std::vector<LoopElement>> TruncatedModule::kNoWords;

bool TruncatedModule::Vector::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

const std::vector<LoopElement>& TruncatedModule::generators() {
  static const std::vector<LoopElement> gens = {
      {Basis::x11, -1},   // f0: theta(-1)
      {Basis::x21b, 0},   // f1: -alpha1
      {Basis::x2b2b, 0},  // f2: -alpha2
  };
  return gens;
}

TruncatedModule::TruncatedModule(HighestWeightSpec spec, int depth, const StructureTable& table)
    : spec_(spec), depth_(depth), table_(&table) {
  spec_.validate();
  if (depth < 0) throw std::invalid_argument("truncated module: negative depth");
  build();
}

int TruncatedModule::key(const Grade& g) const {
  // 2 * (affine height of Lambda - weight), with delta of height 4.
  const Root beta = spec_.finite_weight() - g.weight;
  return 8 * g.degree + 3 * beta.e1 + beta.e2;
}

const TruncatedModule::Block* TruncatedModule::find(const Grade& g) const {
  auto it = blocks_.find(g);
  return it == blocks_.end() ? nullptr : &it->second;
}

bool TruncatedModule::is_final(const Grade& g) const {
  return finished_ || key(g) < frontier_key_ || blocks_.count(g) > 0;
}

void TruncatedModule::build() {
  const Grade top{0, spec_.finite_weight()};
  Block b;
  b.grade = top;
  b.basis = {Label{}};
  b.words = {{}};
  b.gram = Matrix::identity(1);
  b.gram_inverse = Matrix::identity(1);
  blocks_.emplace(top, std::move(b));

  std::set<std::pair<int, Grade>> pending;
  auto push_targets = [&](const Grade& g) {
    for (const auto& f : generators()) {
      const Grade t = shifted(g, f);
      if (t.degree <= depth_ && !blocks_.count(t)) pending.insert({key(t), t});
    }
  };
  push_targets(top);
  while (!pending.empty()) {
    const auto [k, g] = *pending.begin();
    pending.erase(pending.begin());
    frontier_key_ = k;
    build_block(g);
    if (dimension(g) > 0) push_targets(g);
  }
  finished_ = true;
}

void TruncatedModule::build_block(const Grade& x) {
  const auto& gens = generators();
  struct Source {
    int gen;
    Grade grade;
    const Block* block;
  };
  std::vector<Source> sources;
  for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
    const LoopElement& f = gens[gi];
    const Grade y{x.degree + f.mode, x.weight - weight_of(f)};
    if (y.degree < 0) continue;
    const Block* yb = find(y);
    if (yb && !yb->basis.empty()) sources.push_back({gi, y, yb});
  }
  std::vector<std::size_t> offset;
  std::size_t n = 0;
  for (const auto& s : sources) {
    offset.push_back(n);
    n += s.block->basis.size();
  }

  // <f_i u, f_j v> = <u, [w(f_i), f_j] v> + <u, f_j w(f_i) v>.
  Matrix g(n, n);
  for (std::size_t i = 0; i < sources.size(); ++i)
    for (std::size_t j = 0; j < sources.size(); ++j) {
      const LoopElement fi = gens[sources[i].gen];
      const LoopElement fj = gens[sources[j].gen];
      const LoopElement up = contravariant(fi);
      Matrix m = bracket_action(loop_bracket(up, fj, *table_), sources[j].grade, sources[i].grade);
      const Grade z = shifted(sources[j].grade, up);
      if (z.degree >= 0) {
        const Matrix& down = action_matrix(up, sources[j].grade);
        if (down.rows() > 0) m += action_matrix(fj, z) * down;
      }
      const Matrix block = sources[i].block->gram * m;
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) g(offset[i] + r, offset[j] + c) = block(r, c);
    }

  Block b;
  b.grade = x;
  const std::vector<std::size_t> pivots = independent_columns(g);
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (std::size_t p : pivots) {
    std::size_t si = 0;
    while (si + 1 < sources.size() && offset[si + 1] <= p) ++si;
    const Label label{sources[si].gen, p - offset[si]};
    b.basis.push_back(label);
    std::vector<LoopElement> word{gens[label.generator]};
    const auto& tail = sources[si].block->words[label.source];
    word.insert(word.end(), tail.begin(), tail.end());
    b.words.push_back(std::move(word));
  }
  if (!pivots.empty()) {
    b.gram = g.submatrix(pivots, pivots);
    b.gram_inverse = inverse(b.gram);
    const Matrix coords = b.gram_inverse * g.submatrix(pivots, all);
    for (std::size_t si = 0; si < sources.size(); ++si) {
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < sources[si].block->basis.size(); ++c) cols.push_back(offset[si] + c);
      std::vector<std::size_t> rows(pivots.size());
      for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
      b.from_generator.emplace(sources[si].gen, coords.submatrix(rows, cols));
    }
  }
  blocks_.emplace(x, std::move(b));
}

Matrix TruncatedModule::zero_matrix(const Grade& from, const Grade& to) const {
  return Matrix(to.degree < 0 ? 0 : dimension(to), dimension(from));
}

Matrix TruncatedModule::bracket_action(const AffineTerm& term, const Grade& from, const Grade& to) {
  Matrix m = zero_matrix(from, to);
  if (m.rows() == 0 || m.cols() == 0) return m;
  for (const auto& [z, c] : term.terms) m += action_matrix(z, from).scaled(c);
  if (term.central != 0) {
    if (!(from == to)) throw std::logic_error("central term with nonzero shift");
    m += Matrix::identity(m.rows()).scaled(term.central * spec_.level());
  }
  return m;
}

const Matrix& TruncatedModule::action_matrix(const LoopElement& x, const Grade& g) {
  const auto memo_key = std::pair(g, std::pair(index_of(x.base), x.mode));
  auto it = action_memo_.find(memo_key);
  if (it != action_memo_.end()) return it->second;
  Matrix m = compute_action(x, g);
  return action_memo_.emplace(memo_key, std::move(m)).first->second;
}

Matrix TruncatedModule::compute_action(const LoopElement& x, const Grade& g) {
  const Grade t = shifted(g, x);
  if (t.degree > depth_)
    throw DepthExceeded("action of " + to_string(x) + " on " + to_string(g) + " leaves depth " +
                        std::to_string(depth_));
  if (!is_final(g) || !is_final(t)) throw std::logic_error("action requested on an unfinished block");
  const Block* src = find(g);
  const Block* dst = t.degree < 0 ? nullptr : find(t);
  if (!src || !dst || src->basis.empty() || dst->basis.empty()) return zero_matrix(g, t);

  switch (side_of(x)) {
    case Side::neutral:
      return Matrix::identity(src->basis.size()).scaled(cartan_eval(g.weight, x.base));
    case Side::lowering: {
      const auto& gens = generators();
      for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi)
        if (gens[gi] == x) return dst->from_generator.at(gi);
      // <t_k, x b_l> = <w(x) t_k, b_l>.
      const Matrix& up = action_matrix(contravariant(x), t);
      return dst->gram_inverse * (up.transpose() * src->gram);
    }
    case Side::raising:
      break;
  }

  // x (f u) = [x, f] u + f (x u), with u in the source block of f.
  Matrix m(dst->basis.size(), src->basis.size());
  const auto& gens = generators();
  std::map<int, Matrix> per_generator;
  for (std::size_t l = 0; l < src->basis.size(); ++l) {
    const Label& label = src->basis[l];
    if (label.generator < 0) continue;  // raising operators kill v_Lambda
    auto pg = per_generator.find(label.generator);
    if (pg == per_generator.end()) {
      const LoopElement& f = gens[label.generator];
      const Grade y{g.degree + f.mode, g.weight - weight_of(f)};
      Matrix part = bracket_action(loop_bracket(x, f, *table_), y, t);
      const Grade ty = shifted(y, x);
      if (ty.degree >= 0) {
        const Matrix& inner = action_matrix(x, y);
        if (inner.rows() > 0) part += action_matrix(f, ty) * inner;
      }
      pg = per_generator.emplace(label.generator, std::move(part)).first;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, l) = pg->second(r, label.source);
  }
  return m;
}

std::size_t TruncatedModule::dimension(const Grade& g) const {
  const Block* b = find(g);
  return b ? b->basis.size() : 0;
}

std::size_t TruncatedModule::dimension(int degree) const {
  std::size_t d = 0;
  for (const auto& [g, b] : blocks_)
    if (g.degree == degree) d += b.basis.size();
  return d;
}

std::vector<Grade> TruncatedModule::grades() const {
  std::vector<Grade> out;
  for (const auto& [g, b] : blocks_)
    if (!b.basis.empty()) out.push_back(g);
  return out;
}

std::vector<Grade> TruncatedModule::grades(int degree) const {
  std::vector<Grade> out;
  for (const auto& [g, b] : blocks_)
    if (g.degree == degree && !b.basis.empty()) out.push_back(g);
  return out;
}

const std::vector<std::vector<LoopElement>>& TruncatedModule::basis_words(const Grade& g) const {
  const Block* b = find(g);
  return b ? b->words : kNoWords;
}

std::vector<std::string> TruncatedModule::basis_labels(const Grade& g) const {
  std::vector<std::string> out;
  for (const auto& w : basis_words(g)) {
    std::string s;
    for (const auto& x : w) s += to_string(x) + " ";
    out.push_back(s + "v");
  }
  return out;
}

const Matrix& TruncatedModule::gram(const Grade& g) const {
  static const Matrix empty;
  const Block* b = find(g);
  return b ? b->gram : empty;
}

TruncatedModule::Vector TruncatedModule::zero(const Grade& g) const {
  return {g, std::vector<Rational>(g.degree < 0 ? 0 : dimension(g))};
}

TruncatedModule::Vector TruncatedModule::highest_weight_vector() const {
  return basis_vector({0, spec_.finite_weight()}, 0);
}

TruncatedModule::Vector TruncatedModule::basis_vector(const Grade& g, std::size_t i) const {
  Vector v = zero(g);
  if (i >= v.coords.size()) throw std::out_of_range("basis index out of range in block " + to_string(g));
  v.coords[i] = 1;
  return v;
}

TruncatedModule::Vector TruncatedModule::act(const LoopElement& x, const Vector& v) {
  const Grade t = shifted(v.grade, x);
  const Matrix& m = action_matrix(x, v.grade);
  Vector r{t, {}};
  if (m.rows() == 0) {
    r.coords.assign(t.degree < 0 ? 0 : dimension(t), Rational(0));
    return r;
  }
  if (v.coords.empty()) {
    r.coords.assign(m.rows(), Rational(0));
    return r;
  }
  r.coords = m * v.coords;
  return r;
}

TruncatedModule::Vector TruncatedModule::act_central(const Vector& v) const {
  Vector r = v;
  for (auto& c : r.coords) c *= spec_.level();
  return r;
}

TruncatedModule::Vector TruncatedModule::apply_word(std::span<const LoopElement> word, Vector v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
  return v;
}

TruncatedModule::Vector TruncatedModule::add(const Vector& u, const Vector& v, const Rational& scale) const {
  if (!(u.grade == v.grade)) throw std::invalid_argument("adding vectors of different grades");
  Vector r = u;
  if (r.coords.empty()) r.coords.assign(v.coords.size(), Rational(0));
  for (std::size_t i = 0; i < v.coords.size(); ++i) r.coords[i] += scale * v.coords[i];
  return r;
}

Rational TruncatedModule::form(const Vector& u, const Vector& v) const {
  if (!(u.grade == v.grade) || u.coords.empty() || v.coords.empty()) return 0;
  const Matrix& g = gram(u.grade);
  Rational r = 0;
  for (std::size_t i = 0; i < u.coords.size(); ++i) {
    if (u.coords[i] == 0) continue;
    for (std::size_t j = 0; j < v.coords.size(); ++j)
      if (v.coords[j] != 0) r += u.coords[i] * g(i, j) * v.coords[j];
  }
  return r;
}

// ---------------------------------------------------------------------------
// TensorModule

TensorModule::TensorModule(std::vector<TruncatedModule*> factors) : factors_(std::move(factors)) {}

int TensorModule::level() const {
  int k = 0;
  for (auto* f : factors_) k += f->spec().level();
  return k;
}

TensorModule::Vector TensorModule::highest_weight_vector() const {
  Key key;
  for (auto* f : factors_) key.push_back({Grade{0, f->spec().finite_weight()}, 0});
  return {{key, Rational(1)}};
}

bool is_zero(const TensorModule::Vector& v) {
  for (const auto& [k, c] : v)
    if (c != 0) return false;
  return true;
}

void add_to(TensorModule::Vector& acc, const TensorModule::Vector& v, const Rational& scale) {
  for (const auto& [k, c] : v) {
    auto [it, inserted] = acc.emplace(k, scale * c);
    if (!inserted) it->second += scale * c;
    if (it->second == 0) acc.erase(it);
  }
}

TensorModule::Vector TensorModule::act(const LoopElement& x, const Vector& v) const {
  Vector out;
  for (const auto& [key, c] : v)
    for (std::size_t s = 0; s < factors_.size(); ++s) {
      const auto& [grade, idx] = key[s];
      const Matrix& m = factors_[s]->action_matrix(x, grade);
      const Grade t = TruncatedModule::shifted(grade, x);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        const Rational& a = m(r, idx);
        if (a == 0) continue;
        Key k = key;
        k[s] = {t, r};
        auto [it, inserted] = out.emplace(std::move(k), c * a);
        if (!inserted) {
          it->second += c * a;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  return out;
}

TensorModule::Vector TensorModule::apply_word(std::span<const LoopElement> word, Vector v) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
  return v;
}

Rational TensorModule::form(const Vector& u, const Vector& v) const {
  Rational r = 0;
  for (const auto& [ku, cu] : u)
    for (const auto& [kv, cv] : v) {
      Rational p = cu * cv;
      for (std::size_t s = 0; s < factors_.size() && p != 0; ++s) {
        if (!(ku[s].first == kv[s].first)) {
          p = 0;
          break;
        }
        p *= factors_[s]->gram(ku[s].first)(ku[s].second, kv[s].second);
      }
      r += p;
    }
  return r;
}

LevelOneFactors::LevelOneFactors(int depth, const StructureTable& table) : depth_(depth) {
  modules_.reserve(3);
  modules_.emplace_back(HighestWeightSpec{1, 0, 0}, depth, table);
  modules_.emplace_back(HighestWeightSpec{0, 1, 0}, depth, table);
  modules_.emplace_back(HighestWeightSpec{0, 0, 1}, depth, table);
}

TensorModule LevelOneFactors::tensor(const HighestWeightSpec& spec) {
  spec.validate();
  std::vector<TruncatedModule*> f;
  for (int i = 0; i < spec.k0; ++i) f.push_back(&modules_[0]);
  for (int i = 0; i < spec.k1; ++i) f.push_back(&modules_[1]);
  for (int i = 0; i < spec.k2; ++i) f.push_back(&modules_[2]);
  return TensorModule(std::move(f));
}

}  // namespace affine_basis
