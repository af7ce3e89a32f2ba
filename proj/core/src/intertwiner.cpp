#include "affine_basis/intertwiner.hpp"

#include <sstream>
#include <stdexcept>

#include "affine_basis/verifier.hpp"

namespace affine_basis {

// ---------------------------------------------------------------------------
// SparseSystem

void SparseSystem::reduce(Row& row, Rational& rhs) const {
  std::vector<std::size_t> hits;
  for (const auto& [col, c] : row)
    if (rows_.count(col)) hits.push_back(col);
  // Pivot rows carry no other pivot column, so one pass suffices.
  for (std::size_t p : hits) {
    const Rational c = row.at(p);
    const Pivot& piv = rows_.at(p);
    for (const auto& [col, a] : piv.row) {
      Rational& slot = row[col];
      slot -= c * a;
      if (slot == 0) row.erase(col);
    }
    rhs -= c * piv.rhs;
  }
}

bool SparseSystem::add(Row row, const Rational& rhs_in) {
  if (!consistent_) return false;
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= variables_) throw std::out_of_range("sparse system: variable index out of range");
    it = it->second == 0 ? row.erase(it) : std::next(it);
  }
  Rational rhs = rhs_in;
  reduce(row, rhs);
  if (row.empty()) {
    if (rhs != 0) consistent_ = false;
    return consistent_;
  }

  const std::size_t p = row.begin()->first;
  const Rational inv = 1 / Rational(row.begin()->second);
  for (auto& [col, c] : row) c *= inv;
  rhs *= inv;

  // Clear column p from the existing rows.
  if (auto occ = occurrences_.find(p); occ != occurrences_.end()) {
    for (std::size_t q : occ->second) {
      Pivot& target = rows_.at(q);
      auto hit = target.row.find(p);
      if (hit == target.row.end()) continue;
      const Rational a = hit->second;
      for (const auto& [col, c] : row) {
        auto [slot, inserted] = target.row.emplace(col, -a * c);
        if (!inserted) {
          slot->second -= a * c;
          if (slot->second == 0) target.row.erase(slot);
        } else if (col != p) {
          occurrences_[col].push_back(q);
        }
      }
      target.rhs -= a * rhs;
    }
    occurrences_.erase(occ);
  }

  for (const auto& [col, c] : row)
    if (col != p) occurrences_[col].push_back(p);
  rows_.emplace(p, Pivot{std::move(row), rhs});
  return true;
}

std::vector<Rational> SparseSystem::particular_solution() const {
  if (!consistent_) throw std::logic_error("sparse system is inconsistent");
  std::vector<Rational> x(variables_);
  for (const auto& [p, piv] : rows_) x[p] = piv.rhs;
  return x;
}

std::size_t SparseSystem::projected_nullity(const std::vector<std::size_t>& vars) const {
  SparseSystem span(variables_);
  for (std::size_t v : vars) {
    auto it = rows_.find(v);
    if (it == rows_.end()) {
      span.add(Row{{v, Rational(1)}});
      continue;
    }
    Row r = it->second.row;
    r.erase(v);
    span.add(std::move(r));
  }
  return span.rank();
}

// ---------------------------------------------------------------------------
// IntertwinerMap

namespace {

constexpr Root kEps1{1, 0};

Grade raised(const Grade& g) { return {g.degree, g.weight + kEps1}; }

nlohmann::json grade_json(const Grade& g) { return {{"degree", g.degree}, {"weight", {g.weight.e1, g.weight.e2}}}; }

nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool same_vector(const TruncatedModule::Vector& a, const TruncatedModule::Vector& b) {
  if (!(a.grade == b.grade)) return a.is_zero() && b.is_zero();
  const std::size_t n = std::max(a.coords.size(), b.coords.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x = i < a.coords.size() ? a.coords[i] : Rational(0);
    const Rational y = i < b.coords.size() ? b.coords[i] : Rational(0);
    if (x != y) return false;
  }
  return true;
}

nlohmann::json vector_json(const TruncatedModule::Vector& v) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& c : v.coords) coords.push_back(to_string(c));
  return {{"grade", to_string(v.grade)}, {"coordinates", coords}};
}

nlohmann::json tensor_json(const TensorModule::Vector& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : v) {
    nlohmann::json slots = nlohmann::json::array();
    for (const auto& [g, i] : key) slots.push_back(to_string(g) + "#" + std::to_string(i));
    terms.push_back({{"slots", slots}, {"coefficient", to_string(c)}});
  }
  return terms;
}

// Test elements x_gamma(n) of the commutation constraints.
std::vector<LoopElement> commutation_elements(int depth) {
  std::vector<LoopElement> out;
  for (Basis b : kColorVectors)
    for (int n = -depth; n <= depth; ++n) out.push_back({b, n});
  return out;
}

// Calls fn(y, g, t) for each constraint W_t A1(y, g) = A2(y, g + eps1) W_g
// whose rows are nonempty and whose degrees lie in the window.
template <class Fn>
void for_each_constraint(TruncatedModule& lambda1, TruncatedModule& lambda2, Fn fn) {
  const int depth = lambda1.depth();
  for (const LoopElement& y : commutation_elements(depth))
    for (const Grade& g : lambda1.grades()) {
      const Grade t = TruncatedModule::shifted(g, y);
      if (t.degree < 0 || t.degree > depth) continue;
      if (lambda2.dimension(raised(t)) == 0) continue;
      fn(y, g, t);
    }
}

}  // namespace

nlohmann::json IntertwinerBlock::to_json() const {
  return {{"source", grade_json(source)},
          {"target", grade_json(target)},
          {"source_basis", source_basis},
          {"target_basis", target_basis},
          {"matrix", matrix_json(matrix)},
          {"solution_dimension", solution_dimension}};
}

const IntertwinerBlock* IntertwinerMap::find(const Grade& source) const {
  auto it = std::lower_bound(blocks.begin(), blocks.end(), source,
                             [](const IntertwinerBlock& b, const Grade& g) { return b.source < g; });
  return it != blocks.end() && it->source == source ? &*it : nullptr;
}

TruncatedModule::Vector IntertwinerMap::apply(const TruncatedModule::Vector& v) const {
  const IntertwinerBlock* b = find(v.grade);
  if (!b) return {raised(v.grade), {}};
  if (v.coords.empty()) return {b->target, std::vector<Rational>(b->matrix.rows())};
  if (v.coords.size() != b->matrix.cols()) throw std::invalid_argument("intertwiner: vector does not fit block");
  return {b->target, b->matrix * v.coords};
}

nlohmann::json IntertwinerMap::to_json() const {
  nlohmann::json j;
  j["format"] = 1;
  j["depth"] = depth;
  j["unknowns"] = unknowns;
  j["equations"] = equations;
  j["rank"] = rank;
  j["assumptions"] = {"w preserves the degree"};
  nlohmann::json items = nlohmann::json::array();
  for (const auto& b : blocks) items.push_back(b.to_json());
  j["blocks"] = std::move(items);
  return j;
}

std::string IntertwinerMap::solution_table_csv() const {
  std::ostringstream os;
  os << "degree,weight,rows,cols,solution_dimension\n";
  for (const auto& b : blocks)
    os << b.source.degree << ",\"" << to_string(b.source.weight) << "\"," << b.matrix.rows() << ','
       << b.matrix.cols() << ',' << b.solution_dimension << '\n';
  return os.str();
}

IntertwinerMap solve_w(TruncatedModule& lambda1, TruncatedModule& lambda2) {
  if (!(lambda1.spec() == HighestWeightSpec{0, 1, 0}) || !(lambda2.spec() == HighestWeightSpec{0, 0, 1}))
    throw std::invalid_argument("solve_w needs L(Lambda1) and L(Lambda2)");
  if (lambda1.depth() != lambda2.depth()) throw std::invalid_argument("solve_w: depths differ");

  struct Unknowns {
    std::size_t offset, rows, cols;
  };
  std::map<Grade, Unknowns> vars;
  std::size_t n = 0;
  for (const Grade& g : lambda1.grades()) {
    const std::size_t rows = lambda2.dimension(raised(g));
    if (rows == 0) continue;
    const std::size_t cols = lambda1.dimension(g);
    vars.emplace(g, Unknowns{n, rows, cols});
    n += rows * cols;
  }

  IntertwinerMap w;
  w.depth = lambda1.depth();
  w.unknowns = n;
  SparseSystem system(n);
  for_each_constraint(lambda1, lambda2, [&](const LoopElement& y, const Grade& g, const Grade& t) {
    const auto vt = vars.find(t);
    const auto vg = vars.find(g);
    const Matrix& a1 = lambda1.action_matrix(y, g);
    const Matrix* a2 = vg == vars.end() ? nullptr : &lambda2.action_matrix(y, raised(g));
    const std::size_t rows = lambda2.dimension(raised(t));
    const std::size_t cols = lambda1.dimension(g);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        SparseSystem::Row row;
        if (vt != vars.end() && a1.rows() > 0)
          for (std::size_t k = 0; k < vt->second.cols; ++k)
            if (a1(k, c) != 0) row[vt->second.offset + r * vt->second.cols + k] += a1(k, c);
        if (a2 && a2->rows() > 0)
          for (std::size_t k = 0; k < vg->second.rows; ++k)
            if ((*a2)(r, k) != 0) row[vg->second.offset + k * vg->second.cols + c] -= (*a2)(r, k);
        ++w.equations;
        system.add(std::move(row));
      }
  });

  std::map<Grade, std::size_t> solution_dimension;
  for (const auto& [g, u] : vars) {
    std::vector<std::size_t> idx(u.rows * u.cols);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = u.offset + i;
    solution_dimension[g] = system.projected_nullity(idx);
  }

  // v2 = x21b(0) v1 -> v12.
  const auto v2 = lambda1.act({Basis::x21b, 0}, lambda1.highest_weight_vector());
  const auto v12 = lambda2.highest_weight_vector();
  const auto norm = vars.find(v2.grade);
  if (norm == vars.end() || v2.is_zero() || !(raised(v2.grade) == v12.grade))
    throw IntertwinerInfeasible("solve_w: the normalization block is missing");
  for (std::size_t r = 0; r < norm->second.rows; ++r) {
    SparseSystem::Row row;
    for (std::size_t c = 0; c < norm->second.cols; ++c)
      if (v2.coords[c] != 0) row[norm->second.offset + r * norm->second.cols + c] = v2.coords[c];
    ++w.equations;
    system.add(std::move(row), v12.coords[r]);
  }
  if (!system.consistent()) throw IntertwinerInfeasible("solve_w: the constraints admit no solution");
  w.rank = system.rank();

  const auto x = system.particular_solution();
  for (const auto& [g, u] : vars) {
    IntertwinerBlock b;
    b.source = g;
    b.target = raised(g);
    b.source_basis = lambda1.basis_labels(g);
    b.target_basis = lambda2.basis_labels(b.target);
    b.matrix = Matrix(u.rows, u.cols);
    for (std::size_t r = 0; r < u.rows; ++r)
      for (std::size_t c = 0; c < u.cols; ++c) b.matrix(r, c) = x[u.offset + r * u.cols + c];
    b.solution_dimension = solution_dimension.at(g);
    w.blocks.push_back(std::move(b));
  }
  return w;
}

StepReport verify_w_commutation(const IntertwinerMap& w, TruncatedModule& lambda1, TruncatedModule& lambda2) {
  StepReport r;
  r.step = "w-commutation";
  r.spec = "w: " + lambda1.spec().label() + " -> " + lambda2.spec().label();
  std::size_t checked = 0;
  nlohmann::json failures = nlohmann::json::array();
  for_each_constraint(lambda1, lambda2, [&](const LoopElement& y, const Grade& g, const Grade& t) {
    for (std::size_t c = 0; c < lambda1.dimension(g); ++c) {
      const auto v = lambda1.basis_vector(g, c);
      const auto lhs = w.apply(lambda1.act(y, v));
      const auto rhs = lambda2.act(y, w.apply(v));
      ++checked;
      if (!same_vector(lhs, rhs))
        failures.push_back({{"element", to_string(y)}, {"source", to_string(g)}, {"column", c},
                            {"w_after", vector_json(lhs)}, {"w_before", vector_json(rhs)}});
    }
    (void)t;
  });
  r.count = checked;
  r.pass = failures.empty();
  if (!r.pass) r.witness = {{"failures", failures}};
  return r;
}

StepReport verify_w_on_g1_orbits(const IntertwinerMap& w, TruncatedModule& lambda1, TruncatedModule& lambda2,
                                 int max_degree) {
  if (max_degree > w.depth) throw std::invalid_argument("verify_w_on_g1_orbits: degree beyond the depth of w");
  StepReport r;
  r.step = "w-orbits";
  r.spec = "w: " + lambda1.spec().label() + " -> " + lambda2.spec().label();
  const auto v1 = lambda1.highest_weight_vector();
  const auto v2 = lambda1.act({Basis::x21b, 0}, v1);
  const auto v12 = lambda2.highest_weight_vector();
  std::size_t checked = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& p : enumerate_unrestricted(max_degree, 2)) {
    const auto word = monomial_c2fs(p).word;
    const auto killed = w.apply(lambda1.apply_word(word, v1));
    if (!killed.is_zero()) failures.push_back({{"partition", p.to_json()}, {"w(xbar v1)", vector_json(killed)}});
    const auto lhs = w.apply(lambda1.apply_word(word, v2));
    const auto rhs = lambda2.apply_word(word, v12);
    if (!same_vector(lhs, rhs))
      failures.push_back(
          {{"partition", p.to_json()}, {"w(xbar v2)", vector_json(lhs)}, {"xbar v12", vector_json(rhs)}});
    ++checked;
  }
  r.count = checked;
  r.pass = failures.empty();
  if (!r.pass) r.witness = {{"failures", failures}};
  return r;
}

TensorModule::Vector apply_w_ks(const IntertwinerMap& w, int k0, int k1, int s, const TensorModule::Vector& v) {
  if (s < 0 || s > k1) throw std::invalid_argument("w_{k1,s}: need 0 <= s <= k1");
  const std::size_t first = static_cast<std::size_t>(k0 + k1 - s);
  const std::size_t last = static_cast<std::size_t>(k0 + k1);
  TensorModule::Vector out;
  for (const auto& [key, c] : v) {
    if (key.size() != last) throw std::invalid_argument("w_{k1,s}: tensor does not have k0 + k1 slots");
    std::vector<std::pair<TensorModule::Key, Rational>> partial = {{key, c}};
    for (std::size_t slot = first; slot < last && !partial.empty(); ++slot) {
      const IntertwinerBlock* b = w.find(key[slot].first);
      std::vector<std::pair<TensorModule::Key, Rational>> next;
      if (b)
        for (const auto& [k, coeff] : partial)
          for (std::size_t r = 0; r < b->matrix.rows(); ++r) {
            const Rational& a = b->matrix(r, k[slot].second);
            if (a == 0) continue;
            TensorModule::Key nk = k;
            nk[slot] = {b->target, r};
            next.emplace_back(std::move(nk), coeff * a);
          }
      partial = std::move(next);
    }
    for (const auto& [k, coeff] : partial) add_to(out, {{k, coeff}});
  }
  return out;
}

StepReport verify_projection_chain(const ColoredPartition& pi, const ModuleKind& kind, LevelOneFactors& factors,
                                   const IntertwinerMap& w, VermaModule& verma) {
  if (kind.type != ModuleKind::Type::a1_standard)
    throw std::invalid_argument("verify_projection_chain needs an A1 standard-module kind");
  if (pi.degree() > factors.depth() || pi.degree() > w.depth)
    throw std::invalid_argument("verify_projection_chain: degree beyond the truncation depth");
  StepReport r;
  r.step = "projection-chain";
  r.spec = kind.label();
  r.partition = pi;
  r.degree = pi.degree();
  r.weight = kind.spec().finite_weight() + pi.weight_a1();

  const auto [rest, c0] = split_c0(pi);
  const HighestWeightSpec target{kind.k0, kind.k1 - c0, c0};
  const TensorModule model = factors.tensor(kind.spec());
  const TensorModule image = factors.tensor(target);
  const Rational scalar(factorial(static_cast<unsigned>(c0)));
  r.scalar = scalar;

  std::vector<LoopElement> word = monomial_c2fs(rest).word;
  word.insert(word.end(), static_cast<std::size_t>(c0), LoopElement{Basis::x21b, 0});
  const auto u = model.apply_word(word, model.highest_weight_vector());

  nlohmann::json failures = nlohmann::json::array();
  const auto projected = apply_w_ks(w, kind.k0, kind.k1, c0, u);
  auto expected = image.apply_word(monomial_c2fs(rest).word, image.highest_weight_vector());
  if (is_zero(expected)) failures.push_back({{"clause", "xbar(pi_1) v_Lambda' is zero"}});
  for (auto& [k, c] : expected) c *= scalar;
  auto diff = projected;
  add_to(diff, expected, -1);
  if (!is_zero(diff))
    failures.push_back({{"clause", "w_{k1,c0} xbar(pi_1) x21b(0)^c0 v_Lambda = c0! xbar(pi_1) v_Lambda'"},
                        {"lhs", tensor_json(projected)},
                        {"rhs", tensor_json(expected)}});

  for (int s = c0 + 1; s <= kind.k1; ++s)
    if (const auto killed = apply_w_ks(w, kind.k0, kind.k1, s, u); !is_zero(killed))
      failures.push_back({{"clause", "w_{k1,s} annihilates"}, {"s", s}, {"image", tensor_json(killed)}});

  const auto x = model.apply_word(monomial_a1(pi).word, model.highest_weight_vector());
  const auto xv = partition_vector(pi, kind, verma);
  for (const auto& other : enumerate_admissible(kind, pi.degree())) {
    if (other.degree() != pi.degree() || !(other.weight_a1() == pi.weight_a1())) continue;
    const Rational in_tensor = model.form(x, model.apply_word(monomial_a1(other).word, model.highest_weight_vector()));
    const Rational in_verma = verma.form(xv, partition_vector(other, kind, verma));
    if (in_tensor != in_verma)
      failures.push_back({{"clause", "tensor pairing equals Verma pairing"},
                          {"other", other.to_json()},
                          {"tensor", to_string(in_tensor)},
                          {"verma", to_string(in_verma)}});
  }

  r.pass = failures.empty();
  if (!r.pass) r.witness = {{"target_spec", target.label()}, {"failures", failures}};
  return r;
}

SweepReport sweep_projection_chain(const ModuleKind& kind, int max_degree, LevelOneFactors& factors,
                                   const IntertwinerMap& w) {
  VermaModule verma(kind.spec());
  SweepReport sweep{"projection-chain", kind.label(), {}};
  for (const auto& pi : enumerate_admissible(kind, max_degree))
    sweep.reports.push_back(verify_projection_chain(pi, kind, factors, w, verma));
  return sweep;
}

SweepReport verify_cross_model(const ModuleKind& kind, int max_degree, LevelOneFactors& factors) {
  if (max_degree > factors.depth()) throw std::invalid_argument("verify_cross_model: degree beyond the depth");
  const Root top = kind.spec().finite_weight();
  std::map<std::pair<int, Root>, std::vector<ColoredPartition>> blocks;
  for (const auto& p : enumerate_admissible(kind, max_degree))
    blocks[{p.degree(), top + partition_weight(p, kind)}].push_back(p);

  VermaModule verma(kind.spec());
  const TensorModule model = factors.tensor(kind.spec());
  SweepReport sweep{"cross-model", kind.label(), {}};
  for (const auto& [id, parts] : blocks) {
    std::vector<ModuleVector> in_verma;
    std::vector<TensorModule::Vector> in_tensor;
    for (const auto& p : parts) {
      in_verma.push_back(partition_vector(p, kind, verma));
      in_tensor.push_back(model.apply_word(partition_word(p, kind), model.highest_weight_vector()));
    }
    const Matrix expected = gram_of_vectors(in_verma, verma);
    Matrix actual(parts.size(), parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j) actual(i, j) = model.form(in_tensor[i], in_tensor[j]);

    StepReport r;
    r.step = "cross-model";
    r.spec = kind.label();
    r.degree = id.first;
    r.weight = id.second;
    r.count = parts.size();
    r.rank = rank_exact(actual);
    r.pass = actual == expected;
    if (!r.pass) r.witness = {{"tensor_gram", matrix_json(actual)}, {"verma_gram", matrix_json(expected)}};
    sweep.reports.push_back(std::move(r));
  }
  return sweep;
}

}  // namespace affine_basis
