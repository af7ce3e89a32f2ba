#include "affine_basis/verifier.hpp"

#include <chrono>
#include <memory>
#include <stdexcept>

#include "affine_basis/parallel.hpp"

namespace affine_basis {

bool WordLess::operator()(const Word& a, const Word& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const LoopElement& x, const LoopElement& y) { return compare(x, y) < 0; });
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Rational power_of(const Rational& x, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

void require_a1(const ModuleKind& kind, const char* what) {
  if (kind.type != ModuleKind::Type::a1_standard)
    throw std::invalid_argument(std::string(what) + " needs an A1 standard-module kind");
}

nlohmann::json coords_json(const TruncatedModule::Vector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : v.coords) j.push_back(to_string(c));
  return j;
}

StepReport partition_report(const char* step, const ColoredPartition& pi, const ModuleKind& kind) {
  StepReport r;
  r.step = step;
  r.spec = kind.label();
  r.partition = pi;
  r.degree = pi.degree();
  r.weight = kind.spec().finite_weight() + partition_weight(pi, kind);
  return r;
}

using BlockId = std::pair<int, std::pair<int, int>>;

BlockId block_id(int degree, Root w) { return {degree, {w.e1, w.e2}}; }

std::map<BlockId, std::vector<ColoredPartition>> group_by_block(const std::vector<ColoredPartition>& parts,
                                                                const ModuleKind& kind) {
  std::map<BlockId, std::vector<ColoredPartition>> blocks;
  const Root top = kind.spec().finite_weight();
  for (const auto& p : parts) blocks[block_id(p.degree(), top + partition_weight(p, kind))].push_back(p);
  return blocks;
}

// Gram matrix of the partition vectors of one block.
Matrix partition_gram(const std::vector<ColoredPartition>& parts, const ModuleKind& kind, VermaModule& verma,
                      GramCache* cache) {
  if (kind.type == ModuleKind::Type::c2_fs) {
    // xbar(pi) is a product of commuting letters, so it is its own PBW monomial.
    std::vector<Monomial> monos;
    for (const auto& p : parts) monos.push_back(monomial_c2fs(p).canonical);
    return gram_matrix(monos, verma, cache).matrix;
  }
  std::vector<ModuleVector> vectors;
  for (const auto& p : parts) vectors.push_back(partition_vector(p, kind, verma));
  return gram_of_vectors(vectors, verma);
}

nlohmann::json dependent_witness(const Matrix& gram, const std::vector<ColoredPartition>& parts) {
  nlohmann::json subset = nlohmann::json::array();
  for (std::size_t i : minimal_dependent_columns(gram)) subset.push_back(parts[i].to_json());
  return {{"dependent_subset", subset}};
}

}  // namespace

// ---------------------------------------------------------------------------
// Derivation

DerivationTable::DerivationTable(const StructureTable& table, Mutation mutation) : mutation_(mutation) {
  for (Basis b : kAllBasis) image_[index_of(b)] = table.bracket(Basis::x12, b);
  auto single = [&](Basis from, Basis to) {
    const FiniteVector& img = image(from);
    const Rational s = img[to];
    if (s == 0 || !(img == s * FiniteVector::unit(to)))
      throw ConstructionError("ad x12 does not map " + std::string(name(from)) + " to a multiple of " +
                              std::string(name(to)));
    return s;
  };
  lambda1_ = single(Basis::h1, Basis::x12);
  lambda2_ = single(Basis::x1b1b, Basis::x21b);
  lambda3_ = single(Basis::x21b, Basis::x22);
  if (mutation == Mutation::annihilator) image_[index_of(Basis::x11)] = FiniteVector::unit(Basis::x12);
}

WordCombination DerivationTable::apply(const WordCombination& u) const {
  WordCombination out;
  for (const auto& [w, c] : u)
    for (std::size_t p = 0; p < w.size(); ++p) {
      const FiniteVector& img = image(w[p].base);
      for (Basis b : kAllBasis) {
        if (img[b] == 0) continue;
        Word next = w;
        next[p] = {b, w[p].mode};
        Rational& slot = out[next];
        slot += c * img[b];
        if (slot == 0) out.erase(next);
      }
    }
  return out;
}

WordCombination DerivationTable::power(const Word& w, int n) const {
  WordCombination u{{w, Rational(1)}};
  for (int i = 0; i < n; ++i) u = apply(u);
  return u;
}

Rational DerivationTable::predicted_power_scalar(const ColoredPartition& pi) const {
  const int sb = pi.total(Color::b);
  const int sc = pi.total(Color::c);
  Rational r(factorial(static_cast<unsigned>(n_prime(pi))));
  r /= power_of(Rational(2), sc);
  return r * power_of(lambda1_, sb) * power_of(lambda2_ * lambda3_, sc);
}

Combination straighten(const WordCombination& u, Straightener& straightener) {
  Combination out;
  for (const auto& [w, c] : u) out.add(straightener.straighten(w), c);
  return out;
}

Combination t_apply(const DerivationTable& t, const Combination& u, Straightener& straightener) {
  Combination out;
  for (const auto& [m, c] : u) {
    // T c = 0, so powers of c ride along.
    for (const auto& [w, k] : t.apply(m.letters()))
      for (const auto& [mono, s] : straightener.straighten(w))
        out.add(mono.with_central(mono.central() + m.central()), c * k * s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Proof steps

ModuleVector partition_vector(const ColoredPartition& pi, const ModuleKind& kind, VermaModule& verma) {
  const Word w = partition_word(pi, kind);
  return verma.apply_word(w, VermaModule::highest_weight_vector());
}

Word partition_word(const ColoredPartition& pi, const ModuleKind& kind) {
  return kind.type == ModuleKind::Type::a1_standard ? monomial_a1(pi).word : monomial_c2fs(pi).word;
}

Root partition_weight(const ColoredPartition& pi, const ModuleKind& kind) {
  return kind.type == ModuleKind::Type::a1_standard ? pi.weight_a1() : pi.weight_c2fs();
}

StepReport verify_t_power(const ColoredPartition& pi, const ModuleKind& kind, const DerivationTable& t,
                          Straightener& straightener) {
  const auto t0 = Clock::now();
  StepReport r = partition_report("tpower", pi, kind);
  const WordCombination top = t.power(monomial_a1(pi).word, n_prime(pi));
  const Combination image = straighten(top, straightener);
  const Monomial xbar = monomial_c2fs(pi).canonical;
  const Rational lambda = image.coefficient(xbar);
  const Combination residual = image - Combination(xbar, lambda);
  const Combination next = straighten(t.apply(top), straightener);
  const Rational predicted = t.predicted_power_scalar(pi);

  r.scalar = lambda;
  r.pass = residual.is_zero() && lambda != 0 && lambda == predicted && next.is_zero();
  if (!r.pass) {
    r.witness = {{"lambda", to_string(lambda)}, {"predicted", to_string(predicted)}};
    if (!residual.is_zero()) r.witness["residual"] = residual.to_string();
    if (!next.is_zero()) r.witness["next_power"] = next.to_string();
  }
  r.seconds = since(t0);
  return r;
}

Rational predicted_translation_scalar(const ColoredPartition& pi, const DerivationTable& t) {
  const auto [rest, c0] = split_c0(pi);
  const int n = n_of(pi);
  const int n1 = n_of(rest);
  Rational mu(binomial(static_cast<unsigned>(n), static_cast<unsigned>(n1)));
  mu *= t.predicted_power_scalar(rest);
  mu *= Rational(factorial(static_cast<unsigned>(c0)));
  return mu * power_of(t.lambda2(), c0);
}

StepReport verify_translation(const ColoredPartition& pi, const ModuleKind& kind, const DerivationTable& t,
                              TruncatedModule& module) {
  require_a1(kind, "verify_translation");
  if (!(module.spec() == kind.spec())) throw std::invalid_argument("verify_translation: module spec mismatch");
  const auto t0 = Clock::now();
  StepReport r = partition_report("translation", pi, kind);

  const Word x = monomial_a1(pi).word;
  const int n = n_of(pi);
  const auto [rest, c0] = split_c0(pi);
  const LoopElement x12{Basis::x12, 0};
  const auto v = module.highest_weight_vector();

  auto lhs = module.apply_word(x, v);
  for (int i = 0; i < n; ++i) lhs = module.act(x12, lhs);
  const auto beyond = module.act(x12, lhs);

  Word rhs_word = monomial_c2fs(rest).word;
  rhs_word.insert(rhs_word.end(), static_cast<std::size_t>(c0), LoopElement{Basis::x21b, 0});
  const auto rhs = module.apply_word(rhs_word, v);
  const Rational mu = predicted_translation_scalar(pi, t);
  r.scalar = mu;

  nlohmann::json failures = nlohmann::json::array();
  auto fail = [&](const std::string& what, const TruncatedModule::Vector& vec) {
    failures.push_back({{"check", what}, {"grade", to_string(vec.grade)}, {"coordinates", coords_json(vec)}});
  };

  // The same power of T, applied to the words and then to v.
  TruncatedModule::Vector derived = module.zero(lhs.grade);
  for (const auto& [w, c] : t.power(x, n)) {
    const auto term = module.apply_word(w, v);
    if (term.is_zero()) continue;
    if (!(term.grade == derived.grade)) {
      fail("derivation image leaves the grade of x12(0)^N x(pi) v", term);
      continue;
    }
    derived = module.add(derived, term, c);
  }

  if (rhs.is_zero()) fail("xbar(pi_1) x21b(0)^c0 v is zero", rhs);
  if (!(lhs.grade == rhs.grade)) throw std::logic_error("translation: grade mismatch");
  if (const auto d = module.add(lhs, rhs, -mu); !d.is_zero()) fail("x12(0)^N x(pi) v - mu xbar(pi_1) x21b(0)^c0 v", d);
  if (const auto d = module.add(derived, rhs, -mu); !d.is_zero()) fail("(T^N x(pi)) v - mu xbar(pi_1) x21b(0)^c0 v", d);
  if (!beyond.is_zero()) fail("x12(0)^(N+1) x(pi) v", beyond);

  r.pass = failures.empty();
  if (!r.pass) r.witness = {{"mu", to_string(mu)}, {"N", n}, {"failures", failures}};
  r.seconds = since(t0);
  return r;
}

StepReport verify_c0_nonvanishing(int c0, TruncatedModule& module) {
  const HighestWeightSpec& spec = module.spec();
  if (spec.k2 != 0) throw std::invalid_argument("verify_c0_nonvanishing: needs k2 = 0");
  if (c0 < 0) throw std::invalid_argument("verify_c0_nonvanishing: negative c0");
  const auto t0 = Clock::now();
  StepReport r;
  r.step = "c0-nonvanishing";
  r.spec = spec.label();
  const Word w(static_cast<std::size_t>(c0), LoopElement{Basis::x21b, 0});
  const auto v = module.apply_word(w, module.highest_weight_vector());
  r.degree = 0;
  r.weight = v.grade.weight;
  const bool nonzero = !v.is_zero();
  const bool expected = c0 <= spec.k1;
  r.pass = nonzero == expected;
  if (!r.pass) r.witness = {{"c0", c0}, {"nonzero", nonzero}, {"expected_nonzero", expected}};
  r.seconds = since(t0);
  return r;
}

StepReport verify_ic_propagation(const ColoredPartition& pi, const ModuleKind& kind) {
  require_a1(kind, "verify_ic_propagation");
  StepReport r = partition_report("icprop", pi, kind);
  const IcPropagation p = ic_propagation(pi, kind.k0, kind.k1);
  r.pass = p.ok;
  if (!r.pass) r.witness = {{"failure", p.failure}};
  return r;
}

// ---------------------------------------------------------------------------
// Block sweeps

SweepReport verify_independence(const ModuleKind& kind, int max_degree, const VerifyOptions& options) {
  const auto blocks = group_by_block(enumerate_admissible(kind, max_degree), kind);
  std::vector<std::pair<BlockId, std::vector<ColoredPartition>>> items(blocks.begin(), blocks.end());
  SweepReport sweep{"independence", kind.label(), std::vector<StepReport>(items.size())};

  const int workers = std::max(1, options.jobs);
  std::vector<std::unique_ptr<VermaModule>> modules(workers);
  parallel_for(items.size(), workers, [&](std::size_t w, std::size_t i) {
    if (!modules[w]) modules[w] = std::make_unique<VermaModule>(kind.spec());
    const auto t0 = Clock::now();
    const auto& [id, parts] = items[i];
    const Matrix g = partition_gram(parts, kind, *modules[w], options.cache);
    StepReport& r = sweep.reports[i];
    r.step = "independence";
    r.spec = kind.label();
    r.degree = id.first;
    r.weight = Root{id.second.first, id.second.second};
    r.count = parts.size();
    r.rank = rank_exact(g);
    r.pass = *r.rank == parts.size();
    if (!r.pass) r.witness = dependent_witness(g, parts);
    r.seconds = since(t0);
  });
  return sweep;
}

SweepReport verify_spanning(const ModuleKind& kind, int max_degree, const VerifyOptions& options) {
  const auto admissible = group_by_block(enumerate_admissible(kind, max_degree), kind);
  const Root top = kind.spec().finite_weight();

  // Every block that can be nonzero, with its full spanning family.
  struct Item {
    BlockId id;
    std::vector<Monomial> full;
    std::vector<ColoredPartition> admissible;
  };
  std::vector<Item> items;
  if (kind.type == ModuleKind::Type::a1_standard) {
    for (int d = 0; d <= max_degree; ++d)
      for (Root w : weight_window(Algebra::a1, kind.spec(), d)) {
        Item it{block_id(d, w), pbw_monomials(Algebra::a1, kind.spec(), d, w), {}};
        if (auto f = admissible.find(it.id); f != admissible.end()) it.admissible = f->second;
        if (!it.full.empty() || !it.admissible.empty()) items.push_back(std::move(it));
      }
  } else {
    std::map<BlockId, std::vector<Monomial>> full;
    for (const auto& p : enumerate_unrestricted(max_degree, 0))
      full[block_id(p.degree(), top + p.weight_c2fs())].push_back(monomial_c2fs(p).canonical);
    for (auto& [id, monos] : full) {
      Item it{id, std::move(monos), {}};
      if (auto f = admissible.find(id); f != admissible.end()) it.admissible = f->second;
      items.push_back(std::move(it));
    }
  }

  SweepReport sweep{"spanning", kind.label(), std::vector<StepReport>(items.size())};
  const int workers = std::max(1, options.jobs);
  std::vector<std::unique_ptr<VermaModule>> modules(workers);
  parallel_for(items.size(), workers, [&](std::size_t w, std::size_t i) {
    if (!modules[w]) modules[w] = std::make_unique<VermaModule>(kind.spec());
    const auto t0 = Clock::now();
    const Item& it = items[i];
    const std::size_t full_rank = it.full.empty() ? 0 : gram_matrix(it.full, *modules[w], options.cache).rank;
    const std::size_t adm_rank =
        it.admissible.empty() ? 0 : rank_exact(partition_gram(it.admissible, kind, *modules[w], options.cache));
    StepReport& r = sweep.reports[i];
    r.step = "spanning";
    r.spec = kind.label();
    r.degree = it.id.first;
    r.weight = Root{it.id.second.first, it.id.second.second};
    r.count = it.admissible.size();
    r.rank = full_rank;
    r.pass = full_rank == adm_rank;
    if (!r.pass)
      r.witness = {{"full_rank", full_rank}, {"admissible_rank", adm_rank}, {"spanning_set_size", it.full.size()}};
    r.seconds = since(t0);
  });
  return sweep;
}

SweepReport sweep_t_power(const ModuleKind& kind, int max_degree, const DerivationTable& t) {
  require_a1(kind, "sweep_t_power");
  Straightener straightener;
  SweepReport sweep{"tpower", kind.label(), {}};
  for (const auto& pi : enumerate_admissible(kind, max_degree))
    sweep.reports.push_back(verify_t_power(pi, kind, t, straightener));
  return sweep;
}

SweepReport sweep_translation(const ModuleKind& kind, int max_degree, const DerivationTable& t) {
  require_a1(kind, "sweep_translation");
  TruncatedModule module(kind.spec(), max_degree);
  SweepReport sweep{"translation", kind.label(), {}};
  for (const auto& pi : enumerate_admissible(kind, max_degree))
    sweep.reports.push_back(verify_translation(pi, kind, t, module));
  for (int c0 = 0; c0 <= kind.k1 + 1; ++c0) sweep.reports.push_back(verify_c0_nonvanishing(c0, module));
  return sweep;
}

SweepReport sweep_ic_propagation(const ModuleKind& kind, int max_degree) {
  SweepReport sweep{"icprop", kind.label(), {}};
  for (const auto& pi : enumerate_admissible(kind, max_degree)) sweep.reports.push_back(verify_ic_propagation(pi, kind));
  return sweep;
}

SweepReport negative_controls(const ModuleKind& kind, int max_degree) {
  require_a1(kind, "negative_controls");
  const auto blocks = group_by_block(enumerate_admissible(kind, max_degree), kind);
  VermaModule verma(kind.spec());
  std::map<BlockId, std::vector<ModuleVector>> vectors;
  for (const auto& [id, parts] : blocks)
    for (const auto& p : parts) vectors[id].push_back(partition_vector(p, kind, verma));

  SweepReport sweep{"negative-control", kind.label(), {}};
  const Root top = kind.spec().finite_weight();
  for (const auto& pi : enumerate_unrestricted(max_degree, kind.k1)) {
    if (!satisfies_ic_a1(pi, kind.k0, kind.k1) || satisfies_dc(pi, kind.level())) continue;
    const auto t0 = Clock::now();
    StepReport r = partition_report("negative-control", pi, kind);
    std::vector<ModuleVector> family = vectors[block_id(pi.degree(), top + pi.weight_a1())];
    family.push_back(partition_vector(pi, kind, verma));
    r.count = family.size();
    r.rank = rank_exact(gram_of_vectors(family, verma));
    r.pass = *r.rank < family.size();
    if (!r.pass) r.witness = {{"reason", "appending a DC-violating vector kept full rank"}};
    r.seconds = since(t0);
    sweep.reports.push_back(std::move(r));
  }
  return sweep;
}

}  // namespace affine_basis
