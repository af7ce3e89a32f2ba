#include "affine_basis/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affine_basis {

std::map<int, int>& ColoredPartition::slot(Color color) {
  switch (color) {
    case Color::a: return a_;
    case Color::b: return b_;
    case Color::c: return c_;
  }
  throw std::logic_error("bad color");
}

const std::map<int, int>& ColoredPartition::frequencies(Color color) const {
  return const_cast<ColoredPartition*>(this)->slot(color);
}

int ColoredPartition::frequency(Color color, int j) const {
  const auto& m = frequencies(color);
  auto it = m.find(j);
  return it == m.end() ? 0 : it->second;
}

void ColoredPartition::set(Color color, int j, int freq) {
  if (j < 0 || freq < 0) throw std::invalid_argument("partition: negative part index or frequency");
  auto& m = slot(color);
  if (freq == 0)
    m.erase(j);
  else
    m[j] = freq;
}

int ColoredPartition::degree() const {
  int d = 0;
  for (const auto* m : {&a_, &b_, &c_})
    for (const auto& [j, f] : *m) d += j * f;
  return d;
}

int ColoredPartition::max_part() const {
  int mx = -1;
  for (const auto* m : {&a_, &b_, &c_})
    if (!m->empty()) mx = std::max(mx, m->rbegin()->first);
  return mx;
}

int ColoredPartition::total(Color color) const {
  int t = 0;
  for (const auto& [j, f] : frequencies(color)) t += f;
  return t;
}

Root ColoredPartition::weight_a1() const { return kTheta * (total(Color::a) - total(Color::c)); }

Root ColoredPartition::weight_c2fs() const {
  return Root{2, 0} * total(Color::a) + Root{1, 1} * total(Color::b) + Root{0, 2} * total(Color::c);
}

std::string ColoredPartition::to_string() const {
  if (empty()) return "{}";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int j = 0; j <= max_part(); ++j)
    for (auto [color, tag] : {std::pair{Color::a, 'a'}, std::pair{Color::b, 'b'}, std::pair{Color::c, 'c'}}) {
      const int f = frequency(color, j);
      if (f == 0) continue;
      if (!first) os << ", ";
      os << tag << j << "=" << f;
      first = false;
    }
  os << "}";
  return os.str();
}

nlohmann::json ColoredPartition::to_json() const {
  auto freq = [](const std::map<int, int>& m) {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [j, f] : m) o[std::to_string(j)] = f;
    return o;
  };
  return {{"a", freq(a_)}, {"b", freq(b_)}, {"c", freq(c_)},
          {"degree", degree()}, {"N", n_of(*this)}, {"Nprime", n_prime(*this)}};
}

ColoredPartition ColoredPartition::from_json(const nlohmann::json& doc) {
  ColoredPartition p;
  for (auto [color, key] : {std::pair{Color::a, "a"}, std::pair{Color::b, "b"}, std::pair{Color::c, "c"}})
    for (const auto& [j, f] : doc.at(key).items()) p.set(color, std::stoi(j), f.get<int>());
  return p;
}

bool operator<(const ColoredPartition& x, const ColoredPartition& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  const int top = std::max(x.max_part(), y.max_part());
  for (int j = 0; j <= top; ++j)
    for (Color color : {Color::c, Color::b, Color::a}) {
      const int fx = x.frequency(color, j);
      const int fy = y.frequency(color, j);
      if (fx != fy) return fx < fy;
    }
  return false;
}

std::string ModuleKind::label() const {
  std::ostringstream os;
  if (type == Type::a1_standard)
    os << "a1(" << k0 << "," << k1 << ")";
  else
    os << "c2fs(" << k0 << "," << k1 << "," << k2 << ")";
  return os.str();
}

namespace {

// The four difference-condition families at index i.
bool dc_at(const ColoredPartition& p, int i, int k) {
  const int ai = p.a(i), bi = p.b(i), ci = p.c(i);
  const int an = p.a(i + 1), bn = p.b(i + 1), cn = p.c(i + 1);
  return ai + bi + an <= k && ci + bi + an <= k && ci + bn + an <= k && ci + bn + cn <= k;
}

}  // namespace

bool satisfies_dc(const ColoredPartition& pi, int level) {
  // Beyond max_part + 1 every term vanishes.
  for (int i = 0; i <= pi.max_part() + 1; ++i)
    if (!dc_at(pi, i, level)) return false;
  return true;
}

bool satisfies_ic_a1(const ColoredPartition& pi, int kbar0, int kbar1) {
  return pi.a(0) == 0 && pi.b(0) == 0 && pi.c(0) <= kbar1 && pi.a(1) <= kbar0;
}

bool satisfies_ic_c2fs(const ColoredPartition& pi, int k0, int k1, int k2) {
  const int k = k0 + k1 + k2;
  return pi.a(0) == 0 && pi.b(0) == 0 && pi.c(0) == 0 && pi.a(1) <= k0 && pi.a(1) + pi.b(1) <= k - k2 &&
         pi.b(1) + pi.c(1) <= k - k2;
}

bool is_admissible(const ColoredPartition& pi, const ModuleKind& kind) {
  if (!satisfies_dc(pi, kind.level())) return false;
  if (kind.type == ModuleKind::Type::a1_standard) return satisfies_ic_a1(pi, kind.k0, kind.k1);
  return satisfies_ic_c2fs(pi, kind.k0, kind.k1, kind.k2);
}

std::vector<ColoredPartition> enumerate_admissible(const ModuleKind& kind, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("enumerate_admissible: negative degree bound");
  const int k = kind.level();
  std::vector<ColoredPartition> out;
  ColoredPartition cur;

  // Choose (a_j, b_j, c_j) for j = 0, 1, ... ; each frequency is at most k
  // by the difference conditions, so the search is finite.
  auto rec = [&](auto&& self, int j, int budget) -> void {
    if (j > 0 && !dc_at(cur, j - 1, k)) return;
    if (j > max_degree || (j > 0 && budget < j)) {
      // Remaining parts are all zero; the last window still needs checking.
      if (satisfies_dc(cur, k) && is_admissible(cur, kind)) out.push_back(cur);
      return;
    }
    for (int a = 0; a <= k; ++a)
      for (int b = 0; a + b <= k; ++b)
        for (int c = 0; c <= k; ++c) {
          const int cost = j * (a + b + c);
          if (cost > budget) continue;
          if (j == 0 && (a > 0 || b > 0)) continue;
          cur.set(Color::a, j, a);
          cur.set(Color::b, j, b);
          cur.set(Color::c, j, c);
          self(self, j + 1, budget - cost);
        }
    cur.set(Color::a, j, 0);
    cur.set(Color::b, j, 0);
    cur.set(Color::c, j, 0);
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ColoredPartition> enumerate_unrestricted(int max_degree, int max_c0) {
  if (max_degree < 0 || max_c0 < 0) throw std::invalid_argument("enumerate_unrestricted: negative bound");
  std::vector<ColoredPartition> out;
  ColoredPartition cur;
  auto rec = [&](auto&& self, int j, int budget) -> void {
    if (j > max_degree || budget < j) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; j * a <= budget; ++a)
      for (int b = 0; j * (a + b) <= budget; ++b)
        for (int c = 0; j * (a + b + c) <= budget; ++c) {
          cur.set(Color::a, j, a);
          cur.set(Color::b, j, b);
          cur.set(Color::c, j, c);
          self(self, j + 1, budget - j * (a + b + c));
        }
    cur.set(Color::a, j, 0);
    cur.set(Color::b, j, 0);
    cur.set(Color::c, j, 0);
  };
  for (int c0 = 0; c0 <= max_c0; ++c0) {
    cur = ColoredPartition{}.with(Color::c, 0, c0);
    rec(rec, 1, max_degree);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int n_prime(const ColoredPartition& pi) { return pi.total(Color::b) + 2 * pi.total(Color::c); }

int n_of(const ColoredPartition& pi) { return n_prime(pi) - pi.c(0); }

SplitC0 split_c0(const ColoredPartition& pi) { return {pi.with(Color::c, 0, 0), pi.c(0)}; }

namespace {

ShapedMonomial shaped(const ColoredPartition& pi, Basis c_tag, Basis b_tag, Basis a_tag) {
  // Larger j to the left, so x(pi) = x(pi_1) x1b1b(0)^{c0}.
  ShapedMonomial s;
  for (int j = pi.max_part(); j >= 0; --j)
    for (auto [color, tag] : {std::pair{Color::c, c_tag}, std::pair{Color::b, b_tag}, std::pair{Color::a, a_tag}})
      for (int i = 0; i < pi.frequency(color, j); ++i) s.word.push_back({tag, -j});
  s.canonical = Monomial::from_letters(s.word);
  return s;
}

}  // namespace

ShapedMonomial monomial_a1(const ColoredPartition& pi) { return shaped(pi, Basis::x1b1b, Basis::h1, Basis::x11); }

ShapedMonomial monomial_c2fs(const ColoredPartition& pi) { return shaped(pi, Basis::x22, Basis::x12, Basis::x11); }

IcPropagation ic_propagation(const ColoredPartition& pi, int kbar0, int kbar1) {
  IcPropagation r;
  const auto [rest, c0] = split_c0(pi);
  r.rest = rest;
  if (c0 > kbar1) {
    r.failure = "c0 = " + std::to_string(c0) + " exceeds k1 = " + std::to_string(kbar1);
    return r;
  }
  r.lambda_prime = {kbar0, kbar1 - c0, c0};
  if (!satisfies_ic_c2fs(rest, r.lambda_prime.k0, r.lambda_prime.k1, r.lambda_prime.k2)) {
    r.failure = "pi_1 = " + rest.to_string() + " violates the initial conditions for " + r.lambda_prime.label();
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace affine_basis
