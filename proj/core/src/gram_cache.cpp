#include "affine_basis/gram_cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace affine_basis {

namespace {

constexpr int kGramFormat = 1;

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

nlohmann::json header_of(const GramCacheKey& key) {
  return {{"format", kGramFormat},
          {"spec", {key.spec.k0, key.spec.k1, key.spec.k2}},
          {"degree", key.degree},
          {"weight", {key.weight.e1, key.weight.e2}},
          {"basis_hash", key.basis_hash},
          {"structure_table", key.table_version}};
}

}  // namespace

std::string GramCacheKey::file_name() const {
  std::ostringstream os;
  os << "gram_" << spec.k0 << "_" << spec.k1 << "_" << spec.k2 << "_d" << degree << "_w" << weight.e1 << "_"
     << weight.e2 << "_" << basis_hash << "_" << table_version << ".json";
  return os.str();
}

std::string basis_hash(const std::vector<Monomial>& basis) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& m : basis) {
    h = fnv1a(m.to_string(), h);
    h = fnv1a("|", h);
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

nlohmann::json gram_block_to_json(const GramCacheKey& key, const GramBlock& block) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& m : block.basis) basis.push_back(m.to_string());
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < block.matrix.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < block.matrix.cols(); ++j) row.push_back(to_string(block.matrix(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"header", header_of(key)}, {"basis", basis}, {"matrix", rows}, {"rank", block.rank}};
}

GramBlock gram_block_from_json(const nlohmann::json& doc) {
  GramBlock block;
  for (const auto& s : doc.at("basis")) block.basis.push_back(Monomial::parse(s.get<std::string>()));
  const auto& rows = doc.at("matrix");
  block.matrix = Matrix(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) block.matrix(i, j) = parse_rational(rows[i][j].get<std::string>());
  block.rank = doc.at("rank").get<std::size_t>();
  return block;
}

GramCache::GramCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::optional<GramBlock> GramCache::load(const GramCacheKey& key) const {
  const auto path = dir_ / key.file_name();
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("header") != header_of(key)) return std::nullopt;
    auto block = gram_block_from_json(doc);
    ++hits_;
    return block;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void GramCache::store(const GramCacheKey& key, const GramBlock& block) const {
  const auto path = dir_ / key.file_name();
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << gram_block_to_json(key, block).dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace affine_basis
