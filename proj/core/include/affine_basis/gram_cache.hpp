#pragma once

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "affine_basis/pbw.hpp"

namespace affine_basis {

struct GramCacheKey {
  HighestWeightSpec spec;
  int degree = 0;
  Root weight;
  std::string basis_hash;
  std::string table_version;

  std::string file_name() const;
};

std::string basis_hash(const std::vector<Monomial>& basis);

nlohmann::json gram_block_to_json(const GramCacheKey& key, const GramBlock& block);
GramBlock gram_block_from_json(const nlohmann::json& doc);

// One JSON file per Gram block. Entries whose header disagrees with the
// requested key (including the structure-table version) are ignored.
class GramCache {
 public:
  explicit GramCache(std::filesystem::path dir);

  std::optional<GramBlock> load(const GramCacheKey& key) const;
  void store(const GramCacheKey& key, const GramBlock& block) const;

  const std::filesystem::path& directory() const { return dir_; }
  std::size_t hits() const { return hits_; }

 private:
  std::filesystem::path dir_;
  mutable std::atomic<std::size_t> hits_{0};
};

}  // namespace affine_basis
