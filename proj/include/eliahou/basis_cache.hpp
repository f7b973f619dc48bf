#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "eliahou/homology.hpp"
#include "eliahou/semigroup.hpp"

namespace eliahou {

std::string sha256_hex(std::string_view data);

// Canonical text identifying a fixed basis: matrix, degree, dimension, order, field.
std::string basis_key(const GeneratorMatrix& a, const SDegree& m, int j, const TermOrder& order, const Field& k);

// Write-once map from basis keys to cycle bases, optionally mirrored in a directory of
// content-addressed JSON files. The first value stored under a key is never replaced.
class BasisCache {
 public:
  struct Stats {
    std::size_t memory_hits = 0;
    std::size_t disk_hits = 0;
    std::size_t computed = 0;
    std::size_t disk_writes = 0;
    std::size_t rejected_files = 0;
  };

  explicit BasisCache(std::optional<std::filesystem::path> dir = std::nullopt);

  // d_j and d_next are the face counts the basis must match; a disk entry that disagrees
  // (or fails to parse) is ignored and recomputed.
  std::shared_ptr<const CycleBasis> get(const std::string& key, const Field& k, std::size_t d_j, std::size_t d_next,
                                        const std::function<ChainBasis()>& compute);

  const Stats& stats() const { return stats_; }
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

 private:
  std::optional<ChainBasis> load(const std::filesystem::path& file, const std::string& key, std::size_t d_j,
                                 std::size_t d_next);
  void store(const std::filesystem::path& file, const std::string& key, const ChainBasis& basis);

  std::optional<std::filesystem::path> dir_;
  std::map<std::string, std::shared_ptr<const CycleBasis>> memory_;
  Stats stats_;
};

}  // namespace eliahou
