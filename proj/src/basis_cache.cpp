#include "eliahou/basis_cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "eliahou/error.hpp"
#include "eliahou/serialize.hpp"

namespace eliahou {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string basis_key(const GeneratorMatrix& a, const SDegree& m, int j, const TermOrder& order, const Field& k) {
  Json key{{"matrix", matrix_to_json(a)},
           {"degree", degree_to_json(m)},
           {"dim", j},
           {"order", order.name()},
           {"field", k.name()}};
  return key.dump();
}

BasisCache::BasisCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
  if (dir_) std::filesystem::create_directories(*dir_);
}

std::shared_ptr<const CycleBasis> BasisCache::get(const std::string& key, const Field& k, std::size_t d_j,
                                                  std::size_t d_next, const std::function<ChainBasis()>& compute) {
  if (auto it = memory_.find(key); it != memory_.end()) {
    ++stats_.memory_hits;
    return it->second;
  }
  std::optional<std::filesystem::path> file;
  if (dir_) file = *dir_ / (sha256_hex(key) + ".json");

  std::optional<ChainBasis> basis;
  if (file) {
    basis = load(*file, key, d_j, d_next);
    if (basis) ++stats_.disk_hits;
  }
  if (!basis) {
    basis = compute();
    ++stats_.computed;
    if (file) store(*file, key, *basis);
  }
  auto value = std::make_shared<const CycleBasis>(k, std::move(*basis));
  memory_.emplace(key, value);
  return value;
}

std::optional<ChainBasis> BasisCache::load(const std::filesystem::path& file, const std::string& key,
                                           std::size_t d_j, std::size_t d_next) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("key").get<std::string>() != key) {
      ++stats_.rejected_files;
      return std::nullopt;
    }
    ChainBasis b = chain_basis_from_json(j.at("basis"));
    if (b.num_faces != d_j || b.num_next_faces != d_next) {
      ++stats_.rejected_files;
      return std::nullopt;
    }
    return b;
  } catch (const std::exception&) {
    ++stats_.rejected_files;
    return std::nullopt;
  }
}

void BasisCache::store(const std::filesystem::path& file, const std::string& key, const ChainBasis& basis) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::exists(file, ec)) return;
  static std::atomic<unsigned long> counter{0};
  fs::path tmp = file;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << Json{{"key", key}, {"basis", chain_basis_to_json(basis)}}.dump() << '\n';
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  // link() refuses to replace an existing file, so a racing writer keeps the first copy.
  if (::link(tmp.c_str(), file.c_str()) == 0) ++stats_.disk_writes;
  fs::remove(tmp, ec);
}

}  // namespace eliahou
