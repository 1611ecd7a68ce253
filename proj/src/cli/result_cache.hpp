#pragma once

// On-disk store of parameter reports, one JSON file per
// (family, params, parameter, flags) key. A hit returns the stored text
// unchanged; records written by another tool version are ignored.

#include <filesystem>
#include <optional>
#include <string>

namespace cubesym::cli {

class ResultCache {
 public:
  ResultCache() = default;  // disabled
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(true) {}

  bool enabled() const noexcept { return enabled_; }
  const std::filesystem::path& dir() const noexcept { return dir_; }

  std::optional<std::string> load(const std::string& key) const;
  // Best effort: a cache that cannot be written is silently skipped.
  void store(const std::string& key, const std::string& report) const;

  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
  bool enabled_ = false;
};

// CUBE_SYM_CACHE if set, else ".cube-symmetry-cache".
std::filesystem::path default_cache_dir();

}  // namespace cubesym::cli
