#include "result_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cubesym/report_json.hpp"

namespace cubesym::cli {

namespace fs = std::filesystem;

fs::path default_cache_dir() {
  if (const char* env = std::getenv("CUBE_SYM_CACHE"); env != nullptr && *env != '\0') return env;
  return ".cube-symmetry-cache";
}

fs::path ResultCache::path_for(const std::string& key) const {
  std::string name;
  for (char ch : key) {
    const bool keep = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '-' ||
                      ch == '_' || ch == '.';
    name += keep ? ch : '_';
  }
  return dir_ / (name + ".json");
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("tool_version", "") != kToolVersion) return std::nullopt;
  return text;
}

void ResultCache::store(const std::string& key, const std::string& report) const {
  if (!enabled_) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  const fs::path target = path_for(key);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << report;
    if (!out) return;
  }
  fs::rename(tmp, target, ec);
}

}  // namespace cubesym::cli
