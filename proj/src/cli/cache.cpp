#include "specht/cli/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace specht::cli {

namespace fs = std::filesystem;

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("SPECHT_CACHE"); env && *env) return env;
  return ".specht-cache";
}

fs::path ResultCache::path_for(const Partition& lambda) const {
  std::string key;
  for (int part : lambda.parts()) key += (key.empty() ? "" : "_") + std::to_string(part);
  if (key.empty()) key = "0";
  return dir_ / ("ediv-" + key + "-v" + kToolVersion + ".json");
}

std::optional<ResultRecord> ResultCache::load(const Partition& lambda) {
  error_.clear();
  const fs::path path = path_for(lambda);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error_ = "cannot read " + path.string();
    return std::nullopt;
  }
  try {
    std::stringstream buf;
    buf << in.rdbuf();
    ResultRecord r = record_from_json(nlohmann::json::parse(buf.str()));
    validate_record(r);
    if (r.partition != lambda.to_string() || r.tool_version != kToolVersion) {
      error_ = "cache entry " + path.string() + " does not match its key";
      return std::nullopt;
    }
    return r;
  } catch (const std::exception& e) {
    error_ = "ignoring corrupt cache entry " + path.string() + ": " + e.what();
    return std::nullopt;
  }
}

bool ResultCache::store(const Partition& lambda, const ResultRecord& r) {
  static std::atomic<unsigned> counter{0};
  error_.clear();
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) {
    error_ = "cannot create cache directory " + dir_.string() + ": " + ec.message();
    return false;
  }
  const fs::path target = path_for(lambda);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << serialize(r);
    out.flush();
    if (!out) {
      error_ = "cannot write " + tmp.string();
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    error_ = "cannot rename into " + target.string() + ": " + ec.message();
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

}  // namespace specht::cli
