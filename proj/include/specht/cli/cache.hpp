#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "specht/cli/record.hpp"

namespace specht::cli {

// --cache-dir, else $SPECHT_CACHE, else ./.specht-cache
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

// One JSON file per (partition, tool version). Failures never throw; they
// leave a message in last_error() and the caller recomputes.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const Partition& lambda) const;
  std::optional<ResultRecord> load(const Partition& lambda);
  // Write to a temporary file, then rename over the target.
  bool store(const Partition& lambda, const ResultRecord& r);
  const std::string& last_error() const { return error_; }

 private:
  std::filesystem::path dir_;
  std::string error_;
};

}  // namespace specht::cli
