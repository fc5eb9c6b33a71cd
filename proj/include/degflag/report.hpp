#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "json.hpp"

namespace degflag {

inline constexpr const char* kToolVersion = "0.1.0";

// One verification or counting run: inputs, results, verdict, timing.
struct RunReport {
  std::string command;
  nlohmann::json parameters;
  nlohmann::json results;
  bool pass = true;
  long long wall_ms = 0;

  nlohmann::json to_json() const;
  // The exact bytes persisted to and replayed from the cache.
  std::string to_text() const { return to_json().dump(2) + "\n"; }
  std::string to_csv() const;
};

std::uint64_t fnv1a64(std::string_view data);

// Content address for a run: stable hash of command, canonicalized
// parameters and tool version.
std::string report_key(const std::string& command, const nlohmann::json& parameters);

// One JSON file per result.  A hit replays the originally stored bytes, so
// repeated runs of a cached command are byte-identical.
class ReportCache {
public:
  ReportCache(std::filesystem::path dir, bool enabled);

  static std::filesystem::path default_dir();

  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& bytes) const;
  bool enabled() const { return enabled_; }
  const std::filesystem::path& dir() const { return dir_; }

private:
  std::filesystem::path dir_;
  bool enabled_;
};

// Runs compute unless the cache already holds the report; returns the exact
// report text either way.
std::string run_cached(const ReportCache& cache, const std::string& command,
                       const nlohmann::json& parameters,
                       const std::function<RunReport()>& compute);

}  // namespace degflag
