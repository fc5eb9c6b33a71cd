#include "degflag/report.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace degflag {

nlohmann::json RunReport::to_json() const {
  return nlohmann::json{{"command", command}, {"parameters", parameters},
                        {"results", results}, {"pass", pass},
                        {"wall_ms", wall_ms}, {"version", kToolVersion}};
}

namespace {

void flatten_csv(const std::string& prefix, const nlohmann::json& j,
                 std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_csv(prefix.empty() ? key : prefix + "." + key, value, out);
  } else if (j.is_array()) {
    std::ostringstream cell;
    cell << j.dump();
    out << prefix << "," << '"' << cell.str() << '"' << "\n";
  } else {
    out << prefix << "," << j.dump() << "\n";
  }
}

}  // namespace

std::string RunReport::to_csv() const {
  std::ostringstream out;
  out << "key,value\n";
  flatten_csv("", to_json(), out);
  return out.str();
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string report_key(const std::string& command, const nlohmann::json& parameters) {
  const std::string canonical = command + "" + parameters.dump() + "" + kToolVersion;
  std::ostringstream out;
  out << command << "-" << std::hex << fnv1a64(canonical);
  return out.str();
}

ReportCache::ReportCache(std::filesystem::path dir, bool enabled)
    : dir_(std::move(dir)), enabled_(enabled) {}

std::filesystem::path ReportCache::default_dir() {
  if (const char* env = std::getenv("DEGFLAG_CACHE")) return env;
  return ".degflag-cache";
}

std::optional<std::string> ReportCache::load(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ReportCache::store(const std::string& key, const std::string& bytes) const {
  if (!enabled_) return;
  std::filesystem::create_directories(dir_);
  std::ofstream out(dir_ / (key + ".json"), std::ios::binary | std::ios::trunc);
  out << bytes;
}

std::string run_cached(const ReportCache& cache, const std::string& command,
                       const nlohmann::json& parameters,
                       const std::function<RunReport()>& compute) {
  const std::string key = report_key(command, parameters);
  if (auto hit = cache.load(key)) return *hit;
  const std::string bytes = compute().to_text();
  cache.store(key, bytes);
  return bytes;
}

}  // namespace degflag
