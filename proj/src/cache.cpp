#include "pjl/cache.hpp"

#include "pjl/partitions.hpp"

#include <fmt/format.h>

#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace pjl {

const char* const kCodeVersion = "pjl-1";

namespace fs = std::filesystem;
using nlohmann::json;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path ResultCache::file_for(const std::string& module) const { return dir_ / (module + ".jsonl"); }

ResultCache::Module& ResultCache::load(const std::string& module) {
  auto it = modules_.find(module);
  if (it != modules_.end()) return it->second;
  Module& m = modules_[module];
  if (!enabled()) return m;
  std::ifstream in(file_for(module));
  if (!in) return m;
  std::string line;
  if (!std::getline(in, line)) return m;
  json header = json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object() || header.value("schema", -1) != kSchema) {
    m.dirty = true;  // rebuild on next flush
    return m;
  }
  while (std::getline(in, line)) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("key") || !j.contains("value")) continue;
    m.entries[j["key"].get<std::string>()] = {j["value"].get<std::string>(), j.value("ts", 0LL)};
  }
  return m;
}

std::optional<std::string> ResultCache::get(const std::string& module, const std::string& key) {
  if (!enabled()) return std::nullopt;
  Module& m = load(module);
  auto it = m.entries.find(key);
  if (it == m.entries.end()) return std::nullopt;
  return it->second.value;
}

void ResultCache::put(const std::string& module, const std::string& key, const std::string& value) {
  if (!enabled()) return;
  Module& m = load(module);
  auto it = m.entries.find(key);
  if (it != m.entries.end() && it->second.value == value) return;
  long long now = std::chrono::duration_cast<std::chrono::seconds>(
                      std::chrono::system_clock::now().time_since_epoch())
                      .count();
  m.entries[key] = {value, now};
  m.dirty = true;
}

std::map<std::string, std::string> ResultCache::entries(const std::string& module) {
  std::map<std::string, std::string> out;
  if (!enabled()) return out;
  for (const auto& [key, e] : load(module).entries) out[key] = e.value;
  return out;
}

void ResultCache::flush() {
  if (!enabled()) return;
  fs::create_directories(dir_);
  for (auto& [name, m] : modules_) {
    if (!m.dirty) continue;
    fs::path target = file_for(name);
    fs::path tmp = target;
    tmp += fmt::format(".tmp{}", static_cast<long long>(
                                     std::chrono::steady_clock::now().time_since_epoch().count()));
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw std::runtime_error(fmt::format("cannot write cache file {}", tmp.string()));
      out << json{{"schema", kSchema}}.dump() << '\n';
      for (const auto& [key, e] : m.entries)
        out << json{{"key", key}, {"value", e.value}, {"ts", e.timestamp}}.dump() << '\n';
    }
    fs::rename(tmp, target);
    m.dirty = false;
  }
}

fs::path default_cache_dir() {
  const char* env = std::getenv("PJL_CACHE_DIR");
  return env && *env ? fs::path(env) : fs::path();
}

namespace {

std::string c_key(int t, int n) { return fmt::format("{}:c:{}:{}", kCodeVersion, t, n); }

}  // namespace

void load_c_cache(ResultCache& cache) {
  if (!cache.enabled()) return;
  const std::string prefix = fmt::format("{}:c:", kCodeVersion);
  for (const auto& [key, value] : cache.entries("partitions")) {
    if (key.rfind(prefix, 0) != 0) continue;
    int t = 0, n = 0;
    if (std::sscanf(key.c_str() + prefix.size(), "%d:%d", &t, &n) != 2) continue;
    try {
      seed_c(t, n, BigInt(value));
    } catch (const std::exception&) {
      // unreadable entries are recomputed
    }
  }
}

void store_c_cache(ResultCache& cache) {
  if (!cache.enabled()) return;
  for (const auto& [t, n, v] : memoized_c()) cache.put("partitions", c_key(t, n), v.str());
}

}  // namespace pjl
