#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace pjl {

// Line-delimited JSON, one file per module. The first line carries the
// schema version; a file with another version is ignored and rewritten.
class ResultCache {
 public:
  static constexpr int kSchema = 1;

  // Empty dir disables the cache.
  explicit ResultCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  std::optional<std::string> get(const std::string& module, const std::string& key);
  void put(const std::string& module, const std::string& key, const std::string& value);
  std::map<std::string, std::string> entries(const std::string& module);
  // Write every touched module file (temp file, then rename).
  void flush();

  std::filesystem::path file_for(const std::string& module) const;

 private:
  struct Entry {
    std::string value;
    long long timestamp = 0;
  };
  struct Module {
    std::map<std::string, Entry> entries;
    bool dirty = false;
  };
  Module& load(const std::string& module);

  std::filesystem::path dir_;
  std::map<std::string, Module> modules_;
};

// PJL_CACHE_DIR, or empty.
std::filesystem::path default_cache_dir();

// Cache key prefix tying entries to this build's arithmetic.
extern const char* const kCodeVersion;

// Seed the c_t(n) memo from the cache, and write it back.
void load_c_cache(ResultCache& cache);
void store_c_cache(ResultCache& cache);

}  // namespace pjl
