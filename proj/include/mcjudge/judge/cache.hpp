#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>

namespace mcjudge {

std::string sha256_hex(const std::string& data);

// Content address of one model call. Fields are length-prefixed before
// hashing so no two argument tuples share a key; temperature is rendered
// with %.17g so equal doubles hash equally. attempt separates physical
// calls made at the same elicitation point (re-asks, regeneration rounds).
std::string cache_key(const std::string& model, double temperature, const std::string& prompt,
                      int attempt);

// Write-once file store, one file per key, safe for concurrent use within a
// process. Writes go through a temp file and an atomic rename, so a crash
// never leaves a partial entry behind.
class ResponseCache {
 public:
  explicit ResponseCache(std::string dir);  // creates dir if absent

  std::optional<std::string> get(const std::string& key) const;
  // First write wins; rewriting an existing key is a no-op.
  void put(const std::string& key, const std::string& value);

  struct Stats {
    std::uint64_t entries = 0;
    std::uint64_t bytes = 0;
  };
  Stats stats() const;
  // Removes every entry, returns how many were removed.
  std::uint64_t purge();

  const std::string& dir() const { return dir_; }

 private:
  std::string path_for(const std::string& key) const;

  std::string dir_;
  mutable std::mutex mu_;
};

}  // namespace mcjudge
