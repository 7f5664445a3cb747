#include "mcjudge/judge/cache.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace mcjudge {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr)) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int idx = 0; idx < len; ++idx) {
    out.push_back(hex[digest[idx] >> 4]);
    out.push_back(hex[digest[idx] & 0x0f]);
  }
  return out;
}

std::string cache_key(const std::string& model, double temperature, const std::string& prompt,
                      int attempt) {
  char temp[64];
  std::snprintf(temp, sizeof temp, "%.17g", temperature);
  std::string attempt_text = std::to_string(attempt);

  std::string material;
  material.reserve(model.size() + prompt.size() + 64);
  auto add_field = [&material](const std::string& value) {
    material += std::to_string(value.size());
    material += ':';
    material += value;
    material += ',';
  };
  add_field(model);
  add_field(temp);
  add_field(prompt);
  add_field(attempt_text);
  return sha256_hex(material);
}

ResponseCache::ResponseCache(std::string dir) : dir_(std::move(dir)) {
  fs::create_directories(dir_);
}

std::string ResponseCache::path_for(const std::string& key) const { return dir_ + "/" + key; }

std::optional<std::string> ResponseCache::get(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ResponseCache::put(const std::string& key, const std::string& value) {
  std::lock_guard<std::mutex> lock(mu_);
  fs::path target = path_for(key);
  if (fs::exists(target)) return;
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry: " + temp.string());
    out.write(value.data(), static_cast<std::streamsize>(value.size()));
    if (!out) throw std::runtime_error("short write on cache entry: " + temp.string());
  }
  fs::rename(temp, target);
}

ResponseCache::Stats ResponseCache::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  Stats s;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (!entry.is_regular_file()) continue;
    ++s.entries;
    s.bytes += entry.file_size();
  }
  return s;
}

std::uint64_t ResponseCache::purge() {
  std::lock_guard<std::mutex> lock(mu_);
  std::uint64_t removed = 0;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (!entry.is_regular_file()) continue;
    fs::remove(entry.path());
    ++removed;
  }
  return removed;
}

}  // namespace mcjudge
