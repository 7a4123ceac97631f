#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace diffprobe {

/// SHA-256 of a byte buffer, lowercase hex.
std::string sha256_hex(const void* data, size_t n);
std::string sha256_hex(const std::string& s);
std::string sha256_hex(const std::vector<uint8_t>& v);

/// SHA-256 of a file's contents.
std::string sha256_file(const std::filesystem::path& path);

/// Incremental hasher for streamed payloads.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;
  void update(const void* data, size_t n);
  std::string hex();  // finalizes; call once

 private:
  void* ctx_;
};

/// First 12 hex chars; used for content-addressed directory names.
std::string short_digest(const std::string& full_hex);

}  // namespace diffprobe
