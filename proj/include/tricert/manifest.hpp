#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace tricert {

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);

struct OutputDigest {
  std::string path;  // relative to the manifest's directory
  std::string sha256;
};

struct RunManifest {
  std::string command_line;
  std::uint64_t seed = 0;
  int workers = 1;
  double wall_seconds = 0;
  nlohmann::ordered_json stages = nlohmann::ordered_json::object();  // stage -> counts
  std::vector<OutputDigest> outputs;

  /// Records the digest of `dir / rel`.
  void add_output(const std::filesystem::path& dir, const std::string& rel);

  nlohmann::ordered_json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);

  void write(const std::filesystem::path& file) const;
  /// Loads and recomputes every output digest; throws VerificationError on a
  /// mismatch or a missing file.
  static RunManifest load_verified(const std::filesystem::path& file);
};

}  // namespace tricert
