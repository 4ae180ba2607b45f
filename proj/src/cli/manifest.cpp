#include "tricert/manifest.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "tricert/errors.hpp"

namespace tricert {

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw VerificationError("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw VerificationError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return sha256_hex(ss.str());
}

void RunManifest::add_output(const std::filesystem::path& dir, const std::string& rel) {
  outputs.push_back({rel, sha256_file(dir / rel)});
}

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command_line"] = command_line;
  j["seed"] = seed;
  j["workers"] = workers;
  j["wall_seconds"] = wall_seconds;
  j["stages"] = stages;
  auto& outs = j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& o : outputs) outs.push_back({{"path", o.path}, {"sha256", o.sha256}});
  return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  RunManifest m;
  try {
    m.command_line = j.at("command_line").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.workers = j.at("workers").get<int>();
    m.wall_seconds = j.at("wall_seconds").get<double>();
    m.stages = nlohmann::ordered_json::parse(j.at("stages").dump());
    for (const auto& o : j.at("outputs")) {
      m.outputs.push_back({o.at("path").get<std::string>(), o.at("sha256").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("manifest: ") + e.what());
  }
  return m;
}

void RunManifest::write(const std::filesystem::path& file) const {
  std::ofstream out(file);
  if (!out) throw InputError("cannot write " + file.string());
  out << to_json().dump(2) << "\n";
}

RunManifest RunManifest::load_verified(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot read " + file.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("manifest: ") + e.what());
  }
  RunManifest m = from_json(j);
  const auto dir = file.parent_path();
  for (const auto& o : m.outputs) {
    if (sha256_file(dir / o.path) != o.sha256) throw VerificationError("digest mismatch for " + o.path);
  }
  return m;
}

}  // namespace tricert
