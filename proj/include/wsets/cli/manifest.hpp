#pragma once

#include <map>
#include <string>

#include "wsets/json_io.hpp"

namespace wsets::cli {

inline constexpr const char* kToolVersion = "0.3.0";

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

struct RunManifest {
  std::string command;
  Json parameters = Json::object();
  std::map<std::string, std::string> input_digests;  // path -> sha256

  void add_input(const std::string& path, const std::string& contents);
  Json to_json() const;
};

/// {"manifest": ..., <payload fields>}
Json with_manifest(const RunManifest& m, const Json& payload);

}  // namespace wsets::cli
