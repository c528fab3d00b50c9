#include "wsets/cli/manifest.hpp"

#include <array>
#include <cstdio>
#include <memory>
#include <stdexcept>

#include <openssl/evp.h>

namespace wsets::cli {

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

void RunManifest::add_input(const std::string& path, const std::string& contents) {
  input_digests[path] = sha256_hex(contents);
}

Json RunManifest::to_json() const {
  Json digests = Json::object();
  for (const auto& [p, h] : input_digests) digests[p] = "sha256:" + h;
  return Json{{"command", command}, {"parameters", parameters}, {"tool_version", kToolVersion}, {"inputs", digests}};
}

Json with_manifest(const RunManifest& m, const Json& payload) {
  Json out{{"manifest", m.to_json()}};
  for (auto it = payload.begin(); it != payload.end(); ++it) out[it.key()] = it.value();
  return out;
}

}  // namespace wsets::cli
