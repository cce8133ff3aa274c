#pragma once

#include <initializer_list>
#include <string>

#include <openssl/evp.h>

#include "frodo_ue/matrix.hpp"
#include "frodo_ue/rng.hpp"

namespace test_support {

/// SHA-256 over the u16 little-endian entries of each matrix, concatenated.
inline std::string sha256_entries(std::initializer_list<const frodo_ue::MatrixZq*> mats) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  for (const auto* m : mats) {
    for (auto v : m->entries()) {
      const unsigned char le[2] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8)};
      EVP_DigestUpdate(ctx, le, 2);
    }
  }
  unsigned char out[32];
  unsigned len = 0;
  EVP_DigestFinal_ex(ctx, out, &len);
  EVP_MD_CTX_free(ctx);
  return frodo_ue::hex_encode(std::span<const std::uint8_t>(out, len));
}

}  // namespace test_support
