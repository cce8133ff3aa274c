#include "frodo_ue/sampling.hpp"

#include <cstring>
#include <memory>

#include <openssl/evp.h>

#include "frodo_ue/error.hpp"

namespace frodo_ue {

MatrixZq sample_uniform(RngHandle& rng, std::size_t rows, std::size_t cols, const ParamSet& p) {
  MatrixZq m(rows, cols, p.D);
  if (m.empty()) return m;
  Bytes raw = rng.bytes(2 * m.size());
  auto out = m.mutable_entries();
  const auto mask = p.mask();
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint16_t>(raw[2 * i] | (raw[2 * i + 1] << 8)) & mask;
  return m;
}

std::int32_t chi_from_word(std::uint16_t word, const ParamSet& p) {
  const std::uint16_t u = static_cast<std::uint16_t>((word >> 1) & ((1u << p.chi_sample_bits) - 1));
  std::int32_t v = 0;
  for (auto c : p.chi_cdf) v += c < u ? 1 : 0;
  return (word & 1) ? -v : v;
}

MatrixZq sample_chi(RngHandle& rng, std::size_t rows, std::size_t cols, const ParamSet& p) {
  MatrixZq m(rows, cols, p.D);
  if (m.empty()) return m;
  Bytes raw = rng.bytes(2 * m.size());
  auto out = m.mutable_entries();
  const auto mask = p.mask();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto word = static_cast<std::uint16_t>(raw[2 * i] | (raw[2 * i + 1] << 8));
    out[i] = static_cast<std::uint16_t>(chi_from_word(word, p)) & mask;
  }
  return m;
}

namespace {

struct EvpCipher {
  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  ~EvpCipher() { EVP_CIPHER_CTX_free(ctx); }
};

void expand_aes(std::span<const std::uint8_t> seed, const ParamSet& p, MatrixZq& a) {
  const Bytes key = seed.size() == 16 ? Bytes(seed.begin(), seed.end()) : xof::shake128(seed, 16);
  const std::size_t n = p.n;
  auto out = a.mutable_entries();
  bool failed = false;
#pragma omp parallel reduction(|| : failed)
  {
    EvpCipher cipher;
    Bytes blocks(2 * n), enc(2 * n + 16);
    const bool ready = cipher.ctx != nullptr &&
                       EVP_EncryptInit_ex(cipher.ctx, EVP_aes_128_ecb(), nullptr, key.data(), nullptr) == 1 &&
                       EVP_CIPHER_CTX_set_padding(cipher.ctx, 0) == 1;
    failed = failed || !ready;
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < n; ++i) {
      if (!ready) continue;
      std::memset(blocks.data(), 0, blocks.size());
      for (std::size_t j = 0; j < n; j += 8) {
        std::uint8_t* b = blocks.data() + 2 * j;
        b[0] = static_cast<std::uint8_t>(i);
        b[1] = static_cast<std::uint8_t>(i >> 8);
        b[2] = static_cast<std::uint8_t>(j);
        b[3] = static_cast<std::uint8_t>(j >> 8);
      }
      int len = 0;
      if (EVP_EncryptUpdate(cipher.ctx, enc.data(), &len, blocks.data(), static_cast<int>(blocks.size())) != 1 ||
          len != static_cast<int>(blocks.size())) {
        failed = true;
        continue;
      }
      for (std::size_t j = 0; j < n; ++j)
        out[i * n + j] = static_cast<std::uint16_t>(enc[2 * j] | (enc[2 * j + 1] << 8)) & p.mask();
    }
  }
  if (failed) throw Error("AES expansion of the public matrix failed");
}

void expand_shake(std::span<const std::uint8_t> seed, const ParamSet& p, MatrixZq& a) {
  const std::size_t n = p.n;
  auto out = a.mutable_entries();
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    Bytes input;
    input.reserve(seed.size() + 2);
    input.push_back(static_cast<std::uint8_t>(i));
    input.push_back(static_cast<std::uint8_t>(i >> 8));
    input.insert(input.end(), seed.begin(), seed.end());
    const Bytes row = xof::shake128(input, 2 * n);
    for (std::size_t j = 0; j < n; ++j)
      out[i * n + j] = static_cast<std::uint16_t>(row[2 * j] | (row[2 * j + 1] << 8)) & p.mask();
  }
}

}  // namespace

MatrixZq gen_public_matrix(std::span<const std::uint8_t> seed, const ParamSet& p) {
  if (seed.empty()) throw Error("public-matrix seed must not be empty");
  if (p.gen_mode == GenMode::Toy) {
    RngHandle rng = RngHandle(seed).derive("public-matrix");
    return sample_uniform(rng, p.n, p.n, p);
  }
  if (p.n % 8 != 0) throw InvalidParamSet("public-matrix expansion needs n divisible by 8");
  MatrixZq a(p.n, p.n, p.D);
  if (p.gen_mode == GenMode::AesLike)
    expand_aes(seed, p, a);
  else
    expand_shake(seed, p, a);
  return a;
}

}  // namespace frodo_ue
