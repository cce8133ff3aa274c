#include "frodo_ue/rng.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <random>
#include <string>

#include <openssl/evp.h>
#include <openssl/rand.h>

#include "frodo_ue/error.hpp"

namespace frodo_ue {

namespace {

constexpr std::size_t kBufferBytes = 1 << 14;
constexpr std::string_view kDomain = "frodo-ue/rng/v1";

Bytes digest_xof(const EVP_MD* md, std::span<const std::uint8_t> input, std::size_t out_len) {
  Bytes out(out_len);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw Error("EVP_MD_CTX_new failed");
  const bool ok = EVP_DigestInit_ex(ctx, md, nullptr) == 1 &&
                  EVP_DigestUpdate(ctx, input.data(), input.size()) == 1 &&
                  EVP_DigestFinalXOF(ctx, out.data(), out.size()) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw Error("SHAKE evaluation failed");
  return out;
}

}  // namespace

namespace xof {

Bytes shake128(std::span<const std::uint8_t> input, std::size_t out_len) {
  return digest_xof(EVP_shake128(), input, out_len);
}

Bytes shake256(std::span<const std::uint8_t> input, std::size_t out_len) {
  return digest_xof(EVP_shake256(), input, out_len);
}

}  // namespace xof

struct RngHandle::CipherCtx {
  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  ~CipherCtx() { EVP_CIPHER_CTX_free(ctx); }
};

RngHandle::RngHandle(std::span<const std::uint8_t> seed) {
  Bytes material(kDomain.begin(), kDomain.end());
  material.insert(material.end(), seed.begin(), seed.end());
  init(material);
}

RngHandle::RngHandle(std::string_view seed)
    : RngHandle(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(seed.data()),
                                              seed.size())) {}

RngHandle RngHandle::from_entropy() {
  std::array<std::uint8_t, 32> seed{};
  if (RAND_bytes(seed.data(), static_cast<int>(seed.size())) != 1) {
    std::random_device rd;
    for (auto& b : seed) b = static_cast<std::uint8_t>(rd());
  }
  return RngHandle(std::span<const std::uint8_t>(seed));
}

RngHandle::RngHandle(RngHandle&&) noexcept = default;
RngHandle& RngHandle::operator=(RngHandle&&) noexcept = default;
RngHandle::~RngHandle() = default;

void RngHandle::init(std::span<const std::uint8_t> material) {
  const Bytes kv = xof::shake256(material, key_iv_.size());
  std::memcpy(key_iv_.data(), kv.data(), key_iv_.size());
  ctx_ = std::make_unique<CipherCtx>();
  if (ctx_->ctx == nullptr ||
      EVP_EncryptInit_ex(ctx_->ctx, EVP_aes_256_ctr(), nullptr, key_iv_.data(), key_iv_.data() + 32) != 1)
    throw Error("AES-256-CTR initialisation failed");
  buffer_.assign(kBufferBytes, 0);
  pos_ = kBufferBytes;
}

void RngHandle::refill() {
  static const std::vector<std::uint8_t> zeros(kBufferBytes, 0);
  int len = 0;
  if (EVP_EncryptUpdate(ctx_->ctx, buffer_.data(), &len, zeros.data(), static_cast<int>(kBufferBytes)) != 1 ||
      len != static_cast<int>(kBufferBytes))
    throw Error("AES-256-CTR keystream generation failed");
  pos_ = 0;
}

void RngHandle::fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (pos_ == buffer_.size()) refill();
    const std::size_t take = std::min(out.size() - done, buffer_.size() - pos_);
    std::memcpy(out.data() + done, buffer_.data() + pos_, take);
    pos_ += take;
    done += take;
  }
}

Bytes RngHandle::bytes(std::size_t count) {
  Bytes out(count);
  fill(out);
  return out;
}

std::uint16_t RngHandle::next_u16() {
  std::array<std::uint8_t, 2> b{};
  fill(b);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

std::uint64_t RngHandle::next_u64() {
  std::array<std::uint8_t, 8> b{};
  fill(b);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

std::uint64_t RngHandle::uniform(std::uint64_t bound) {
  if (bound == 0) throw Error("uniform: bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

RngHandle RngHandle::derive(std::string_view label) const {
  Bytes material(kDomain.begin(), kDomain.end());
  material.push_back('/');
  material.insert(material.end(), key_iv_.begin(), key_iv_.end());
  material.insert(material.end(), label.begin(), label.end());
  RngHandle child;
  child.init(material);
  return child;
}

Bytes hex_decode(std::string_view hex) {
  if (hex.starts_with("0x")) hex.remove_prefix(2);
  if (hex.size() % 2 != 0) throw Error("hex string has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(std::string("invalid hex digit '") + c + "'");
  };
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  return out;
}

std::string hex_encode(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

}  // namespace frodo_ue
