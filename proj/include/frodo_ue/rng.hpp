#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frodo_ue {

using Bytes = std::vector<std::uint8_t>;

/// Deterministic pseudorandom stream. The seed is absorbed with SHAKE256 into an
/// AES-256 key and a 128-bit initial counter; the stream is the AES-256-CTR keystream.
/// Same seed, same stream. Single owner: move-only, not for concurrent use.
class RngHandle {
 public:
  explicit RngHandle(std::span<const std::uint8_t> seed);
  explicit RngHandle(std::string_view seed);
  /// Seeded from the operating system's entropy source.
  static RngHandle from_entropy();

  RngHandle(RngHandle&&) noexcept;
  RngHandle& operator=(RngHandle&&) noexcept;
  RngHandle(const RngHandle&) = delete;
  RngHandle& operator=(const RngHandle&) = delete;
  ~RngHandle();

  void fill(std::span<std::uint8_t> out);
  Bytes bytes(std::size_t count);
  std::uint16_t next_u16();
  std::uint64_t next_u64();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t uniform(std::uint64_t bound);
  std::uint8_t bit() { return static_cast<std::uint8_t>(next_u16() & 1); }

  /// Independent child stream: key material of this handle plus `label`, rehashed.
  /// Does not advance this handle.
  RngHandle derive(std::string_view label) const;

 private:
  RngHandle() = default;
  void init(std::span<const std::uint8_t> material);
  void refill();

  struct CipherCtx;
  std::unique_ptr<CipherCtx> ctx_;
  std::array<std::uint8_t, 48> key_iv_{};
  std::vector<std::uint8_t> buffer_;
  std::size_t pos_ = 0;
};

namespace xof {

/// SHAKE128(input), `out_len` bytes.
Bytes shake128(std::span<const std::uint8_t> input, std::size_t out_len);
/// SHAKE256(input), `out_len` bytes.
Bytes shake256(std::span<const std::uint8_t> input, std::size_t out_len);

}  // namespace xof

Bytes hex_decode(std::string_view hex);
std::string hex_encode(std::span<const std::uint8_t> bytes);

}  // namespace frodo_ue
