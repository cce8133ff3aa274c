#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "frodo_ue/frodo_pke.hpp"
#include "frodo_ue/params.hpp"
#include "frodo_ue/ue.hpp"

/// On-disk format. Every file starts with
///   "FRUE" | version u8 | kind u8 | paramset id u16 LE | epoch u32 LE
/// followed by matrix records (rows u32, cols u32, D u8, entries u16, all LE) in a fixed order:
///   epoch key:  S, B, a_seed (16 bytes)
///   public key: B, a_seed
///   token:      d1_a, d1_b, d2_a, d2_b
///   ciphertext: C1, C2
/// The payload length must match the shapes implied by the parameter set exactly.
namespace frodo_ue::envelope {

enum class Kind : std::uint8_t { ParamSet = 0, EpochKey = 1, PublicKey = 2, Token = 3, Ciphertext = 4 };

inline constexpr std::array<std::uint8_t, 4> kMagic{'F', 'R', 'U', 'E'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kHeaderSize = 12;

struct Header {
  Kind kind = Kind::ParamSet;
  std::uint16_t paramset_id = 0;
  std::uint32_t epoch = 0;
};

/// Checks magic, version and kind. Throws MalformedEnvelope.
Header read_header(std::span<const std::uint8_t> in);

Bytes write_paramset(const ParamSet& p);
/// The embedded record must equal the registered set with the header's id.
ParamSet read_paramset(std::span<const std::uint8_t> in);

struct KeyFile {
  ParamSet params;
  ue::EpochKey key;
  Bytes a_seed;
};
Bytes write_epoch_key(const ParamSet& p, const ue::EpochKey& key, std::span<const std::uint8_t> a_seed);
KeyFile read_epoch_key(std::span<const std::uint8_t> in);

struct PublicKeyFile {
  ParamSet params;
  ue::Epoch epoch = 0;
  MatrixZq pk_B;
  Bytes a_seed;
};
Bytes write_public_key(const ParamSet& p, ue::Epoch epoch, const MatrixZq& pk_B, std::span<const std::uint8_t> a_seed);
PublicKeyFile read_public_key(std::span<const std::uint8_t> in);

struct TokenFile {
  ParamSet params;
  ue::UpdateToken token;
};
Bytes write_token(const ParamSet& p, const ue::UpdateToken& tok);
TokenFile read_token(std::span<const std::uint8_t> in);

struct CiphertextFile {
  ParamSet params;
  ue::Ciphertext ct;
};
Bytes write_ciphertext(const ParamSet& p, const ue::Ciphertext& ct);
CiphertextFile read_ciphertext(std::span<const std::uint8_t> in);

/// Bytes available for a message: message_bits / 8 minus the 8-byte length prefix.
std::size_t message_capacity(const ParamSet& p);

/// Length prefix (u64 LE), message bytes, zero padding; bits taken LSB first. Throws
/// LengthMismatch when the message does not fit.
Bits message_to_bits(std::span<const std::uint8_t> message, const ParamSet& p);

/// Inverse of message_to_bits. Throws MalformedEnvelope on an impossible length prefix.
Bytes bits_to_message(const Bits& bits, const ParamSet& p);

}  // namespace frodo_ue::envelope
