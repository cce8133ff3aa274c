#include "frodo_ue/envelope.hpp"

#include <algorithm>
#include <string>

#include "frodo_ue/error.hpp"

namespace frodo_ue::envelope {
namespace {

void put_u16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint16_t get_u16(std::span<const std::uint8_t> in, std::size_t& off) {
  if (in.size() < off + 2) throw MalformedEnvelope("truncated field");
  const auto v = static_cast<std::uint16_t>(in[off] | (in[off + 1] << 8));
  off += 2;
  return v;
}

std::uint32_t get_u32(std::span<const std::uint8_t> in, std::size_t& off) {
  if (in.size() < off + 4) throw MalformedEnvelope("truncated field");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{in[off + i]} << (8 * i);
  off += 4;
  return v;
}

Bytes header(Kind kind, const ParamSet& p, std::uint32_t epoch) {
  Bytes out(kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  out.push_back(static_cast<std::uint8_t>(kind));
  put_u16(out, p.id);
  put_u32(out, epoch);
  return out;
}

/// Parses the header, checks the kind and resolves the parameter set.
std::pair<Header, ParamSet> open(std::span<const std::uint8_t> in, Kind expected) {
  const Header h = read_header(in);
  if (h.kind != expected)
    throw MalformedEnvelope("envelope holds kind " + std::to_string(static_cast<int>(h.kind)) + ", expected " +
                            std::to_string(static_cast<int>(expected)));
  return {h, load_paramset(h.paramset_id)};
}

void check_length(std::span<const std::uint8_t> in, std::size_t expected) {
  if (in.size() != expected)
    throw MalformedEnvelope("envelope is " + std::to_string(in.size()) + " bytes, expected " +
                            std::to_string(expected));
}

MatrixZq read_shaped(std::span<const std::uint8_t> in, std::size_t& off, std::size_t rows, std::size_t cols,
                     unsigned D) {
  MatrixZq m = read_matrix(in, off);
  if (m.rows() != rows || m.cols() != cols || m.D() != D)
    throw MalformedEnvelope("matrix record has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            " over 2^" + std::to_string(m.D()) + ", expected " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " over 2^" + std::to_string(D));
  return m;
}

void check_shape(const MatrixZq& m, std::size_t rows, std::size_t cols, const ParamSet& p, const char* what) {
  if (m.rows() != rows || m.cols() != cols || m.D() != p.D)
    throw DimensionMismatch(std::string(what) + " does not match parameter set " + p.name);
}

void check_seed(std::span<const std::uint8_t> a_seed) {
  if (a_seed.size() != pke::kSeedBytes)
    throw LengthMismatch("public-matrix seed must be " + std::to_string(pke::kSeedBytes) + " bytes");
}

Bytes read_seed(std::span<const std::uint8_t> in, std::size_t& off) {
  if (in.size() < off + pke::kSeedBytes) throw MalformedEnvelope("truncated public-matrix seed");
  Bytes seed(in.begin() + static_cast<std::ptrdiff_t>(off),
             in.begin() + static_cast<std::ptrdiff_t>(off + pke::kSeedBytes));
  off += pke::kSeedBytes;
  return seed;
}

Bytes paramset_record(const ParamSet& p) {
  Bytes out;
  out.push_back(static_cast<std::uint8_t>(p.name.size()));
  out.insert(out.end(), p.name.begin(), p.name.end());
  for (std::uint32_t v : {p.D, p.B, p.n, p.m_bar, p.n_bar, p.s, p.chi_sample_bits, p.T_max}) put_u32(out, v);
  out.push_back(static_cast<std::uint8_t>(p.gen_mode));
  put_u16(out, static_cast<std::uint16_t>(p.chi_cdf.size()));
  for (auto c : p.chi_cdf) put_u16(out, c);
  return out;
}

}  // namespace

Header read_header(std::span<const std::uint8_t> in) {
  if (in.size() < kHeaderSize) throw MalformedEnvelope("file shorter than the envelope header");
  if (!std::equal(kMagic.begin(), kMagic.end(), in.begin())) throw MalformedEnvelope("bad magic");
  if (in[4] != kVersion) throw MalformedEnvelope("unsupported envelope version " + std::to_string(in[4]));
  if (in[5] > static_cast<std::uint8_t>(Kind::Ciphertext))
    throw MalformedEnvelope("unknown envelope kind " + std::to_string(in[5]));
  std::size_t off = 6;
  Header h;
  h.kind = static_cast<Kind>(in[5]);
  h.paramset_id = get_u16(in, off);
  h.epoch = get_u32(in, off);
  return h;
}

Bytes write_paramset(const ParamSet& p) {
  Bytes out = header(Kind::ParamSet, p, 0);
  const Bytes rec = paramset_record(p);
  out.insert(out.end(), rec.begin(), rec.end());
  return out;
}

ParamSet read_paramset(std::span<const std::uint8_t> in) {
  const ParamSet p = open(in, Kind::ParamSet).second;
  const Bytes rec = paramset_record(p);
  check_length(in, kHeaderSize + rec.size());
  if (!std::equal(rec.begin(), rec.end(), in.begin() + kHeaderSize))
    throw MalformedEnvelope("parameter record differs from registered set " + p.name);
  return p;
}

Bytes write_epoch_key(const ParamSet& p, const ue::EpochKey& key, std::span<const std::uint8_t> a_seed) {
  check_shape(key.sk_S, p.n, p.n_bar, p, "secret key");
  check_shape(key.pk_B, p.n, p.n_bar, p, "public key");
  check_seed(a_seed);
  Bytes out = header(Kind::EpochKey, p, key.epoch);
  write_matrix(out, key.sk_S);
  write_matrix(out, key.pk_B);
  out.insert(out.end(), a_seed.begin(), a_seed.end());
  return out;
}

KeyFile read_epoch_key(std::span<const std::uint8_t> in) {
  auto [h, p] = open(in, Kind::EpochKey);
  check_length(in, kHeaderSize + 2 * matrix_record_size(p.n, p.n_bar) + pke::kSeedBytes);
  std::size_t off = kHeaderSize;
  KeyFile f{p, {}, {}};
  f.key.epoch = h.epoch;
  f.key.sk_S = read_shaped(in, off, p.n, p.n_bar, p.D);
  f.key.pk_B = read_shaped(in, off, p.n, p.n_bar, p.D);
  f.a_seed = read_seed(in, off);
  return f;
}

Bytes write_public_key(const ParamSet& p, ue::Epoch epoch, const MatrixZq& pk_B, std::span<const std::uint8_t> a_seed) {
  check_shape(pk_B, p.n, p.n_bar, p, "public key");
  check_seed(a_seed);
  Bytes out = header(Kind::PublicKey, p, epoch);
  write_matrix(out, pk_B);
  out.insert(out.end(), a_seed.begin(), a_seed.end());
  return out;
}

PublicKeyFile read_public_key(std::span<const std::uint8_t> in) {
  auto [h, p] = open(in, Kind::PublicKey);
  check_length(in, kHeaderSize + matrix_record_size(p.n, p.n_bar) + pke::kSeedBytes);
  std::size_t off = kHeaderSize;
  PublicKeyFile f{p, h.epoch, {}, {}};
  f.pk_B = read_shaped(in, off, p.n, p.n_bar, p.D);
  f.a_seed = read_seed(in, off);
  return f;
}

Bytes write_token(const ParamSet& p, const ue::UpdateToken& tok) {
  const std::size_t nD = std::size_t{p.n} * p.D;
  check_shape(tok.d1_a, nD, p.n, p, "token d1_a");
  check_shape(tok.d1_b, nD, p.n_bar, p, "token d1_b");
  check_shape(tok.d2_a, p.n, p.n, p, "token d2_a");
  check_shape(tok.d2_b, p.n, p.n_bar, p, "token d2_b");
  Bytes out = header(Kind::Token, p, tok.epoch);
  for (const MatrixZq* m : {&tok.d1_a, &tok.d1_b, &tok.d2_a, &tok.d2_b}) write_matrix(out, *m);
  return out;
}

TokenFile read_token(std::span<const std::uint8_t> in) {
  auto [h, p] = open(in, Kind::Token);
  const std::size_t nD = std::size_t{p.n} * p.D;
  check_length(in, kHeaderSize + matrix_record_size(nD, p.n) + matrix_record_size(nD, p.n_bar) +
                       matrix_record_size(p.n, p.n) + matrix_record_size(p.n, p.n_bar));
  std::size_t off = kHeaderSize;
  TokenFile f{p, {}};
  f.token.epoch = h.epoch;
  f.token.d1_a = read_shaped(in, off, nD, p.n, p.D);
  f.token.d1_b = read_shaped(in, off, nD, p.n_bar, p.D);
  f.token.d2_a = read_shaped(in, off, p.n, p.n, p.D);
  f.token.d2_b = read_shaped(in, off, p.n, p.n_bar, p.D);
  return f;
}

Bytes write_ciphertext(const ParamSet& p, const ue::Ciphertext& ct) {
  check_shape(ct.c1, p.m_bar, p.n, p, "ciphertext C1");
  check_shape(ct.c2, p.m_bar, p.n_bar, p, "ciphertext C2");
  Bytes out = header(Kind::Ciphertext, p, ct.epoch);
  write_matrix(out, ct.c1);
  write_matrix(out, ct.c2);
  return out;
}

CiphertextFile read_ciphertext(std::span<const std::uint8_t> in) {
  auto [h, p] = open(in, Kind::Ciphertext);
  check_length(in, kHeaderSize + matrix_record_size(p.m_bar, p.n) + matrix_record_size(p.m_bar, p.n_bar));
  std::size_t off = kHeaderSize;
  CiphertextFile f{p, {}};
  f.ct.epoch = h.epoch;
  f.ct.c1 = read_shaped(in, off, p.m_bar, p.n, p.D);
  f.ct.c2 = read_shaped(in, off, p.m_bar, p.n_bar, p.D);
  return f;
}

std::size_t message_capacity(const ParamSet& p) {
  const std::size_t bytes = p.message_bits() / 8;
  return bytes > 8 ? bytes - 8 : 0;
}

Bits message_to_bits(std::span<const std::uint8_t> message, const ParamSet& p) {
  if (message.size() > message_capacity(p))
    throw LengthMismatch("message is " + std::to_string(message.size()) + " bytes, at most " +
                         std::to_string(message_capacity(p)) + " fit in one " + p.name + " ciphertext");
  Bytes block(p.message_bits() / 8, 0);
  const std::uint64_t len = message.size();
  for (int i = 0; i < 8; ++i) block[i] = static_cast<std::uint8_t>(len >> (8 * i));
  std::copy(message.begin(), message.end(), block.begin() + 8);
  Bits bits(p.message_bits(), 0);
  for (std::size_t i = 0; i < block.size() * 8; ++i) bits[i] = (block[i / 8] >> (i % 8)) & 1;
  return bits;
}

Bytes bits_to_message(const Bits& bits, const ParamSet& p) {
  if (bits.size() != p.message_bits())
    throw LengthMismatch("plaintext has " + std::to_string(bits.size()) + " bits, expected " +
                         std::to_string(p.message_bits()));
  Bytes block(bits.size() / 8, 0);
  for (std::size_t i = 0; i < block.size() * 8; ++i)
    block[i / 8] |= static_cast<std::uint8_t>((bits[i] & 1) << (i % 8));
  if (block.size() < 8) throw MalformedEnvelope("plaintext block too small for a length prefix");
  std::uint64_t len = 0;
  for (int i = 0; i < 8; ++i) len |= std::uint64_t{block[i]} << (8 * i);
  if (len > message_capacity(p)) throw MalformedEnvelope("plaintext length prefix exceeds the block");
  return Bytes(block.begin() + 8, block.begin() + 8 + static_cast<std::ptrdiff_t>(len));
}

}  // namespace frodo_ue::envelope
