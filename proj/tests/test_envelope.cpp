#include <gtest/gtest.h>

#include "frodo_ue/envelope.hpp"
#include "frodo_ue/error.hpp"
#include "frodo_ue/hybrids.hpp"

using namespace frodo_ue;
using namespace frodo_ue::envelope;

namespace {

Bytes seed16() {
  Bytes s(16);
  for (std::size_t i = 0; i < 16; ++i) s[i] = static_cast<std::uint8_t>(i * 7);
  return s;
}

std::uint32_t le32(const Bytes& b, std::size_t at) {
  return b[at] | b[at + 1] << 8 | b[at + 2] << 16 | static_cast<std::uint32_t>(b[at + 3]) << 24;
}

}  // namespace

TEST(Envelope, HeaderLayout) {
  const auto& p = load_paramset("toy-16");
  RngHandle rng("env-header");
  const auto ct = hybrids::sim_encrypt(rng, p, 0x01020304);
  const Bytes out = write_ciphertext(p, ct);
  ASSERT_GE(out.size(), kHeaderSize);
  EXPECT_EQ(std::string(out.begin(), out.begin() + 4), "FRUE");
  EXPECT_EQ(out[4], kVersion);
  EXPECT_EQ(out[5], static_cast<std::uint8_t>(Kind::Ciphertext));
  EXPECT_EQ(out[6] | out[7] << 8, p.id);
  EXPECT_EQ(le32(out, 8), 0x01020304u);
  EXPECT_EQ(out.size(), kHeaderSize + matrix_record_size(p.m_bar, p.n) + matrix_record_size(p.m_bar, p.n_bar));
  // First payload record is C1.
  EXPECT_EQ(le32(out, kHeaderSize), p.m_bar);
  EXPECT_EQ(le32(out, kHeaderSize + 4), p.n);
  const Header h = read_header(out);
  EXPECT_EQ(h.kind, Kind::Ciphertext);
  EXPECT_EQ(h.paramset_id, p.id);
  EXPECT_EQ(h.epoch, 0x01020304u);
}

TEST(Envelope, RoundTripEveryKindEverySet) {
  for (const auto& p : registered_paramsets()) {
    RngHandle rng("env-roundtrip/" + p.name);
    const Bytes seed = seed16();

    const Bytes ps = write_paramset(p);
    EXPECT_EQ(read_paramset(ps), p) << p.name;

    ue::EpochKey key{7, hybrids::sim_keygen(rng, p), hybrids::sim_keygen(rng, p)};
    const Bytes kb = write_epoch_key(p, key, seed);
    const KeyFile kf = read_epoch_key(kb);
    EXPECT_EQ(kf.params, p);
    EXPECT_EQ(kf.key, key);
    EXPECT_EQ(kf.a_seed, seed);
    EXPECT_EQ(write_epoch_key(kf.params, kf.key, kf.a_seed), kb);

    const Bytes pb = write_public_key(p, 7, key.pk_B, seed);
    const PublicKeyFile pf = read_public_key(pb);
    EXPECT_EQ(pf.epoch, 7u);
    EXPECT_EQ(pf.pk_B, key.pk_B);
    EXPECT_EQ(pf.a_seed, seed);

    if (p.n <= 976) {  // the 1344 token alone is about 50 MB
      const auto tok = hybrids::sim_token(rng, p, 8);
      const Bytes tb = write_token(p, tok);
      EXPECT_EQ(read_token(tb).token, tok);
      EXPECT_EQ(write_token(p, read_token(tb).token), tb);
    }

    const auto ct = hybrids::sim_encrypt(rng, p, 9);
    const Bytes cb = write_ciphertext(p, ct);
    EXPECT_EQ(read_ciphertext(cb).ct, ct);
    EXPECT_EQ(write_ciphertext(p, read_ciphertext(cb).ct), cb);
  }
}

TEST(Envelope, MalformedInputs) {
  const auto& p = load_paramset("toy-16");
  RngHandle rng("env-malformed");
  const Bytes good = write_ciphertext(p, hybrids::sim_encrypt(rng, p, 1));
  auto broken = [&](auto mutate) {
    Bytes b = good;
    mutate(b);
    return b;
  };
  EXPECT_THROW(read_ciphertext(broken([](Bytes& b) { b[0] = 'X'; })), MalformedEnvelope);
  EXPECT_THROW(read_ciphertext(broken([](Bytes& b) { b[4] = 2; })), MalformedEnvelope);
  EXPECT_THROW(read_ciphertext(broken([](Bytes& b) { b[5] = 9; })), MalformedEnvelope);
  EXPECT_THROW(read_ciphertext(broken([](Bytes& b) { b[5] = static_cast<std::uint8_t>(Kind::Token); })),
               MalformedEnvelope);
  EXPECT_THROW(read_ciphertext(broken([](Bytes& b) { b.pop_back(); })), MalformedEnvelope);
  EXPECT_THROW(read_ciphertext(broken([](Bytes& b) { b.push_back(0); })), MalformedEnvelope);
  EXPECT_THROW(read_ciphertext(broken([](Bytes& b) { b.resize(5); })), MalformedEnvelope);
  EXPECT_THROW(read_ciphertext(Bytes{}), MalformedEnvelope);
  // Wrong D inside the first record.
  EXPECT_THROW(read_ciphertext(broken([](Bytes& b) { b[kHeaderSize + 8] = 15; })), MalformedEnvelope);
  // Unknown parameter set.
  EXPECT_THROW(read_ciphertext(broken([](Bytes& b) { b[6] = 0xee, b[7] = 0xee; })), UnknownParamSet);
  // Paramset record that disagrees with the registry.
  Bytes ps = write_paramset(p);
  ps.back() ^= 1;
  EXPECT_THROW(read_paramset(ps), MalformedEnvelope);
}

TEST(Envelope, WriterChecks) {
  const auto& p = load_paramset("toy-16");
  RngHandle rng("env-writer");
  ue::EpochKey key{0, hybrids::sim_keygen(rng, p), hybrids::sim_keygen(rng, p)};
  EXPECT_THROW(write_epoch_key(p, key, Bytes(15)), Error);
  key.sk_S = MatrixZq(2, 2, p.D);
  EXPECT_THROW(write_epoch_key(p, key, seed16()), DimensionMismatch);
}

TEST(Envelope, MessagePacking) {
  const auto& p = load_paramset("toy-16");
  EXPECT_EQ(message_capacity(p), p.message_bits() / 8 - 8);
  const Bytes msg{'h', 'i', 0, 0xff};
  const Bits bits = message_to_bits(msg, p);
  ASSERT_EQ(bits.size(), p.message_bits());
  EXPECT_EQ(bits[0], 0);  // length 4 = 0b100, LSB first
  EXPECT_EQ(bits[2], 1);
  EXPECT_EQ(bits_to_message(bits, p), msg);
  EXPECT_EQ(bits_to_message(message_to_bits(Bytes{}, p), p), Bytes{});
  const Bytes full(message_capacity(p), 0x5a);
  EXPECT_EQ(bits_to_message(message_to_bits(full, p), p), full);
  EXPECT_THROW(message_to_bits(Bytes(message_capacity(p) + 1), p), LengthMismatch);
  Bits bad = bits;
  bad[60] = 1;  // length prefix far beyond capacity
  EXPECT_THROW(bits_to_message(bad, p), MalformedEnvelope);
}
