#include <gtest/gtest.h>

#include "frodo_ue/error.hpp"
#include "frodo_ue/sampling.hpp"
#include "frodo_ue/ue.hpp"
#include "golden_values.hpp"
#include "support.hpp"

using namespace frodo_ue;

namespace {

struct World {
  const ParamSet& p;
  RngHandle rng;
  pke::PublicParams pub;
  World(const char* params, const char* seed) : p(load_paramset(params)), rng(seed), pub(pke::setup(rng, p)) {}
};

}  // namespace

TEST(Ord, HandExample) {
  const MatrixZq m(1, 2, 2, {3, 1});
  EXPECT_EQ(ue::ord(m), MatrixZq(1, 4, 2, {1, 1, 1, 0}));
  EXPECT_EQ(ue::ord(MatrixZq(3, 2, 5)), MatrixZq(3, 10, 5));
}

TEST(Ord, ReconstructsInput) {
  RngHandle rng("ord-reconstruct");
  const auto& p = load_paramset("frodo-976");
  for (int t = 0; t < 1000; ++t) {
    const MatrixZq m = sample_uniform(rng, 3, 5, p);
    const MatrixZq y = ue::ord(m);
    MatrixZq acc(3, 5, p.D);
    for (unsigned k = 0; k < p.D; ++k) {
      const MatrixZq block = column_block(y, k * 5, 5);
      for (auto b : block.entries()) ASSERT_LE(b, 1);
      acc = add(acc, scalar_mul(std::uint64_t{1} << k, block));
    }
    ASSERT_EQ(acc, m);
  }
}

TEST(Tensor, HandExamples) {
  EXPECT_EQ(ue::tensor_d(MatrixZq(1, 1, 2, {1})), MatrixZq(2, 1, 2, {1, 2}));
  EXPECT_EQ(ue::tensor_d(MatrixZq(1, 1, 3, {3})), MatrixZq(3, 1, 3, {3, 6, 4}));
}

TEST(Tensor, BlocksAreScaledCopies) {
  RngHandle rng("tensor-blocks");
  const auto& p = load_paramset("frodo-640");
  const MatrixZq m = sample_uniform(rng, 4, 3, p);
  const MatrixZq t = ue::tensor_d(m);
  ASSERT_EQ(t.rows(), 4u * p.D);
  for (unsigned k = 0; k < p.D; ++k) EXPECT_EQ(row_block(t, 4 * k, 4), scalar_mul(std::uint64_t{1} << k, m));
}

TEST(OrdTensor, ProductIdentity) {
  RngHandle rng("ord-tensor");
  for (const char* name : {"toy-tiny-q", "toy-8", "frodo-640", "frodo-976"}) {
    const auto& p = load_paramset(name);
    for (int t = 0; t < 100; ++t) {
      const MatrixZq M = sample_uniform(rng, 4, 6, p), S = sample_uniform(rng, 6, 3, p);
      ASSERT_EQ(mul(ue::ord(M), ue::tensor_d(S)), mul(M, S)) << name;
    }
  }
}

TEST(Ue, KeysCarryEpochAndDiffer) {
  World w("toy-16", "ue-keys");
  const auto k3 = ue::keygen(w.rng, w.p, w.pub, 3);
  const auto k4 = ue::keygen(w.rng, w.p, w.pub, 4);
  EXPECT_EQ(k3.epoch, 3u);
  EXPECT_EQ(k4.epoch, 4u);
  EXPECT_NE(k3.sk_S, k4.sk_S);
  EXPECT_LE(max_norm(sub(k3.pk_B, mul(w.pub.A, k3.sk_S))), w.p.s);
}

TEST(Ue, RoundTripAndEpochCheck) {
  World w("toy-16", "ue-roundtrip");
  const auto k0 = ue::keygen(w.rng, w.p, w.pub, 0);
  const auto k0b = ue::keygen(w.rng, w.p, w.pub, 0);
  const auto k1 = ue::keygen(w.rng, w.p, w.pub, 1);
  int wrong = 0;
  for (int i = 0; i < 1000; ++i) {
    const Bits m = random_message(w.rng, w.p);
    const auto ct = ue::encrypt(w.rng, w.p, w.pub.A, k0, m);
    EXPECT_EQ(ct.epoch, 0u);
    ASSERT_EQ(ue::decrypt(w.p, k0, ct), m);
    if (i < 100 && ue::decrypt(w.p, k0b, ct) != m) ++wrong;
    if (i == 0) {
      EXPECT_THROW(ue::decrypt(w.p, k1, ct), EpochMismatch);
    }
  }
  EXPECT_EQ(wrong, 100);
}

TEST(Ue, TokenStructure) {
  World w("toy-16", "ue-token");
  const auto k0 = ue::keygen(w.rng, w.p, w.pub, 0);
  const auto k1 = ue::keygen(w.rng, w.p, w.pub, 1);
  const auto noise = ue::sample_token_noise(w.rng, w.p);
  const auto tok = ue::token_from_noise(w.p, w.pub.A, k0.sk_S, k1.pk_B, 1, noise);
  const std::size_t nD = std::size_t{w.p.n} * w.p.D;
  EXPECT_EQ(tok.d1_a.rows(), nD);
  EXPECT_EQ(tok.d1_a.cols(), w.p.n);
  EXPECT_EQ(tok.d1_b.rows(), nD);
  EXPECT_EQ(tok.d1_b.cols(), w.p.n_bar);
  EXPECT_EQ(tok.d2_a.rows(), w.p.n);
  EXPECT_EQ(tok.d2_b.cols(), w.p.n_bar);
  EXPECT_LE(max_norm(sub(tok.d1_a, mul(noise.S1p, w.pub.A))), w.p.s);
  EXPECT_EQ(add(tok.d1_b, ue::tensor_d(k0.sk_S)), add(mul(noise.S1p, k1.pk_B), noise.E1pp));
  EXPECT_THROW(ue::token_from_noise(w.p, w.pub.A, k0.sk_S, k1.pk_B, 0, noise), EpochMismatch);
  EXPECT_THROW(ue::token_from_noise(w.p, w.pub.A, MatrixZq(3, 3, 16), k1.pk_B, 1, noise), DimensionMismatch);
}

TEST(Ue, NoiselessTokenIsMinusTensor) {
  World w("toy-noiseless", "ue-noiseless");
  const auto k0 = ue::keygen(w.rng, w.p, w.pub, 0);
  const auto k1 = ue::keygen(w.rng, w.p, w.pub, 1);
  const auto tok = ue::token_gen(w.rng, w.p, w.pub.A, k0.sk_S, k1.pk_B, 1);
  EXPECT_EQ(tok.d1_b, negate(ue::tensor_d(k0.sk_S)));
  const Bits m = random_message(w.rng, w.p);
  const auto ct = ue::update(w.rng, w.p, tok, ue::encrypt(w.rng, w.p, w.pub.A, k0, m));
  EXPECT_EQ(pke::decrypt_raw(w.p, k1.sk_S, {ct.c1, ct.c2}), pke::encode(m, w.p));
}

TEST(Ue, UpdateEpochChecks) {
  World w("toy-16", "ue-epochs");
  const auto k0 = ue::keygen(w.rng, w.p, w.pub, 0);
  const auto k1 = ue::keygen(w.rng, w.p, w.pub, 1);
  const auto tok = ue::token_gen(w.rng, w.p, w.pub.A, k0.sk_S, k1.pk_B, 1);
  const Bits m = random_message(w.rng, w.p);
  const auto ct = ue::encrypt(w.rng, w.p, w.pub.A, k0, m);
  const auto ct1 = ue::update(w.rng, w.p, tok, ct);
  EXPECT_EQ(ct1.epoch, 1u);
  EXPECT_THROW(ue::update(w.rng, w.p, tok, ct1), EpochMismatch);
  EXPECT_EQ(ue::decrypt(w.p, k1, ct1), m);
  // Old key with the new ciphertext, epoch tag forced: recovers noise, not m.
  ue::EpochKey forced = k0;
  forced.epoch = 1;
  EXPECT_NE(ue::decrypt(w.p, forced, ct1), m);
  EXPECT_NE(ue::update(w.rng, w.p, tok, ct), ue::update(w.rng, w.p, tok, ct));
}

TEST(Ue, UpdateErrorWithinBoundPerStep) {
  World w("toy-16", "ue-error");
  std::vector<ue::EpochKey> keys{ue::keygen(w.rng, w.p, w.pub, 0)};
  std::vector<ue::UpdateToken> toks;
  for (ue::Epoch e = 1; e <= w.p.T_max; ++e) {
    keys.push_back(ue::keygen(w.rng, w.p, w.pub, e));
    toks.push_back(ue::token_gen(w.rng, w.p, w.pub.A, keys[e - 1].sk_S, keys[e].pk_B, e));
  }
  const auto bound = per_update_error_bound(w.p);
  for (int i = 0; i < 200; ++i) {
    const Bits m = random_message(w.rng, w.p);
    auto ct = ue::encrypt(w.rng, w.p, w.pub.A, keys[0], m);
    MatrixZq err = sub(pke::decrypt_raw(w.p, keys[0].sk_S, {ct.c1, ct.c2}), pke::encode(m, w.p));
    const MatrixZq first = err;
    for (ue::Epoch e = 1; e <= w.p.T_max; ++e) {
      ct = ue::update(w.rng, w.p, toks[e - 1], ct);
      const MatrixZq next = sub(pke::decrypt_raw(w.p, keys[e].sk_S, {ct.c1, ct.c2}), pke::encode(m, w.p));
      ASSERT_LE(max_norm(sub(next, err)), bound);
      ASSERT_LE(max_norm(sub(next, first)), e * bound);
      err = next;
    }
    ASSERT_EQ(ue::decrypt(w.p, keys[w.p.T_max], ct), m);
  }
}

// Full pipeline against the independent Python model.
TEST(Ue, GoldenToy16Pipeline) {
  const auto& p = load_paramset("toy-16");
  RngHandle rng("golden-e2e");
  const auto pub = pke::setup(rng, p);
  EXPECT_EQ(hex_encode(pub.a_seed), golden::kToy16_a_seed);
  EXPECT_EQ(test_support::sha256_entries({&pub.A}), golden::kToy16_A);
  const auto k0 = ue::keygen(rng, p, pub, 0);
  const auto k1 = ue::keygen(rng, p, pub, 1);
  EXPECT_EQ(test_support::sha256_entries({&k0.sk_S}), golden::kToy16_sk0);
  EXPECT_EQ(test_support::sha256_entries({&k0.pk_B}), golden::kToy16_pk0);
  EXPECT_EQ(test_support::sha256_entries({&k1.pk_B}), golden::kToy16_pk1);
  const Bits m = random_message(rng, p);
  const auto ct = ue::encrypt(rng, p, pub.A, k0, m);
  EXPECT_EQ(test_support::sha256_entries({&ct.c1, &ct.c2}), golden::kToy16_ct);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(ct.c1(0, j), golden::kToy16_c1_first[j]);
  const auto tok = ue::token_gen(rng, p, pub.A, k0.sk_S, k1.pk_B, 1);
  EXPECT_EQ(test_support::sha256_entries({&tok.d1_a, &tok.d1_b, &tok.d2_a, &tok.d2_b}), golden::kToy16_token);
  const auto up = ue::update(rng, p, tok, ct);
  EXPECT_EQ(test_support::sha256_entries({&up.c1, &up.c2}), golden::kToy16_updated);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(up.c2(0, j), golden::kToy16_u2_first[j]);
  EXPECT_EQ(ue::decrypt(p, k1, up), m);
}

TEST(DerivePrev, RecoversSecretAtToy16) {
  World w("toy-16", "derive-prev");
  ASSERT_TRUE(ue::recovery_plane(w.p).has_value());
  for (int i = 0; i < 100; ++i) {
    const auto k0 = ue::keygen(w.rng, w.p, w.pub, 0);
    const auto k1 = ue::keygen(w.rng, w.p, w.pub, 1);
    const auto tok = ue::token_gen(w.rng, w.p, w.pub.A, k0.sk_S, k1.pk_B, 1);
    const auto got = ue::derive_prev_secret(w.p, k1.sk_S, tok);
    ASSERT_EQ(got.S, k0.sk_S);
    EXPECT_EQ(got.plane, *ue::recovery_plane(w.p));
  }
}

TEST(DerivePrev, NoiselessRecovers) {
  World w("toy-noiseless", "derive-noiseless");
  const auto k0 = ue::keygen(w.rng, w.p, w.pub, 0);
  const auto k1 = ue::keygen(w.rng, w.p, w.pub, 1);
  const auto tok = ue::token_gen(w.rng, w.p, w.pub.A, k0.sk_S, k1.pk_B, 1);
  const auto got = ue::derive_prev_secret(w.p, k1.sk_S, tok);
  EXPECT_EQ(got.S, k0.sk_S);
  // Largest admissible plane with zero noise: 2^(k-1) < q/2 gives k = D - 1.
  EXPECT_EQ(got.plane, w.p.D - 1);
}

TEST(DerivePrev, UndersizedModulusHasNoPlane) {
  World w("toy-tiny-q", "derive-tiny");
  EXPECT_FALSE(ue::recovery_plane(w.p).has_value());
  const auto k0 = ue::keygen(w.rng, w.p, w.pub, 0);
  const auto k1 = ue::keygen(w.rng, w.p, w.pub, 1);
  const auto tok = ue::token_gen(w.rng, w.p, w.pub.A, k0.sk_S, k1.pk_B, 1);
  EXPECT_THROW(ue::derive_prev_secret(w.p, k1.sk_S, tok), NoValidPlane);
  EXPECT_FALSE(ue::recovery_plane(load_paramset("frodo-640")).has_value());
}
