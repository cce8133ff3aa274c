#include "frodo_ue/ue.hpp"

#include <string>

#include "frodo_ue/error.hpp"
#include "frodo_ue/sampling.hpp"

namespace frodo_ue::ue {

namespace {

void require_dims(const MatrixZq& m, std::size_t rows, std::size_t cols, const ParamSet& p,
                  const char* what) {
  if (m.rows() != rows || m.cols() != cols || m.D() != p.D)
    throw DimensionMismatch(std::string(what) + " must be " + std::to_string(rows) + "x" +
                            std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
}

void require_token_dims(const ParamSet& p, const UpdateToken& tok) {
  const std::size_t nD = std::size_t{p.n} * p.D;
  require_dims(tok.d1_a, nD, p.n, p, "token d1_a");
  require_dims(tok.d1_b, nD, p.n_bar, p, "token d1_b");
  require_dims(tok.d2_a, p.n, p.n, p, "token d2_a");
  require_dims(tok.d2_b, p.n, p.n_bar, p, "token d2_b");
}

}  // namespace

MatrixZq ord(const MatrixZq& m) {
  const std::size_t cols = m.cols();
  const unsigned D = m.D();
  MatrixZq y(m.rows(), cols * D, D);
  auto out = y.mutable_entries();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint16_t* dst = out.data() + i * cols * D;
    const auto src = m.row(i);
    for (unsigned k = 0; k < D; ++k)
      for (std::size_t j = 0; j < cols; ++j) dst[k * cols + j] = (src[j] >> k) & 1u;
  }
  return y;
}

MatrixZq tensor_d(const MatrixZq& m) {
  const unsigned D = m.D();
  MatrixZq y(m.rows() * D, m.cols(), D);
  auto out = y.mutable_entries();
  const auto src = m.entries();
  const auto mask = m.mask();
  for (unsigned k = 0; k < D; ++k) {
    std::uint16_t* dst = out.data() + k * src.size();
    for (std::size_t t = 0; t < src.size(); ++t)
      dst[t] = static_cast<std::uint16_t>(src[t] << k) & mask;
  }
  return y;
}

KeygenTrace keygen_traced(RngHandle& rng, const ParamSet& p, const pke::PublicParams& pub, Epoch epoch) {
  auto t = pke::keygen_traced(rng, p, pub);
  return {{epoch, std::move(t.keys.sk_S), std::move(t.keys.pk_B)}, std::move(t.E)};
}

EpochKey keygen(RngHandle& rng, const ParamSet& p, const pke::PublicParams& pub, Epoch epoch) {
  return keygen_traced(rng, p, pub, epoch).key;
}

EncryptTrace encrypt_traced(RngHandle& rng, const ParamSet& p, const MatrixZq& A, const EpochKey& key,
                            const Bits& m) {
  auto t = pke::encrypt_traced(rng, p, A, key.pk_B, m);
  Ciphertext ct{key.epoch, t.ct.c1, t.ct.c2};
  return {std::move(ct), std::move(t)};
}

Ciphertext encrypt(RngHandle& rng, const ParamSet& p, const MatrixZq& A, const EpochKey& key,
                   const Bits& m) {
  auto ct = pke::encrypt(rng, p, A, key.pk_B, m);
  return {key.epoch, std::move(ct.c1), std::move(ct.c2)};
}

Bits decrypt(const ParamSet& p, const EpochKey& key, const Ciphertext& ct) {
  if (ct.epoch != key.epoch)
    throw EpochMismatch("ciphertext is from epoch " + std::to_string(ct.epoch) + ", key is for epoch " +
                        std::to_string(key.epoch));
  return pke::decrypt(p, key.sk_S, {ct.c1, ct.c2});
}

TokenNoise sample_token_noise(RngHandle& rng, const ParamSet& p) {
  const std::size_t nD = std::size_t{p.n} * p.D;
  TokenNoise t;
  t.S1p = sample_chi(rng, nD, p.n, p);
  t.E1p = sample_chi(rng, nD, p.n, p);
  t.E1pp = sample_chi(rng, nD, p.n_bar, p);
  t.S2p = sample_chi(rng, p.n, p.n, p);
  t.E2p = sample_chi(rng, p.n, p.n, p);
  t.E2pp = sample_chi(rng, p.n, p.n_bar, p);
  return t;
}

UpdateToken token_from_noise(const ParamSet& p, const MatrixZq& A, const MatrixZq& sk_prev,
                             const MatrixZq& pk_next, Epoch epoch_next, const TokenNoise& noise) {
  if (epoch_next == 0) throw EpochMismatch("tokens target epochs >= 1");
  require_dims(A, p.n, p.n, p, "A");
  require_dims(sk_prev, p.n, p.n_bar, p, "previous secret key");
  require_dims(pk_next, p.n, p.n_bar, p, "next public key");
  UpdateToken tok;
  tok.epoch = epoch_next;
  tok.d1_a = add(mul(noise.S1p, A), noise.E1p);
  tok.d1_b = sub(add(mul(noise.S1p, pk_next), noise.E1pp), tensor_d(sk_prev));
  tok.d2_a = add(mul(noise.S2p, A), noise.E2p);
  tok.d2_b = add(mul(noise.S2p, pk_next), noise.E2pp);
  return tok;
}

UpdateToken token_gen(RngHandle& rng, const ParamSet& p, const MatrixZq& A, const MatrixZq& sk_prev,
                      const MatrixZq& pk_next, Epoch epoch_next) {
  const TokenNoise noise = sample_token_noise(rng, p);
  return token_from_noise(p, A, sk_prev, pk_next, epoch_next, noise);
}

Ciphertext update_with(const ParamSet& p, const UpdateToken& tok, const Ciphertext& ct, const MatrixZq& R) {
  if (tok.epoch != ct.epoch + 1)
    throw EpochMismatch("token for epoch " + std::to_string(tok.epoch) + " cannot update a ciphertext from epoch " +
                        std::to_string(ct.epoch));
  require_token_dims(p, tok);
  require_dims(ct.c1, p.m_bar, p.n, p, "C1");
  require_dims(ct.c2, p.m_bar, p.n_bar, p, "C2");
  require_dims(R, p.m_bar, p.n, p, "R");
  const MatrixZq bits = ord(ct.c1);
  Ciphertext out;
  out.epoch = tok.epoch;
  out.c1 = add(mul(bits, tok.d1_a), mul(R, tok.d2_a));
  out.c2 = add(add(ct.c2, mul(bits, tok.d1_b)), mul(R, tok.d2_b));
  return out;
}

Ciphertext update(RngHandle& rng, const ParamSet& p, const UpdateToken& tok, const Ciphertext& ct) {
  if (tok.epoch != ct.epoch + 1)
    throw EpochMismatch("token for epoch " + std::to_string(tok.epoch) + " cannot update a ciphertext from epoch " +
                        std::to_string(ct.epoch));
  const MatrixZq R = sample_chi(rng, p.m_bar, p.n, p);
  return update_with(p, tok, ct, R);
}

std::optional<unsigned> recovery_plane(const ParamSet& p) {
  const std::uint64_t noise = fresh_error_bound(p);
  const std::uint64_t half_q = std::uint64_t{1} << (p.D - 1);
  for (unsigned k = p.D; k >= 1; --k) {
    const std::uint64_t scale = std::uint64_t{1} << (k - 1);
    // 2^(k-2) > noise, written as 2^(k-1) > 2 * noise to cover k = 1.
    if (scale * (p.s + 1) < half_q && scale > 2 * noise) return k;
  }
  return std::nullopt;
}

PrevSecret derive_prev_secret(const ParamSet& p, const MatrixZq& sk_next, const UpdateToken& tok) {
  require_token_dims(p, tok);
  require_dims(sk_next, p.n, p.n_bar, p, "next secret key");
  const auto plane = recovery_plane(p);
  if (!plane)
    throw NoValidPlane("no bit plane separates the key from the token noise for '" + p.name + "'");
  const MatrixZq W = sub(tok.d1_b, mul(tok.d1_a, sk_next));
  const unsigned k = *plane;
  const std::int64_t scale = std::int64_t{1} << (k - 1);
  MatrixZq S(p.n, p.n_bar, p.D);
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = 0; j < p.n_bar; ++j) {
      const std::int64_t w = -signed_rep(W((k - 1) * p.n + i, j), p.D);
      // round(w / scale): floor((w + scale/2) / scale) with floor division
      const std::int64_t num = w + scale / 2;
      std::int64_t v = num / scale;
      if (num % scale != 0 && num < 0) --v;
      S.set(i, j, static_cast<std::uint64_t>(v));
    }
  }
  return {std::move(S), k};
}

}  // namespace frodo_ue::ue
