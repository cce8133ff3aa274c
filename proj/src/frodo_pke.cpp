#include "frodo_ue/frodo_pke.hpp"

#include <string>

#include "frodo_ue/error.hpp"
#include "frodo_ue/sampling.hpp"

namespace frodo_ue {

namespace pke {

namespace {

void require_dims(const MatrixZq& m, std::size_t rows, std::size_t cols, const ParamSet& p,
                  const char* what) {
  if (m.rows() != rows || m.cols() != cols || m.D() != p.D)
    throw DimensionMismatch(std::string(what) + " must be " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " over Z_2^" + std::to_string(p.D) + ", got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

}  // namespace

PublicParams setup(RngHandle& rng, const ParamSet& p) { return setup_from_seed(rng.bytes(kSeedBytes), p); }

PublicParams setup_from_seed(Bytes a_seed, const ParamSet& p) {
  p.validate();
  MatrixZq A = gen_public_matrix(a_seed, p);
  return {std::move(a_seed), std::move(A)};
}

std::uint16_t encode_value(std::uint32_t k, const ParamSet& p) {
  return static_cast<std::uint16_t>((k << (p.D - p.B)) & p.mask());
}

std::uint32_t decode_value(std::uint16_t c, const ParamSet& p) {
  const std::uint32_t shift = p.D - p.B;
  const std::uint32_t half = shift == 0 ? 0 : std::uint32_t{1} << (shift - 1);
  return ((std::uint32_t{c} + half) >> shift) & ((std::uint32_t{1} << p.B) - 1);
}

MatrixZq encode(const Bits& m, const ParamSet& p) {
  if (m.size() != p.message_bits())
    throw LengthMismatch("message must be " + std::to_string(p.message_bits()) + " bits, got " +
                         std::to_string(m.size()));
  MatrixZq M(p.m_bar, p.n_bar, p.D);
  auto out = M.mutable_entries();
  for (std::size_t g = 0; g < out.size(); ++g) {
    std::uint32_t k = 0;
    for (std::uint32_t b = 0; b < p.B; ++b) k |= std::uint32_t{m[g * p.B + b] & 1u} << b;
    out[g] = encode_value(k, p);
  }
  return M;
}

Bits decode(const MatrixZq& M, const ParamSet& p) {
  require_dims(M, p.m_bar, p.n_bar, p, "decode input");
  Bits m(p.message_bits());
  const auto in = M.entries();
  for (std::size_t g = 0; g < in.size(); ++g) {
    const std::uint32_t k = decode_value(in[g], p);
    for (std::uint32_t b = 0; b < p.B; ++b) m[g * p.B + b] = static_cast<std::uint8_t>((k >> b) & 1);
  }
  return m;
}

KeygenTrace keygen_traced(RngHandle& rng, const ParamSet& p, const PublicParams& pub) {
  require_dims(pub.A, p.n, p.n, p, "A");
  MatrixZq S = sample_chi(rng, p.n, p.n_bar, p);
  MatrixZq E = sample_chi(rng, p.n, p.n_bar, p);
  MatrixZq B = add(mul(pub.A, S), E);
  return {{std::move(B), std::move(S), pub.a_seed}, std::move(E)};
}

KeyPair keygen(RngHandle& rng, const ParamSet& p, const PublicParams& pub) {
  return keygen_traced(rng, p, pub).keys;
}

EncryptTrace encrypt_traced(RngHandle& rng, const ParamSet& p, const MatrixZq& A,
                            const MatrixZq& pk_B, const Bits& m) {
  require_dims(A, p.n, p.n, p, "A");
  require_dims(pk_B, p.n, p.n_bar, p, "public key");
  MatrixZq encoded = encode(m, p);
  MatrixZq Sp = sample_chi(rng, p.m_bar, p.n, p);
  MatrixZq Ep = sample_chi(rng, p.m_bar, p.n, p);
  MatrixZq Epp = sample_chi(rng, p.m_bar, p.n_bar, p);
  MatrixZq c1 = add(mul(Sp, A), Ep);
  MatrixZq c2 = add(add(mul(Sp, pk_B), Epp), encoded);
  return {{std::move(c1), std::move(c2)}, std::move(Sp), std::move(Ep), std::move(Epp)};
}

Ciphertext encrypt(RngHandle& rng, const ParamSet& p, const MatrixZq& A, const MatrixZq& pk_B,
                   const Bits& m) {
  return encrypt_traced(rng, p, A, pk_B, m).ct;
}

MatrixZq decrypt_raw(const ParamSet& p, const MatrixZq& sk_S, const Ciphertext& ct) {
  require_dims(sk_S, p.n, p.n_bar, p, "secret key");
  require_dims(ct.c1, p.m_bar, p.n, p, "C1");
  require_dims(ct.c2, p.m_bar, p.n_bar, p, "C2");
  return sub(ct.c2, mul(ct.c1, sk_S));
}

Bits decrypt(const ParamSet& p, const MatrixZq& sk_S, const Ciphertext& ct) {
  return decode(decrypt_raw(p, sk_S, ct), p);
}

}  // namespace pke

Bits random_message(RngHandle& rng, const ParamSet& p) {
  Bits m(p.message_bits());
  for (auto& b : m) b = rng.bit();
  return m;
}

}  // namespace frodo_ue
