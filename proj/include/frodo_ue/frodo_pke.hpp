#pragma once

#include <cstdint>
#include <vector>

#include "frodo_ue/matrix.hpp"
#include "frodo_ue/params.hpp"
#include "frodo_ue/rng.hpp"

namespace frodo_ue {

/// A message as a sequence of bits, one bit (0 or 1) per element.
using Bits = std::vector<std::uint8_t>;

namespace pke {

/// Public matrix A shared by every epoch of a deployment, with the seed that regenerates it.
struct PublicParams {
  Bytes a_seed;
  MatrixZq A;
};

constexpr std::size_t kSeedBytes = 16;

PublicParams setup(RngHandle& rng, const ParamSet& p);
PublicParams setup_from_seed(Bytes a_seed, const ParamSet& p);

struct KeyPair {
  MatrixZq pk_B;  ///< n x n_bar, A*S + E
  MatrixZq sk_S;  ///< n x n_bar
  Bytes a_seed;
};

struct Ciphertext {
  MatrixZq c1;  ///< m_bar x n
  MatrixZq c2;  ///< m_bar x n_bar
  bool operator==(const Ciphertext&) const = default;
};

/// ec(k) = k * 2^(D-B).
std::uint16_t encode_value(std::uint32_t k, const ParamSet& p);
/// dc(c) = round(c * 2^B / q) mod 2^B, halves rounding up.
std::uint32_t decode_value(std::uint16_t c, const ParamSet& p);

/// Groups of B consecutive bits, least significant bit first, fill the m_bar x n_bar matrix row-major.
MatrixZq encode(const Bits& m, const ParamSet& p);
Bits decode(const MatrixZq& M, const ParamSet& p);

struct KeygenTrace {
  KeyPair keys;
  MatrixZq E;  ///< pk noise
};

KeyPair keygen(RngHandle& rng, const ParamSet& p, const PublicParams& pub);
KeygenTrace keygen_traced(RngHandle& rng, const ParamSet& p, const PublicParams& pub);

/// Encryption randomness, exposed for instrumentation.
struct EncryptTrace {
  Ciphertext ct;
  MatrixZq S_prime;   ///< m_bar x n
  MatrixZq E_prime;   ///< m_bar x n
  MatrixZq E_dprime;  ///< m_bar x n_bar
};

Ciphertext encrypt(RngHandle& rng, const ParamSet& p, const MatrixZq& A, const MatrixZq& pk_B,
                   const Bits& m);
EncryptTrace encrypt_traced(RngHandle& rng, const ParamSet& p, const MatrixZq& A,
                            const MatrixZq& pk_B, const Bits& m);

/// C2 - C1*S, before decoding.
MatrixZq decrypt_raw(const ParamSet& p, const MatrixZq& sk_S, const Ciphertext& ct);
Bits decrypt(const ParamSet& p, const MatrixZq& sk_S, const Ciphertext& ct);

}  // namespace pke

/// Uniform random message of p.message_bits() bits.
Bits random_message(RngHandle& rng, const ParamSet& p);

}  // namespace frodo_ue
