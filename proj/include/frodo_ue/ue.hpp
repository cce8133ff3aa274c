#pragma once

#include <cstdint>
#include <optional>

#include "frodo_ue/frodo_pke.hpp"
#include "frodo_ue/matrix.hpp"
#include "frodo_ue/params.hpp"
#include "frodo_ue/rng.hpp"

namespace frodo_ue::ue {

using Epoch = std::uint32_t;

struct EpochKey {
  Epoch epoch = 0;
  MatrixZq sk_S;  ///< n x n_bar
  MatrixZq pk_B;  ///< n x n_bar
  bool operator==(const EpochKey&) const = default;
};

/// Moves ciphertexts from epoch - 1 into `epoch`.
struct UpdateToken {
  Epoch epoch = 1;
  MatrixZq d1_a;  ///< nD x n
  MatrixZq d1_b;  ///< nD x n_bar
  MatrixZq d2_a;  ///< n x n
  MatrixZq d2_b;  ///< n x n_bar
  bool operator==(const UpdateToken&) const = default;
};

struct Ciphertext {
  Epoch epoch = 0;
  MatrixZq c1;  ///< m_bar x n
  MatrixZq c2;  ///< m_bar x n_bar
  bool operator==(const Ciphertext&) const = default;
};

/// Bit-plane decomposition. Row i of the result is [y_i1 | ... | y_iD] where block k
/// (width cols) holds bit k-1 of every entry in row i, so x_ij = sum_k 2^(k-1) y_ijk.
/// The 0/1 entries are kept as elements of Z_q.
MatrixZq ord(const MatrixZq& m);

/// Vertical stack of 2^(k-1) * m mod q for k = 1..D, k = 1 on top.
/// ord(C) * tensor_d(S) == C * S.
MatrixZq tensor_d(const MatrixZq& m);

EpochKey keygen(RngHandle& rng, const ParamSet& p, const pke::PublicParams& pub, Epoch epoch);

struct KeygenTrace {
  EpochKey key;
  MatrixZq E;  ///< pk noise: pk_B = A * sk_S + E
};
KeygenTrace keygen_traced(RngHandle& rng, const ParamSet& p, const pke::PublicParams& pub, Epoch epoch);

Ciphertext encrypt(RngHandle& rng, const ParamSet& p, const MatrixZq& A, const EpochKey& key,
                   const Bits& m);

struct EncryptTrace {
  Ciphertext ct;
  pke::EncryptTrace randomness;
};
EncryptTrace encrypt_traced(RngHandle& rng, const ParamSet& p, const MatrixZq& A, const EpochKey& key,
                            const Bits& m);

/// Throws EpochMismatch unless ct.epoch == key.epoch.
Bits decrypt(const ParamSet& p, const EpochKey& key, const Ciphertext& ct);

/// The chi samples a token is built from.
struct TokenNoise {
  MatrixZq S1p;   ///< nD x n
  MatrixZq E1p;   ///< nD x n
  MatrixZq E1pp;  ///< nD x n_bar
  MatrixZq S2p;   ///< n x n
  MatrixZq E2p;   ///< n x n
  MatrixZq E2pp;  ///< n x n_bar
};

TokenNoise sample_token_noise(RngHandle& rng, const ParamSet& p);

/// d1 = (S1' A + E1', S1' pk_next + E1'' - tensor_d(sk_prev)), d2 = (S2' A + E2', S2' pk_next + E2'').
UpdateToken token_from_noise(const ParamSet& p, const MatrixZq& A, const MatrixZq& sk_prev,
                             const MatrixZq& pk_next, Epoch epoch_next, const TokenNoise& noise);

/// Needs only the outgoing secret key and the incoming public key.
UpdateToken token_gen(RngHandle& rng, const ParamSet& p, const MatrixZq& A, const MatrixZq& sk_prev,
                      const MatrixZq& pk_next, Epoch epoch_next);

/// Update with caller-supplied re-randomiser R (m_bar x n):
/// (C1', C2') = (Ord(C1) d1_a + R d2_a, C2 + Ord(C1) d1_b + R d2_b).
Ciphertext update_with(const ParamSet& p, const UpdateToken& tok, const Ciphertext& ct, const MatrixZq& R);

/// Samples R from chi and applies update_with. Throws EpochMismatch unless tok.epoch == ct.epoch + 1.
Ciphertext update(RngHandle& rng, const ParamSet& p, const UpdateToken& tok, const Ciphertext& ct);

/// Largest k with 2^(k-1)(s+1) < q/2 and 2^(k-2) > 2ns^2 + s, if any.
std::optional<unsigned> recovery_plane(const ParamSet& p);

struct PrevSecret {
  MatrixZq S;
  unsigned plane = 0;
};

/// Recovers sk_e from (sk_{e+1}, token_{e+1}): d1_b - d1_a sk_{e+1} = -tensor_d(sk_e) + N with
/// ||N|| <= 2ns^2 + s, and block `plane` of it rounds back to sk_e.
/// Throws NoValidPlane when recovery_plane(p) is empty.
PrevSecret derive_prev_secret(const ParamSet& p, const MatrixZq& sk_next, const UpdateToken& tok);

}  // namespace frodo_ue::ue
