#pragma once

#include <cstdint>
#include <cstdlib>
#include <unordered_map>

#include "frodo_ue/frodo_pke.hpp"
#include "frodo_ue/ue.hpp"

namespace frodo_ue::hybrids {

/// Token randomness plus the noise E of the incoming public key.
struct TokenRandomness {
  ue::TokenNoise noise;
  MatrixZq E_pk;  ///< n x n_bar
};

/// Hybrid update with explicit R:
///   S+  = Ord(C1) S1' + R S2'
///   E+  = Ord(C1) E1' + R E2'
///   E++ = Ord(C1) E1'' + R E2'' + E_ct
///   out = (S+ A + E+, S+ pk_next + E++ + encode(m)), epoch + 1.
/// E_ct is the C2 noise of `ct` (for a fresh encryption, its E'').
ue::Ciphertext hybrid_update_with(const ParamSet& p, const MatrixZq& A, const ue::Ciphertext& ct,
                                  const MatrixZq& pk_next, const Bits& m, const MatrixZq& E_ct,
                                  const TokenRandomness& tr, const MatrixZq& R);

/// Samples R from chi and applies hybrid_update_with.
ue::Ciphertext hybrid_update(RngHandle& rng, const ParamSet& p, const MatrixZq& A, const ue::Ciphertext& ct,
                             const MatrixZq& pk_next, const Bits& m, const MatrixZq& E_ct,
                             const TokenRandomness& tr);

/// Difference real - hybrid in C2 under shared randomness, for a fresh ciphertext with
/// encryption randomness (S', E') under pk_e = A S_e + E_e:  S' E_e - E' S_e.
MatrixZq garbage_term(const pke::EncryptTrace& enc, const MatrixZq& E_prev, const MatrixZq& S_prev);

/// Exact noise a single update adds to C2 - C1 S:
///   (Ord(C1) S1' + R S2') E_pk - (Ord(C1) E1' + R E2') S_next + Ord(C1) E1'' + R E2''.
MatrixZq predicted_update_error(const ParamSet& p, const MatrixZq& c1, const TokenRandomness& tr,
                                const MatrixZq& R, const MatrixZq& S_next);

MatrixZq sim_keygen(RngHandle& rng, const ParamSet& p);
/// Uniform token; both second components are n x n_bar.
ue::UpdateToken sim_token(RngHandle& rng, const ParamSet& p, ue::Epoch epoch);
ue::Ciphertext sim_update(RngHandle& rng, const ParamSet& p, ue::Epoch epoch);
ue::Ciphertext sim_encrypt(RngHandle& rng, const ParamSet& p, ue::Epoch epoch);

/// Empirical total-variation distance sum_r |count_a(r) - count_b(r)| / (2N), kept as a fraction.
struct DistanceEstimate {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// Draws `num_samples` from each sampler, projects each sample onto a small alphabet and
/// compares the histograms. Samplers are nullary callables that own their randomness.
template <class SamplerA, class SamplerB, class Projection>
DistanceEstimate statistical_distance_estimate(SamplerA&& sampler_a, SamplerB&& sampler_b,
                                               std::size_t num_samples, Projection&& projection) {
  std::unordered_map<std::uint64_t, std::int64_t> diff;
  for (std::size_t i = 0; i < num_samples; ++i) {
    ++diff[static_cast<std::uint64_t>(projection(sampler_a()))];
    --diff[static_cast<std::uint64_t>(projection(sampler_b()))];
  }
  DistanceEstimate est;
  for (const auto& [bucket, d] : diff) est.numerator += static_cast<std::uint64_t>(std::llabs(d));
  est.denominator = 2 * static_cast<std::uint64_t>(num_samples);
  return est;
}

struct SmudgingReport {
  double estimate = 0;  ///< e2 vs e2 + e1
  double baseline = 0;  ///< e2 vs e2
  double analytic = 0;  ///< |e1| / (2 B2 + 1)
};

/// e2 uniform on [-B2, B2], e1 fixed with |e1| <= B1.
SmudgingReport smudging_demo(RngHandle& rng, std::int64_t e1, std::int64_t B2, std::size_t samples);

struct UpdateIndistinguishability {
  std::size_t trials = 0;
  std::size_t real_decrypts = 0;   ///< real update decrypted to m
  std::size_t hybrid_decrypts = 0; ///< hybrid update decrypted to m
  DistanceEstimate real_vs_hybrid_c2;
  DistanceEstimate baseline_c2;
  DistanceEstimate real_vs_hybrid_c1;
  DistanceEstimate baseline_c1;
};

/// Fixes keys for epochs e, e+1, a message and a fresh ciphertext, then compares projected
/// marginals (top four bits of C1[0][0] and C2[0][0]) of real updates, hybrid updates and a
/// second independent run of real updates. `decrypt_trials` paired runs check decryption.
UpdateIndistinguishability compare_update_distributions(RngHandle& rng, const ParamSet& p,
                                                        std::size_t samples, std::size_t decrypt_trials);

}  // namespace frodo_ue::hybrids
