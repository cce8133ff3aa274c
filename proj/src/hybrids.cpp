#include "frodo_ue/hybrids.hpp"

#include <algorithm>

#include "frodo_ue/error.hpp"
#include "frodo_ue/sampling.hpp"

namespace frodo_ue::hybrids {

ue::Ciphertext hybrid_update_with(const ParamSet& p, const MatrixZq& A, const ue::Ciphertext& ct,
                                  const MatrixZq& pk_next, const Bits& m, const MatrixZq& E_ct,
                                  const TokenRandomness& tr, const MatrixZq& R) {
  if (ct.c1.rows() != p.m_bar || ct.c1.cols() != p.n || R.rows() != p.m_bar || R.cols() != p.n ||
      E_ct.rows() != p.m_bar || E_ct.cols() != p.n_bar)
    throw DimensionMismatch("hybrid update: ciphertext, R or E_ct has the wrong shape");
  const MatrixZq bits = ue::ord(ct.c1);
  const auto& t = tr.noise;
  const MatrixZq S_dag = add(mul(bits, t.S1p), mul(R, t.S2p));
  const MatrixZq E_dag = add(mul(bits, t.E1p), mul(R, t.E2p));
  const MatrixZq E_ddag = add(add(mul(bits, t.E1pp), mul(R, t.E2pp)), E_ct);
  ue::Ciphertext out;
  out.epoch = ct.epoch + 1;
  out.c1 = add(mul(S_dag, A), E_dag);
  out.c2 = add(add(mul(S_dag, pk_next), E_ddag), pke::encode(m, p));
  return out;
}

ue::Ciphertext hybrid_update(RngHandle& rng, const ParamSet& p, const MatrixZq& A, const ue::Ciphertext& ct,
                             const MatrixZq& pk_next, const Bits& m, const MatrixZq& E_ct,
                             const TokenRandomness& tr) {
  const MatrixZq R = sample_chi(rng, p.m_bar, p.n, p);
  return hybrid_update_with(p, A, ct, pk_next, m, E_ct, tr, R);
}

MatrixZq garbage_term(const pke::EncryptTrace& enc, const MatrixZq& E_prev, const MatrixZq& S_prev) {
  return sub(mul(enc.S_prime, E_prev), mul(enc.E_prime, S_prev));
}

MatrixZq predicted_update_error(const ParamSet& p, const MatrixZq& c1, const TokenRandomness& tr,
                                const MatrixZq& R, const MatrixZq& S_next) {
  (void)p;
  const MatrixZq bits = ue::ord(c1);
  const auto& t = tr.noise;
  const MatrixZq S_dag = add(mul(bits, t.S1p), mul(R, t.S2p));
  const MatrixZq E_dag = add(mul(bits, t.E1p), mul(R, t.E2p));
  return add(sub(mul(S_dag, tr.E_pk), mul(E_dag, S_next)), add(mul(bits, t.E1pp), mul(R, t.E2pp)));
}

MatrixZq sim_keygen(RngHandle& rng, const ParamSet& p) { return sample_uniform(rng, p.n, p.n_bar, p); }

ue::UpdateToken sim_token(RngHandle& rng, const ParamSet& p, ue::Epoch epoch) {
  const std::size_t nD = std::size_t{p.n} * p.D;
  ue::UpdateToken tok;
  tok.epoch = epoch;
  tok.d1_a = sample_uniform(rng, nD, p.n, p);
  tok.d1_b = sample_uniform(rng, nD, p.n_bar, p);
  tok.d2_a = sample_uniform(rng, p.n, p.n, p);
  tok.d2_b = sample_uniform(rng, p.n, p.n_bar, p);
  return tok;
}

namespace {

ue::Ciphertext uniform_ciphertext(RngHandle& rng, const ParamSet& p, ue::Epoch epoch) {
  ue::Ciphertext ct;
  ct.epoch = epoch;
  ct.c1 = sample_uniform(rng, p.m_bar, p.n, p);
  ct.c2 = sample_uniform(rng, p.m_bar, p.n_bar, p);
  return ct;
}

}  // namespace

ue::Ciphertext sim_update(RngHandle& rng, const ParamSet& p, ue::Epoch epoch) {
  return uniform_ciphertext(rng, p, epoch);
}

ue::Ciphertext sim_encrypt(RngHandle& rng, const ParamSet& p, ue::Epoch epoch) {
  return uniform_ciphertext(rng, p, epoch);
}

SmudgingReport smudging_demo(RngHandle& rng, std::int64_t e1, std::int64_t B2, std::size_t samples) {
  if (B2 <= 0) throw Error("smudging bound B2 must be positive");
  const auto width = static_cast<std::uint64_t>(2 * B2 + 1);
  RngHandle ra = rng.derive("smudging/a");
  RngHandle rb = rng.derive("smudging/b");
  RngHandle rc = rng.derive("smudging/c");
  auto e2 = [width, B2](RngHandle& r) { return static_cast<std::int64_t>(r.uniform(width)) - B2; };
  auto shift = [B2](std::int64_t v) { return static_cast<std::uint64_t>(v + 2 * B2 + 1); };
  SmudgingReport rep;
  rep.estimate = statistical_distance_estimate([&] { return e2(ra); }, [&] { return e2(rb) + e1; }, samples, shift)
                     .value();
  rep.baseline = statistical_distance_estimate([&] { return e2(ra); }, [&] { return e2(rc); }, samples, shift)
                     .value();
  rep.analytic = static_cast<double>(std::llabs(e1)) / static_cast<double>(width);
  return rep;
}

UpdateIndistinguishability compare_update_distributions(RngHandle& rng, const ParamSet& p,
                                                        std::size_t samples, std::size_t decrypt_trials) {
  RngHandle setup_rng = rng.derive("hybrids/setup");
  const auto pub = pke::setup(setup_rng, p);
  const auto prev = ue::keygen_traced(setup_rng, p, pub, 0);
  const auto next = ue::keygen_traced(setup_rng, p, pub, 1);
  const Bits m = random_message(setup_rng, p);
  const auto enc = ue::encrypt_traced(setup_rng, p, pub.A, prev.key, m);
  const MatrixZq& E_ct = enc.randomness.E_dprime;

  auto real_sampler = [&](RngHandle& r) {
    const ue::TokenNoise noise = ue::sample_token_noise(r, p);
    const auto tok = ue::token_from_noise(p, pub.A, prev.key.sk_S, next.key.pk_B, 1, noise);
    return ue::update(r, p, tok, enc.ct);
  };
  auto hybrid_sampler = [&](RngHandle& r) {
    const TokenRandomness tr{ue::sample_token_noise(r, p), next.E};
    return hybrid_update(r, p, pub.A, enc.ct, next.key.pk_B, m, E_ct, tr);
  };

  UpdateIndistinguishability out;
  out.trials = decrypt_trials;
  RngHandle pair_rng = rng.derive("hybrids/pairs");
  for (std::size_t i = 0; i < decrypt_trials; ++i) {
    if (ue::decrypt(p, next.key, real_sampler(pair_rng)) == m) ++out.real_decrypts;
    if (ue::decrypt(p, next.key, hybrid_sampler(pair_rng)) == m) ++out.hybrid_decrypts;
  }

  const unsigned top = p.D >= 4 ? p.D - 4 : 0;

  // Only the projections are kept; each histogram replays the stored values.
  RngHandle real_a = rng.derive("hybrids/real-a");
  RngHandle real_b = rng.derive("hybrids/real-b");
  RngHandle hyb = rng.derive("hybrids/hybrid");
  struct Proj {
    std::uint16_t c1, c2;
  };
  auto project = [top](const ue::Ciphertext& ct) {
    return Proj{static_cast<std::uint16_t>(ct.c1(0, 0) >> top), static_cast<std::uint16_t>(ct.c2(0, 0) >> top)};
  };
  std::vector<Proj> ra, rb, hb;
  ra.reserve(samples);
  rb.reserve(samples);
  hb.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    ra.push_back(project(real_sampler(real_a)));
    rb.push_back(project(real_sampler(real_b)));
    hb.push_back(project(hybrid_sampler(hyb)));
  }
  auto replay = [](const std::vector<Proj>& v) {
    return [&v, i = std::size_t{0}]() mutable -> Proj { return v[i++]; };
  };
  auto c1_of = [](Proj x) { return x.c1; };
  auto c2_of = [](Proj x) { return x.c2; };
  out.real_vs_hybrid_c2 = statistical_distance_estimate(replay(ra), replay(hb), samples, c2_of);
  out.baseline_c2 = statistical_distance_estimate(replay(ra), replay(rb), samples, c2_of);
  out.real_vs_hybrid_c1 = statistical_distance_estimate(replay(ra), replay(hb), samples, c1_of);
  out.baseline_c1 = statistical_distance_estimate(replay(ra), replay(rb), samples, c1_of);
  return out;
}

}  // namespace frodo_ue::hybrids
