#include "frodo_ue/security_game.hpp"

#include "frodo_ue/error.hpp"

namespace frodo_ue::game {

GameState::GameState(RngHandle rng, const ParamSet& p, pke::PublicParams pub, std::uint8_t b, CcMode cc)
    : rng_(std::move(rng)), p_(p), pub_(std::move(pub)), b_(static_cast<std::uint8_t>(b & 1)), cc_(cc) {
  keys_.emplace(0, ue::keygen(rng_, p_, pub_, 0));
  log("setup", "b=" + std::to_string(b_), false);
}

void GameState::log(std::string op, std::string detail, bool rejected) {
  trace_.push_back({std::move(op), std::move(detail), rejected});
}

const Record* GameState::find_record(const ue::Ciphertext& ct, ue::Epoch epoch) const {
  for (const auto& r : L_)
    if (r.epoch == epoch && r.ct == ct) return &r;
  return nullptr;
}

ue::Ciphertext GameState::enc(const Bits& m) {
  ++qid_;
  ue::Ciphertext ct = ue::encrypt(rng_, p_, pub_.A, keys_.at(e_), m);
  L_.push_back({qid_, ct, e_, m});
  log("enc", "qid=" + std::to_string(qid_) + " e=" + std::to_string(e_), false);
  return ct;
}

std::optional<Bits> GameState::dec(const ue::Ciphertext& ct) {
  std::optional<Bits> m;
  try {
    m = ue::decrypt(p_, keys_.at(e_), ct);
  } catch (const Error&) {
    log("dec", "rejected", true);
    return std::nullopt;
  }
  if (Q_tilde_star_.contains({*m, e_})) twf_ = true;
  log("dec", twf_ ? "twf=1" : "ok", false);
  return m;
}

void GameState::next() {
  ++e_;
  ue::EpochKey key = ue::keygen(rng_, p_, pub_, e_);
  tokens_.emplace(e_, ue::token_gen(rng_, p_, pub_.A, keys_.at(e_ - 1).sk_S, key.pk_B, e_));
  keys_.emplace(e_, std::move(key));
  leakage_.l = e_;
  if (phase_) {
    challenge_ct_ = ue::update(rng_, p_, tokens_.at(e_), *challenge_ct_);
    leakage_.C.insert(e_);
    L_tilde_.emplace_back(*challenge_ct_, e_);
    Q_tilde_star_.insert({m_bar_, e_});
    Q_tilde_star_.insert({m_bar1_, e_});
  }
  log("next", "e=" + std::to_string(e_), false);
}

std::optional<ue::Ciphertext> GameState::upd(const ue::Ciphertext& ct_prev) {
  const Record* rec = e_ > 0 ? find_record(ct_prev, e_ - 1) : nullptr;
  if (rec == nullptr) {
    log("upd", "not in L at e-1", true);
    return std::nullopt;
  }
  Record fresh{rec->qid, ue::update(rng_, p_, tokens_.at(e_), ct_prev), e_, rec->m};
  ue::Ciphertext out = fresh.ct;
  log("upd", "qid=" + std::to_string(fresh.qid) + " e=" + std::to_string(e_), false);
  L_.push_back(std::move(fresh));
  return out;
}

std::optional<Corrupted> GameState::corr(CorrInput inp, ue::Epoch e_hat) {
  const std::string what = inp == CorrInput::Key ? "key " : "token ";
  if (e_hat > e_) {
    log("corr", what + std::to_string(e_hat) + " in the future", true);
    return std::nullopt;
  }
  if (inp == CorrInput::Key) {
    leakage_.K.insert(e_hat);
    log("corr", what + std::to_string(e_hat), false);
    return Corrupted{keys_.at(e_hat)};
  }
  leakage_.T.insert(e_hat);
  auto it = tokens_.find(e_hat);
  log("corr", what + std::to_string(e_hat), it == tokens_.end());
  if (it == tokens_.end()) return std::nullopt;
  return Corrupted{it->second};
}

std::optional<ue::Ciphertext> GameState::chall(const Bits& m_bar, const ue::Ciphertext& ct_bar) {
  if (phase_) {
    log("chall", "already in challenge phase", true);
    return std::nullopt;
  }
  if (m_bar.size() != p_.message_bits())
    throw LengthMismatch("challenge message has " + std::to_string(m_bar.size()) + " bits, expected " +
                         std::to_string(p_.message_bits()));
  const Record* rec = e_ > 0 ? find_record(ct_bar, e_ - 1) : nullptr;
  if (rec == nullptr) {
    log("chall", "ciphertext not in L at e-1", true);
    return std::nullopt;
  }
  phase_ = true;
  challenge_epoch_ = e_;
  m_bar_ = m_bar;
  m_bar1_ = rec->m;
  if (b_ == 0)
    challenge_ct_ = ue::encrypt(rng_, p_, pub_.A, keys_.at(e_), m_bar);
  else
    challenge_ct_ = ue::update(rng_, p_, tokens_.at(e_), ct_bar);
  leakage_.C.insert(e_);
  L_tilde_.emplace_back(*challenge_ct_, e_);
  Q_tilde_star_.insert({m_bar_, e_});
  Q_tilde_star_.insert({m_bar1_, e_});
  log("chall", "e=" + std::to_string(e_), false);
  return challenge_ct_;
}

std::optional<ue::Ciphertext> GameState::upd_challenge() {
  if (!phase_) {
    log("updc", "not in challenge phase", true);
    return std::nullopt;
  }
  log("updc", "e=" + std::to_string(e_), false);
  return challenge_ct_;
}

bool GameState::trivial_win() const { return twf_ || keys_meet_challenges(starred_sets()); }

ExperimentResult run_experiment(const Adversary& adversary, std::uint8_t b, RngHandle& rng, const ParamSet& p,
                                const pke::PublicParams& pub, CcMode cc) {
  GameState state(RngHandle(rng.bytes(32)), p, pub, b, cc);
  ExperimentResult res;
  res.adversary_bit = static_cast<std::uint8_t>(adversary(state) & 1);
  res.starred = state.starred_sets();
  res.twf = state.twf() || keys_meet_challenges(res.starred);
  res.bit = res.twf ? rng.bit() : res.adversary_bit;
  res.trace = state.trace();
  return res;
}

ExperimentResult run_experiment(const Adversary& adversary, std::uint8_t b, RngHandle& rng, const ParamSet& p,
                                CcMode cc) {
  const auto pub = pke::setup(rng, p);
  return run_experiment(adversary, b, rng, p, pub, cc);
}

}  // namespace frodo_ue::game
