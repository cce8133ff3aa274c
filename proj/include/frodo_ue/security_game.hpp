#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "frodo_ue/frodo_pke.hpp"
#include "frodo_ue/leakage.hpp"
#include "frodo_ue/ue.hpp"

namespace frodo_ue::game {

enum class CorrInput { Key, Token };

/// Entry of L: (qid, ct, epoch; m).
struct Record {
  std::uint64_t qid = 0;
  ue::Ciphertext ct;
  ue::Epoch epoch = 0;
  Bits m;
};

using Corrupted = std::variant<ue::EpochKey, ue::UpdateToken>;

struct TraceEntry {
  std::string op;
  std::string detail;
  bool rejected = false;
};

/// State of one rand-ind-eu-cpa experiment and its oracles. Rejections (bottom) are empty
/// optionals. Single-threaded; use one state per experiment.
class GameState {
 public:
  /// Setup: epoch-0 key, no token at epoch 0, all sets empty. Owns `rng`.
  GameState(RngHandle rng, const ParamSet& p, pke::PublicParams pub, std::uint8_t b, CcMode cc = CcMode::Uni);

  ue::Ciphertext enc(const Bits& m);
  /// Sets twf when (m', e) is a challenge-equal pair.
  std::optional<Bits> dec(const ue::Ciphertext& ct);
  void next();
  /// Bottom unless ct is recorded in L at epoch e-1.
  std::optional<ue::Ciphertext> upd(const ue::Ciphertext& ct_prev);
  /// Bottom when e_hat > e. A token query at epoch 0 is recorded and returns bottom.
  std::optional<Corrupted> corr(CorrInput inp, ue::Epoch e_hat);
  /// Bottom in phase 1, or unless ct_bar is recorded in L at epoch e-1. The state is untouched
  /// on rejection. m_bar must be a full-length message.
  std::optional<ue::Ciphertext> chall(const Bits& m_bar, const ue::Ciphertext& ct_bar);
  /// Current challenge ciphertext; bottom outside phase 1.
  std::optional<ue::Ciphertext> upd_challenge();

  const ParamSet& params() const { return p_; }
  const pke::PublicParams& public_params() const { return pub_; }
  ue::Epoch epoch() const { return e_; }
  std::uint64_t qid() const { return qid_; }
  bool twf() const { return twf_; }
  bool phase() const { return phase_; }
  std::uint8_t bit() const { return b_; }
  CcMode cc() const { return cc_; }
  std::optional<ue::Epoch> challenge_epoch() const { return challenge_epoch_; }
  bool has_token(ue::Epoch e) const { return tokens_.contains(e); }
  const LeakageSets& leakage() const { return leakage_; }
  const std::vector<Record>& records() const { return L_; }
  const std::vector<std::pair<ue::Ciphertext, ue::Epoch>>& challenge_records() const { return L_tilde_; }
  const std::set<std::pair<Bits, ue::Epoch>>& challenge_equal_messages() const { return Q_tilde_star_; }
  const std::vector<TraceEntry>& trace() const { return trace_; }

  StarredSets starred_sets() const { return starred(leakage_, cc_); }
  /// twf, or K* meets C*.
  bool trivial_win() const;

 private:
  const Record* find_record(const ue::Ciphertext& ct, ue::Epoch epoch) const;
  void log(std::string op, std::string detail, bool rejected);

  RngHandle rng_;
  ParamSet p_;
  pke::PublicParams pub_;
  std::uint8_t b_;
  CcMode cc_;
  ue::Epoch e_ = 0;
  std::map<ue::Epoch, ue::EpochKey> keys_;
  std::map<ue::Epoch, ue::UpdateToken> tokens_;
  std::uint64_t qid_ = 0;
  bool twf_ = false;
  bool phase_ = false;
  std::vector<Record> L_;
  std::vector<std::pair<ue::Ciphertext, ue::Epoch>> L_tilde_;
  std::set<std::pair<Bits, ue::Epoch>> Q_tilde_star_;
  LeakageSets leakage_;
  std::optional<ue::Epoch> challenge_epoch_;
  std::optional<ue::Ciphertext> challenge_ct_;
  Bits m_bar_;
  Bits m_bar1_;
  std::vector<TraceEntry> trace_;
};

using Adversary = std::function<std::uint8_t(GameState&)>;

struct ExperimentResult {
  std::uint8_t bit = 0;            ///< returned b'
  std::uint8_t adversary_bit = 0;  ///< what the adversary answered
  bool twf = false;
  StarredSets starred;
  std::vector<TraceEntry> trace;
};

/// Setup (fresh public matrix), run the adversary with challenge bit b, then replace b' by a
/// fresh coin when twf is set or K* meets C*. Advances `rng`.
ExperimentResult run_experiment(const Adversary& adversary, std::uint8_t b, RngHandle& rng, const ParamSet& p,
                                CcMode cc = CcMode::Uni);

/// Same, reusing a public matrix across runs.
ExperimentResult run_experiment(const Adversary& adversary, std::uint8_t b, RngHandle& rng, const ParamSet& p,
                                const pke::PublicParams& pub, CcMode cc = CcMode::Uni);

}  // namespace frodo_ue::game
