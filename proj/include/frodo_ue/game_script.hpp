#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "frodo_ue/error.hpp"
#include "frodo_ue/leakage.hpp"

namespace frodo_ue::game {

class ScriptError : public Error {
 public:
  using Error::Error;
};

/// Outcome of a scripted experiment.
struct ScriptReport {
  std::vector<std::string> lines;  ///< one per oracle call
  LeakageSets leakage;
  StarredSets starred;
  bool twf = false;
  std::uint8_t b = 0;
  std::optional<std::uint8_t> adversary_bit;
  std::uint8_t returned_bit = 0;
};

/// Runs a JSON-lines trace, one {"op": ..., "args": {...}} object per line. The first record
/// must be setup {params, seed?, b, cc?}. Other ops: enc {msg}, next, upd {ct}, corr {inp, epoch},
/// chall {msg, ct}, updc, dec {ct}, guess {bit}. Messages are hex; ciphertexts returned by the
/// oracles are named c1, c2, ... in order and referenced by name. Blank lines and lines starting
/// with '#' are skipped.
ScriptReport run_game_script(std::istream& in);

std::string format_report(const ScriptReport& report);

}  // namespace frodo_ue::game
