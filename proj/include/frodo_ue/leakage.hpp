#pragma once

#include <cstdint>
#include <set>
#include <string_view>

namespace frodo_ue::game {

using EpochSet = std::set<std::uint32_t>;

/// Corrupted keys K, corrupted tokens T and challenge-equal epochs C, all within [0, l].
struct LeakageSets {
  EpochSet K;
  EpochSet T;
  EpochSet C;
  std::uint32_t l = 0;
};

/// Direction in which challenge-equal ciphertexts propagate through known tokens.
enum class CcMode { Uni, Bi };

std::string_view to_string(CcMode mode);
CcMode cc_mode_from_string(std::string_view text);

/// e is in K* iff e in K, or e+1 in K* and e+1 in T. Right-to-left sweep over [0, l].
EpochSet kstar_op_uni(const LeakageSets& ls);

/// e in T, or both e and e-1 in K*.
EpochSet tstar_op_uni(const LeakageSets& ls, const EpochSet& kstar);

/// Smallest superset of C within [0, l] closed under
///   e-1 in C* and e in T*  =>  e in C*
/// and, for Bi, also
///   e+1 in C* and e+1 in T*  =>  e in C*.
EpochSet cstar(const LeakageSets& ls, const EpochSet& tstar, CcMode cc);

struct StarredSets {
  EpochSet K;
  EpochSet T;
  EpochSet C;
};

StarredSets starred(const LeakageSets& ls, CcMode cc);

/// K* and C* intersect.
bool keys_meet_challenges(const StarredSets& s);

}  // namespace frodo_ue::game
