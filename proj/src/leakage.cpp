#include "frodo_ue/leakage.hpp"

#include <string>
#include <vector>

#include "frodo_ue/error.hpp"

namespace frodo_ue::game {

std::string_view to_string(CcMode mode) { return mode == CcMode::Uni ? "uni" : "bi"; }

CcMode cc_mode_from_string(std::string_view text) {
  if (text == "uni") return CcMode::Uni;
  if (text == "bi") return CcMode::Bi;
  throw Error("unknown challenge-equal mode '" + std::string(text) + "' (expected uni or bi)");
}

EpochSet kstar_op_uni(const LeakageSets& ls) {
  EpochSet out;
  bool corr_next = false;
  for (std::int64_t e = ls.l; e >= 0; --e) {
    const auto ue = static_cast<std::uint32_t>(e);
    const bool corr = ls.K.contains(ue) || (corr_next && ls.T.contains(ue + 1));
    if (corr) out.insert(ue);
    corr_next = corr;
  }
  return out;
}

EpochSet tstar_op_uni(const LeakageSets& ls, const EpochSet& kstar) {
  EpochSet out;
  for (std::uint32_t e = 0; e <= ls.l; ++e) {
    if (ls.T.contains(e) || (e > 0 && kstar.contains(e) && kstar.contains(e - 1))) out.insert(e);
  }
  return out;
}

EpochSet cstar(const LeakageSets& ls, const EpochSet& tstar, CcMode cc) {
  std::vector<bool> in(std::size_t{ls.l} + 1, false);
  for (auto e : ls.C)
    if (e <= ls.l) in[e] = true;
  // Both rules follow the same token edges (e-1, e) for e in T*, so a forward sweep and then a
  // backward sweep cover each connected interval.
  for (std::uint32_t e = 1; e <= ls.l; ++e)
    if (in[e - 1] && tstar.contains(e)) in[e] = true;
  if (cc == CcMode::Bi) {
    for (std::int64_t e = std::int64_t{ls.l} - 1; e >= 0; --e) {
      const auto ue = static_cast<std::uint32_t>(e);
      if (in[ue + 1] && tstar.contains(ue + 1)) in[ue] = true;
    }
  }
  EpochSet out;
  for (std::uint32_t e = 0; e <= ls.l; ++e)
    if (in[e]) out.insert(e);
  return out;
}

StarredSets starred(const LeakageSets& ls, CcMode cc) {
  StarredSets s;
  s.K = kstar_op_uni(ls);
  s.T = tstar_op_uni(ls, s.K);
  s.C = cstar(ls, s.T, cc);
  return s;
}

bool keys_meet_challenges(const StarredSets& s) {
  for (auto e : s.K)
    if (s.C.contains(e)) return true;
  return false;
}

}  // namespace frodo_ue::game
