#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frodo_ue {

/// Expander used to derive the public matrix A from its seed.
enum class GenMode : std::uint8_t { AesLike = 0, ShakeLike = 1, Toy = 2 };

std::string_view to_string(GenMode mode);
GenMode gen_mode_from_string(std::string_view text);

/// All constants of one instantiation. q = 2^D, the error distribution has support
/// {-s, ..., s} and is sampled by inverting the cumulative table chi_cdf.
struct ParamSet {
  std::string name;
  std::uint16_t id = 0;  ///< registry id, carried in file envelopes
  std::uint32_t D = 0;
  std::uint32_t B = 0;
  std::uint32_t n = 0;
  std::uint32_t m_bar = 0;
  std::uint32_t n_bar = 0;
  std::uint32_t s = 0;
  std::vector<std::uint16_t> chi_cdf;
  std::uint32_t chi_sample_bits = 15;
  std::uint32_t T_max = 1;
  GenMode gen_mode = GenMode::Toy;

  std::uint32_t q() const { return std::uint32_t{1} << D; }
  std::uint16_t mask() const { return static_cast<std::uint16_t>(q() - 1); }
  /// Message length in bits: B * m_bar * n_bar.
  std::size_t message_bits() const { return std::size_t{B} * m_bar * n_bar; }

  /// Throws InvalidParamSet naming the first violated invariant.
  void validate() const;

  bool operator==(const ParamSet&) const = default;
};

/// Both sides of 2(n^2 D s^3 + n^2 s^3) + nDs + ns^2 < q / (T * 2^(B+1)), kept exact.
struct CorrectnessBound {
  std::string lhs;           ///< decimal
  std::string rhs_numerator;  ///< q
  std::string rhs_denominator;  ///< T * 2^(B+1)
  bool holds = false;
};

CorrectnessBound correctness_bound(const ParamSet& p, std::uint64_t T);

/// True iff the worst-case per-update noise bound certifies T epochs of updates.
/// T must be at least 1.
bool validate_correctness_bound(const ParamSet& p, std::uint64_t T);

/// Worst-case noise added by a single update: 2(n^2 D s^3 + n^2 s^3) + nDs + ns^2.
/// Returned as an unsigned 64-bit value; throws if it would not fit.
std::uint64_t per_update_error_bound(const ParamSet& p);

/// Worst-case noise of a fresh encryption: 2ns^2 + s.
std::uint64_t fresh_error_bound(const ParamSet& p);

/// Probability mass of chi on {-s..s}, index i holds Pr[value = i - s].
std::vector<double> chi_pmf(const ParamSet& p);
double chi_variance(const ParamSet& p);

/// Heuristic correctness estimate: treats update noise as a sum of independent terms
/// and requires the accumulated standard deviation after T updates, times
/// kEmpiricalTailFactor, to stay below q / 2^(B+1).
constexpr double kEmpiricalTailFactor = 8.0;
double estimated_noise_stddev(const ParamSet& p, std::uint64_t T);
bool empirically_correct(const ParamSet& p, std::uint64_t T);

struct CorrectnessFlags {
  bool bound_certified = false;
  bool empirical = false;
};
CorrectnessFlags correctness_flags(const ParamSet& p, std::uint64_t T);

const ParamSet& load_paramset(std::string_view name);
const ParamSet& load_paramset(std::uint16_t id);
std::span<const ParamSet> registered_paramsets();

/// Same constants under another name / expander; used by the benchmark to pair levels and modes.
const ParamSet& paramset_for_level(std::uint32_t n, GenMode mode);

/// Plain-text key=value audit dump, one constant per line.
std::string dump_paramset(const ParamSet& p);

}  // namespace frodo_ue
