#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frodo_ue/params.hpp"
#include "frodo_ue/rng.hpp"

namespace frodo_ue::bench {

enum class Op { KeyGen, Enc, Dec, TokenGen, Update };

/// "KG", "Enc", "Dec", "TG", "Upd".
std::string_view to_string(Op op);
inline constexpr Op kAllOps[] = {Op::KeyGen, Op::Enc, Op::Dec, Op::TokenGen, Op::Update};

struct BenchRow {
  std::uint32_t level = 0;  ///< n
  GenMode mode = GenMode::AesLike;
  Op op = Op::KeyGen;
  std::size_t runs = 0;
  double mean_s = 0;
  double std_s = 0;  ///< sample standard deviation; 0 for a single run
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// Throws Error when the row is absent.
  const BenchRow& find(std::uint32_t level, GenMode mode, Op op) const;
};

struct Summary {
  double mean = 0;
  double std = 0;
};
Summary summarize(std::span<const double> seconds);

/// Times the five scheme operations per (level, mode) with library calls only, on a
/// monotonic clock. One warm-up run per operation is discarded. `runs` must be >= 1.
BenchReport run_bench(std::span<const std::uint32_t> levels, std::span<const GenMode> modes, std::size_t runs,
                      RngHandle& rng);

/// Header "level,mode,op,runs,mean_s,std_s" then one row per entry.
std::string to_csv(const BenchReport& report);
/// Aligned text table, one line per (level, mode), one column pair per operation.
std::string to_table(const BenchReport& report);

}  // namespace frodo_ue::bench
