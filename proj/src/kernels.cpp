#include "frodo_ue/kernels.hpp"

#include <algorithm>
#include <array>

#include <omp.h>

namespace frodo_ue::kernels {

namespace reference {

void gemm(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b,
          std::span<std::uint16_t> c, GemmShape shape, std::uint16_t mask) {
  for (std::size_t i = 0; i < shape.m; ++i) {
    for (std::size_t j = 0; j < shape.n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < shape.k; ++t)
        acc += std::uint64_t{a[i * shape.k + t]} * b[t * shape.n + j];
      c[i * shape.n + j] = static_cast<std::uint16_t>(acc & mask);
    }
  }
}

}  // namespace reference

namespace parallel {

namespace {

constexpr std::size_t kRowBlock = 8;
constexpr std::size_t kColTile = 512;

// One kRowBlock x width tile of C, accumulated over the full inner dimension.
// The 8 x 512 accumulator (8 KiB) stays in L1 while B's column tile streams through.
void tile(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* c, GemmShape shape,
          std::size_t row0, std::size_t rows, std::size_t col0, std::size_t width,
          std::uint16_t mask) {
  alignas(64) std::uint16_t acc[kRowBlock][kColTile] = {};
  for (std::size_t t = 0; t < shape.k; ++t) {
    const std::uint16_t* brow = b + t * shape.n + col0;
    for (std::size_t r = 0; r < rows; ++r) {
      const std::uint16_t av = a[(row0 + r) * shape.k + t];
      if (av == 0) continue;
      std::uint16_t* out = acc[r];
#pragma omp simd
      for (std::size_t j = 0; j < width; ++j)
        out[j] = static_cast<std::uint16_t>(out[j] + av * brow[j]);
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint16_t* dst = c + (row0 + r) * shape.n + col0;
    for (std::size_t j = 0; j < width; ++j) dst[j] = acc[r][j] & mask;
  }
}

}  // namespace

void gemm(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b,
          std::span<std::uint16_t> c, GemmShape shape, std::uint16_t mask) {
  const std::size_t row_blocks = (shape.m + kRowBlock - 1) / kRowBlock;
  const std::size_t col_tiles = (shape.n + kColTile - 1) / kColTile;
  const std::size_t jobs = row_blocks * col_tiles;
  const auto* ap = a.data();
  const auto* bp = b.data();
  auto* cp = c.data();
#pragma omp parallel for schedule(static) if (jobs > 1 && shape.m * shape.k * shape.n > (1u << 18))
  for (std::size_t job = 0; job < jobs; ++job) {
    const std::size_t rb = job / col_tiles;
    const std::size_t ct = job % col_tiles;
    const std::size_t row0 = rb * kRowBlock;
    const std::size_t col0 = ct * kColTile;
    tile(ap, bp, cp, shape, row0, std::min(kRowBlock, shape.m - row0), col0,
         std::min(kColTile, shape.n - col0), mask);
  }
}

}  // namespace parallel

int max_threads() { return omp_get_max_threads(); }

}  // namespace frodo_ue::kernels
