#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Matrix-product kernels over Z_{2^D}. Operands are row-major 16-bit words; the
// product is reduced with `mask` = 2^D - 1. Arithmetic mod 2^16 is a ring
// homomorphism onto Z_{2^D}, so the fast kernel accumulates in wrapping 16-bit
// lanes and masks once at the end.
namespace frodo_ue::kernels {

struct GemmShape {
  std::size_t m;  // rows of A and C
  std::size_t k;  // cols of A, rows of B
  std::size_t n;  // cols of B and C
};

namespace reference {

/// Textbook triple loop with 64-bit accumulation. Kept as the test oracle.
void gemm(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b,
          std::span<std::uint16_t> c, GemmShape shape, std::uint16_t mask);

}  // namespace reference

namespace parallel {

/// Cache-blocked, OpenMP-parallel over row blocks of C. Bit-identical to reference::gemm.
void gemm(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b,
          std::span<std::uint16_t> c, GemmShape shape, std::uint16_t mask);

}  // namespace parallel

int max_threads();

}  // namespace frodo_ue::kernels
