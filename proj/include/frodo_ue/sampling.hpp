#pragma once

#include <cstddef>
#include <span>

#include "frodo_ue/matrix.hpp"
#include "frodo_ue/params.hpp"
#include "frodo_ue/rng.hpp"

namespace frodo_ue {

/// Entries i.i.d. uniform on [0, 2^D), one 16-bit stream word per entry.
MatrixZq sample_uniform(RngHandle& rng, std::size_t rows, std::size_t cols, const ParamSet& p);

/// One chi sample from a 16-bit word: bit 0 is the sign, the next chi_sample_bits
/// bits are u, and the magnitude is #{i : chi_cdf[i] < u}.
std::int32_t chi_from_word(std::uint16_t word, const ParamSet& p);

/// Entries drawn from chi by table inversion, stored mod q.
MatrixZq sample_chi(RngHandle& rng, std::size_t rows, std::size_t cols, const ParamSet& p);

/// Deterministic n x n public matrix expanded from `seed` according to p.gen_mode:
///  - aes:   A[i][8j'..8j'+7] = AES128_seed(<i> || <8j'> || 0^12), words little-endian;
///           the AES key is the seed itself when it is 16 bytes, else SHAKE128(seed)[0..16).
///  - shake: row i = SHAKE128(<i> || seed), 2n bytes, words little-endian.
///  - toy:   sample_uniform over RngHandle(seed).derive("public-matrix").
/// <x> is a 16-bit little-endian index. Rows are generated independently (in parallel).
MatrixZq gen_public_matrix(std::span<const std::uint8_t> seed, const ParamSet& p);

}  // namespace frodo_ue
