#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace frodo_ue {

/// Dense row-major matrix over Z_q with q = 2^D, one entry per 16-bit word.
/// Every stored entry is reduced below 2^D.
class MatrixZq {
 public:
  MatrixZq() = default;
  MatrixZq(std::size_t rows, std::size_t cols, unsigned D);
  /// Entries are reduced mod 2^D on construction.
  MatrixZq(std::size_t rows, std::size_t cols, unsigned D, std::vector<std::uint16_t> entries);

  static MatrixZq identity(std::size_t size, unsigned D);
  /// Reduces signed values into [0, 2^D).
  static MatrixZq from_signed(std::size_t rows, std::size_t cols, unsigned D,
                              std::span<const std::int64_t> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  unsigned D() const { return D_; }
  std::uint16_t mask() const { return static_cast<std::uint16_t>((std::uint32_t{1} << D_) - 1); }
  bool empty() const { return data_.empty(); }

  std::uint16_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t value) {
    data_[r * cols_ + c] = static_cast<std::uint16_t>(value) & mask();
  }

  std::span<const std::uint16_t> entries() const { return data_; }
  std::span<const std::uint16_t> row(std::size_t r) const {
    return std::span<const std::uint16_t>(data_).subspan(r * cols_, cols_);
  }
  /// Raw write access; callers must keep entries below 2^D (see reduce()).
  std::span<std::uint16_t> mutable_entries() { return data_; }
  void reduce();

  bool operator==(const MatrixZq&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned D_ = 16;
  std::vector<std::uint16_t> data_;
};

MatrixZq add(const MatrixZq& a, const MatrixZq& b);
MatrixZq sub(const MatrixZq& a, const MatrixZq& b);
MatrixZq mul(const MatrixZq& a, const MatrixZq& b);
MatrixZq negate(const MatrixZq& a);
MatrixZq scalar_mul(std::uint64_t k, const MatrixZq& a);
MatrixZq transpose(const MatrixZq& a);

/// [A | B]
MatrixZq hconcat(const MatrixZq& a, const MatrixZq& b);
/// Columns [first, first + count).
MatrixZq column_block(const MatrixZq& a, std::size_t first, std::size_t count);
/// Rows [first, first + count).
MatrixZq row_block(const MatrixZq& a, std::size_t first, std::size_t count);

/// Representative of x in (-q/2, q/2].
std::int32_t signed_rep(std::uint16_t x, unsigned D);
/// Largest |signed_rep(entry)|; zero for an empty matrix.
std::uint32_t max_norm(const MatrixZq& m);

/// Binary layout: rows (u32 LE), cols (u32 LE), D (u8), entries as u16 LE, row-major.
void write_matrix(std::vector<std::uint8_t>& out, const MatrixZq& m);
/// Reads one record at `offset`, advancing it. Throws MalformedEnvelope on short or invalid input.
MatrixZq read_matrix(std::span<const std::uint8_t> in, std::size_t& offset);
std::size_t matrix_record_size(std::size_t rows, std::size_t cols);

}  // namespace frodo_ue
