#include "frodo_ue/matrix.hpp"

#include <algorithm>
#include <string>

#include "frodo_ue/error.hpp"
#include "frodo_ue/kernels.hpp"

namespace frodo_ue {

namespace {

void check_D(unsigned D) {
  if (D < 1 || D > 16) throw Error("modulus exponent D must be in [1, 16], got " + std::to_string(D));
}

void require_same_shape(const MatrixZq& a, const MatrixZq& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.D() != b.D())
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
}

}  // namespace

MatrixZq::MatrixZq(std::size_t rows, std::size_t cols, unsigned D)
    : rows_(rows), cols_(cols), D_(D), data_(rows * cols, 0) {
  check_D(D);
}

MatrixZq::MatrixZq(std::size_t rows, std::size_t cols, unsigned D, std::vector<std::uint16_t> entries)
    : rows_(rows), cols_(cols), D_(D), data_(std::move(entries)) {
  check_D(D);
  if (data_.size() != rows * cols) throw DimensionMismatch("entry count does not match rows*cols");
  reduce();
}

MatrixZq MatrixZq::identity(std::size_t size, unsigned D) {
  MatrixZq m(size, size, D);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, 1);
  return m;
}

MatrixZq MatrixZq::from_signed(std::size_t rows, std::size_t cols, unsigned D,
                               std::span<const std::int64_t> values) {
  if (values.size() != rows * cols) throw DimensionMismatch("entry count does not match rows*cols");
  MatrixZq m(rows, cols, D);
  auto out = m.mutable_entries();
  for (std::size_t i = 0; i < values.size(); ++i)
    out[i] = static_cast<std::uint16_t>(static_cast<std::uint64_t>(values[i])) & m.mask();
  return m;
}

void MatrixZq::reduce() {
  const auto m = mask();
  for (auto& x : data_) x &= m;
}

MatrixZq add(const MatrixZq& a, const MatrixZq& b) {
  require_same_shape(a, b, "add");
  MatrixZq c(a.rows(), a.cols(), a.D());
  auto out = c.mutable_entries();
  const auto x = a.entries(), y = b.entries();
  const auto m = a.mask();
#pragma omp simd
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint16_t>(x[i] + y[i]) & m;
  return c;
}

MatrixZq sub(const MatrixZq& a, const MatrixZq& b) {
  require_same_shape(a, b, "sub");
  MatrixZq c(a.rows(), a.cols(), a.D());
  auto out = c.mutable_entries();
  const auto x = a.entries(), y = b.entries();
  const auto m = a.mask();
#pragma omp simd
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint16_t>(x[i] - y[i]) & m;
  return c;
}

MatrixZq negate(const MatrixZq& a) {
  MatrixZq c(a.rows(), a.cols(), a.D());
  auto out = c.mutable_entries();
  const auto x = a.entries();
  const auto m = a.mask();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint16_t>(-x[i]) & m;
  return c;
}

MatrixZq scalar_mul(std::uint64_t k, const MatrixZq& a) {
  MatrixZq c(a.rows(), a.cols(), a.D());
  auto out = c.mutable_entries();
  const auto x = a.entries();
  const auto kk = static_cast<std::uint16_t>(k);
  const auto m = a.mask();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint16_t>(kk * x[i]) & m;
  return c;
}

MatrixZq mul(const MatrixZq& a, const MatrixZq& b) {
  if (a.cols() != b.rows() || a.D() != b.D())
    throw DimensionMismatch("mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  MatrixZq c(a.rows(), b.cols(), a.D());
  if (c.empty()) return c;
  kernels::parallel::gemm(a.entries(), b.entries(), c.mutable_entries(),
                          {a.rows(), a.cols(), b.cols()}, a.mask());
  return c;
}

MatrixZq transpose(const MatrixZq& a) {
  MatrixZq t(a.cols(), a.rows(), a.D());
  auto out = t.mutable_entries();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[c * a.rows() + r] = a(r, c);
  return t;
}

MatrixZq hconcat(const MatrixZq& a, const MatrixZq& b) {
  if (a.rows() != b.rows() || a.D() != b.D()) throw DimensionMismatch("hconcat: row counts differ");
  MatrixZq c(a.rows(), a.cols() + b.cols(), a.D());
  auto out = c.mutable_entries();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::ranges::copy(a.row(r), out.begin() + static_cast<std::ptrdiff_t>(r * c.cols()));
    std::ranges::copy(b.row(r), out.begin() + static_cast<std::ptrdiff_t>(r * c.cols() + a.cols()));
  }
  return c;
}

MatrixZq column_block(const MatrixZq& a, std::size_t first, std::size_t count) {
  if (first + count > a.cols()) throw DimensionMismatch("column_block out of range");
  MatrixZq c(a.rows(), count, a.D());
  auto out = c.mutable_entries();
  for (std::size_t r = 0; r < a.rows(); ++r)
    std::ranges::copy(a.row(r).subspan(first, count),
                      out.begin() + static_cast<std::ptrdiff_t>(r * count));
  return c;
}

MatrixZq row_block(const MatrixZq& a, std::size_t first, std::size_t count) {
  if (first + count > a.rows()) throw DimensionMismatch("row_block out of range");
  const auto src = a.entries().subspan(first * a.cols(), count * a.cols());
  return MatrixZq(count, a.cols(), a.D(), std::vector<std::uint16_t>(src.begin(), src.end()));
}

std::int32_t signed_rep(std::uint16_t x, unsigned D) {
  const std::int32_t q = std::int32_t{1} << D;
  const std::int32_t v = x & (q - 1);
  return v > q / 2 ? v - q : v;
}

std::uint32_t max_norm(const MatrixZq& m) {
  std::uint32_t best = 0;
  for (auto x : m.entries()) {
    const std::int32_t v = signed_rep(x, m.D());
    best = std::max(best, static_cast<std::uint32_t>(v < 0 ? -v : v));
  }
  return best;
}

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> in, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{in[at + i]} << (8 * i);
  return v;
}

}  // namespace

std::size_t matrix_record_size(std::size_t rows, std::size_t cols) { return 9 + 2 * rows * cols; }

void write_matrix(std::vector<std::uint8_t>& out, const MatrixZq& m) {
  out.reserve(out.size() + matrix_record_size(m.rows(), m.cols()));
  put_u32(out, static_cast<std::uint32_t>(m.rows()));
  put_u32(out, static_cast<std::uint32_t>(m.cols()));
  out.push_back(static_cast<std::uint8_t>(m.D()));
  for (auto x : m.entries()) {
    out.push_back(static_cast<std::uint8_t>(x & 0xff));
    out.push_back(static_cast<std::uint8_t>(x >> 8));
  }
}

MatrixZq read_matrix(std::span<const std::uint8_t> in, std::size_t& offset) {
  if (in.size() < offset + 9) throw MalformedEnvelope("truncated matrix header");
  const std::uint64_t rows = get_u32(in, offset);
  const std::uint64_t cols = get_u32(in, offset + 4);
  const unsigned D = in[offset + 8];
  if (D < 1 || D > 16) throw MalformedEnvelope("matrix record has invalid D");
  const std::uint64_t count = rows * cols;
  if ((in.size() - offset - 9) / 2 < count) throw MalformedEnvelope("truncated matrix entries");
  std::vector<std::uint16_t> entries(count);
  const std::size_t base = offset + 9;
  const std::uint32_t limit = std::uint32_t{1} << D;
  for (std::size_t i = 0; i < count; ++i) {
    entries[i] = static_cast<std::uint16_t>(in[base + 2 * i] | (in[base + 2 * i + 1] << 8));
    if (entries[i] >= limit) throw MalformedEnvelope("matrix entry exceeds 2^D");
  }
  offset = base + 2 * count;
  return MatrixZq(rows, cols, D, std::move(entries));
}

}  // namespace frodo_ue
