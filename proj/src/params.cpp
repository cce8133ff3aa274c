#include "frodo_ue/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "frodo_ue/error.hpp"

namespace frodo_ue {

namespace {

using boost::multiprecision::cpp_int;

ParamSet make_frodo(std::string name, std::uint16_t id, std::uint32_t D, std::uint32_t B,
                    std::uint32_t n, std::vector<std::uint16_t> cdf, GenMode mode) {
  ParamSet p;
  p.name = std::move(name);
  p.id = id;
  p.D = D;
  p.B = B;
  p.n = n;
  p.m_bar = 8;
  p.n_bar = 8;
  p.s = static_cast<std::uint32_t>(cdf.size() - 1);
  p.chi_cdf = std::move(cdf);
  p.chi_sample_bits = 15;
  p.T_max = 1;
  p.gen_mode = mode;
  return p;
}

ParamSet make_toy(std::string name, std::uint16_t id, std::uint32_t D, std::uint32_t B,
                  std::uint32_t n, std::uint32_t m_bar, std::uint32_t n_bar,
                  std::vector<std::uint16_t> cdf, std::uint32_t bits, std::uint32_t T_max) {
  ParamSet p;
  p.name = std::move(name);
  p.id = id;
  p.D = D;
  p.B = B;
  p.n = n;
  p.m_bar = m_bar;
  p.n_bar = n_bar;
  p.s = static_cast<std::uint32_t>(cdf.size() - 1);
  p.chi_cdf = std::move(cdf);
  p.chi_sample_bits = bits;
  p.T_max = T_max;
  p.gen_mode = GenMode::Toy;
  return p;
}

// Error tables of FrodoKEM-640/976/1344.
const std::vector<std::uint16_t> kCdf640 = {4643,  13363, 20579, 25843, 29227, 31145, 32103,
                                            32525, 32689, 32745, 32762, 32766, 32767};
const std::vector<std::uint16_t> kCdf976 = {5638,  15915, 23689, 28571, 31116, 32217,
                                            32613, 32731, 32760, 32766, 32767};
const std::vector<std::uint16_t> kCdf1344 = {9142, 23462, 30338, 32361, 32725, 32765, 32767};

std::vector<ParamSet> build_registry() {
  std::vector<ParamSet> r;
  r.push_back(make_frodo("frodo-640", 0x0001, 15, 2, 640, kCdf640, GenMode::AesLike));
  r.push_back(make_frodo("frodo-640-shake", 0x0002, 15, 2, 640, kCdf640, GenMode::ShakeLike));
  r.push_back(make_frodo("frodo-976", 0x0003, 16, 3, 976, kCdf976, GenMode::AesLike));
  r.push_back(make_frodo("frodo-976-shake", 0x0004, 16, 3, 976, kCdf976, GenMode::ShakeLike));
  r.push_back(make_frodo("frodo-1344", 0x0005, 16, 4, 1344, kCdf1344, GenMode::AesLike));
  r.push_back(make_frodo("frodo-1344-shake", 0x0006, 16, 4, 1344, kCdf1344, GenMode::ShakeLike));
  // Smallest n and B with s = 1 that still certify four updates with D <= 16.
  r.push_back(make_toy("toy-16", 0x0100, 16, 1, 8, 16, 16, {16383, 32767}, 15, 4));
  r.push_back(make_toy("toy-8", 0x0101, 8, 2, 8, 2, 2, {7, 15}, 4, 1));
  r.push_back(make_toy("toy-noiseless", 0x0102, 8, 2, 8, 2, 2, {32767}, 15, 4));
  r.push_back(make_toy("toy-tiny-q", 0x0103, 6, 1, 8, 2, 2, {16383, 32767}, 15, 1));
  for (const auto& p : r) p.validate();
  return r;
}

const std::vector<ParamSet>& registry() {
  static const std::vector<ParamSet> r = build_registry();
  return r;
}

cpp_int bound_lhs(const ParamSet& p) {
  const cpp_int n = p.n, D = p.D, s = p.s;
  return 2 * (n * n * D * s * s * s + n * n * s * s * s) + n * D * s + n * s * s;
}

}  // namespace

std::string_view to_string(GenMode mode) {
  switch (mode) {
    case GenMode::AesLike: return "aes";
    case GenMode::ShakeLike: return "shake";
    case GenMode::Toy: return "toy";
  }
  return "?";
}

GenMode gen_mode_from_string(std::string_view text) {
  if (text == "aes") return GenMode::AesLike;
  if (text == "shake") return GenMode::ShakeLike;
  if (text == "toy") return GenMode::Toy;
  throw Error("unknown generator mode: " + std::string(text));
}

void ParamSet::validate() const {
  auto fail = [this](const std::string& why) {
    throw InvalidParamSet("parameter set '" + name + "': " + why);
  };
  if (!(1 <= B && B <= D && D <= 16)) fail("requires 1 <= B <= D <= 16");
  if (n == 0 || n % 8 != 0) fail("n must be a positive multiple of 8");
  if (m_bar == 0 || n_bar == 0) fail("m_bar and n_bar must be positive");
  if (chi_sample_bits == 0 || chi_sample_bits > 15) fail("chi_sample_bits must be in [1, 15]");
  if (chi_cdf.size() != std::size_t{s} + 1) fail("chi_cdf must have s + 1 entries");
  if (!std::is_sorted(chi_cdf.begin(), chi_cdf.end())) fail("chi_cdf must be non-decreasing");
  if (chi_cdf.back() != (std::uint32_t{1} << chi_sample_bits) - 1)
    fail("final chi_cdf entry must equal 2^chi_sample_bits - 1");
  if (T_max == 0) fail("T_max must be positive");
}

CorrectnessBound correctness_bound(const ParamSet& p, std::uint64_t T) {
  if (T == 0) throw Error("epoch count T must be at least 1");
  const cpp_int lhs = bound_lhs(p);
  const cpp_int q = cpp_int(1) << p.D;
  const cpp_int denom = cpp_int(T) << (p.B + 1);
  CorrectnessBound b;
  b.lhs = lhs.str();
  b.rhs_numerator = q.str();
  b.rhs_denominator = denom.str();
  // lhs < q / denom  <=>  lhs * denom < q  (all positive integers)
  b.holds = lhs * denom < q;
  return b;
}

bool validate_correctness_bound(const ParamSet& p, std::uint64_t T) {
  return correctness_bound(p, T).holds;
}

std::uint64_t per_update_error_bound(const ParamSet& p) {
  const cpp_int lhs = bound_lhs(p);
  if (lhs > std::numeric_limits<std::uint64_t>::max()) throw Error("error bound overflows 64 bits");
  return static_cast<std::uint64_t>(lhs);
}

std::uint64_t fresh_error_bound(const ParamSet& p) {
  return 2 * std::uint64_t{p.n} * p.s * p.s + p.s;
}

std::vector<double> chi_pmf(const ParamSet& p) {
  const double scale = std::ldexp(1.0, -static_cast<int>(p.chi_sample_bits));
  std::vector<double> pmf(2 * std::size_t{p.s} + 1, 0.0);
  // u is uniform on [0, 2^bits); magnitude v is the number of table entries below u.
  pmf[p.s] = (p.chi_cdf[0] + 1.0) * scale;
  for (std::uint32_t v = 1; v <= p.s; ++v) {
    const double mass = (static_cast<double>(p.chi_cdf[v]) - p.chi_cdf[v - 1]) * scale;
    pmf[p.s + v] = mass / 2;
    pmf[p.s - v] = mass / 2;
  }
  return pmf;
}

double chi_variance(const ParamSet& p) {
  const auto pmf = chi_pmf(p);
  double var = 0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const double v = static_cast<double>(i) - p.s;
    var += pmf[i] * v * v;
  }
  return var;
}

double estimated_noise_stddev(const ParamSet& p, std::uint64_t T) {
  const double sigma2 = chi_variance(p);
  const double n = p.n, D = p.D;
  // Ord(C1) bits behave like Bernoulli(1/2): E[b^2] = 1/2.
  const double v_mix = n * D * sigma2 / 2 + n * sigma2 * sigma2;
  const double v_update = 2 * n * sigma2 * v_mix + v_mix;
  const double v_fresh = 2 * n * sigma2 * sigma2 + sigma2;
  return std::sqrt(v_fresh + static_cast<double>(T) * v_update);
}

bool empirically_correct(const ParamSet& p, std::uint64_t T) {
  const double budget = std::ldexp(1.0, static_cast<int>(p.D) - static_cast<int>(p.B) - 1);
  return kEmpiricalTailFactor * estimated_noise_stddev(p, T) < budget;
}

CorrectnessFlags correctness_flags(const ParamSet& p, std::uint64_t T) {
  return {validate_correctness_bound(p, T), empirically_correct(p, T)};
}

const ParamSet& load_paramset(std::string_view name) {
  for (const auto& p : registry())
    if (p.name == name) return p;
  throw UnknownParamSet(std::string(name));
}

const ParamSet& load_paramset(std::uint16_t id) {
  for (const auto& p : registry())
    if (p.id == id) return p;
  throw UnknownParamSet("id " + std::to_string(id));
}

std::span<const ParamSet> registered_paramsets() { return registry(); }

const ParamSet& paramset_for_level(std::uint32_t n, GenMode mode) {
  for (const auto& p : registry())
    if (p.n == n && p.gen_mode == mode && p.name.starts_with("frodo-")) return p;
  throw UnknownParamSet("frodo-" + std::to_string(n) + "-" + std::string(to_string(mode)));
}

std::string dump_paramset(const ParamSet& p) {
  std::ostringstream out;
  out << "name=" << p.name << '\n'
      << "id=" << p.id << '\n'
      << "D=" << p.D << '\n'
      << "q=" << p.q() << '\n'
      << "B=" << p.B << '\n'
      << "n=" << p.n << '\n'
      << "m_bar=" << p.m_bar << '\n'
      << "n_bar=" << p.n_bar << '\n'
      << "message_bits=" << p.message_bits() << '\n'
      << "s=" << p.s << '\n'
      << "chi_cdf=";
  for (std::size_t i = 0; i < p.chi_cdf.size(); ++i) out << (i ? "," : "") << p.chi_cdf[i];
  out << '\n'
      << "chi_sample_bits=" << p.chi_sample_bits << '\n'
      << "T_max=" << p.T_max << '\n'
      << "gen_mode=" << to_string(p.gen_mode) << '\n';
  return out.str();
}

}  // namespace frodo_ue
