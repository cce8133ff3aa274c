#include <cmath>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "frodo_ue/error.hpp"
#include "frodo_ue/params.hpp"
#include "golden_values.hpp"

using namespace frodo_ue;

namespace {

ParamSet small_set() {
  ParamSet p;
  p.name = "n4";
  p.D = 4;
  p.B = 1;
  p.n = 4;
  p.m_bar = 1;
  p.n_bar = 1;
  p.s = 1;
  p.chi_cdf = {16383, 32767};
  return p;
}

}  // namespace

TEST(Registry, NamesAndIdsResolve) {
  std::set<std::uint16_t> ids;
  for (const auto& p : registered_paramsets()) {
    EXPECT_EQ(&load_paramset(p.name), &load_paramset(p.id));
    EXPECT_TRUE(ids.insert(p.id).second) << p.name;
    EXPECT_NO_THROW(p.validate());
  }
  EXPECT_EQ(ids.size(), 10u);
}

TEST(Registry, UnknownNameThrows) {
  EXPECT_THROW(load_paramset("frodo-1024"), UnknownParamSet);
  EXPECT_THROW(load_paramset(std::uint16_t{0x7777}), UnknownParamSet);
  EXPECT_THROW(paramset_for_level(1024, GenMode::AesLike), UnknownParamSet);
}

TEST(Registry, FrodoLevels) {
  struct Row {
    const char* name;
    std::uint32_t n, D, B, s;
  };
  for (const Row r : {Row{"frodo-640", 640, 15, 2, 12}, Row{"frodo-976", 976, 16, 3, 10},
                      Row{"frodo-1344", 1344, 16, 4, 6}}) {
    const auto& p = load_paramset(r.name);
    EXPECT_EQ(p.n, r.n);
    EXPECT_EQ(p.D, r.D);
    EXPECT_EQ(p.B, r.B);
    EXPECT_EQ(p.s, r.s);
    EXPECT_EQ(p.m_bar, 8u);
    EXPECT_EQ(p.n_bar, 8u);
    EXPECT_EQ(p.chi_sample_bits, 15u);
    EXPECT_EQ(p.gen_mode, GenMode::AesLike);
    const auto& shake = load_paramset(std::string(r.name) + "-shake");
    EXPECT_EQ(shake.chi_cdf, p.chi_cdf);
    EXPECT_EQ(shake.gen_mode, GenMode::ShakeLike);
    EXPECT_EQ(&paramset_for_level(r.n, GenMode::ShakeLike), &shake);
  }
}

// FrodoKEM quotes sigma = 2.8, 2.3, 1.4 for the three tables; the discretised tables sit close.
TEST(Registry, ChiVarianceMatchesPublishedSigma) {
  EXPECT_NEAR(chi_variance(load_paramset("frodo-640")), 2.8 * 2.8, 0.05 * 2.8 * 2.8);
  EXPECT_NEAR(chi_variance(load_paramset("frodo-976")), 2.3 * 2.3, 0.05 * 2.3 * 2.3);
  EXPECT_NEAR(chi_variance(load_paramset("frodo-1344")), 1.4 * 1.4, 0.05 * 1.4 * 1.4);
}

TEST(Registry, ChiVarianceGolden) {
  EXPECT_DOUBLE_EQ(chi_variance(load_paramset("frodo-640")), golden::kVar_frodo_640);
  EXPECT_DOUBLE_EQ(chi_variance(load_paramset("frodo-976")), golden::kVar_frodo_976);
  EXPECT_DOUBLE_EQ(chi_variance(load_paramset("frodo-1344")), golden::kVar_frodo_1344);
  EXPECT_DOUBLE_EQ(chi_variance(load_paramset("toy-16")), golden::kVar_toy_16);
  EXPECT_DOUBLE_EQ(chi_variance(load_paramset("toy-noiseless")), 0.0);
}

TEST(Registry, PmfSumsToOneAndIsSymmetric) {
  for (const auto& p : registered_paramsets()) {
    const auto pmf = chi_pmf(p);
    ASSERT_EQ(pmf.size(), 2 * p.s + 1);
    EXPECT_NEAR(std::accumulate(pmf.begin(), pmf.end(), 0.0), 1.0, 1e-12) << p.name;
    for (std::size_t i = 0; i < pmf.size(); ++i) EXPECT_DOUBLE_EQ(pmf[i], pmf[pmf.size() - 1 - i]);
  }
}

TEST(Validate, RejectsBrokenSets) {
  ParamSet p = load_paramset("toy-8");
  p.B = 9;
  EXPECT_THROW(p.validate(), InvalidParamSet);
  p = load_paramset("toy-8");
  p.chi_cdf = {15, 7};
  EXPECT_THROW(p.validate(), InvalidParamSet);
  p = load_paramset("toy-8");
  p.chi_cdf = {7, 14};
  EXPECT_THROW(p.validate(), InvalidParamSet);
  p = load_paramset("toy-16");
  p.chi_sample_bits = 16;
  EXPECT_THROW(p.validate(), InvalidParamSet);
  p = load_paramset("toy-16");
  p.s = 3;
  EXPECT_THROW(p.validate(), InvalidParamSet);
  p = load_paramset("toy-16");
  p.D = 17;
  EXPECT_THROW(p.validate(), InvalidParamSet);
}

TEST(Bound, PerUpdateLhsGolden) {
  EXPECT_EQ(per_update_error_bound(load_paramset("frodo-640")), golden::kLhs_frodo_640);
  EXPECT_EQ(per_update_error_bound(load_paramset("frodo-976")), golden::kLhs_frodo_976);
  EXPECT_EQ(per_update_error_bound(load_paramset("frodo-1344")), golden::kLhs_frodo_1344);
  EXPECT_EQ(per_update_error_bound(load_paramset("toy-16")), golden::kLhs_toy_16);
  EXPECT_EQ(per_update_error_bound(load_paramset("toy-8")), golden::kLhs_toy_8);
  EXPECT_EQ(per_update_error_bound(load_paramset("toy-noiseless")), golden::kLhs_toy_noiseless);
  EXPECT_EQ(per_update_error_bound(load_paramset("toy-tiny-q")), golden::kLhs_toy_tiny_q);
}

TEST(Bound, SmallHandExample) {
  // 2(16*4*1 + 16*1) + 16 + 4 = 180 against 16 / (2 * 2^2) = 2.
  const auto b = correctness_bound(small_set(), 2);
  EXPECT_EQ(b.lhs, "180");
  EXPECT_EQ(b.rhs_numerator, "16");
  EXPECT_EQ(b.rhs_denominator, "8");
  EXPECT_FALSE(b.holds);
  EXPECT_FALSE(validate_correctness_bound(small_set(), 2));
}

TEST(Bound, Toy16CertifiesItsEpochBudget) {
  const auto& p = load_paramset("toy-16");
  EXPECT_TRUE(validate_correctness_bound(p, p.T_max));
  EXPECT_TRUE(validate_correctness_bound(p, 4));
  EXPECT_TRUE(validate_correctness_bound(p, golden::kToy16MaxCertifiedT));
  EXPECT_FALSE(validate_correctness_bound(p, golden::kToy16MaxCertifiedT + 1));
}

TEST(Bound, FrodoLevelsAreNotCertified) {
  for (const char* name : {"frodo-640", "frodo-976", "frodo-1344"}) {
    const auto& p = load_paramset(name);
    EXPECT_FALSE(validate_correctness_bound(p, 1)) << name;
    const auto flags = correctness_flags(p, std::uint64_t{1} << 20);
    EXPECT_FALSE(flags.bound_certified);
    EXPECT_FALSE(flags.empirical);
  }
}

TEST(Bound, ZeroEpochsRejected) { EXPECT_THROW(correctness_bound(load_paramset("toy-16"), 0), Error); }

TEST(Bound, Monotone) {
  const auto& p = load_paramset("toy-16");
  bool prev = true;
  for (std::uint64_t T = 1; T < 32; ++T) {
    const bool now = validate_correctness_bound(p, T);
    EXPECT_TRUE(prev || !now) << T;
    prev = now;
  }
}

TEST(Bound, FreshBound) {
  EXPECT_EQ(fresh_error_bound(load_paramset("toy-16")), 2u * 8 * 1 + 1);
  EXPECT_EQ(fresh_error_bound(load_paramset("frodo-640")), 2u * 640 * 144 + 12);
}

TEST(Bound, EmpiricalFlagAtToySets) {
  EXPECT_TRUE(empirically_correct(load_paramset("toy-16"), 4));
  EXPECT_TRUE(empirically_correct(load_paramset("toy-noiseless"), 1000));
  EXPECT_GT(estimated_noise_stddev(load_paramset("toy-16"), 4), estimated_noise_stddev(load_paramset("toy-16"), 1));
}

TEST(Dump, ListsEveryConstant) {
  const std::string d = dump_paramset(load_paramset("frodo-976"));
  for (const char* key : {"name=frodo-976", "D=16", "q=65536", "B=3", "n=976", "m_bar=8", "n_bar=8", "s=10",
                          "chi_sample_bits=15", "gen_mode=aes", "message_bits=192"})
    EXPECT_NE(d.find(key), std::string::npos) << key;
  EXPECT_NE(d.find("chi_cdf=5638,15915,"), std::string::npos);
}

TEST(GenMode, RoundTrip) {
  for (auto m : {GenMode::AesLike, GenMode::ShakeLike, GenMode::Toy}) EXPECT_EQ(gen_mode_from_string(to_string(m)), m);
  EXPECT_THROW(gen_mode_from_string("sha3"), Error);
}
