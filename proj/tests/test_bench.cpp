#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "frodo_ue/bench.hpp"
#include "frodo_ue/error.hpp"

using namespace frodo_ue;
using namespace frodo_ue::bench;

TEST(Bench, Summarize) {
  const std::vector<double> one{2.5};
  EXPECT_EQ(summarize(one).mean, 2.5);
  EXPECT_EQ(summarize(one).std, 0.0);
  const std::vector<double> four{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(summarize(four).mean, 2.5);
  EXPECT_DOUBLE_EQ(summarize(four).std, std::sqrt(5.0 / 3.0));
}

TEST(Bench, OpNames) {
  EXPECT_EQ(to_string(Op::KeyGen), "KG");
  EXPECT_EQ(to_string(Op::TokenGen), "TG");
  EXPECT_EQ(to_string(Op::Update), "Upd");
}

TEST(Bench, SingleRunReportAndCsv) {
  RngHandle rng("bench-test");
  const std::uint32_t levels[] = {640};
  const GenMode modes[] = {GenMode::AesLike, GenMode::ShakeLike};
  const BenchReport r = run_bench(levels, modes, 1, rng);
  ASSERT_EQ(r.rows.size(), 10u);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.runs, 1u);
    EXPECT_EQ(row.std_s, 0.0);
    EXPECT_GT(row.mean_s, 0.0);
  }
  EXPECT_EQ(r.find(640, GenMode::ShakeLike, Op::Dec).op, Op::Dec);
  EXPECT_THROW(r.find(976, GenMode::AesLike, Op::Dec), Error);

  std::istringstream csv(to_csv(r));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "level,mode,op,runs,mean_s,std_s");
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5) << line;
    EXPECT_EQ(line.rfind("640,", 0), 0u) << line;
  }
  EXPECT_EQ(rows, 10u);
  EXPECT_NE(to_table(r).find("shake"), std::string::npos);

  const std::uint32_t none[] = {640};
  EXPECT_THROW(run_bench(none, modes, 0, rng), Error);
}
