/*
 * Copyright 2026 The dolphin-los Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "dolphin/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "dolphin/simcore.hpp"
#include "properties.hpp"

namespace dolphin {
namespace {

TEST(Rmse, Examples) {
  EXPECT_DOUBLE_EQ(rmse(std::vector<double>(10, 0.2)), 0.2);
  EXPECT_EQ(rmse(std::vector<double>(5, 0.0)), 0.0);
  EXPECT_NEAR(rmse(std::vector<double>{3.0, 4.0}), std::sqrt(12.5), 1e-15);
  EXPECT_NEAR(rmse(std::vector<double>{3.0, 4.0}), 3.5355, 1e-4);
  EXPECT_THROW(rmse(std::vector<double>{}), std::invalid_argument);
}

TEST(Mae, Examples) {
  EXPECT_DOUBLE_EQ(mae(std::vector<double>(10, 0.2)), 0.2);
  EXPECT_DOUBLE_EQ(mae(std::vector<double>{-1.0, 1.0}), 1.0);
  EXPECT_DOUBLE_EQ(mae(std::vector<double>{3.0, 4.0}), 3.5);
  EXPECT_THROW(mae(std::vector<double>{}), std::invalid_argument);
}

TEST(Metrics, RmseDominatesMae) {
  const auto rep = dolphin_test::rmse_dominates_mae(dolphin_test::kPropertyCases);
  EXPECT_TRUE(rep.ok()) << rep.failures << " failures";
}

TEST(Metrics, ReorderingAndScaling) {
  dolphin_test::Sampler s(51);
  std::mt19937 shuffle_rng(7);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> e(static_cast<std::size_t>(s.integer(1, 100)));
    for (double& x : e) x = s.uniform(-1.0, 1.0);
    std::vector<double> shuffled = e;
    std::shuffle(shuffled.begin(), shuffled.end(), shuffle_rng);
    ASSERT_NEAR(rmse(shuffled), rmse(e), 1e-15);
    ASSERT_NEAR(mae(shuffled), mae(e), 1e-15);
    // Powers of two scale exactly in binary floating point.
    const double c = std::ldexp(1.0, s.integer(-10, 10));
    std::vector<double> scaled = e;
    for (double& x : scaled) x *= c;
    ASSERT_EQ(rmse(scaled), c * rmse(e));
    ASSERT_EQ(mae(scaled), c * mae(e));
    const double g = s.uniform(0.1, 10.0);
    for (std::size_t k = 0; k < e.size(); ++k) scaled[k] = g * e[k];
    ASSERT_NEAR(rmse(scaled), g * rmse(e), 1e-14 * g);
  }
}

TEST(ErrorSeries, WarmupExcludesEarlyRows) {
  TrialLog log(5);
  for (int i = 0; i < 5; ++i) {
    log[i].t = i * 0.5;
    log[i].cross_track = i;
  }
  EXPECT_EQ(error_series(log).size(), 5u);
  const auto tail = error_series(log, 1.0);
  ASSERT_EQ(tail.size(), 3u);
  EXPECT_EQ(tail.front(), 2.0);
}

TEST(Aggregate, SortsByModeThenDelta) {
  std::vector<ComparisonRow> rows = {
      {GuidanceMode::kAdaptive, AmplitudeMode::kControlled, 1.5, 0.1, 0.1, false, 0.0, 0.0, {}},
      {GuidanceMode::kTraditional, AmplitudeMode::kMax, 2.0, 0.2, 0.2, false, 0.0, 0.0, {}},
      {GuidanceMode::kTraditional, AmplitudeMode::kMax, 1.5, 0.3, 0.3, false, 0.0, 0.0, {}},
      {GuidanceMode::kAdaptive, AmplitudeMode::kMax, 1.75, 0.4, 0.4, false, 0.0, 0.0, {}},
  };
  const auto sorted = aggregate(rows);
  EXPECT_EQ(sorted[0].rmse, 0.3);
  EXPECT_EQ(sorted[1].rmse, 0.2);
  EXPECT_EQ(sorted[2].rmse, 0.4);
  EXPECT_EQ(sorted[3].rmse, 0.1);
}

TEST(Aggregate, SingleRowEchoes) {
  const ComparisonRow row{GuidanceMode::kAdaptive, AmplitudeMode::kMax, 1.75, 0.05, 0.04, true,
                          40.0, 0.1, {}};
  const auto out = aggregate({row});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].rmse, 0.05);
  EXPECT_EQ(out[0].mae, 0.04);
  EXPECT_EQ(out[0].delta_multiple, 1.75);
}

TEST(MetricsCsv, HeaderAndWallTimeColumn) {
  const std::vector<ComparisonRow> rows = {
      {GuidanceMode::kAdaptive, AmplitudeMode::kControlled, 1.75, 0.0540, 0.0414, true, 47.68,
       0.123456, {}}};
  std::ostringstream plain;
  write_metrics_csv(plain, rows, false);
  EXPECT_EQ(plain.str(),
            "guidance_mode,amplitude_mode,delta_multiple,rmse_m,mae_m,completed,sim_seconds,"
            "wall_seconds\nadaptive,controlled,1.75,0.054,0.0414,true,47.68,NA\n");
  std::ostringstream timed;
  write_metrics_csv(timed, rows, true);
  EXPECT_NE(timed.str().find(",0.1235\n"), std::string::npos);
}

TEST(MetricsTable, ListsEveryRow) {
  const std::vector<ComparisonRow> rows = {
      {GuidanceMode::kTraditional, AmplitudeMode::kMax, 1.5, 0.1, 0.08, true, 40.0, 0.0, {}},
      {GuidanceMode::kAdaptive, AmplitudeMode::kMax, 1.5, 0.0, 0.0, false, 3.0, 0.0, "diverged"}};
  std::ostringstream out;
  write_metrics_table(out, rows);
  const std::string text = out.str();
  EXPECT_NE(text.find("traditional"), std::string::npos);
  EXPECT_NE(text.find("failed: diverged"), std::string::npos);
}

}  // namespace
}  // namespace dolphin
