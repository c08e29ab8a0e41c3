#include <gtest/gtest.h>

#include <omp.h>

#include "comparo/kernels.hpp"

using namespace comparo;

// Each parallel kernel must reproduce its serial reference exactly,
// whatever the thread count.
class Kernels : public ::testing::Test {
 protected:
  void SetUp() override { omp_set_num_threads(4); }
};

TEST_F(Kernels, SoundnessSweepIp) {
  SoundnessConfig c;
  c.models = 300;
  const auto serial = soundness_sweep(Logic::IP, 7, c, Execution::Serial);
  EXPECT_EQ(serial, soundness_sweep(Logic::IP, 7, c, Execution::Parallel));
  EXPECT_EQ(serial.models, 300u);
  EXPECT_EQ(serial.violations, 0u);
  EXPECT_GT(serial.cancellation_nonvacuous, 0u);
}

TEST_F(Kernels, SoundnessSweepIl) {
  SoundnessConfig c;
  c.models = 300;
  const auto serial = soundness_sweep(Logic::IL, 8, c, Execution::Serial);
  EXPECT_EQ(serial, soundness_sweep(Logic::IL, 8, c, Execution::Parallel));
  EXPECT_EQ(serial.violations, 0u);
}

TEST_F(Kernels, MatchingSweep) {
  MatchingConfig c;
  c.trials = 2000;
  const auto serial = matching_sweep(3, c, Execution::Serial);
  EXPECT_EQ(serial, matching_sweep(3, c, Execution::Parallel));
  EXPECT_EQ(serial.disagreements, 0u);
  EXPECT_GT(serial.injective, 0u);
  EXPECT_LT(serial.injective, serial.trials);
}

TEST_F(Kernels, BalancedSweep) {
  BalancedConfig c;
  c.instances = 200;
  const auto serial = balanced_sweep(4, c, Execution::Serial);
  EXPECT_EQ(serial, balanced_sweep(4, c, Execution::Parallel));
  EXPECT_EQ(serial.instances, 200u);
  EXPECT_EQ(serial.failures, 0u);
}

TEST_F(Kernels, TransformSweeps) {
  TransformConfig four;
  four.models = 40;
  const auto s4 = transform_sweep(5, four, Execution::Serial);
  EXPECT_EQ(s4, transform_sweep(5, four, Execution::Parallel));
  EXPECT_EQ(s4.disagreements, 0u);

  TransformConfig five;
  five.models = 20;
  five.max_measures = 2;
  five.max_den = 3;
  const auto s5 = transform_sweep(6, five, Execution::Serial);
  EXPECT_EQ(s5, transform_sweep(6, five, Execution::Parallel));
  EXPECT_EQ(s5.disagreements, 0u);
}

TEST_F(Kernels, OracleSweep) {
  OracleConfig c;
  c.formulas = 60;
  const auto serial = oracle_sweep(10, c, Execution::Serial);
  EXPECT_EQ(serial, oracle_sweep(10, c, Execution::Parallel));
  EXPECT_EQ(serial.contradictions, 0u);
  EXPECT_EQ(serial.witness_failures, 0u);
}
