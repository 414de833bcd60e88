#include "bspower/bbu_model.hpp"

#include <array>
#include <random>

#include <gtest/gtest.h>

#include "bspower/errors.hpp"
#include "oracle/oracle_values.hpp"
#include "test_support.hpp"

namespace bspower {
namespace {

using testing_support::rel_err;

const BbuPartProfile& row(std::string_view name) {
  for (const auto& p : builtin_part_table()) {
    if (p.name == name) return p;
  }
  throw std::out_of_range(std::string(name));
}

double calibrated_small(const SystemParams& p) {
  return bbu_power(BsClass::small, p, {}, {}, default_calibration(BsClass::small)).total_w;
}

TEST(PartTable, ReproducesBuiltinRows) {
  const auto& table = builtin_part_table();
  ASSERT_EQ(table.size(), 8u);
  for (std::size_t i = 0; i < table.size(); ++i) EXPECT_EQ(table[i].name, kPartNames[i]);

  const auto& cpri = row("CPRI");
  EXPECT_EQ(cpri.gops_macro, 720.0);
  EXPECT_EQ(cpri.gops_small, 0.0);
  for (SystemParam p : kAllSystemParams) EXPECT_EQ(cpri.exponent(p), 1);

  const auto& fdn = row("FD_nonlinear");
  EXPECT_EQ(fdn.gops_macro, 30.0);
  EXPECT_EQ(fdn.gops_small, 15.0);
  EXPECT_EQ(fdn.exponent(SystemParam::antennas), 2);

  const auto& cpu = row("CPU");
  EXPECT_EQ(cpu.gops_macro, 400.0);
  EXPECT_EQ(cpu.gops_small, 40.0);
  EXPECT_EQ(cpu.exponent(SystemParam::bandwidth), 0);
  EXPECT_EQ(cpu.exponent(SystemParam::antennas), 1);
  EXPECT_EQ(cpu.exponent(SystemParam::time_duty), 0);
  EXPECT_EQ(cpu.exponent(SystemParam::freq_duty), 0);

  EXPECT_EQ(row("DPD").gops_small, 0.0);
  EXPECT_NO_THROW(validate_part_table(table));
}

TEST(PartTable, RejectsBadRows) {
  PartTable t = builtin_part_table();
  t[0].exponent(SystemParam::antennas) = 3;
  EXPECT_THROW(validate_part_table(t), ParameterError);

  t = builtin_part_table();
  t[1].name = "DPD";
  EXPECT_THROW(validate_part_table(t), std::invalid_argument);

  t = builtin_part_table();
  t[2].name = "GPU";
  EXPECT_THROW(validate_part_table(t), std::invalid_argument);

  t = builtin_part_table();
  t[3].gops_small = -1.0;
  EXPECT_THROW(validate_part_table(t), ParameterError);
}

TEST(ReferenceParams, Values) {
  const SystemParams ref = reference_params();
  EXPECT_EQ(ref.bandwidth_hz, 20e6);
  EXPECT_EQ(ref.antennas, 1);
  EXPECT_EQ(ref.modulation_bits, 6);
  EXPECT_EQ(ref.coding_rate, 1.0);
  EXPECT_EQ(ref.time_duty, 1.0);
  EXPECT_EQ(ref.freq_duty, 1.0);
  EXPECT_NO_THROW(ref.validate());
  for (const auto& part : builtin_part_table()) {
    EXPECT_EQ(part_scaling_factor(part, ref, ref), 1.0) << part.name;
  }
}

TEST(SystemParams, Invariants) {
  SystemParams p;
  p.antennas = 0;
  EXPECT_THROW(p.validate(), ParameterError);
  p = {};
  p.coding_rate = 1.2;
  EXPECT_THROW(p.validate(), ParameterError);
  p = {};
  p.time_duty = 0.0;
  EXPECT_THROW(p.validate(), ParameterError);
  p = {};
  p.bandwidth_hz = 0.0;
  EXPECT_THROW(part_scaling_factor(row("CPU"), reference_params(), p), ParameterError);
}

TEST(PartScalingFactor, TableExamples) {
  SystemParams real = reference_params();
  real.antennas = 128;
  EXPECT_EQ(part_scaling_factor(row("FD_nonlinear"), real, reference_params()), 16384.0);

  real = reference_params();
  real.bandwidth_hz = 10e6;
  real.antennas = 2;
  EXPECT_EQ(part_scaling_factor(row("Filter"), real, reference_params()), 1.0);
}

SystemParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> frac(0.05, 1.0);
  std::uniform_real_distribution<double> bw(1e6, 1e9);
  std::uniform_int_distribution<int> ant(1, 256);
  std::uniform_int_distribution<int> mod(1, 10);
  return SystemParams{bw(rng), ant(rng), mod(rng), frac(rng), frac(rng), frac(rng)};
}

TEST(PartScalingFactor, DecomposesThroughIntermediate) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const SystemParams a = random_params(rng);
    const SystemParams b = random_params(rng);
    const SystemParams c = random_params(rng);
    for (const auto& part : builtin_part_table()) {
      const double direct = part_scaling_factor(part, a, c);
      const double chained = part_scaling_factor(part, a, b) * part_scaling_factor(part, b, c);
      ASSERT_LT(rel_err(direct, chained), 1e-12) << part.name;
      ASSERT_GT(direct, 0.0);
    }
  }
}

TEST(ReferenceBbuPower, MatchesOracle) {
  const BbuPower small = reference_bbu_power(BsClass::small, {}, {});
  const BbuPower macro = reference_bbu_power(BsClass::macro, {}, {});
  EXPECT_LT(rel_err(small.total_w, oracle::kRawSmallReference), 1e-12);
  EXPECT_LT(rel_err(macro.total_w, oracle::kRawMacroReference), 1e-12);
  EXPECT_NEAR(small.total_w, 0.186, 5e-4);
  EXPECT_GT(macro.total_w, small.total_w);

  ASSERT_EQ(small.parts.size(), 8u);
  EXPECT_EQ(small.parts[0].name, "DPD");
  EXPECT_EQ(small.parts[0].watts, 0.0);
  EXPECT_EQ(small.parts[2].name, "CPRI");
  EXPECT_EQ(small.parts[2].watts, 0.0);
  for (std::size_t i : {1u, 3u, 4u, 5u, 6u, 7u}) EXPECT_GT(small.parts[i].watts, 0.0);
}

TEST(BbuPower, ReferenceIsIdentity) {
  for (BsClass cls : kAllClasses) {
    const BbuPower ref = reference_bbu_power(cls, {}, {});
    const BbuPower real = bbu_power(cls, reference_params(), {}, {}, CalibrationScalar{});
    EXPECT_EQ(real.total_w, ref.total_w);
    for (std::size_t i = 0; i < ref.parts.size(); ++i) {
      EXPECT_EQ(real.parts[i].watts, ref.parts[i].watts);
    }
  }
}

TEST(BbuPower, RawValidationPointMatchesOracle) {
  EXPECT_LT(rel_err(bbu_power(BsClass::small, validation_params(), {}, {}, {}).total_w,
                    oracle::kRawSmallValidation),
            1e-12);
  EXPECT_LT(rel_err(bbu_power(BsClass::macro, validation_params(), {}, {}, {}).total_w,
                    oracle::kRawMacroValidation),
            1e-12);
}

TEST(BbuPower, CalibratedAnchors) {
  EXPECT_LT(rel_err(calibrated_small(validation_params()), 3.6), 1e-12);
  const double massive = calibrated_small(default_real_params(128));
  EXPECT_GT(massive, 800.0);
  EXPECT_LT(rel_err(massive, oracle::kAntennaGrid[7].small_computation_w), 1e-9);
}

TEST(Calibrate, BackSolvesMeasuredPower) {
  const auto small = calibrate(BsClass::small, 3.6, validation_params(), {}, {});
  const auto macro = calibrate(BsClass::macro, 24.78, validation_params(), {}, {});
  EXPECT_LT(rel_err(small.value, oracle::kCalibrationSmall), 1e-12);
  EXPECT_LT(rel_err(macro.value, oracle::kCalibrationMacro), 1e-12);
  EXPECT_NEAR(small.value, 19.26, 0.01);

  EXPECT_LT(rel_err(bbu_power(BsClass::macro, validation_params(), {}, {}, macro).total_w, 24.78),
            1e-14);
  EXPECT_EQ(default_calibration(BsClass::small).value, small.value);
  EXPECT_EQ(default_calibration(BsClass::macro).value, macro.value);
  EXPECT_NE(small.provenance.find("3.6 W"), std::string::npos);
}

TEST(Calibrate, UnitScalarWhenMeasuredEqualsModel) {
  const double raw = bbu_power(BsClass::small, validation_params(), {}, {}, {}).total_w;
  EXPECT_EQ(calibrate(BsClass::small, raw, validation_params(), {}, {}).value, 1.0);
}

TEST(Calibrate, Errors) {
  EXPECT_THROW(calibrate(BsClass::small, 0.0, validation_params(), {}, {}), ParameterError);
  EXPECT_THROW(calibrate(BsClass::small, -2.0, validation_params(), {}, {}), ParameterError);

  PartTable idle = builtin_part_table();
  for (auto& p : idle) p.gops_small = 0.0;
  EXPECT_THROW(calibrate(BsClass::small, 3.6, validation_params(), idle, reference_params(), {}, {}),
               CalibrationError);
}

TEST(BbuPower, AntennaPolynomialHasNoConstantTerm) {
  // Fit P(N) = a N + b N^2 + c through N = 1, 2, 4 and predict N = 8.
  for (BsClass cls : kAllClasses) {
    auto p = [&](int n) {
      return bbu_power(cls, default_real_params(n), {}, {}, default_calibration(cls)).total_w;
    };
    const double p1 = p(1), p2 = p(2), p4 = p(4);
    // Divided differences on nodes 1, 2, 4.
    const double d12 = p2 - p1;
    const double d24 = (p4 - p2) / 2.0;
    const double b = (d24 - d12) / 3.0;
    const double a = d12 - 3.0 * b;
    const double c = p1 - a - b;
    EXPECT_GT(a, 0.0);
    EXPECT_GT(b, 0.0);
    EXPECT_LT(std::abs(c), 1e-9 * p1);
    EXPECT_LT(rel_err(a * 8 + b * 64 + c, p(8)), 1e-9);
    EXPECT_LT(rel_err(a * 128 + b * 128 * 128, p(128)), 1e-9);
  }
}

TEST(BbuPower, LinearInBandwidthPlusCpuConstant) {
  for (BsClass cls : kAllClasses) {
    auto at = [&](double bw) {
      SystemParams x = default_real_params(4);
      x.bandwidth_hz = bw;
      return bbu_power(cls, x, {}, {}, default_calibration(cls));
    };
    const double p10 = at(10e6).total_w;
    const double p40 = at(40e6).total_w;
    const double u = (p40 - p10) / 30e6;
    const double v = p10 - u * 10e6;
    EXPECT_LT(rel_err(u * 400e6 + v, at(400e6).total_w), 1e-9);
    const double cpu = at(10e6).parts.back().watts;
    EXPECT_EQ(at(10e6).parts.back().name, "CPU");
    EXPECT_LT(rel_err(v, cpu), 1e-6);
  }
}

TEST(BbuPower, CalibrationIsPureScale) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const SystemParams x = random_params(rng);
    const SystemParams y = random_params(rng);
    for (BsClass cls : kAllClasses) {
      const auto& c = default_calibration(cls);
      const double cal = bbu_power(cls, x, {}, {}, c).total_w / bbu_power(cls, y, {}, {}, c).total_w;
      const double raw = bbu_power(cls, x, {}, {}, {}).total_w / bbu_power(cls, y, {}, {}, {}).total_w;
      ASSERT_LT(rel_err(cal, raw), 1e-12);
    }
  }
}

TEST(BbuPower, MonotoneInEachScalingParameter) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const SystemParams base = random_params(rng);
    for (BsClass cls : kAllClasses) {
      const double p0 = bbu_power(cls, base, {}, {}, {}).total_w;
      SystemParams up = base;
      up.bandwidth_hz *= 1.5;
      EXPECT_GT(bbu_power(cls, up, {}, {}, {}).total_w, p0);
      up = base;
      up.antennas += 1;
      EXPECT_GT(bbu_power(cls, up, {}, {}, {}).total_w, p0);
      up = base;
      up.modulation_bits += 1;
      EXPECT_GE(bbu_power(cls, up, {}, {}, {}).total_w, p0);
      up = base;
      up.coding_rate = std::min(1.0, up.coding_rate * 1.1);
      EXPECT_GE(bbu_power(cls, up, {}, {}, {}).total_w, p0);
      up = base;
      up.time_duty = std::min(1.0, up.time_duty * 1.1);
      EXPECT_GE(bbu_power(cls, up, {}, {}, {}).total_w, p0);
      up = base;
      up.freq_duty = std::min(1.0, up.freq_duty * 1.1);
      EXPECT_GE(bbu_power(cls, up, {}, {}, {}).total_w, p0);
    }
  }
}

TEST(CalibrationScalar, RejectsNonPositive) {
  CalibrationScalar c{0.0, "zero"};
  EXPECT_THROW(bbu_power(BsClass::small, reference_params(), {}, {}, c), ParameterError);
}

}  // namespace
}  // namespace bspower
