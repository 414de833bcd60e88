#pragma once

// Baseband-unit computation power: the per-part GOPS table, reference-BS
// scaling and per-class calibration.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bspower/landauer.hpp"

namespace bspower {

enum class BsClass { macro, small };

inline constexpr std::array<BsClass, 2> kAllClasses{BsClass::macro, BsClass::small};

std::string_view to_string(BsClass cls);
std::optional<BsClass> parse_bs_class(std::string_view text);

/// The six system parameters a part's workload can scale with, in table
/// column order.
enum class SystemParam { bandwidth, modulation, coding_rate, antennas, time_duty, freq_duty };

inline constexpr std::array<SystemParam, 6> kAllSystemParams{
    SystemParam::bandwidth, SystemParam::modulation, SystemParam::coding_rate,
    SystemParam::antennas,  SystemParam::time_duty,  SystemParam::freq_duty};

/// Short column label: BW, M, R, Ant, dt, df.
std::string_view short_name(SystemParam param);
std::optional<SystemParam> parse_system_param(std::string_view label);

struct SystemParams {
  double bandwidth_hz = 20.0e6;
  int antennas = 1;
  /// Bits per symbol (6 for 64-QAM).
  int modulation_bits = 6;
  double coding_rate = 1.0;
  double time_duty = 1.0;
  double freq_duty = 1.0;

  void validate() const;
  double value(SystemParam param) const;

  bool operator==(const SystemParams&) const = default;
};

/// Reference BS against which part powers are measured: 20 MHz, 1 antenna,
/// 64-QAM, rate 1, full time and frequency duty.
SystemParams reference_params();

/// Default real BS: 20 MHz, 64-QAM, rate 5/6, full duty; `antennas` given.
SystemParams default_real_params(int antennas = 1);

/// Operating point of the field-measurement comparison: 10 MHz, 2x2,
/// otherwise default_real_params().
SystemParams validation_params();

/// One hardware part of the BBU.
struct BbuPartProfile {
  std::string name;
  double gops_macro = 0.0;
  double gops_small = 0.0;
  /// Exponent per SystemParam: 0 independent, 1 linear, 2 quadratic.
  std::array<int, 6> exponents{};

  double gops(BsClass cls) const { return cls == BsClass::macro ? gops_macro : gops_small; }
  int exponent(SystemParam param) const { return exponents[static_cast<std::size_t>(param)]; }
  int& exponent(SystemParam param) { return exponents[static_cast<std::size_t>(param)]; }

  void validate() const;
};

using PartTable = std::vector<BbuPartProfile>;

/// Part names in table row order.
inline constexpr std::array<std::string_view, 8> kPartNames{
    "DPD", "Filter", "CPRI", "OFDM", "FD_linear", "FD_nonlinear", "FEC", "CPU"};

/// The eight built-in rows. Immutable.
const PartTable& builtin_part_table();

/// Rejects bad rows, unknown or duplicate names.
void validate_part_table(std::span<const BbuPartProfile> parts);

struct CalibrationScalar {
  double value = 1.0;
  std::string provenance = "raw";

  void validate() const;
};

struct PartPower {
  std::string name;
  double watts = 0.0;
};

struct BbuPower {
  std::vector<PartPower> parts;
  double total_w = 0.0;
};

/// prod_i (real_i / ref_i)^S_i over the six system parameters.
double part_scaling_factor(const BbuPartProfile& part, const SystemParams& real,
                           const SystemParams& ref);

/// Per-part power of the reference BBU, uncalibrated.
BbuPower reference_bbu_power(BsClass cls, std::span<const BbuPartProfile> parts,
                             const ChipTechnology& chip, const ThroughputModel& model);
BbuPower reference_bbu_power(BsClass cls, const ChipTechnology& chip, const ThroughputModel& model);

/// c * sum_p alpha_p(real, ref) * P_p^ref. Each part is scaled with its own
/// exponents.
BbuPower bbu_power(BsClass cls, std::span<const BbuPartProfile> parts, const SystemParams& real,
                   const SystemParams& ref, const ChipTechnology& chip,
                   const ThroughputModel& model, const CalibrationScalar& calibration);
BbuPower bbu_power(BsClass cls, const SystemParams& real, const ChipTechnology& chip,
                   const ThroughputModel& model, const CalibrationScalar& calibration);

/// Scalar c such that bbu_power at `at` equals `measured_pbb`.
CalibrationScalar calibrate(BsClass cls, double measured_pbb, const SystemParams& at,
                            std::span<const BbuPartProfile> parts, const SystemParams& ref,
                            const ChipTechnology& chip, const ThroughputModel& model);
CalibrationScalar calibrate(BsClass cls, double measured_pbb, const SystemParams& at,
                            const ChipTechnology& chip, const ThroughputModel& model);

/// Computation power the shipped calibration is fitted to at validation_params():
/// 24.78 W macro, 3.6 W small.
double calibration_target_w(BsClass cls);

/// Shipped calibration: calibrate() against calibration_target_w() with the
/// built-in table and default chip and throughput model.
const CalibrationScalar& default_calibration(BsClass cls);

}  // namespace bspower
