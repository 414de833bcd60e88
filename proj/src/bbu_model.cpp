#include "bspower/bbu_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "bspower/errors.hpp"
#include "bspower/format.hpp"

namespace bspower {

std::string_view to_string(BsClass cls) { return cls == BsClass::macro ? "macro" : "small"; }

std::optional<BsClass> parse_bs_class(std::string_view text) {
  if (text == "macro") return BsClass::macro;
  if (text == "small") return BsClass::small;
  return std::nullopt;
}

std::string_view short_name(SystemParam param) {
  switch (param) {
    case SystemParam::bandwidth: return "BW";
    case SystemParam::modulation: return "M";
    case SystemParam::coding_rate: return "R";
    case SystemParam::antennas: return "Ant";
    case SystemParam::time_duty: return "dt";
    case SystemParam::freq_duty: return "df";
  }
  return "?";
}

std::optional<SystemParam> parse_system_param(std::string_view label) {
  for (SystemParam p : kAllSystemParams) {
    if (short_name(p) == label) return p;
  }
  return std::nullopt;
}

void SystemParams::validate() const {
  require(std::isfinite(bandwidth_hz) && bandwidth_hz > 0.0, "bandwidth_hz", "bandwidth_hz > 0",
          bandwidth_hz);
  require(antennas >= 1, "antennas", "antennas >= 1", antennas);
  require(modulation_bits >= 1, "modulation_bits", "modulation_bits >= 1", modulation_bits);
  require(coding_rate > 0.0 && coding_rate <= 1.0, "coding_rate", "0 < coding_rate <= 1",
          coding_rate);
  require(time_duty > 0.0 && time_duty <= 1.0, "time_duty", "0 < time_duty <= 1", time_duty);
  require(freq_duty > 0.0 && freq_duty <= 1.0, "freq_duty", "0 < freq_duty <= 1", freq_duty);
}

double SystemParams::value(SystemParam param) const {
  switch (param) {
    case SystemParam::bandwidth: return bandwidth_hz;
    case SystemParam::modulation: return modulation_bits;
    case SystemParam::coding_rate: return coding_rate;
    case SystemParam::antennas: return antennas;
    case SystemParam::time_duty: return time_duty;
    case SystemParam::freq_duty: return freq_duty;
  }
  return 0.0;
}

SystemParams reference_params() { return SystemParams{20.0e6, 1, 6, 1.0, 1.0, 1.0}; }

SystemParams default_real_params(int antennas) {
  return SystemParams{20.0e6, antennas, 6, 5.0 / 6.0, 1.0, 1.0};
}

SystemParams validation_params() {
  SystemParams p = default_real_params(2);
  p.bandwidth_hz = 10.0e6;
  return p;
}

void BbuPartProfile::validate() const {
  require(std::isfinite(gops_macro) && gops_macro >= 0.0, "gops_macro", "gops_macro >= 0",
          gops_macro);
  require(std::isfinite(gops_small) && gops_small >= 0.0, "gops_small", "gops_small >= 0",
          gops_small);
  for (SystemParam p : kAllSystemParams) {
    const int s = exponent(p);
    if (s < 0 || s > 2) {
      throw ParameterError(name + ".exponents." + std::string(short_name(p)),
                           "exponent in {0, 1, 2}", s);
    }
  }
}

const PartTable& builtin_part_table() {
  //                                 BW M  R  Ant dt df
  static const PartTable table{
      {"DPD", 160.0, 0.0, {1, 0, 0, 1, 1, 0}},
      {"Filter", 400.0, 250.0, {1, 0, 0, 1, 1, 0}},
      {"CPRI", 720.0, 0.0, {1, 1, 1, 1, 1, 1}},
      {"OFDM", 160.0, 120.0, {1, 0, 0, 1, 1, 0}},
      {"FD_linear", 90.0, 50.0, {1, 0, 0, 1, 1, 1}},
      {"FD_nonlinear", 30.0, 15.0, {1, 0, 0, 2, 1, 1}},
      {"FEC", 140.0, 130.0, {1, 1, 1, 1, 1, 1}},
      {"CPU", 400.0, 40.0, {0, 0, 0, 1, 0, 0}},
  };
  return table;
}

void validate_part_table(std::span<const BbuPartProfile> parts) {
  std::set<std::string> seen;
  for (const auto& part : parts) {
    if (std::find(kPartNames.begin(), kPartNames.end(), part.name) == kPartNames.end()) {
      throw std::invalid_argument("unknown BBU part name '" + part.name + "'");
    }
    if (!seen.insert(part.name).second) {
      throw std::invalid_argument("duplicate BBU part name '" + part.name + "'");
    }
    part.validate();
  }
}

void CalibrationScalar::validate() const {
  require(std::isfinite(value) && value > 0.0, "calibration.value", "calibration value > 0", value);
}

double part_scaling_factor(const BbuPartProfile& part, const SystemParams& real,
                           const SystemParams& ref) {
  real.validate();
  ref.validate();
  double alpha = 1.0;
  for (SystemParam p : kAllSystemParams) {
    const double ratio = real.value(p) / ref.value(p);
    for (int k = 0; k < part.exponent(p); ++k) alpha *= ratio;
  }
  return alpha;
}

BbuPower reference_bbu_power(BsClass cls, std::span<const BbuPartProfile> parts,
                             const ChipTechnology& chip, const ThroughputModel& model) {
  BbuPower out;
  out.parts.reserve(parts.size());
  for (const auto& part : parts) {
    const double w = part_power(part.gops(cls), chip, model);
    out.parts.push_back({part.name, w});
    out.total_w += w;
  }
  return out;
}

BbuPower reference_bbu_power(BsClass cls, const ChipTechnology& chip,
                             const ThroughputModel& model) {
  return reference_bbu_power(cls, builtin_part_table(), chip, model);
}

BbuPower bbu_power(BsClass cls, std::span<const BbuPartProfile> parts, const SystemParams& real,
                   const SystemParams& ref, const ChipTechnology& chip,
                   const ThroughputModel& model, const CalibrationScalar& calibration) {
  calibration.validate();
  BbuPower out = reference_bbu_power(cls, parts, chip, model);
  out.total_w = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.parts[i].watts *= calibration.value * part_scaling_factor(parts[i], real, ref);
    out.total_w += out.parts[i].watts;
  }
  return out;
}

BbuPower bbu_power(BsClass cls, const SystemParams& real, const ChipTechnology& chip,
                   const ThroughputModel& model, const CalibrationScalar& calibration) {
  return bbu_power(cls, builtin_part_table(), real, reference_params(), chip, model, calibration);
}

CalibrationScalar calibrate(BsClass cls, double measured_pbb, const SystemParams& at,
                            std::span<const BbuPartProfile> parts, const SystemParams& ref,
                            const ChipTechnology& chip, const ThroughputModel& model) {
  require(std::isfinite(measured_pbb) && measured_pbb > 0.0, "measured_pbb", "measured_pbb > 0",
          measured_pbb);
  const double raw = bbu_power(cls, parts, at, ref, chip, model, CalibrationScalar{}).total_w;
  if (!(raw > 0.0)) {
    throw CalibrationError("cannot calibrate " + std::string(to_string(cls)) +
                           ": uncalibrated BBU power is zero at the fit point");
  }
  return CalibrationScalar{
      measured_pbb / raw,
      "fit to " + format_shortest(measured_pbb) + " W (" + std::string(to_string(cls)) + ", " +
          format_shortest(at.bandwidth_hz / 1e6) + " MHz, " + std::to_string(at.antennas) +
          " antennas, M=" + std::to_string(at.modulation_bits) +
          ", R=" + format_significant(at.coding_rate, 4) + ")"};
}

CalibrationScalar calibrate(BsClass cls, double measured_pbb, const SystemParams& at,
                            const ChipTechnology& chip, const ThroughputModel& model) {
  return calibrate(cls, measured_pbb, at, builtin_part_table(), reference_params(), chip, model);
}

double calibration_target_w(BsClass cls) { return cls == BsClass::macro ? 24.78 : 3.6; }

const CalibrationScalar& default_calibration(BsClass cls) {
  static const CalibrationScalar macro = calibrate(
      BsClass::macro, calibration_target_w(BsClass::macro), validation_params(), {}, {});
  static const CalibrationScalar small = calibrate(
      BsClass::small, calibration_target_w(BsClass::small), validation_params(), {}, {});
  return cls == BsClass::macro ? macro : small;
}

}  // namespace bspower
