#pragma once

// Whole-BS input power: transmission (PA + RF chain per antenna) plus BBU
// computation, divided through the DC-DC, mains-supply and cooling losses.

#include <optional>
#include <vector>

#include "bspower/bbu_model.hpp"

namespace bspower {

/// P_PA = P_out / (eta_pa * (1 - feed_loss)).
struct PaDecomposition {
  double p_out_w = 0.0;
  double eta_pa = 1.0;
  /// Linear fraction; -3 dB is 0.5.
  double feed_loss = 0.0;
};

struct TransmissionProfile {
  double pa_power_w = 0.0;  // per antenna
  double rf_power_w = 0.0;  // per antenna
  std::optional<PaDecomposition> pa;

  void validate() const;
};

struct LossRates {
  double sigma_dc = 0.0;
  double sigma_ms = 0.0;
  double sigma_cool = 0.0;

  /// (1 - sigma_dc)(1 - sigma_ms)(1 - sigma_cool)
  double efficiency() const { return (1.0 - sigma_dc) * (1.0 - sigma_ms) * (1.0 - sigma_cool); }
  void validate() const;
};

struct PowerBreakdown {
  std::vector<PartPower> per_part_w;
  double computation_w = 0.0;
  double transmission_w = 0.0;
  double total_w = 0.0;
  /// Losses: total - transmission - computation.
  double overhead_w = 0.0;
  double computation_ratio = 0.0;
};

/// Everything needed to evaluate one class of base station.
struct BsProfile {
  BsClass cls = BsClass::small;
  TransmissionProfile transmission;
  LossRates losses;
  PartTable parts;
  SystemParams reference;
  CalibrationScalar calibration;

  void validate() const;
};

/// Built-in profile for a class: shipped transmission and loss defaults,
/// the built-in part table, reference_params() and default_calibration().
BsProfile builtin_profile(BsClass cls);

double pa_power(double p_out_w, double eta_pa, double feed_loss);

/// antennas * (pa_power_w + rf_power_w)
double transmission_power(const TransmissionProfile& profile, int antennas);

/// (transmission + computation) / losses.efficiency()
double total_power(double transmission_w, double computation_w, const LossRates& losses);

PowerBreakdown breakdown(const BsProfile& bs, const SystemParams& params,
                         const ChipTechnology& chip, const ThroughputModel& model);

}  // namespace bspower
