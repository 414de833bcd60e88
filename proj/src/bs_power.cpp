#include "bspower/bs_power.hpp"

#include <algorithm>
#include <cmath>

#include "bspower/errors.hpp"

namespace bspower {

namespace {

bool is_fraction(double v) { return std::isfinite(v) && v >= 0.0 && v < 1.0; }

}  // namespace

double pa_power(double p_out_w, double eta_pa, double feed_loss) {
  require(std::isfinite(p_out_w) && p_out_w >= 0.0, "p_out_w", "p_out_w >= 0", p_out_w);
  require(std::isfinite(eta_pa) && eta_pa > 0.0 && eta_pa <= 1.0, "eta_pa", "0 < eta_pa <= 1",
          eta_pa);
  require(is_fraction(feed_loss), "feed_loss", "0 <= feed_loss < 1", feed_loss);
  return p_out_w / (eta_pa * (1.0 - feed_loss));
}

void TransmissionProfile::validate() const {
  require(std::isfinite(pa_power_w) && pa_power_w >= 0.0, "pa_power_w", "pa_power_w >= 0",
          pa_power_w);
  require(std::isfinite(rf_power_w) && rf_power_w >= 0.0, "rf_power_w", "rf_power_w >= 0",
          rf_power_w);
  if (pa) {
    const double expected = pa_power(pa->p_out_w, pa->eta_pa, pa->feed_loss);
    const double scale = std::max(std::abs(expected), 1e-300);
    require(std::abs(pa_power_w - expected) <= 1e-9 * scale, "pa_power_w",
            "pa_power_w = p_out_w / (eta_pa * (1 - feed_loss))", pa_power_w);
  }
}

void LossRates::validate() const {
  require(is_fraction(sigma_dc), "sigma_dc", "0 <= sigma_dc < 1", sigma_dc);
  require(is_fraction(sigma_ms), "sigma_ms", "0 <= sigma_ms < 1", sigma_ms);
  require(is_fraction(sigma_cool), "sigma_cool", "0 <= sigma_cool < 1", sigma_cool);
  require(efficiency() > 0.0, "losses", "(1-sigma_dc)(1-sigma_ms)(1-sigma_cool) > 0",
          efficiency());
}

void BsProfile::validate() const {
  transmission.validate();
  losses.validate();
  validate_part_table(parts);
  reference.validate();
  calibration.validate();
}

BsProfile builtin_profile(BsClass cls) {
  BsProfile bs;
  bs.cls = cls;
  if (cls == BsClass::macro) {
    bs.transmission = {102.6, 11.4, std::nullopt};
    bs.losses = {0.06, 0.07, 0.09};
  } else {
    bs.transmission = {1.0, 0.19, std::nullopt};
    // No active cooling in small cells.
    bs.losses = {0.08, 0.10, 0.0};
  }
  bs.parts = builtin_part_table();
  bs.reference = reference_params();
  bs.calibration = default_calibration(cls);
  return bs;
}

double transmission_power(const TransmissionProfile& profile, int antennas) {
  profile.validate();
  require(antennas >= 1, "antennas", "antennas >= 1", antennas);
  return antennas * (profile.pa_power_w + profile.rf_power_w);
}

double total_power(double transmission_w, double computation_w, const LossRates& losses) {
  losses.validate();
  require(std::isfinite(transmission_w) && transmission_w >= 0.0, "transmission_w",
          "transmission_w >= 0", transmission_w);
  require(std::isfinite(computation_w) && computation_w >= 0.0, "computation_w",
          "computation_w >= 0", computation_w);
  return (transmission_w + computation_w) / losses.efficiency();
}

PowerBreakdown breakdown(const BsProfile& bs, const SystemParams& params,
                         const ChipTechnology& chip, const ThroughputModel& model) {
  bs.validate();
  params.validate();
  BbuPower bbu =
      bbu_power(bs.cls, bs.parts, params, bs.reference, chip, model, bs.calibration);

  PowerBreakdown out;
  out.per_part_w = std::move(bbu.parts);
  out.computation_w = bbu.total_w;
  out.transmission_w = transmission_power(bs.transmission, params.antennas);
  out.total_w = total_power(out.transmission_w, out.computation_w, bs.losses);
  out.overhead_w = std::max(0.0, out.total_w - out.transmission_w - out.computation_w);
  out.computation_ratio = out.total_w > 0.0 ? out.computation_w / out.total_w : 0.0;
  return out;
}

}  // namespace bspower
