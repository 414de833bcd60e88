#include "bspower/landauer.hpp"

#include <cmath>
#include <numbers>

#include "bspower/errors.hpp"

namespace bspower {

void ChipTechnology::validate() const {
  require(std::isfinite(power_coefficient) && power_coefficient >= 1.0, "power_coefficient",
          "power_coefficient >= 1", power_coefficient);
  require(std::isfinite(temperature_k) && temperature_k > 0.0, "temperature_K", "temperature_K > 0",
          temperature_k);
  require(std::isfinite(boltzmann) && boltzmann > 0.0, "boltzmann", "boltzmann > 0", boltzmann);
  require(std::isfinite(feature_size_nm) && feature_size_nm > 0.0, "feature_size_nm",
          "feature_size_nm > 0", feature_size_nm);
}

void ThroughputModel::validate() const {
  require(std::isfinite(omega) && omega > 0.0, "omega", "omega > 0", omega);
  require(std::isfinite(gamma) && gamma > 0.0 && gamma <= 1.0, "gamma", "0 < gamma <= 1", gamma);
  require(word_width_bits >= 1, "word_width_bits", "word_width_bits >= 1", word_width_bits);
}

double landauer_limit(const ChipTechnology& chip) {
  chip.validate();
  return chip.boltzmann * chip.temperature_k * std::numbers::ln2;
}

double switching_energy(const ChipTechnology& chip) {
  return chip.power_coefficient * landauer_limit(chip);
}

double gops_to_ips(double gops, const ThroughputModel& model) {
  model.validate();
  require(std::isfinite(gops) && gops >= 0.0, "gops", "gops >= 0", gops);
  return gops * 1.0e9 / model.word_width_bits;
}

double ips_to_gops(double ips, const ThroughputModel& model) {
  model.validate();
  require(std::isfinite(ips) && ips >= 0.0, "ips", "ips >= 0", ips);
  return ips * model.word_width_bits / 1.0e9;
}

double ips_to_throughput(double ips, const ThroughputModel& model) {
  model.validate();
  require(std::isfinite(ips) && ips >= 0.0, "ips", "ips >= 0", ips);
  if (ips == 0.0) return 0.0;
  return std::exp(std::log(ips / model.omega) / model.gamma);
}

double part_power(double gops, const ChipTechnology& chip, const ThroughputModel& model) {
  return ips_to_throughput(gops_to_ips(gops, model), model) * switching_energy(chip);
}

}  // namespace bspower
