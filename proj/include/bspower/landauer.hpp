#pragma once

// Computation power of a chip from its instruction rate, anchored on the
// Landauer bound kT ln 2 for erasing one bit.

namespace bspower {

/// Process parameters that set the energy of one bit operation.
struct ChipTechnology {
  double feature_size_nm = 22.0;
  /// Ratio of real transistor switching energy to the Landauer limit.
  double power_coefficient = 1.0e3;
  double temperature_k = 300.0;
  /// J/K. Kept at 1.38e-23 rather than CODATA so anchored values reproduce.
  double boltzmann = 1.38e-23;

  void validate() const;
};

/// Power law between instruction rate and bit-operation rate:
/// rho = (IPS / omega)^(1 / gamma).
struct ThroughputModel {
  double omega = 0.1;
  double gamma = 0.64;
  int word_width_bits = 64;

  void validate() const;
};

/// k T ln 2, joule per erased bit.
double landauer_limit(const ChipTechnology& chip);

/// Energy of one bit operation on a real transistor: power_coefficient * landauer_limit.
double switching_energy(const ChipTechnology& chip);

/// IPS = GOPS * 1e9 / word width.
double gops_to_ips(double gops, const ThroughputModel& model);
double ips_to_gops(double ips, const ThroughputModel& model);

/// Bit operations per second for an instruction rate.
double ips_to_throughput(double ips, const ThroughputModel& model);

/// Watts drawn by a hardware part rated at `gops`.
double part_power(double gops, const ChipTechnology& chip, const ThroughputModel& model);

}  // namespace bspower
