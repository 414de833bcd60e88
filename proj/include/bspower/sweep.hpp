#pragma once

// Parameter sweeps over antennas or bandwidth, the figure grids, and the
// comparison against the published field measurements.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bspower/bs_power.hpp"

namespace bspower {

/// One profile per BS class.
struct ProfileSet {
  BsProfile macro = builtin_profile(BsClass::macro);
  BsProfile small = builtin_profile(BsClass::small);

  const BsProfile& get(BsClass cls) const { return cls == BsClass::macro ? macro : small; }
  BsProfile& get(BsClass cls) { return cls == BsClass::macro ? macro : small; }
};

enum class SweepAxis { antennas, bandwidth_hz };

std::string_view to_string(SweepAxis axis);

struct SweepSpec {
  SweepAxis axis = SweepAxis::antennas;
  /// Strictly increasing. Antenna values must be whole numbers.
  std::vector<double> values;
  /// Non-axis parameters.
  SystemParams base = default_real_params();
  std::vector<BsClass> classes{BsClass::macro, BsClass::small};

  void validate() const;
  /// `base` with the axis parameter set to `value`.
  SystemParams at(double value) const;
};

struct SweepPoint {
  double axis_value = 0.0;
  BsClass cls = BsClass::small;
  PowerBreakdown breakdown;
};

/// A sweep point failed; what() names the point and the underlying cause.
class SweepError : public std::runtime_error {
 public:
  SweepError(double axis_value, BsClass cls, const std::string& cause);

  double axis_value() const noexcept { return axis_value_; }
  BsClass bs_class() const noexcept { return cls_; }

 private:
  double axis_value_;
  BsClass cls_;
};

/// One breakdown per (value, class), ordered by axis value then by the order
/// of spec.classes.
std::vector<SweepPoint> sweep(const SweepSpec& spec, const ProfileSet& profiles,
                              const ChipTechnology& chip, const ThroughputModel& model);

enum class Quantity { total_w, computation_w };

std::string_view to_string(Quantity quantity);

struct ValidationEntry {
  BsClass cls = BsClass::small;
  Quantity quantity = Quantity::total_w;
  double model_w = 0.0;
  double paper_model_w = 0.0;
  double measured_w = 0.0;
  /// |model - paper_model| / paper_model
  double error_vs_paper_model = 0.0;
  /// |model - measured| / measured
  double error_vs_measured = 0.0;
};

struct ValidationReport {
  SystemParams params;
  std::vector<ValidationEntry> entries;

  /// True when every entry is within `tolerance` of the published model value.
  bool within(double tolerance) const;
};

/// Evaluates both classes at validation_params() against the published
/// model and field-measured totals and computation powers.
ValidationReport validate_earth(const ProfileSet& profiles, const ChipTechnology& chip,
                                const ThroughputModel& model);

enum class Figure { fig4a, fig4b, fig5a, fig5b };
enum class Metric { computation_w, computation_ratio };

std::string_view to_string(Figure figure);
std::string_view to_string(Metric metric);

/// Antennas {1, 2, 4, ..., 128} at 20 MHz for fig4a/fig5a; bandwidth
/// {5, 10, 20, 40, 80, 100, 200, 400} MHz at 4 antennas for fig4b/fig5b.
SweepSpec figure_spec(Figure figure);
Metric figure_metric(Figure figure);

struct FigureSeries {
  Figure figure = Figure::fig4a;
  SweepAxis axis = SweepAxis::antennas;
  Metric metric = Metric::computation_w;
  std::vector<SweepPoint> points;
};

double metric_value(const SweepPoint& point, Metric metric);

FigureSeries figure_series(Figure figure, const ProfileSet& profiles, const ChipTechnology& chip,
                           const ThroughputModel& model);
FigureSeries figure_series(Figure figure);

}  // namespace bspower
