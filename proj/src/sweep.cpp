#include "bspower/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "bspower/errors.hpp"
#include "bspower/format.hpp"

namespace bspower {

std::string_view to_string(SweepAxis axis) {
  return axis == SweepAxis::antennas ? "antennas" : "bandwidth_hz";
}

std::string_view to_string(Quantity quantity) {
  return quantity == Quantity::total_w ? "total_w" : "computation_w";
}

std::string_view to_string(Figure figure) {
  switch (figure) {
    case Figure::fig4a: return "fig4a";
    case Figure::fig4b: return "fig4b";
    case Figure::fig5a: return "fig5a";
    case Figure::fig5b: return "fig5b";
  }
  return "?";
}

std::string_view to_string(Metric metric) {
  return metric == Metric::computation_w ? "computation_w" : "computation_ratio";
}

void SweepSpec::validate() const {
  if (values.empty()) throw std::invalid_argument("sweep values: must be non-empty");
  if (classes.empty()) throw std::invalid_argument("sweep classes: must be non-empty");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (std::find(classes.begin(), classes.begin() + i, classes[i]) != classes.begin() + i) {
      throw std::invalid_argument("sweep classes: duplicate class '" +
                                  std::string(to_string(classes[i])) + "'");
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (axis == SweepAxis::antennas) {
      require(std::isfinite(v) && v >= 1.0 && v == std::floor(v) && v <= 1.0e9, "antennas",
              "antennas is a whole number >= 1", v);
    } else {
      require(std::isfinite(v) && v > 0.0, "bandwidth_hz", "bandwidth_hz > 0", v);
    }
    if (i > 0) {
      require(v > values[i - 1], "sweep values", "values strictly increasing", v);
    }
  }
  base.validate();
}

SystemParams SweepSpec::at(double value) const {
  SystemParams p = base;
  if (axis == SweepAxis::antennas) {
    p.antennas = static_cast<int>(value);
  } else {
    p.bandwidth_hz = value;
  }
  return p;
}

SweepError::SweepError(double axis_value, BsClass cls, const std::string& cause)
    : std::runtime_error("sweep point " + format_shortest(axis_value) + " (" +
                         std::string(to_string(cls)) + ") failed: " + cause),
      axis_value_(axis_value),
      cls_(cls) {}

std::vector<SweepPoint> sweep(const SweepSpec& spec, const ProfileSet& profiles,
                              const ChipTechnology& chip, const ThroughputModel& model) {
  spec.validate();
  std::vector<SweepPoint> out;
  out.reserve(spec.values.size() * spec.classes.size());
  for (double v : spec.values) {
    for (BsClass cls : spec.classes) {
      try {
        out.push_back({v, cls, breakdown(profiles.get(cls), spec.at(v), chip, model)});
      } catch (const std::exception& e) {
        throw SweepError(v, cls, e.what());
      }
    }
  }
  return out;
}

namespace {

struct PublishedPair {
  BsClass cls;
  Quantity quantity;
  double paper_model_w;
  double measured_w;
};

// Published model values and field measurements at 10 MHz, 2x2.
constexpr PublishedPair kPublished[] = {
    {BsClass::macro, Quantity::total_w, 317.84, 321.6},
    {BsClass::macro, Quantity::computation_w, 24.78, 29.68},
    {BsClass::small, Quantity::total_w, 7.22, 6.2},
    {BsClass::small, Quantity::computation_w, 3.6, 2.4},
};

}  // namespace

bool ValidationReport::within(double tolerance) const {
  return std::all_of(entries.begin(), entries.end(), [tolerance](const ValidationEntry& e) {
    return e.error_vs_paper_model <= tolerance;
  });
}

ValidationReport validate_earth(const ProfileSet& profiles, const ChipTechnology& chip,
                                const ThroughputModel& model) {
  ValidationReport report;
  report.params = validation_params();
  for (const auto& pub : kPublished) {
    const PowerBreakdown b = breakdown(profiles.get(pub.cls), report.params, chip, model);
    const double v = pub.quantity == Quantity::total_w ? b.total_w : b.computation_w;
    report.entries.push_back({pub.cls, pub.quantity, v, pub.paper_model_w, pub.measured_w,
                              std::abs(v - pub.paper_model_w) / pub.paper_model_w,
                              std::abs(v - pub.measured_w) / pub.measured_w});
  }
  return report;
}

SweepSpec figure_spec(Figure figure) {
  SweepSpec spec;
  if (figure == Figure::fig4a || figure == Figure::fig5a) {
    spec.axis = SweepAxis::antennas;
    spec.values = {1, 2, 4, 8, 16, 32, 64, 128};
    spec.base = default_real_params(1);
  } else {
    spec.axis = SweepAxis::bandwidth_hz;
    spec.values = {5e6, 10e6, 20e6, 40e6, 80e6, 100e6, 200e6, 400e6};
    spec.base = default_real_params(4);
  }
  return spec;
}

Metric figure_metric(Figure figure) {
  return figure == Figure::fig4a || figure == Figure::fig4b ? Metric::computation_w
                                                            : Metric::computation_ratio;
}

double metric_value(const SweepPoint& point, Metric metric) {
  return metric == Metric::computation_w ? point.breakdown.computation_w
                                         : point.breakdown.computation_ratio;
}

FigureSeries figure_series(Figure figure, const ProfileSet& profiles, const ChipTechnology& chip,
                           const ThroughputModel& model) {
  const SweepSpec spec = figure_spec(figure);
  return FigureSeries{figure, spec.axis, figure_metric(figure),
                      sweep(spec, profiles, chip, model)};
}

FigureSeries figure_series(Figure figure) {
  return figure_series(figure, ProfileSet{}, ChipTechnology{}, ThroughputModel{});
}

}  // namespace bspower
