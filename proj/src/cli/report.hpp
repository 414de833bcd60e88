#pragma once

// Table, CSV and JSON writers for sweep points, validation and calibration.
// CSV and JSON carry shortest round-trip numbers; tables use 6 significant
// digits.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bspower/sweep.hpp"

namespace bspower::cli {

enum class OutputFormat { table, csv, json };

struct CalibrationRow {
  BsClass cls;
  double measured_w;
  double uncalibrated_w;
  CalibrationScalar scalar;
};

/// Column names for point rows, in output order.
std::vector<std::string> point_columns(SweepAxis axis);

void write_points(std::ostream& out, OutputFormat format, SweepAxis axis,
                  const std::vector<SweepPoint>& points, const nlohmann::ordered_json& meta);

void write_validation(std::ostream& out, OutputFormat format, const ValidationReport& report,
                      const nlohmann::ordered_json& meta);

void write_calibration(std::ostream& out, OutputFormat format,
                       const std::vector<CalibrationRow>& rows, const nlohmann::ordered_json& meta);

}  // namespace bspower::cli
