#include "report.hpp"

#include <algorithm>
#include <variant>

#include "bspower/format.hpp"

namespace bspower::cli {

namespace {

using nlohmann::ordered_json;

using Cell = std::variant<std::string, double>;
using Row = std::vector<Cell>;

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<Row>& rows) {
  std::vector<std::vector<std::string>> text;
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    auto& line = text.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(std::holds_alternative<double>(row[c])
                         ? format_significant(std::get<double>(row[c]), 6)
                         : std::get<std::string>(row[c]));
      width[c] = std::max(width[c], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& line : text) emit(line);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<Row>& rows) {
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      if (std::holds_alternative<double>(row[c])) {
        out << format_shortest(std::get<double>(row[c]));
      } else {
        out << std::get<std::string>(row[c]);
      }
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<Row>& rows, const ordered_json& meta) {
  ordered_json doc;
  doc["meta"] = meta;
  doc["rows"] = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::visit([&](const auto& v) { obj[header[c]] = v; }, row[c]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

void write(std::ostream& out, OutputFormat format, const std::vector<std::string>& header,
           const std::vector<Row>& rows, const ordered_json& meta) {
  switch (format) {
    case OutputFormat::table: write_table(out, header, rows); break;
    case OutputFormat::csv: write_csv(out, header, rows); break;
    case OutputFormat::json: write_json(out, header, rows, meta); break;
  }
}

}  // namespace

std::vector<std::string> point_columns(SweepAxis axis) {
  std::vector<std::string> cols{std::string(to_string(axis)), "class"};
  for (auto name : kPartNames) cols.push_back(std::string(name) + "_w");
  for (const char* c : {"computation_w", "transmission_w", "overhead_w", "total_w", "ratio"}) {
    cols.emplace_back(c);
  }
  return cols;
}

void write_points(std::ostream& out, OutputFormat format, SweepAxis axis,
                  const std::vector<SweepPoint>& points, const ordered_json& meta) {
  std::vector<Row> rows;
  for (const auto& p : points) {
    Row row{p.axis_value, std::string(to_string(p.cls))};
    // Parts follow table row order regardless of the profile's row order.
    for (auto name : kPartNames) {
      auto it = std::find_if(p.breakdown.per_part_w.begin(), p.breakdown.per_part_w.end(),
                             [&](const PartPower& pp) { return pp.name == name; });
      row.emplace_back(it == p.breakdown.per_part_w.end() ? 0.0 : it->watts);
    }
    const auto& b = p.breakdown;
    for (double v : {b.computation_w, b.transmission_w, b.overhead_w, b.total_w,
                     b.computation_ratio}) {
      row.emplace_back(v);
    }
    rows.push_back(std::move(row));
  }
  write(out, format, point_columns(axis), rows, meta);
}

void write_validation(std::ostream& out, OutputFormat format, const ValidationReport& report,
                      const ordered_json& meta) {
  const std::vector<std::string> header{"class",         "quantity",
                                        "model_w",       "paper_model_w",
                                        "measured_w",    "error_vs_paper_model",
                                        "error_vs_measured"};
  std::vector<Row> rows;
  for (const auto& e : report.entries) {
    rows.push_back(Row{std::string(to_string(e.cls)), std::string(to_string(e.quantity)),
                       e.model_w, e.paper_model_w, e.measured_w, e.error_vs_paper_model,
                       e.error_vs_measured});
  }
  write(out, format, header, rows, meta);
}

void write_calibration(std::ostream& out, OutputFormat format,
                       const std::vector<CalibrationRow>& rows_in, const ordered_json& meta) {
  const std::vector<std::string> header{"class", "measured_w", "uncalibrated_w", "calibration",
                                        "provenance"};
  std::vector<Row> rows;
  for (const auto& r : rows_in) {
    std::string provenance = r.scalar.provenance;
    if (format == OutputFormat::csv) std::replace(provenance.begin(), provenance.end(), ',', ';');
    rows.push_back(Row{std::string(to_string(r.cls)), r.measured_w, r.uncalibrated_w,
                       r.scalar.value, provenance});
  }
  write(out, format, header, rows, meta);
}

}  // namespace bspower::cli
