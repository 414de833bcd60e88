#include "bspower/cli.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "bspower/config.hpp"
#include "bspower/errors.hpp"
#include "bspower/format.hpp"
#include "report.hpp"

namespace bspower::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CalibrationMode { standard, raw, fit };

/// Everything the flags can set. Unset optionals keep the command's base.
struct RunConfig {
  std::string command;
  std::string bs_class = "both";
  std::optional<std::string> bandwidth;
  std::optional<int> antennas;
  std::optional<int> modulation_bits;
  std::optional<double> coding_rate;
  std::optional<double> time_duty;
  std::optional<double> freq_duty;
  std::optional<double> epsilon;
  std::optional<double> temperature_k;
  std::string calibration = "default";
  std::string format = "table";
  std::optional<std::string> output;
  std::optional<std::string> config;
  // sweep
  std::string axis = "antennas";
  std::string values;
  // figures
  std::string figure = "fig4a";
  // validate
  double tolerance = 0.01;
  // calibrate
  std::optional<double> measured_w;
};

CalibrationMode calibration_mode(const RunConfig& rc) {
  if (rc.calibration == "raw") return CalibrationMode::raw;
  if (rc.calibration == "fit") return CalibrationMode::fit;
  return CalibrationMode::standard;
}

OutputFormat output_format(const RunConfig& rc) {
  if (rc.format == "csv") return OutputFormat::csv;
  if (rc.format == "json") return OutputFormat::json;
  return OutputFormat::table;
}

SweepAxis sweep_axis(const RunConfig& rc) {
  return rc.axis == "bandwidth" ? SweepAxis::bandwidth_hz : SweepAxis::antennas;
}

Figure figure_choice(const RunConfig& rc) {
  if (rc.figure == "fig4b") return Figure::fig4b;
  if (rc.figure == "fig5a") return Figure::fig5a;
  if (rc.figure == "fig5b") return Figure::fig5b;
  return Figure::fig4a;
}

std::vector<BsClass> selected_classes(const std::string& text) {
  if (text == "both") return {kAllClasses.begin(), kAllClasses.end()};
  if (auto cls = parse_bs_class(text)) return {*cls};
  throw UsageError("--class: expected macro, small or both (got '" + text + "')");
}

SystemParams apply_overrides(const RunConfig& rc, SystemParams p) {
  if (rc.bandwidth) p.bandwidth_hz = parse_bandwidth(*rc.bandwidth);
  if (rc.antennas) p.antennas = *rc.antennas;
  if (rc.modulation_bits) p.modulation_bits = *rc.modulation_bits;
  if (rc.coding_rate) p.coding_rate = *rc.coding_rate;
  if (rc.time_duty) p.time_duty = *rc.time_duty;
  if (rc.freq_duty) p.freq_duty = *rc.freq_duty;
  p.validate();
  return p;
}

ModelConfig load_model(const RunConfig& rc, const Environment& env) {
  ModelConfig model;
  if (rc.config) {
    model = load_profiles(*rc.config);
  } else if (env.config_path && !env.config_path->empty()) {
    model = load_profiles(*env.config_path);
  }
  if (rc.epsilon) model.chip.power_coefficient = *rc.epsilon;
  if (rc.temperature_k) model.chip.temperature_k = *rc.temperature_k;
  model.chip.validate();
  model.throughput.validate();

  for (BsClass cls : kAllClasses) {
    BsProfile& bs = model.profiles.get(cls);
    switch (calibration_mode(rc)) {
      case CalibrationMode::standard: break;
      case CalibrationMode::raw: bs.calibration = CalibrationScalar{}; break;
      case CalibrationMode::fit:
        bs.calibration = calibrate(cls, calibration_target_w(cls), validation_params(), bs.parts,
                                   bs.reference, model.chip, model.throughput);
        break;
    }
  }
  return model;
}

ordered_json params_json(const SystemParams& p) {
  ordered_json j;
  j["bandwidth_hz"] = p.bandwidth_hz;
  j["antennas"] = p.antennas;
  j["modulation_bits"] = p.modulation_bits;
  j["coding_rate"] = p.coding_rate;
  j["time_duty"] = p.time_duty;
  j["freq_duty"] = p.freq_duty;
  return j;
}

ordered_json base_meta(const RunConfig& rc, const ModelConfig& model) {
  ordered_json meta;
  meta["command"] = rc.command;
  meta["calibration_mode"] = rc.calibration;
  ordered_json cal;
  for (BsClass cls : kAllClasses) cal[std::string(to_string(cls))] = model.profiles.get(cls).calibration.value;
  meta["calibration"] = cal;
  meta["chip"] = {{"feature_size_nm", model.chip.feature_size_nm},
                  {"power_coefficient", model.chip.power_coefficient},
                  {"temperature_K", model.chip.temperature_k},
                  {"boltzmann", model.chip.boltzmann}};
  meta["throughput"] = {{"omega", model.throughput.omega},
                        {"gamma", model.throughput.gamma},
                        {"word_width_bits", model.throughput.word_width_bits}};
  return meta;
}

std::vector<double> parse_values(const RunConfig& rc) {
  std::vector<double> values;
  std::stringstream ss(rc.values);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (sweep_axis(rc) == SweepAxis::bandwidth_hz) {
      values.push_back(parse_bandwidth(item));
    } else {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (item.empty() || used != item.size()) {
        throw UsageError("--values: cannot parse antenna count '" + item + "'");
      }
      values.push_back(v);
    }
  }
  if (values.empty()) throw UsageError("--values: expected a comma-separated list");
  return values;
}

int run_breakdown(const RunConfig& rc, const ModelConfig& model, std::ostream& out) {
  const auto classes = selected_classes(rc.bs_class);
  const SystemParams params = apply_overrides(rc, default_real_params(1));
  std::vector<SweepPoint> points;
  for (BsClass cls : classes) {
    points.push_back({static_cast<double>(params.antennas), cls,
                      breakdown(model.profiles.get(cls), params, model.chip, model.throughput)});
  }
  auto meta = base_meta(rc, model);
  meta["params"] = params_json(params);
  write_points(out, output_format(rc), SweepAxis::antennas, points, meta);
  return kExitOk;
}

int run_sweep(const RunConfig& rc, const ModelConfig& model, std::ostream& out) {
  SweepSpec spec;
  spec.axis = sweep_axis(rc);
  spec.classes = selected_classes(rc.bs_class);
  spec.base = apply_overrides(rc, default_real_params(sweep_axis(rc) == SweepAxis::bandwidth_hz ? 4 : 1));
  spec.values = parse_values(rc);
  spec.validate();
  const auto points = sweep(spec, model.profiles, model.chip, model.throughput);
  auto meta = base_meta(rc, model);
  meta["axis"] = to_string(spec.axis);
  meta["base_params"] = params_json(spec.base);
  write_points(out, output_format(rc), spec.axis, points, meta);
  return kExitOk;
}

int run_figures(const RunConfig& rc, const ModelConfig& model, std::ostream& out) {
  const FigureSeries series = figure_series(figure_choice(rc), model.profiles, model.chip, model.throughput);
  auto meta = base_meta(rc, model);
  meta["figure"] = to_string(series.figure);
  meta["axis"] = to_string(series.axis);
  meta["metric"] = to_string(series.metric);
  meta["base_params"] = params_json(figure_spec(figure_choice(rc)).base);
  write_points(out, output_format(rc), series.axis, series.points, meta);
  return kExitOk;
}

int run_validate(const RunConfig& rc, const ModelConfig& model, std::ostream& out,
                 std::ostream& err) {
  if (!(rc.tolerance >= 0.0)) {
    throw ParameterError("tolerance", "tolerance >= 0", rc.tolerance);
  }
  const ValidationReport report = validate_earth(model.profiles, model.chip, model.throughput);
  const bool pass = report.within(rc.tolerance);
  auto meta = base_meta(rc, model);
  meta["params"] = params_json(report.params);
  meta["tolerance"] = rc.tolerance;
  meta["pass"] = pass;
  write_validation(out, output_format(rc), report, meta);
  if (!pass) {
    err << "validate: model deviates from the published model values by more than "
        << format_shortest(rc.tolerance) << " relative\n";
    return kExitValidationFailed;
  }
  return kExitOk;
}

int run_calibrate(const RunConfig& rc, const ModelConfig& model, std::ostream& out) {
  const auto classes = selected_classes(rc.bs_class);
  const SystemParams at = apply_overrides(rc, validation_params());
  std::vector<CalibrationRow> rows;
  for (BsClass cls : classes) {
    const BsProfile& bs = model.profiles.get(cls);
    const double measured = rc.measured_w.value_or(calibration_target_w(cls));
    const double raw =
        bbu_power(cls, bs.parts, at, bs.reference, model.chip, model.throughput, {}).total_w;
    rows.push_back({cls, measured, raw,
                    calibrate(cls, measured, at, bs.parts, bs.reference, model.chip,
                              model.throughput)});
  }
  auto meta = base_meta(rc, model);
  meta["params"] = params_json(at);
  write_calibration(out, output_format(rc), rows, meta);
  return kExitOk;
}

void add_common(CLI::App& sub, RunConfig& rc, const SystemParams& defaults, bool point_params) {
  sub.add_option("--config", rc.config,
                 "JSON profile overrides (default: $BSPOWER_CONFIG when set)");
  sub.add_option("--class", rc.bs_class, "BS class: macro, small or both")->capture_default_str();
  if (point_params) {
    sub.add_option("--bandwidth", rc.bandwidth, "Bandwidth in Hz (20e6) or with suffix (20MHz)")
        ->default_str(format_shortest(defaults.bandwidth_hz));
    sub.add_option("--antennas", rc.antennas, "Number of antennas")
        ->default_str(std::to_string(defaults.antennas));
  }
  sub.add_option("--modulation", rc.modulation_bits, "Bits per symbol (6 = 64-QAM)")
      ->default_str(std::to_string(defaults.modulation_bits));
  sub.add_option("--coding-rate", rc.coding_rate, "Coding rate in (0, 1]")
      ->default_str(format_significant(defaults.coding_rate, 6));
  sub.add_option("--time-duty", rc.time_duty, "Time-domain duty cycle in (0, 1]")
      ->default_str(format_shortest(defaults.time_duty));
  sub.add_option("--freq-duty", rc.freq_duty, "Frequency-domain duty cycle in (0, 1]")
      ->default_str(format_shortest(defaults.freq_duty));
  sub.add_option("--epsilon", rc.epsilon, "Power coefficient, switching energy over kT ln 2")
      ->default_str(format_shortest(ChipTechnology{}.power_coefficient));
  sub.add_option("--temperature", rc.temperature_k, "Chip temperature in kelvin")
      ->default_str(format_shortest(ChipTechnology{}.temperature_k));
  sub.add_option("--calibration", rc.calibration,
                 "default: shipped scalars; raw: c = 1; fit: refit to the published P_BB with the current chip")
      ->check(CLI::IsMember({"default", "raw", "fit"}))
      ->capture_default_str();
  sub.add_option("--format", rc.format, "Output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  sub.add_option("--output,-o", rc.output, "Write the report to this file instead of stdout");
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* path = std::getenv("BSPOWER_CONFIG")) env.config_path = path;
  return env;
}

double parse_bandwidth(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  static const std::pair<const char*, double> kSuffixes[] = {
      {"ghz", 1e9}, {"mhz", 1e6}, {"khz", 1e3}, {"hz", 1.0}};
  double scale = 1.0;
  std::string lower;
  for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (const auto& [suffix, factor] : kSuffixes) {
    const std::string_view sv(suffix);
    if (lower.size() > sv.size() && lower.ends_with(sv)) {
      s.resize(s.size() - sv.size());
      scale = factor;
      break;
    }
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) {
    throw UsageError("--bandwidth: cannot parse '" + text + "' (use Hz, e.g. 20e6, or 20MHz)");
  }
  return v * scale;
}

int parse_and_run(std::span<const std::string> args, const Environment& env, std::ostream& out,
                  std::ostream& err) {
  CLI::App app{"Base-station power model: transmission, BBU computation and loss overhead"};
  app.name("bspower");
  app.require_subcommand(1);
  RunConfig rc;

  auto* breakdown_cmd = app.add_subcommand("breakdown", "Power breakdown at one operating point");
  add_common(*breakdown_cmd, rc, default_real_params(1), true);

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep antennas or bandwidth");
  add_common(*sweep_cmd, rc, default_real_params(1), true);
  sweep_cmd->add_option("--axis", rc.axis, "Sweep axis")
      ->check(CLI::IsMember({"antennas", "bandwidth"}))
      ->capture_default_str();
  sweep_cmd->add_option("--values", rc.values, "Comma-separated, strictly increasing axis values (bandwidth sweeps default to 4 antennas)")
      ->required();

  auto* validate_cmd =
      app.add_subcommand("validate", "Compare against the published 10 MHz / 2x2 values");
  add_common(*validate_cmd, rc, validation_params(), false);
  validate_cmd->add_option("--tolerance", rc.tolerance, "Relative tolerance vs published model values")
      ->capture_default_str();

  auto* calibrate_cmd = app.add_subcommand(
      "calibrate", "Fit the calibration scalar to a measured BBU power (default: 10 MHz, 2 antennas)");
  add_common(*calibrate_cmd, rc, validation_params(), true);
  calibrate_cmd->add_option("--measured", rc.measured_w,
                            "Measured BBU power in W (default: 24.78 macro, 3.6 small)");

  auto* figures_cmd = app.add_subcommand("figures", "Antenna and bandwidth figure series");
  add_common(*figures_cmd, rc, default_real_params(1), false);
  figures_cmd->add_option("--which", rc.figure, "fig4a, fig4b (computation_w); fig5a, fig5b (ratio)")
      ->check(CLI::IsMember({"fig4a", "fig4b", "fig5a", "fig5b"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  rc.command = app.get_subcommands().front()->get_name();

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    const ModelConfig model = load_model(rc, env);
    std::ostringstream report;
    int status = kExitOk;
    if (rc.command == "breakdown") {
      status = run_breakdown(rc, model, report);
    } else if (rc.command == "sweep") {
      status = run_sweep(rc, model, report);
    } else if (rc.command == "validate") {
      status = run_validate(rc, model, report, err);
    } else if (rc.command == "calibrate") {
      status = run_calibrate(rc, model, report);
    } else {
      status = run_figures(rc, model, report);
    }
    if (rc.output) {
      file.open(*rc.output, std::ios::binary | std::ios::trunc);
      if (!file) throw UsageError("--output: cannot open '" + *rc.output + "' for writing");
      sink = &file;
    }
    *sink << report.str();
    sink->flush();
    if (!*sink) throw UsageError("write failed");
    return status;
  } catch (const std::exception& e) {
    err << "bspower " << rc.command << ": error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace bspower::cli
