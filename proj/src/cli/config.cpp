#include "bspower/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bspower/errors.hpp"

namespace bspower {

namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(const std::string& path, const std::string& what) const {
    throw ConfigError(source_ + ": " + path + ": " + what);
  }

  const json& section(const json& parent, const std::string& path,
                      std::initializer_list<std::string_view> allowed) const {
    if (!parent.is_object()) fail(path, "expected an object");
    for (const auto& [key, _] : parent.items()) {
      bool known = false;
      for (auto a : allowed) known = known || key == a;
      if (!known) fail(path.empty() ? key : path + "." + key, "unknown field");
    }
    return parent;
  }

  void number(const json& obj, const std::string& path, const char* key, double& out) const {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_number()) fail(path + "." + key, "expected a number");
    out = it->get<double>();
  }

  void integer(const json& obj, const std::string& path, const char* key, int& out) const {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_number_integer()) fail(path + "." + key, "expected an integer");
    out = it->get<int>();
  }

  void string(const json& obj, const std::string& path, const char* key, std::string& out) const {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_string()) fail(path + "." + key, "expected a string");
    out = it->get<std::string>();
  }

  template <typename Fn>
  void checked(const std::string& path, Fn&& fn) const {
    try {
      fn();
    } catch (const ParameterError& e) {
      fail(path, e.what());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }

 private:
  std::string source_;
};

void read_chip(const Reader& r, const json& j, ChipTechnology& chip) {
  r.section(j, "chip", {"feature_size_nm", "power_coefficient", "temperature_K", "boltzmann"});
  r.number(j, "chip", "feature_size_nm", chip.feature_size_nm);
  r.number(j, "chip", "power_coefficient", chip.power_coefficient);
  r.number(j, "chip", "temperature_K", chip.temperature_k);
  r.number(j, "chip", "boltzmann", chip.boltzmann);
  r.checked("chip", [&] { chip.validate(); });
}

void read_throughput(const Reader& r, const json& j, ThroughputModel& model) {
  r.section(j, "throughput", {"omega", "gamma", "word_width_bits"});
  r.number(j, "throughput", "omega", model.omega);
  r.number(j, "throughput", "gamma", model.gamma);
  r.integer(j, "throughput", "word_width_bits", model.word_width_bits);
  r.checked("throughput", [&] { model.validate(); });
}

void read_params(const Reader& r, const json& j, const std::string& path, SystemParams& p) {
  r.section(j, path,
            {"bandwidth_hz", "antennas", "modulation_bits", "coding_rate", "time_duty",
             "freq_duty"});
  r.number(j, path, "bandwidth_hz", p.bandwidth_hz);
  r.integer(j, path, "antennas", p.antennas);
  r.integer(j, path, "modulation_bits", p.modulation_bits);
  r.number(j, path, "coding_rate", p.coding_rate);
  r.number(j, path, "time_duty", p.time_duty);
  r.number(j, path, "freq_duty", p.freq_duty);
}

void read_parts(const Reader& r, const json& j, PartTable& parts) {
  if (!j.is_object()) r.fail("parts", "expected an object keyed by part name");
  for (const auto& [name, row] : j.items()) {
    const std::string path = "parts." + name;
    auto it = std::find_if(parts.begin(), parts.end(),
                           [&](const BbuPartProfile& p) { return p.name == name; });
    if (it == parts.end()) r.fail(path, "unknown BBU part name");
    r.section(row, path, {"gops_macro", "gops_small", "exponents"});
    r.number(row, path, "gops_macro", it->gops_macro);
    r.number(row, path, "gops_small", it->gops_small);
    if (auto ex = row.find("exponents"); ex != row.end()) {
      const std::string ex_path = path + ".exponents";
      if (!ex->is_object()) r.fail(ex_path, "expected an object");
      for (const auto& [label, value] : ex->items()) {
        auto param = parse_system_param(label);
        if (!param) r.fail(ex_path + "." + label, "unknown system parameter (BW, M, R, Ant, dt, df)");
        if (!value.is_number_integer()) r.fail(ex_path + "." + label, "expected an integer in {0, 1, 2}");
        const auto s = value.get<long long>();
        if (s < 0 || s > 2) r.fail(ex_path + "." + label, "exponent must be in {0, 1, 2}");
        it->exponent(*param) = static_cast<int>(s);
      }
    }
  }
  r.checked("parts", [&] { validate_part_table(parts); });
}

void read_class(const Reader& r, const json& j, const std::string& path, BsProfile& bs) {
  r.section(j, path, {"transmission", "losses", "reference", "calibration"});
  if (auto t = j.find("transmission"); t != j.end()) {
    const std::string tp = path + ".transmission";
    r.section(*t, tp, {"pa_power_w", "rf_power_w", "p_out_w", "eta_pa", "feed_loss"});
    r.number(*t, tp, "rf_power_w", bs.transmission.rf_power_w);
    const bool has_decomp = t->contains("p_out_w") || t->contains("eta_pa") || t->contains("feed_loss");
    if (has_decomp) {
      for (const char* key : {"p_out_w", "eta_pa", "feed_loss"}) {
        if (!t->contains(key)) r.fail(tp + "." + key, "required when the PA decomposition is given");
      }
      PaDecomposition d;
      r.number(*t, tp, "p_out_w", d.p_out_w);
      r.number(*t, tp, "eta_pa", d.eta_pa);
      r.number(*t, tp, "feed_loss", d.feed_loss);
      r.checked(tp, [&] { bs.transmission.pa_power_w = pa_power(d.p_out_w, d.eta_pa, d.feed_loss); });
      bs.transmission.pa = d;
    } else if (t->contains("pa_power_w")) {
      bs.transmission.pa.reset();
    }
    r.number(*t, tp, "pa_power_w", bs.transmission.pa_power_w);
    r.checked(tp, [&] { bs.transmission.validate(); });
  }
  if (auto l = j.find("losses"); l != j.end()) {
    const std::string lp = path + ".losses";
    r.section(*l, lp, {"sigma_dc", "sigma_ms", "sigma_cool"});
    r.number(*l, lp, "sigma_dc", bs.losses.sigma_dc);
    r.number(*l, lp, "sigma_ms", bs.losses.sigma_ms);
    r.number(*l, lp, "sigma_cool", bs.losses.sigma_cool);
    r.checked(lp, [&] { bs.losses.validate(); });
  }
  if (auto ref = j.find("reference"); ref != j.end()) {
    read_params(r, *ref, path + ".reference", bs.reference);
    r.checked(path + ".reference", [&] { bs.reference.validate(); });
  }
  if (auto c = j.find("calibration"); c != j.end()) {
    const std::string cp = path + ".calibration";
    r.section(*c, cp, {"value", "provenance"});
    if (c->contains("value")) bs.calibration.provenance = "config";
    r.number(*c, cp, "value", bs.calibration.value);
    r.string(*c, cp, "provenance", bs.calibration.provenance);
    r.checked(cp, [&] { bs.calibration.validate(); });
  }
}

}  // namespace

ModelConfig parse_config(std::string_view text, std::string_view source) {
  ModelConfig cfg;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return cfg;

  const Reader r(source);
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string(source) + ": malformed JSON: " + e.what());
  }
  r.section(root, "", {"chip", "throughput", "parts", "macro", "small"});

  if (auto it = root.find("chip"); it != root.end()) read_chip(r, *it, cfg.chip);
  if (auto it = root.find("throughput"); it != root.end()) read_throughput(r, *it, cfg.throughput);
  if (auto it = root.find("parts"); it != root.end()) {
    PartTable parts = builtin_part_table();
    read_parts(r, *it, parts);
    cfg.profiles.macro.parts = parts;
    cfg.profiles.small.parts = parts;
  }
  for (BsClass cls : kAllClasses) {
    const std::string key(to_string(cls));
    if (auto it = root.find(key); it != root.end()) read_class(r, *it, key, cfg.profiles.get(cls));
  }
  for (BsClass cls : kAllClasses) {
    r.checked(std::string(to_string(cls)), [&] { cfg.profiles.get(cls).validate(); });
  }
  return cfg;
}

ModelConfig load_profiles(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ConfigError(path.string() + ": read error");
  return parse_config(buf.str(), path.string());
}

}  // namespace bspower
