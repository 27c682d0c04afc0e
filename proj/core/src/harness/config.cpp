#include "tvadom/harness/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tvadom/common/errors.hpp"

namespace tvadom::harness {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw InvalidArgument("config: invalid value '" + value + "' for key '" + key + "'");
}

template <class T>
T parse_integer(const std::string& key, const std::string& value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) bad_value(key, value);
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) bad_value(key, value);
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  bad_value(key, value);
}

std::string real_text(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

struct Field {
  std::function<void(ExperimentConfig&, const std::string&, const std::string&)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

template <class T>
Field integer_field(T ExperimentConfig::*member) {
  return {[member](ExperimentConfig& c, const std::string& k, const std::string& v) {
            c.*member = parse_integer<T>(k, v);
          },
          [member](const ExperimentConfig& c) { return std::to_string(c.*member); }};
}

Field real_field(double ExperimentConfig::*member) {
  return {[member](ExperimentConfig& c, const std::string& k, const std::string& v) { c.*member = parse_real(k, v); },
          [member](const ExperimentConfig& c) { return real_text(c.*member); }};
}

Field string_field(std::string ExperimentConfig::*member) {
  return {[member](ExperimentConfig& c, const std::string&, const std::string& v) { c.*member = v; },
          [member](const ExperimentConfig& c) { return c.*member; }};
}

const std::vector<std::pair<std::string, Field>>& fields() {
  static const std::vector<std::pair<std::string, Field>> table = {
      {"dataset",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          if (v == "gaussians") c.dataset = Dataset::gaussians;
          else if (v == "mnist") c.dataset = Dataset::mnist;
          else bad_value(k, v);
        },
        [](const ExperimentConfig& c) { return std::string(c.dataset == Dataset::mnist ? "mnist" : "gaussians"); }}},
      {"m", integer_field(&ExperimentConfig::m)},
      {"d", integer_field(&ExperimentConfig::d)},
      {"seed", integer_field(&ExperimentConfig::seed)},
      {"family",
       {[](ExperimentConfig& c, const std::string&, const std::string& v) { c.family = netgraph::parse_family(v); },
        [](const ExperimentConfig& c) { return std::string(netgraph::to_string(c.family)); }}},
      {"edge_prob", real_field(&ExperimentConfig::edge_prob)},
      {"epoch_len",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          if (v == "inf" || v == "static") c.epoch_len.reset();
          else c.epoch_len = parse_integer<long>(k, v);
        },
        [](const ExperimentConfig& c) { return c.epoch_len ? std::to_string(*c.epoch_len) : std::string("inf"); }}},
      {"schedule_seed", integer_field(&ExperimentConfig::schedule_seed)},
      {"gamma", real_field(&ExperimentConfig::gamma)},
      {"r", real_field(&ExperimentConfig::r)},
      {"n_iters", integer_field(&ExperimentConfig::n_iters)},
      {"record_every", integer_field(&ExperimentConfig::record_every)},
      {"delta", real_field(&ExperimentConfig::delta)},
      {"grid_lo", real_field(&ExperimentConfig::grid_lo)},
      {"grid_hi", real_field(&ExperimentConfig::grid_hi)},
      {"mean_lo", real_field(&ExperimentConfig::mean_lo)},
      {"mean_hi", real_field(&ExperimentConfig::mean_hi)},
      {"std_lo", real_field(&ExperimentConfig::std_lo)},
      {"std_hi", real_field(&ExperimentConfig::std_hi)},
      {"mnist_images", string_field(&ExperimentConfig::mnist_images)},
      {"mnist_labels", string_field(&ExperimentConfig::mnist_labels)},
      {"digit", integer_field(&ExperimentConfig::digit)},
      {"threads", integer_field(&ExperimentConfig::threads)},
      {"record_wall_time",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) { c.record_wall_time = parse_bool(k, v); },
        [](const ExperimentConfig& c) { return std::string(c.record_wall_time ? "true" : "false"); }}},
      {"output", string_field(&ExperimentConfig::output)},
  };
  return table;
}

const Field& field(const std::string& key) {
  for (const auto& [name, f] : fields())
    if (name == key) return f;
  throw InvalidArgument("config: unknown key '" + key + "'");
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& [name, f] : fields()) out.push_back(name);
    return out;
  }();
  return keys;
}

void set_key(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  field(key).set(cfg, key, trim(value));
}

std::string get_key(const ExperimentConfig& cfg, const std::string& key) { return field(key).get(cfg); }

std::vector<std::pair<std::string, std::string>> to_key_values(const ExperimentConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, f] : fields()) out.emplace_back(name, f.get(cfg));
  return out;
}

ExperimentConfig parse_config(const std::string& text, const std::string& origin) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw FormatError(origin + ":" + std::to_string(number) + ": expected key = value");
    try {
      set_key(cfg, trim(body.substr(0, eq)), body.substr(eq + 1));
    } catch (const InvalidArgument& err) {
      throw FormatError(origin + ":" + std::to_string(number) + ": " + err.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') return parse_config(text, path);

  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw FormatError(path + ": " + err.what());
  }
  if (!manifest.contains("config") || !manifest["config"].is_object())
    throw FormatError(path + ": manifest has no \"config\" object");
  ExperimentConfig cfg;
  for (const auto& [key, value] : manifest["config"].items()) {
    if (!value.is_string()) throw FormatError(path + ": config value for '" + key + "' is not a string");
    try {
      set_key(cfg, key, value.get<std::string>());
    } catch (const InvalidArgument& err) {
      throw FormatError(path + ": " + err.what());
    }
  }
  return cfg;
}

std::string format_config(const ExperimentConfig& cfg) {
  std::string out;
  for (const auto& [k, v] : to_key_values(cfg)) out += k + " = " + v + "\n";
  return out;
}

void validate(const ExperimentConfig& cfg) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument("config: " + what);
  };
  require(cfg.m >= 2, "m must be >= 2");
  require(cfg.d >= 2, "d must be >= 2");
  require(cfg.gamma > 0.0, "gamma must be positive");
  require(cfg.r > 0.0, "r must be positive");
  require(cfg.n_iters >= 1, "n_iters must be >= 1");
  require(cfg.record_every >= 1, "record_every must be >= 1");
  require(cfg.delta > 0.0 && cfg.delta * cfg.d < 1.0, "delta must satisfy 0 < delta * d < 1");
  require(!cfg.epoch_len || *cfg.epoch_len >= 1, "epoch_len must be >= 1 or inf");
  require(cfg.edge_prob > 0.0 && cfg.edge_prob <= 1.0, "edge_prob must lie in (0, 1]");
  require(cfg.threads >= 1, "threads must be >= 1");
  require(cfg.family != netgraph::Family::cycle || cfg.m >= 3, "cycle needs m >= 3");
  if (cfg.dataset == Dataset::gaussians) {
    require(cfg.grid_hi > cfg.grid_lo, "grid_hi must exceed grid_lo");
    require(cfg.mean_hi >= cfg.mean_lo, "mean_hi must be >= mean_lo");
    require(cfg.std_lo > 0.0 && cfg.std_hi >= cfg.std_lo, "need 0 < std_lo <= std_hi");
  } else {
    require(!cfg.mnist_images.empty() && !cfg.mnist_labels.empty(), "mnist needs mnist_images and mnist_labels");
    require(cfg.digit >= 0 && cfg.digit <= 9, "digit must be 0..9");
  }
}

}  // namespace tvadom::harness
