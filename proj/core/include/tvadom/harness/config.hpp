#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvadom/netgraph/schedule.hpp"

namespace tvadom::harness {

enum class Dataset { gaussians, mnist };

/// One experiment. Every field has a key of the same name in the config
/// file; see config_keys().
struct ExperimentConfig {
  Dataset dataset = Dataset::gaussians;
  int m = 10;
  int d = 100;
  /// Seed of the dataset draw.
  std::uint64_t seed = 0;

  netgraph::Family family = netgraph::Family::cycle;
  double edge_prob = 0.5;
  /// nullopt is written "inf": a static graph.
  std::optional<long> epoch_len;
  std::uint64_t schedule_seed = 0;

  double gamma = 0.01;
  double r = 0.001;
  long n_iters = 5000;
  long record_every = 50;
  double delta = 1e-6;

  double grid_lo = 0.0;
  double grid_hi = 1.0;
  double mean_lo = 0.35;
  double mean_hi = 0.65;
  double std_lo = 0.15;
  double std_hi = 0.2;

  std::string mnist_images;
  std::string mnist_labels;
  int digit = 4;

  int threads = 1;
  /// When false the wall_time column is written as 0 so that equal seeds
  /// give byte-identical CSV files.
  bool record_wall_time = true;
  /// Output directory; empty means nothing is written.
  std::string output;
};

/// Keys accepted by set_key, in file order.
const std::vector<std::string>& config_keys();

/// Assigns one key from its text form. Throws InvalidArgument on an unknown
/// key or an unparsable value.
void set_key(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Text form of one key; round-trips through set_key exactly.
std::string get_key(const ExperimentConfig& cfg, const std::string& key);

/// (key, value) for every key in config_keys() order.
std::vector<std::pair<std::string, std::string>> to_key_values(const ExperimentConfig& cfg);

/// Parses `key = value` lines. Blank lines and lines starting with '#' are
/// skipped. Throws FormatError naming the line on malformed input.
ExperimentConfig parse_config(const std::string& text, const std::string& origin = "<string>");

/// Reads a key=value file, or the "config" object of a run manifest when the
/// file starts with '{'. Throws FormatError naming the path if unreadable.
ExperimentConfig load_config(const std::string& path);

/// Key=value text that parse_config reads back to an equal config.
std::string format_config(const ExperimentConfig& cfg);

/// Checks positivity and consistency; throws InvalidArgument.
void validate(const ExperimentConfig& cfg);

}  // namespace tvadom::harness
