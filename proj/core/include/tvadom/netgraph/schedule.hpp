#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tvadom/netgraph/laplacian.hpp"

namespace tvadom::netgraph {

enum class Family { cycle, star, complete, erdos_renyi, mst_of_er };

std::string_view to_string(Family family);
/// Accepts the names printed by to_string; throws InvalidArgument otherwise.
Family parse_family(std::string_view name);

struct ScheduleSpec {
  Family family = Family::cycle;
  int nodes = 10;
  /// Edge probability for erdos_renyi and mst_of_er.
  double edge_prob = 0.5;
  /// Iterations between re-draws; nullopt means the graph never changes.
  std::optional<long> epoch_len;
  std::uint64_t seed = 0;
};

/// Deterministic generator of connected-graph Laplacians over iterations.
///
/// The Laplacian of iteration n depends only on (spec, n / epoch_len), so any
/// epoch can be re-derived without replaying earlier ones.
class NetworkSchedule {
 public:
  /// Maximum Erdos-Renyi redraws per epoch before a random spanning tree is
  /// merged into the last draw.
  static constexpr int kMaxErdosRenyiDraws = 1000;

  explicit NetworkSchedule(ScheduleSpec spec);

  const ScheduleSpec& spec() const { return spec_; }
  int nodes() const { return spec_.nodes; }

  /// True when every iteration sees the same graph.
  bool is_static() const;
  /// Epoch index of iteration n (0 for static schedules).
  long epoch(long n) const;
  /// Number of distinct epochs touched by iterations [0, horizon).
  long epochs_in(long horizon) const;

  Laplacian laplacian(long n) const;
  Laplacian epoch_laplacian(long epoch) const;

 private:
  ScheduleSpec spec_;
};

inline Laplacian schedule_laplacian(const NetworkSchedule& schedule, long n) {
  return schedule.laplacian(n);
}

}  // namespace tvadom::netgraph
