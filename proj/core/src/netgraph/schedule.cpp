#include "tvadom/netgraph/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "tvadom/common/errors.hpp"
#include "tvadom/common/rng.hpp"

namespace tvadom::netgraph {
namespace {

std::vector<Edge> cycle_edges(const std::vector<int>& labels) {
  const int m = static_cast<int>(labels.size());
  std::vector<Edge> edges;
  for (int k = 0; k < m; ++k) edges.push_back({labels[k], labels[(k + 1) % m]});
  return edges;
}

std::vector<Edge> star_edges(const std::vector<int>& labels) {
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < labels.size(); ++k) edges.push_back({labels[0], labels[k]});
  return edges;
}

std::vector<Edge> complete_edges(int m) {
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) edges.push_back({i, j});
  return edges;
}

std::vector<Edge> erdos_renyi_draw(int m, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (rng.bernoulli(p)) edges.push_back({i, j});
  return edges;
}

// Uniformly labeled random recursive tree: node perm[k] attaches to an
// earlier node.
std::vector<Edge> random_spanning_tree(int m, Rng& rng) {
  const auto perm = rng.permutation(m);
  std::vector<Edge> edges;
  for (int k = 1; k < m; ++k) {
    const int parent = perm[rng.below(static_cast<std::uint64_t>(k))];
    edges.push_back({std::min(perm[k], parent), std::max(perm[k], parent)});
  }
  return edges;
}

std::vector<Edge> connected_erdos_renyi(int m, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int draw = 0; draw < NetworkSchedule::kMaxErdosRenyiDraws; ++draw) {
    edges = erdos_renyi_draw(m, p, rng);
    if (is_connected(m, edges)) return edges;
  }
  for (const auto& e : random_spanning_tree(m, rng))
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  return edges;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::vector<Edge> minimum_spanning_tree(int m, std::vector<Edge> edges, Rng& rng) {
  std::vector<double> weight(edges.size());
  for (auto& w : weight) w = rng.uniform();
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weight[a] < weight[b]; });
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<Edge> tree;
  for (auto k : order) {
    const int a = find_root(parent, edges[k].u);
    const int b = find_root(parent, edges[k].v);
    if (a == b) continue;
    parent[a] = b;
    tree.push_back(edges[k]);
  }
  return tree;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::complete: return "complete";
    case Family::erdos_renyi: return "erdos_renyi";
    case Family::mst_of_er: return "mst_of_er";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::cycle, Family::star, Family::complete, Family::erdos_renyi, Family::mst_of_er})
    if (to_string(f) == name) return f;
  throw InvalidArgument("unknown network family '" + std::string(name) +
                        "' (expected cycle, star, complete, erdos_renyi or mst_of_er)");
}

NetworkSchedule::NetworkSchedule(ScheduleSpec spec) : spec_(spec) {
  const int min_nodes = spec_.family == Family::cycle ? 3 : 2;
  if (spec_.nodes < min_nodes)
    throw InvalidArgument("schedule: " + std::string(to_string(spec_.family)) + " needs at least " +
                          std::to_string(min_nodes) + " nodes, got " + std::to_string(spec_.nodes));
  if (spec_.epoch_len && *spec_.epoch_len < 1)
    throw InvalidArgument("schedule: epoch_len must be >= 1, got " + std::to_string(*spec_.epoch_len));
  const bool random = spec_.family == Family::erdos_renyi || spec_.family == Family::mst_of_er;
  if (random && !(spec_.edge_prob > 0.0 && spec_.edge_prob <= 1.0))
    throw InvalidArgument("schedule: edge_prob must lie in (0, 1], got " + std::to_string(spec_.edge_prob));
}

bool NetworkSchedule::is_static() const {
  return !spec_.epoch_len || spec_.family == Family::complete;
}

long NetworkSchedule::epoch(long n) const {
  if (n < 0) throw InvalidArgument("schedule: iteration index must be >= 0, got " + std::to_string(n));
  return is_static() ? 0 : n / *spec_.epoch_len;
}

long NetworkSchedule::epochs_in(long horizon) const {
  if (horizon < 1) throw InvalidArgument("schedule: horizon must be >= 1");
  return epoch(horizon - 1) + 1;
}

Laplacian NetworkSchedule::laplacian(long n) const { return epoch_laplacian(epoch(n)); }

Laplacian NetworkSchedule::epoch_laplacian(long epoch_index) const {
  const int m = spec_.nodes;
  Rng rng(spec_.seed, static_cast<std::uint64_t>(epoch_index));
  std::vector<int> labels(static_cast<std::size_t>(m));
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<Edge> edges;
  switch (spec_.family) {
    case Family::cycle:
      if (!is_static()) labels = rng.permutation(m);
      edges = cycle_edges(labels);
      break;
    case Family::star:
      if (!is_static()) labels = rng.permutation(m);
      edges = star_edges(labels);
      break;
    case Family::complete:
      edges = complete_edges(m);
      break;
    case Family::erdos_renyi:
      edges = connected_erdos_renyi(m, spec_.edge_prob, rng);
      break;
    case Family::mst_of_er:
      edges = minimum_spanning_tree(m, connected_erdos_renyi(m, spec_.edge_prob, rng), rng);
      break;
  }
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  return Laplacian::from_edges(m, edges);
}

}  // namespace tvadom::netgraph
