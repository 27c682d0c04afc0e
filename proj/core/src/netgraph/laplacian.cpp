#include "tvadom/netgraph/laplacian.hpp"

#include <numeric>
#include <string>

#include "tvadom/common/errors.hpp"

namespace tvadom::netgraph {
namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

bool is_connected(int nodes, std::span<const Edge> edges) {
  if (nodes <= 1) return nodes == 1;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  std::iota(parent.begin(), parent.end(), 0);
  int components = nodes;
  for (const auto& e : edges) {
    const int a = find_root(parent, e.u);
    const int b = find_root(parent, e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Laplacian Laplacian::from_edges(int nodes, std::span<const Edge> edges) {
  if (nodes < 2) throw InvalidArgument("laplacian: need at least 2 nodes, got " + std::to_string(nodes));
  Matrix w = Matrix::Zero(nodes, nodes);
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= nodes || e.v >= nodes)
      throw InvalidArgument("laplacian: edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") out of range for " + std::to_string(nodes) + " nodes");
    if (e.u == e.v) throw InvalidArgument("laplacian: self-loop at node " + std::to_string(e.u));
    if (w(e.u, e.v) != 0.0)
      throw InvalidArgument("laplacian: duplicate edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ")");
    w(e.u, e.v) = -1.0;
    w(e.v, e.u) = -1.0;
    w(e.u, e.u) += 1.0;
    w(e.v, e.v) += 1.0;
  }
  if (!is_connected(nodes, edges))
    throw DisconnectedGraph("laplacian: graph on " + std::to_string(nodes) +
                            " nodes is disconnected (kernel dimension would exceed 1)");
  return Laplacian(std::move(w));
}

std::vector<Edge> Laplacian::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < nodes(); ++i)
    for (int j = i + 1; j < nodes(); ++j)
      if (weights_(i, j) != 0.0) out.push_back({i, j});
  return out;
}

void apply_communication(const Laplacian& laplacian, const NodeStack& x, NodeStack& y) {
  if (x.rows() != laplacian.nodes())
    throw InvalidArgument("apply_communication: stack has " + std::to_string(x.rows()) +
                          " rows, laplacian has " + std::to_string(laplacian.nodes()) + " nodes");
  y.noalias() = laplacian.matrix() * x;
}

NodeStack apply_communication(const Laplacian& laplacian, const NodeStack& x) {
  NodeStack y(x.rows(), x.cols());
  apply_communication(laplacian, x, y);
  return y;
}

}  // namespace tvadom::netgraph
