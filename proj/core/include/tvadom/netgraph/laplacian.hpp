#pragma once

#include <span>
#include <vector>

#include "tvadom/common/types.hpp"

namespace tvadom::netgraph {

struct Edge {
  int u;
  int v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Combinatorial Laplacian D - A of a connected, undirected, simple graph.
///
/// The block operator W = L (x) I_d acting on stacked node data is never
/// formed; see apply_communication.
class Laplacian {
 public:
  /// Throws DisconnectedGraph when the edge set does not connect all nodes,
  /// InvalidArgument on self-loops, duplicates or out-of-range endpoints.
  static Laplacian from_edges(int nodes, std::span<const Edge> edges);

  int nodes() const { return static_cast<int>(weights_.rows()); }
  const Matrix& matrix() const { return weights_; }
  double operator()(int i, int j) const { return weights_(i, j); }

  /// Edges (u < v) in row-major order of the upper triangle.
  std::vector<Edge> edges() const;

  friend bool operator==(const Laplacian& a, const Laplacian& b) {
    return a.weights_.rows() == b.weights_.rows() && a.weights_ == b.weights_;
  }

 private:
  explicit Laplacian(Matrix weights) : weights_(std::move(weights)) {}

  Matrix weights_;
};

inline Laplacian laplacian_from_edges(int nodes, std::span<const Edge> edges) {
  return Laplacian::from_edges(nodes, edges);
}

/// True when the edge list connects all `nodes` vertices.
bool is_connected(int nodes, std::span<const Edge> edges);

/// Y = L X, row i of Y being sum_j L_ij X_j. Throws InvalidArgument on a row
/// count mismatch.
void apply_communication(const Laplacian& laplacian, const NodeStack& x, NodeStack& y);
NodeStack apply_communication(const Laplacian& laplacian, const NodeStack& x);

}  // namespace tvadom::netgraph
