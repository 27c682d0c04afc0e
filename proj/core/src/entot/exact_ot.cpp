#include "tvadom/entot/exact_ot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tvadom/common/errors.hpp"

namespace tvadom::entot {
namespace {

struct Cell {
  int row;
  int col;
  double flow;
};

// Spanning tree over n row nodes [0, n) and n column nodes [n, 2n), rooted at
// row 0. Edge k of the basis joins row cells[k].row and column cells[k].col.
class BasisTree {
 public:
  explicit BasisTree(int n) : n_(n), adj_(2 * n), parent_(2 * n), parent_cell_(2 * n), depth_(2 * n) {}

  void rebuild(const std::vector<Cell>& cells) {
    for (auto& a : adj_) a.clear();
    for (int k = 0; k < static_cast<int>(cells.size()); ++k) {
      adj_[cells[k].row].push_back(k);
      adj_[n_ + cells[k].col].push_back(k);
    }
    std::fill(depth_.begin(), depth_.end(), -1);
    order_.clear();
    order_.push_back(0);
    depth_[0] = 0;
    parent_[0] = -1;
    parent_cell_[0] = -1;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const int node = order_[head];
      for (int k : adj_[node]) {
        const int other = node < n_ ? n_ + cells[k].col : cells[k].row;
        if (depth_[other] >= 0) continue;
        depth_[other] = depth_[node] + 1;
        parent_[other] = node;
        parent_cell_[other] = k;
        order_.push_back(other);
      }
    }
    if (static_cast<int>(order_.size()) != 2 * n_)
      throw std::logic_error("exact_ot: basis is not a spanning tree");
  }

  // potentials with u_0 = 0 and u_i + v_j = c_ij on basic cells
  void potentials(const std::vector<Cell>& cells, const Matrix& cost, std::vector<double>& pot) const {
    pot.assign(2 * n_, 0.0);
    for (std::size_t h = 1; h < order_.size(); ++h) {
      const int node = order_[h];
      const Cell& c = cells[parent_cell_[node]];
      pot[node] = cost(c.row, c.col) - pot[parent_[node]];
    }
  }

  // basis cells on the tree path from column node of `col` to row node of `row`
  void path(int row, int col, std::vector<int>& from_col, std::vector<int>& from_row) const {
    from_col.clear();
    from_row.clear();
    int a = n_ + col;
    int b = row;
    while (a != b) {
      if (depth_[a] >= depth_[b]) {
        from_col.push_back(parent_cell_[a]);
        a = parent_[a];
      } else {
        from_row.push_back(parent_cell_[b]);
        b = parent_[b];
      }
    }
  }

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> parent_;
  std::vector<int> parent_cell_;
  std::vector<int> depth_;
  std::vector<int> order_;
};

}  // namespace

ExactOtResult exact_ot(const Histogram& p, const Histogram& q, const CostMatrix& cost) {
  const int n = cost.size();
  if (p.size() != n || q.size() != n)
    throw InvalidArgument("exact_ot: size mismatch (p " + std::to_string(p.size()) + ", q " +
                          std::to_string(q.size()) + ", cost " + std::to_string(n) + ")");
  const Matrix& c = cost.entries();

  // north-west corner: exactly 2n - 1 basic cells, degenerate zeros included
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(2 * n - 1));
  {
    std::vector<double> supply(p.mass().data(), p.mass().data() + n);
    std::vector<double> demand(q.mass().data(), q.mass().data() + n);
    int i = 0, j = 0;
    while (true) {
      const bool last_row = i == n - 1;
      const bool last_col = j == n - 1;
      double f = std::min(supply[i], demand[j]);
      if (last_row && last_col) f = std::max(supply[i], demand[j]);
      if (last_row && !last_col) f = demand[j];
      if (last_col && !last_row) f = supply[i];
      f = std::max(f, 0.0);
      cells.push_back({i, j, f});
      supply[i] -= f;
      demand[j] -= f;
      if (last_row && last_col) break;
      if (last_col || (!last_row && supply[i] <= demand[j]))
        ++i;
      else
        ++j;
    }
  }

  const double cost_scale = std::max(c.cwiseAbs().maxCoeff(), 1e-300);
  const double optimality_tol = 1e-12 * cost_scale;
  const long max_pivots = 50L * n * n + 1000;
  const int degenerate_switch = 2 * n + 10;

  BasisTree tree(n);
  std::vector<double> pot;
  std::vector<int> from_col, from_row;
  std::vector<char> is_basic(static_cast<std::size_t>(n) * n, 0);
  for (const auto& cell : cells) is_basic[static_cast<std::size_t>(cell.row) * n + cell.col] = 1;

  ExactOtResult out;
  int degenerate_run = 0;
  for (;; ++out.pivots) {
    if (out.pivots > max_pivots) throw std::runtime_error("exact_ot: pivot limit exceeded");
    tree.rebuild(cells);
    tree.potentials(cells, c, pot);

    // pricing: Dantzig (most negative reduced cost) or Bland (first negative)
    const bool bland = degenerate_run > degenerate_switch;
    int enter_row = -1, enter_col = -1;
    double best = -optimality_tol;
    for (int i = 0; i < n && !(bland && enter_row >= 0); ++i) {
      const double ui = pot[i];
      for (int j = 0; j < n; ++j) {
        if (is_basic[static_cast<std::size_t>(i) * n + j]) continue;
        // cost is symmetric; column i is contiguous
        const double reduced = c(j, i) - ui - pot[n + j];
        if (reduced < best) {
          best = reduced;
          enter_row = i;
          enter_col = j;
          if (bland) break;
        }
      }
    }
    if (enter_row < 0) break;

    // cycle: entering cell (+), then alternating -,+,... along the tree path
    // from its column back to its row
    tree.path(enter_row, enter_col, from_col, from_row);
    std::vector<int> cycle(from_col);
    cycle.insert(cycle.end(), from_row.rbegin(), from_row.rend());
    double theta = std::numeric_limits<double>::infinity();
    int leave = -1;
    for (std::size_t k = 0; k < cycle.size(); k += 2) {
      const Cell& cell = cells[cycle[k]];
      const bool better = cell.flow < theta ||
                          (bland && cell.flow == theta &&
                           cell.row * n + cell.col < cells[leave].row * n + cells[leave].col);
      if (better) {
        theta = cell.flow;
        leave = cycle[k];
      }
    }
    theta = std::max(theta, 0.0);
    degenerate_run = theta > 0.0 ? 0 : degenerate_run + 1;
    for (std::size_t k = 0; k < cycle.size(); ++k) cells[cycle[k]].flow += (k % 2 == 0) ? -theta : theta;

    Cell& gone = cells[leave];
    is_basic[static_cast<std::size_t>(gone.row) * n + gone.col] = 0;
    gone = {enter_row, enter_col, theta};
    is_basic[static_cast<std::size_t>(enter_row) * n + enter_col] = 1;
  }

  out.plan = Matrix::Zero(n, n);
  for (const auto& cell : cells) out.plan(cell.row, cell.col) = std::max(cell.flow, 0.0);
  out.value = (c.array() * out.plan.array()).sum();
  return out;
}

}  // namespace tvadom::entot
