#include "spatialdiar/assignment.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace spatialdiar {

std::vector<int> solve_assignment_min(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  for (const auto& row : cost)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("assignment matrix must be square");
  if (n == 0) return {};

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);

  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j]) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

std::vector<int> solve_assignment_max(const std::vector<std::vector<double>>& weight) {
  const int rows = static_cast<int>(weight.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(weight[0].size());
  for (const auto& row : weight)
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("weight matrix rows differ in length");
  if (rows == 0 || cols == 0) return std::vector<int>(rows, -1);

  double max_w = 0.0;
  for (const auto& row : weight)
    for (double w : row) max_w = std::max(max_w, w);

  // Pad to square; padded cells cost max_w (i.e. weight 0).
  const int n = std::max(rows, cols);
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, max_w));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) cost[i][j] = max_w - weight[i][j];

  std::vector<int> full = solve_assignment_min(cost);
  std::vector<int> out(rows, -1);
  for (int i = 0; i < rows; ++i)
    if (full[i] < cols) out[i] = full[i];
  return out;
}

}  // namespace spatialdiar
