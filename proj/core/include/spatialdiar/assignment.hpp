#pragma once

#include <vector>

namespace spatialdiar {

/// Minimum-cost assignment on a square matrix (Jonker-Volgenant style,
/// O(n^3)). Returns row -> column.
std::vector<int> solve_assignment_min(const std::vector<std::vector<double>>& cost);

/// Maximum-weight one-to-one matching on a rectangular matrix. Returns
/// row -> column, -1 for unmatched rows. Ties resolve deterministically for
/// a fixed input ordering.
std::vector<int> solve_assignment_max(const std::vector<std::vector<double>>& weight);

}  // namespace spatialdiar
