#include "ontomap/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ontomap/errors.hpp"

namespace ontomap {

namespace {

// All ways to write `units` as an ordered sum of `parts` nonnegative integers.
void compositions(int units, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(units);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = units; k >= 0; --k) {
    prefix.push_back(k);
    compositions(units - k, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

Vector to_column(const std::vector<int>& counts, int units) {
  Vector v(static_cast<Eigen::Index>(counts.size()));
  for (std::size_t i = 0; i < counts.size(); ++i) v(static_cast<Eigen::Index>(i)) = counts[i] / double(units);
  return v;
}

}  // namespace

std::size_t free_map_parameters(std::size_t n0, std::size_t n1) { return n1 * (n0 - 1) + n0 * (n1 - 1); }

OracleResult oracle_search(const FiniteStateModel& o0, const FiniteStateModel& o1, double resolution,
                           const SmoothingPolicy& policy) {
  require_same_alphabets(o0, o1);
  if (!(resolution > 0.0 && resolution <= 1.0)) throw DomainError("grid resolution must lie in (0,1]");
  const double inverse = 1.0 / resolution;
  const int units = static_cast<int>(std::lround(inverse));
  if (std::abs(inverse - units) > 1e-9) throw DomainError("1/resolution must be an integer");

  const std::size_t n0 = o0.states();
  const std::size_t n1 = o1.states();
  const std::size_t params = free_map_parameters(n0, n1);
  if (params > kOracleMaxFreeParameters) {
    throw DomainError("instance too large for grid search: " + std::to_string(params) + " free parameters (max " +
                      std::to_string(kOracleMaxFreeParameters) + ")");
  }

  // Grids for phi columns (length n0) and phi_inv columns (length n1).
  std::vector<std::vector<int>> grid0, grid1;
  std::vector<int> prefix;
  compositions(units, static_cast<int>(n0), prefix, grid0);
  compositions(units, static_cast<int>(n1), prefix, grid1);

  OntologyMap map;
  map.phi.resize(static_cast<Eigen::Index>(n0), static_cast<Eigen::Index>(n1));
  map.phi_inv.resize(static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(n0));

  // Column c < n1 is phi column c; otherwise phi_inv column c - n1.
  const std::size_t columns = n1 + n0;
  auto grid_for = [&](std::size_t c) -> const std::vector<std::vector<int>>& { return c < n1 ? grid0 : grid1; };
  auto set_column = [&](std::size_t c, const std::vector<int>& counts) {
    if (c < n1)
      map.phi.col(static_cast<Eigen::Index>(c)) = to_column(counts, units);
    else
      map.phi_inv.col(static_cast<Eigen::Index>(c - n1)) = to_column(counts, units);
  };

  std::vector<std::size_t> index(columns, 0);
  for (std::size_t c = 0; c < columns; ++c) set_column(c, grid_for(c)[0]);

  OracleResult result;
  std::vector<std::size_t> best_index = index;
  result.total = evaluate_total(o0, o1, map, policy);
  result.evaluated = 1;
  for (;;) {
    std::size_t c = 0;
    while (c < columns && ++index[c] == grid_for(c).size()) {
      index[c] = 0;
      set_column(c, grid_for(c)[0]);
      ++c;
    }
    if (c == columns) break;
    set_column(c, grid_for(c)[index[c]]);
    const double total = evaluate_total(o0, o1, map, policy);
    ++result.evaluated;
    if (total < result.total) {
      result.total = total;
      best_index = index;
    }
  }

  for (std::size_t c = 0; c < columns; ++c) set_column(c, grid_for(c)[best_index[c]]);
  result.map = map;

  for (std::size_t c = 0; c < columns; ++c) {
    const std::vector<int> base = grid_for(c)[best_index[c]];
    for (std::size_t from = 0; from < base.size(); ++from) {
      if (base[from] == 0) continue;
      for (std::size_t to = 0; to < base.size(); ++to) {
        if (to == from) continue;
        std::vector<int> moved = base;
        --moved[from];
        ++moved[to];
        set_column(c, moved);
        const double diff = std::abs(evaluate_total(o0, o1, map, policy) - result.total);
        if (diff > result.step_variation) result.step_variation = diff;
      }
    }
    set_column(c, base);
  }
  return result;
}

}  // namespace ontomap
