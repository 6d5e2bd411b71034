#include "bogs/grid.hpp"

#include "bogs/errors.hpp"

namespace bogs {

GridPtr make_grid(int n_points, double length) {
  if (n_points < 8 || n_points % 2 != 0)
    throw ConfigError("make_grid: n_points must be even and >= 8, got " +
                      std::to_string(n_points));
  if (!(length > 0.0))
    throw ConfigError("make_grid: length must be positive, got " +
                      std::to_string(length));

  auto g = std::make_shared<Grid>();
  g->n = n_points;
  g->length = length;
  g->dx = length / n_points;
  g->x = Eigen::ArrayXd::LinSpaced(n_points, 0, n_points - 1) * g->dx -
         length / 2.0;
  g->xi.resize(n_points);
  const double dxi = 2.0 * M_PI / length;
  for (int j = 0; j < n_points; ++j) {
    const int jj = (j < n_points / 2) ? j : j - n_points;
    g->xi[j] = dxi * jj;
  }
  return g;
}

}  // namespace bogs
