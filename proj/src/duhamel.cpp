#include "bogs/duhamel.hpp"

#include <cmath>

#include "bogs/errors.hpp"
#include "bogs/fft.hpp"

namespace bogs {

ComplexField duhamel(const ComplexTrajectory& forcing, double t) {
  const int m = forcing.n_snaps();
  if (m == 0) throw RangeError("duhamel: empty forcing trajectory");
  const double t0 = forcing.t_begin(), t1 = forcing.t_end();
  const double tol = 1e-12 * std::max(1.0, std::abs(t1));
  if (t < t0 - tol || t > t1 + tol)
    throw RangeError("duhamel: t = " + std::to_string(t) +
                     " outside the forcing range [" + std::to_string(t0) +
                     ", " + std::to_string(t1) + "]");

  const Grid& grid = *forcing.grid;
  const Eigen::ArrayXd xisq = forcing.grid->xi.square();
  auto phase = [&](double dt_back) {
    return Eigen::ArrayXcd((Complex(0, -dt_back) * xisq).exp());
  };

  Eigen::ArrayXcd acc = Eigen::ArrayXcd::Zero(grid.n);
  int k = 0;
  while (k + 1 < m && forcing.times[k + 1] <= t + tol) ++k;

  for (int i = 0; i < k; ++i) {
    const double h = forcing.times[i + 1] - forcing.times[i];
    acc += 0.5 * h *
           (phase(t - forcing.times[i]) * fft_forward(forcing.snaps.col(i)) +
            phase(t - forcing.times[i + 1]) *
                fft_forward(forcing.snaps.col(i + 1)));
  }
  // Partial strip when t falls strictly between snapshots: linear
  // interpolation of the forcing keeps the O(h^2) order.
  const double rem = t - forcing.times[k];
  if (rem > tol && k + 1 < m) {
    const double h = forcing.times[k + 1] - forcing.times[k];
    const double theta = rem / h;
    const Eigen::ArrayXcd fk = fft_forward(forcing.snaps.col(k));
    const Eigen::ArrayXcd fk1 = fft_forward(forcing.snaps.col(k + 1));
    const Eigen::ArrayXcd ft = (1.0 - theta) * fk + theta * fk1;
    acc += 0.5 * rem * (phase(rem) * fk + ft);
  }
  return {forcing.grid, fft_inverse(acc)};
}

}  // namespace bogs
