#pragma once

#include <Eigen/Dense>
#include <memory>

namespace bogs {

/// Uniform periodic grid on [-L/2, L/2).  Wavenumbers are stored in FFT
/// order so xi[j] pairs with the j-th spectral coefficient:
/// xi = (2*pi/L) * {0, 1, ..., n/2-1, -n/2, ..., -1}.
struct Grid {
  int n = 0;
  double length = 0.0;
  double dx = 0.0;
  Eigen::ArrayXd x;   // sample points
  Eigen::ArrayXd xi;  // wavenumbers, FFT order

  /// Largest resolvable |wavenumber|, pi*n/L (attained by the unpaired
  /// -n/2 mode).
  double xi_max() const { return M_PI * static_cast<double>(n) / length; }
};

using GridPtr = std::shared_ptr<const Grid>;

/// n even and >= 8, length > 0 (powers of two recommended for n).
GridPtr make_grid(int n_points, double length);

inline bool same_grid(const Grid& a, const Grid& b) {
  return a.n == b.n && a.length == b.length;
}

}  // namespace bogs
