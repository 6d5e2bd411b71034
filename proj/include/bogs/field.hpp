#pragma once

#include <Eigen/Dense>
#include <complex>

#include "bogs/grid.hpp"

namespace bogs {

using Complex = std::complex<double>;

/// Spatial samples of a function on a Grid.  Plain value type: copying a
/// Field copies the samples, the grid is shared.
template <typename Scalar>
struct Field {
  GridPtr grid;
  Eigen::Array<Scalar, Eigen::Dynamic, 1> samples;

  Field() = default;
  Field(GridPtr g, Eigen::Array<Scalar, Eigen::Dynamic, 1> s)
      : grid(std::move(g)), samples(std::move(s)) {}

  int size() const { return static_cast<int>(samples.size()); }
};

using RealField = Field<double>;
using ComplexField = Field<Complex>;

RealField zero_field(const GridPtr& grid);
ComplexField zero_complex_field(const GridPtr& grid);

ComplexField to_complex(const RealField& f);

/// Normalized spectral coefficients c with f(x) = sum_j c_j e^{i xi_j (x - x_0)},
/// x_0 the left edge of the grid; c[j] belongs to grid->xi[j].
Eigen::ArrayXcd spectrum(const RealField& f);
Eigen::ArrayXcd spectrum(const ComplexField& f);

ComplexField complex_field_from_spectrum(const GridPtr& grid,
                                         const Eigen::ArrayXcd& coeffs);
/// Synthesis that keeps only the real part (for conjugate-symmetric data).
RealField real_field_from_spectrum(const GridPtr& grid,
                                   const Eigen::ArrayXcd& coeffs);

/// sqrt(integral |f|^2 dx) via the grid quadrature.
double l2_norm(const RealField& f);
double l2_norm(const ComplexField& f);
double linf_norm(const RealField& f);
double linf_norm(const ComplexField& f);

/// Parseval form of the squared L^2 norm: length * sum_j |c_j|^2.
double l2_norm_sq_spectral(const Eigen::ArrayXcd& coeffs, double length);

bool all_finite(const RealField& f);
bool all_finite(const ComplexField& f);

}  // namespace bogs
