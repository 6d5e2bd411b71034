#include "bogs/field.hpp"

#include "bogs/fft.hpp"

namespace bogs {

RealField zero_field(const GridPtr& grid) {
  return {grid, Eigen::ArrayXd::Zero(grid->n)};
}

ComplexField zero_complex_field(const GridPtr& grid) {
  return {grid, Eigen::ArrayXcd::Zero(grid->n)};
}

ComplexField to_complex(const RealField& f) {
  return {f.grid, f.samples.cast<Complex>()};
}

Eigen::ArrayXcd spectrum(const RealField& f) {
  return fft_forward(f.samples.cast<Complex>()) / double(f.grid->n);
}

Eigen::ArrayXcd spectrum(const ComplexField& f) {
  return fft_forward(f.samples) / double(f.grid->n);
}

ComplexField complex_field_from_spectrum(const GridPtr& grid,
                                         const Eigen::ArrayXcd& coeffs) {
  return {grid, fft_inverse(coeffs * double(grid->n))};
}

RealField real_field_from_spectrum(const GridPtr& grid,
                                   const Eigen::ArrayXcd& coeffs) {
  return {grid, fft_inverse(coeffs * double(grid->n)).real()};
}

double l2_norm(const RealField& f) {
  return std::sqrt(f.grid->dx * f.samples.square().sum());
}

double l2_norm(const ComplexField& f) {
  return std::sqrt(f.grid->dx * f.samples.abs2().sum());
}

double linf_norm(const RealField& f) {
  return f.size() ? f.samples.abs().maxCoeff() : 0.0;
}

double linf_norm(const ComplexField& f) {
  return f.size() ? f.samples.abs().maxCoeff() : 0.0;
}

double l2_norm_sq_spectral(const Eigen::ArrayXcd& coeffs, double length) {
  return length * coeffs.abs2().sum();
}

bool all_finite(const RealField& f) { return f.samples.isFinite().all(); }

bool all_finite(const ComplexField& f) {
  return f.samples.real().isFinite().all() &&
         f.samples.imag().isFinite().all();
}

}  // namespace bogs
