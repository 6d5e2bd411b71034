#pragma once

#include <functional>
#include <string>

#include "bogs/field.hpp"

namespace bogs {

/// A Fourier multiplier: output spectrum = symbol(xi) * input spectrum.
struct MultiplierSpec {
  std::function<Complex(double)> symbol;
  std::string name;
};

/// Samples the symbol on the grid's wavenumbers; throws OperatorError if
/// any value is non-finite.
Eigen::ArrayXcd sample_symbol(const MultiplierSpec& m, const Grid& grid);

ComplexField apply_multiplier(const ComplexField& f, const MultiplierSpec& m);

/// Real version: applies on the complex path, then projects onto the real
/// part.  For a conjugate-symmetric symbol (m(-xi) = conj(m(xi))) the
/// discarded imaginary part is roundoff except for the unpaired Nyquist
/// mode, whose odd component has no real-field representation.
RealField apply_multiplier(const RealField& f, const MultiplierSpec& m);

ComplexField apply_symbol(const ComplexField& f, const Eigen::ArrayXcd& sym);
RealField apply_symbol(const RealField& f, const Eigen::ArrayXcd& sym);

// --- standard symbols ------------------------------------------------

/// Hilbert transform, -i*sgn(xi) with sgn(0) = 0.
MultiplierSpec hilbert();
/// d/dx, i*xi.
MultiplierSpec derivative();
/// |xi|^s; the zero mode is annihilated for s != 0 (principal-value
/// convention, matches D_x^{-1} only ever acting on mean-zero data).
MultiplierSpec fractional_derivative(double s);
/// (1 + xi^2)^{s/2}.
MultiplierSpec bessel_derivative(double s);
/// Sharp projection onto +/- frequencies; xi = 0 gets weight 0.
MultiplierSpec projection_positive();
MultiplierSpec projection_negative();
/// Free propagator of u_t + H u_xx = 0: exp(-i t xi |xi|).
MultiplierSpec bo_propagator(double t);
/// Free propagator e^{i t d_xx}: exp(-i t xi^2).
MultiplierSpec schrodinger_propagator(double t);

}  // namespace bogs
