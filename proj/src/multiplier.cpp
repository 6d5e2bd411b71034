#include "bogs/multiplier.hpp"

#include <cmath>

#include "bogs/errors.hpp"
#include "bogs/fft.hpp"

namespace bogs {

Eigen::ArrayXcd sample_symbol(const MultiplierSpec& m, const Grid& grid) {
  Eigen::ArrayXcd sym(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const Complex v = m.symbol(grid.xi[j]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw OperatorError("multiplier '" + m.name +
                          "' is not finite at xi = " +
                          std::to_string(grid.xi[j]));
    sym[j] = v;
  }
  return sym;
}

ComplexField apply_symbol(const ComplexField& f, const Eigen::ArrayXcd& sym) {
  return {f.grid, fft_inverse(sym * fft_forward(f.samples))};
}

RealField apply_symbol(const RealField& f, const Eigen::ArrayXcd& sym) {
  return {f.grid,
          fft_inverse(sym * fft_forward(f.samples.cast<Complex>())).real()};
}

ComplexField apply_multiplier(const ComplexField& f, const MultiplierSpec& m) {
  return apply_symbol(f, sample_symbol(m, *f.grid));
}

RealField apply_multiplier(const RealField& f, const MultiplierSpec& m) {
  return apply_symbol(f, sample_symbol(m, *f.grid));
}

MultiplierSpec hilbert() {
  return {[](double xi) {
            const double s = (xi > 0) - (xi < 0);
            return Complex(0.0, -s);
          },
          "hilbert"};
}

MultiplierSpec derivative() {
  return {[](double xi) { return Complex(0.0, xi); }, "d/dx"};
}

MultiplierSpec fractional_derivative(double s) {
  return {[s](double xi) {
            if (xi == 0.0) return Complex(s == 0.0 ? 1.0 : 0.0, 0.0);
            return Complex(std::pow(std::abs(xi), s), 0.0);
          },
          "|D|^" + std::to_string(s)};
}

MultiplierSpec bessel_derivative(double s) {
  return {[s](double xi) {
            return Complex(std::pow(1.0 + xi * xi, 0.5 * s), 0.0);
          },
          "<D>^" + std::to_string(s)};
}

MultiplierSpec projection_positive() {
  return {[](double xi) { return Complex(xi > 0 ? 1.0 : 0.0, 0.0); }, "P+"};
}

MultiplierSpec projection_negative() {
  return {[](double xi) { return Complex(xi < 0 ? 1.0 : 0.0, 0.0); }, "P-"};
}

MultiplierSpec bo_propagator(double t) {
  return {[t](double xi) {
            return std::exp(Complex(0.0, -t * xi * std::abs(xi)));
          },
          "exp(-it xi|xi|)"};
}

MultiplierSpec schrodinger_propagator(double t) {
  return {[t](double xi) { return std::exp(Complex(0.0, -t * xi * xi)); },
          "exp(-it xi^2)"};
}

}  // namespace bogs
