#include "bogs/dyadic.hpp"

#include <cmath>
#include <functional>

#include "bogs/errors.hpp"

namespace bogs {

namespace {
double chi(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

bool is_pow2(double N) {
  if (N < 1.0) return false;
  const double l = std::log2(N);
  return std::abs(l - std::round(l)) < 1e-12;
}
}  // namespace

double DyadicCutoff::psi(double xi) {
  const double a = std::abs(xi);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const double up = chi(2.0 - a);
  return up / (up + chi(a - 1.0));
}

double DyadicCutoff::below(double xi, double N) const {
  // Telescoped sum: psi(xi / cap) with cap = N / 2^k, floored at 1/2 so
  // the P_0 block is always included.
  const double cap = std::max(N / std::pow(2.0, shift_k), 0.5);
  return psi(xi / cap);
}

double max_dyadic_scale(const Grid& grid) {
  return std::pow(2.0, std::ceil(std::log2(grid.xi_max()) - 1e-12));
}

std::vector<double> dyadic_ladder(const Grid& grid) {
  std::vector<double> out;
  const double top = max_dyadic_scale(grid);
  for (double N = 1.0; N <= top * (1.0 + 1e-12); N *= 2.0) out.push_back(N);
  return out;
}

void validate_scale(const Grid& grid, double N) {
  if (!is_pow2(N))
    throw ScaleError("dyadic scale must be a power of two >= 1, got " +
                     std::to_string(N));
  if (N > max_dyadic_scale(grid) * (1.0 + 1e-12))
    throw ScaleError("dyadic scale " + std::to_string(N) +
                     " exceeds the grid Nyquist scale " +
                     std::to_string(max_dyadic_scale(grid)));
}

namespace {
Eigen::ArrayXcd real_symbol(const Grid& grid,
                            const std::function<double(double)>& s) {
  Eigen::ArrayXcd sym(grid.n);
  for (int j = 0; j < grid.n; ++j) sym[j] = Complex(s(grid.xi[j]), 0.0);
  return sym;
}
}  // namespace

Eigen::ArrayXcd block_symbol(const Grid& grid, double N) {
  if (N == 0.0)
    return real_symbol(grid, [](double xi) { return DyadicCutoff::block0(xi); });
  validate_scale(grid, N);
  return real_symbol(grid,
                     [N](double xi) { return DyadicCutoff::block(xi, N); });
}

Eigen::ArrayXcd below_symbol(const Grid& grid, double N,
                             const DyadicCutoff& c) {
  validate_scale(grid, N);
  return real_symbol(grid, [&](double xi) { return c.below(xi, N); });
}

Eigen::ArrayXcd tilde_symbol(const Grid& grid, double N) {
  validate_scale(grid, N);
  return real_symbol(grid,
                     [N](double xi) { return DyadicCutoff::tilde(xi, N); });
}

Eigen::ArrayXcd ge1_symbol(const Grid& grid) {
  return real_symbol(grid,
                     [](double xi) { return 1.0 - DyadicCutoff::block0(xi); });
}

Eigen::ArrayXcd positive_half_symbol(const Grid& grid) {
  return real_symbol(grid, [](double xi) { return xi > 0 ? 1.0 : 0.0; });
}

RealField project_block(const RealField& f, double N) {
  return apply_symbol(f, block_symbol(*f.grid, N));
}

ComplexField project_block(const ComplexField& f, double N) {
  return apply_symbol(f, block_symbol(*f.grid, N));
}

RealField project_below(const RealField& f, double N, const DyadicCutoff& c) {
  return apply_symbol(f, below_symbol(*f.grid, N, c));
}

ComplexField project_below(const ComplexField& f, double N,
                           const DyadicCutoff& c) {
  return apply_symbol(f, below_symbol(*f.grid, N, c));
}

RealField project_lesssim(const RealField& f, double N) {
  validate_scale(*f.grid, N);
  Eigen::ArrayXcd sym(f.grid->n);
  for (int j = 0; j < f.grid->n; ++j)
    sym[j] = DyadicCutoff::lesssim(f.grid->xi[j], N);
  return apply_symbol(f, sym);
}

RealField project_tilde(const RealField& f, double N) {
  return apply_symbol(f, tilde_symbol(*f.grid, N));
}

RealField project_ge1(const RealField& f) {
  return apply_symbol(f, ge1_symbol(*f.grid));
}

RealField project_zero(const RealField& f) {
  return apply_symbol(f, block_symbol(*f.grid, 0.0));
}

}  // namespace bogs
