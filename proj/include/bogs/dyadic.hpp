#pragma once

#include <vector>

#include "bogs/field.hpp"

namespace bogs {

/// Littlewood-Paley cutoffs built from a fixed even C^inf bump psi with
/// supp psi = {|xi| < 2}, psi = 1 on |xi| <= 1, phi(xi) = psi(xi) - psi(2*xi).
/// shift_k sets the meaning of "<<": P_{<<N} keeps blocks M <= N / 2^shift_k
/// (plus the P_0 block).
struct DyadicCutoff {
  int shift_k = 3;

  static double psi(double xi);
  static double phi(double xi) { return psi(xi) - psi(2.0 * xi); }

  /// phi_N(xi) = phi(xi/N) for a dyadic N >= 1.
  static double block(double xi, double N) { return phi(xi / N); }
  /// phi_0 = 1 - sum_{N>=1} phi_N = psi(2 xi).
  static double block0(double xi) { return psi(2.0 * xi); }
  /// Symbol of P_{<<N} = P_0 + sum_{1<=M<=N/2^k} P_M, telescoped.
  double below(double xi, double N) const;
  /// Symbol of P_{<~N} = P_0 + sum_{M<=N} P_M = psi(xi/N).
  static double lesssim(double xi, double N) { return psi(xi / N); }
  /// Symbol of P~_N = P_{N/2} + P_N + P_{2N}; equals 1 on supp phi_N.
  static double tilde(double xi, double N) {
    return psi(xi / (2.0 * N)) - psi(4.0 * xi / N);
  }
};

/// Dyadic scales {1, 2, ..., N_max} the grid resolves; N_max is the
/// smallest power of two >= xi_max so the ladder plus P_0 partitions all
/// grid frequencies.
std::vector<double> dyadic_ladder(const Grid& grid);
double max_dyadic_scale(const Grid& grid);

/// Throws ScaleError unless N is a power of two within the grid's ladder.
void validate_scale(const Grid& grid, double N);

// Projections. N = 0 selects the P_0 block where meaningful.
RealField project_block(const RealField& f, double N);
ComplexField project_block(const ComplexField& f, double N);
RealField project_below(const RealField& f, double N, const DyadicCutoff& c);
ComplexField project_below(const ComplexField& f, double N,
                           const DyadicCutoff& c);
RealField project_lesssim(const RealField& f, double N);
RealField project_tilde(const RealField& f, double N);
RealField project_ge1(const RealField& f);
RealField project_zero(const RealField& f);

/// Symbols sampled on the grid (building blocks for composite operators).
Eigen::ArrayXcd block_symbol(const Grid& grid, double N);
Eigen::ArrayXcd below_symbol(const Grid& grid, double N,
                             const DyadicCutoff& c);
Eigen::ArrayXcd tilde_symbol(const Grid& grid, double N);
Eigen::ArrayXcd ge1_symbol(const Grid& grid);
Eigen::ArrayXcd positive_half_symbol(const Grid& grid);

}  // namespace bogs
