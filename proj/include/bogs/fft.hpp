#pragma once

#include <Eigen/Dense>
#include <complex>

namespace bogs {

/// Unnormalized forward DFT: out[j] = sum_m in[m] exp(-2*pi*i*j*m/n).
Eigen::ArrayXcd fft_forward(const Eigen::ArrayXcd& in);

/// Inverse DFT with the 1/n factor, so fft_inverse(fft_forward(f)) == f.
Eigen::ArrayXcd fft_inverse(const Eigen::ArrayXcd& in);

}  // namespace bogs
