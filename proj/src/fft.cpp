#include "bogs/fft.hpp"

#include <unsupported/Eigen/FFT>

namespace bogs {

namespace {
// One engine per thread: kissfft caches twiddle tables per size, and the
// scratch must not be shared across concurrent callers.
Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}
}  // namespace

Eigen::ArrayXcd fft_forward(const Eigen::ArrayXcd& in) {
  Eigen::VectorXcd out;
  engine().fwd(out, in.matrix().eval());
  return out.array();
}

Eigen::ArrayXcd fft_inverse(const Eigen::ArrayXcd& in) {
  Eigen::VectorXcd out;
  engine().inv(out, in.matrix().eval());
  return out.array();
}

}  // namespace bogs
