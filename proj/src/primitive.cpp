#include "bogs/primitive.hpp"

namespace bogs {

RealField primitive_from_left(const RealField& f, double decay_tol,
                              std::vector<std::string>* warnings) {
  const int n = f.size();
  const double dx = f.grid->dx;
  const double fmax = linf_norm(f);
  if (warnings && fmax > 0.0) {
    const double edge = std::max(std::abs(f.samples[0]),
                                 std::abs(f.samples[n - 1]));
    if (edge > decay_tol * fmax)
      warnings->push_back(
          "primitive_from_left: integrand does not decay at the domain "
          "boundary (|f(edge)|/max|f| = " +
          std::to_string(edge / fmax) + ")");
  }

  Eigen::ArrayXd F(n);
  F[0] = 0.0;
  for (int i = 1; i < n; ++i)
    F[i] = F[i - 1] + 0.5 * dx * (f.samples[i - 1] + f.samples[i]);
  return {f.grid, std::move(F)};
}

}  // namespace bogs
