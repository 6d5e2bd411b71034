#pragma once

#include <string>
#include <vector>

#include "bogs/field.hpp"

namespace bogs {

/// Cumulative trapezoidal integral anchored at the left edge of the
/// domain (the discrete stand-in for int_{-inf}^x).  F(left) = 0 and the
/// centered difference of F recovers f at interior points to O(dx^2).
///
/// The integrand is expected to decay at both boundaries; if
/// |f(boundary)| > decay_tol * max|f| a warning is appended to
/// `warnings` (when given) instead of failing.
RealField primitive_from_left(const RealField& f, double decay_tol = 1e-8,
                              std::vector<std::string>* warnings = nullptr);

}  // namespace bogs
