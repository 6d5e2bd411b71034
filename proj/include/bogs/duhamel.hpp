#pragma once

#include "bogs/trajectory.hpp"

namespace bogs {

/// Retarded integral int_0^t e^{i(t-t') d_xx} f(t') dt' evaluated by
/// trapezoidal quadrature over the forcing snapshots (second order in the
/// snapshot spacing).  t must lie inside the forcing's time range.
ComplexField duhamel(const ComplexTrajectory& forcing, double t);

}  // namespace bogs
