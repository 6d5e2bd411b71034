#pragma once

#include <Eigen/Dense>

#include "bogs/equation.hpp"
#include "bogs/field.hpp"

namespace bogs {

/// Time-indexed snapshots on a fixed grid, one column per time; the
/// discrete carrier of u(.,t) that all mixed space-time norms act on.
/// Snapshots are immutable once recorded.
template <typename Scalar>
struct Trajectory {
  GridPtr grid;
  EquationSpec equation;
  Eigen::ArrayXd times;
  Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic> snaps;  // n x m

  int n_snaps() const { return static_cast<int>(times.size()); }
  double t_begin() const { return times.size() ? times[0] : 0.0; }
  double t_end() const { return times.size() ? times[times.size() - 1] : 0.0; }

  Field<Scalar> snapshot(int j) const { return {grid, snaps.col(j)}; }
};

using RealTrajectory = Trajectory<double>;
using ComplexTrajectory = Trajectory<Complex>;

}  // namespace bogs
