#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bogs/equation.hpp"
#include "bogs/trajectory.hpp"

namespace bogs {

struct SolverConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  double dealias_fraction = 2.0 / 3.0;
  int snapshot_stride = 1;
  double c_stab = 1.0;       // dt <= c_stab * dx / max|u| heuristic
  bool linear_only = false;  // drop the nonlinearity (testing hook)

  void validate() const;
};

struct RunStats {
  long long steps = 0;
  double max_imag_residue = 0.0;  // relative, real equations only
  bool stability_warned = false;
};

/// Exact free propagation: u(t) = e^{-it xi|xi|} u(0) for BO-type,
/// e^{-it xi^2} u(0) for the Schroedinger group.  Unitary on L^2 and a
/// one-parameter group in t.
RealField linear_propagate(const RealField& f, double t, EquationKind kind);
ComplexField linear_propagate(const ComplexField& f, double t,
                              EquationKind kind);

/// Pseudospectral nonlinearity with 2/3-rule dealiasing after every
/// pointwise product:
///   mBO:  -s * u^2 u_x,   BO:  -s * (u^2)_x,   DNLS:  -s * |u|^2 u_x.
RealField nonlinear_rhs(const RealField& f, const EquationSpec& eq,
                        double dealias_fraction = 2.0 / 3.0);
ComplexField nonlinear_rhs(const ComplexField& f, const EquationSpec& eq,
                           double dealias_fraction = 2.0 / 3.0);

/// One integrating-factor RK4 step of u_t = L u + N(u); the linear flow
/// is applied exactly, so with linear_only the step equals
/// linear_propagate(dt) to machine precision.
std::pair<double, RealField> step(double t, const RealField& u,
                                  const EquationSpec& eq,
                                  const SolverConfig& cfg,
                                  std::vector<std::string>* warnings = nullptr);
std::pair<double, ComplexField> step(double t, const ComplexField& u,
                                     const EquationSpec& eq,
                                     const SolverConfig& cfg,
                                     std::vector<std::string>* warnings = nullptr);

/// Integrate from t = 0 to cfg.t_end, recording a snapshot every
/// snapshot_stride steps.  Throws BlowUpError (with the last valid time)
/// if the solution stops being finite or grows by 1e6 over the data.
RealTrajectory run(const RealField& u0, const EquationSpec& eq,
                   const SolverConfig& cfg,
                   std::vector<std::string>* warnings = nullptr,
                   RunStats* stats = nullptr);
ComplexTrajectory run(const ComplexField& u0, const EquationSpec& eq,
                      const SolverConfig& cfg,
                      std::vector<std::string>* warnings = nullptr,
                      RunStats* stats = nullptr);

/// Dealiasing mask on the grid: 1 on |xi| <= fraction * xi_max, else 0.
Eigen::ArrayXd dealias_mask(const Grid& grid, double fraction);

}  // namespace bogs
