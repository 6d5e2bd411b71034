#include "bogs/solver.hpp"

#include <cmath>

#include "bogs/fft.hpp"
#include "bogs/multiplier.hpp"

namespace bogs {

void SolverConfig::validate() const {
  if (!(dt > 0.0)) throw ConfigError("solver dt must be positive");
  if (t_end < 0.0) throw ConfigError("solver t_end must be >= 0");
  if (!(dealias_fraction > 0.0 && dealias_fraction <= 1.0))
    throw ConfigError("dealias_fraction must lie in (0, 1]");
  if (snapshot_stride < 1)
    throw ConfigError("snapshot_stride must be a positive integer");
}

Eigen::ArrayXd dealias_mask(const Grid& grid, double fraction) {
  const double cut = fraction * grid.xi_max() * (1.0 + 1e-12);
  return (grid.xi.abs() <= cut).cast<double>();
}

namespace {

Eigen::ArrayXcd propagator_symbol(const Grid& grid, double t,
                                  EquationKind kind) {
  Eigen::ArrayXcd sym(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const double xi = grid.xi[j];
    const double phase =
        (kind == EquationKind::DNLS) ? -t * xi * xi : -t * xi * std::abs(xi);
    sym[j] = std::exp(Complex(0.0, phase));
  }
  return sym;
}

// Everything below runs on raw (unnormalized) spectra; the fwd/inv pair
// is self-inverse so no scale factors appear.
struct SpectralRhs {
  const Grid& grid;
  EquationSpec eq;
  Eigen::ArrayXcd ixi;    // i * xi
  Eigen::ArrayXd mask;    // dealiasing
  double last_linf = 0.0;

  SpectralRhs(const Grid& g, const EquationSpec& e, double dealias)
      : grid(g), eq(e), mask(dealias_mask(g, dealias)) {
    ixi = Complex(0, 1) * grid.xi.cast<Complex>();
  }

  Eigen::ArrayXcd operator()(const Eigen::ArrayXcd& chat) {
    const Eigen::ArrayXcd u = fft_inverse(chat);
    last_linf = u.abs().maxCoeff();
    const double s = eq.nonlinearity_sign;
    if (eq.kind == EquationKind::BO) {
      const Eigen::ArrayXcd usq = mask * fft_forward(u * u);
      return -s * ixi * usq;
    }
    const Eigen::ArrayXcd ux = fft_inverse((ixi * chat).eval());
    Eigen::ArrayXcd prod;
    if (eq.kind == EquationKind::mBO) {
      prod = fft_inverse((mask * fft_forward(u * u)).eval()) * ux;
    } else {  // DNLS: |u|^2 u_x
      const Eigen::ArrayXcd absq = (u * u.conjugate());
      prod = fft_inverse((mask * fft_forward(absq)).eval()) * ux;
    }
    return -s * mask * fft_forward(prod);
  }
};

template <typename Scalar>
void check_equation_scalar(const EquationSpec& eq) {
  constexpr bool complex_scalar = std::is_same_v<Scalar, Complex>;
  if (eq.is_complex() != complex_scalar)
    throw ConfigError(
        "equation " + equation_name(eq.kind) +
        (complex_scalar ? " acts on real fields" : " acts on complex fields"));
}

struct StepperState {
  Eigen::ArrayXcd chat;
  double linf0 = 0.0;
};

// One IF-RK4 step on the raw spectrum; updates rhs.last_linf.
void rk4_step(Eigen::ArrayXcd& chat, double dt, const Eigen::ArrayXcd& e_half,
              const Eigen::ArrayXcd& e_full, SpectralRhs& rhs,
              bool linear_only) {
  if (linear_only) {
    chat = e_full * chat;
    return;
  }
  const Eigen::ArrayXcd k1 = rhs(chat);
  const Eigen::ArrayXcd k2 = rhs((e_half * (chat + 0.5 * dt * k1)).eval());
  const Eigen::ArrayXcd k3 = rhs((e_half * chat + 0.5 * dt * k2).eval());
  const Eigen::ArrayXcd k4 =
      rhs((e_full * chat + dt * e_half * k3).eval());
  chat = e_full * chat +
         (dt / 6.0) * (e_full * k1 + 2.0 * e_half * (k2 + k3) + k4);
}

template <typename Scalar>
Trajectory<Scalar> run_impl(const Field<Scalar>& u0, const EquationSpec& eq,
                            const SolverConfig& cfg,
                            std::vector<std::string>* warnings,
                            RunStats* stats) {
  check_equation_scalar<Scalar>(eq);
  cfg.validate();
  const Grid& grid = *u0.grid;

  long long steps = (cfg.t_end == 0.0) ? 0 : std::llround(cfg.t_end / cfg.dt);
  if (std::abs(steps * cfg.dt - cfg.t_end) >
      1e-9 * std::max(1.0, std::abs(cfg.t_end)))
    throw ConfigError("t_end must be an integer multiple of dt");
  if (steps % cfg.snapshot_stride != 0)
    throw ConfigError("step count must be a multiple of snapshot_stride");

  SpectralRhs rhs(grid, eq, cfg.dealias_fraction);
  const Eigen::ArrayXcd e_half = propagator_symbol(grid, 0.5 * cfg.dt, eq.kind);
  const Eigen::ArrayXcd e_full = propagator_symbol(grid, cfg.dt, eq.kind);

  Eigen::ArrayXcd chat = fft_forward(u0.samples.template cast<Complex>());
  if (!cfg.linear_only) chat *= rhs.mask;  // state stays in the dealiased band
  const double linf0 = std::max(linf_norm(u0), 1e-300);

  const long long n_snaps = steps / cfg.snapshot_stride + 1;
  Trajectory<Scalar> traj;
  traj.grid = u0.grid;
  traj.equation = eq;
  traj.times.resize(n_snaps);
  traj.snaps.resize(grid.n, n_snaps);

  double max_imag = 0.0;
  bool warned_stab = false;
  auto record = [&](long long snap_idx, double t) {
    const Eigen::ArrayXcd u = fft_inverse(chat);
    traj.times[snap_idx] = t;
    if constexpr (std::is_same_v<Scalar, Complex>) {
      traj.snaps.col(snap_idx) = u;
    } else {
      traj.snaps.col(snap_idx) = u.real();
      const double den = std::max(u.abs().maxCoeff(), 1e-300);
      max_imag = std::max(max_imag, u.imag().abs().maxCoeff() / den);
    }
  };

  record(0, 0.0);
  for (long long j = 0; j < steps; ++j) {
    rk4_step(chat, cfg.dt, e_half, e_full, rhs, cfg.linear_only);
    const double t = (j + 1) * cfg.dt;

    if (!cfg.linear_only) {
      if (!std::isfinite(rhs.last_linf) || rhs.last_linf > 1e6 * linf0 ||
          !chat.isFinite().all())
        throw BlowUpError("solution blew up between t = " +
                              std::to_string(j * cfg.dt) + " and t = " +
                              std::to_string(t),
                          j * cfg.dt);
      if (!warned_stab && rhs.last_linf > 0.0 &&
          cfg.dt > cfg.c_stab * grid.dx / rhs.last_linf) {
        warned_stab = true;
        if (warnings)
          warnings->push_back(
              "step: dt exceeds the stability heuristic c_stab*dx/max|u| "
              "at t = " +
              std::to_string(t));
      }
    }
    if ((j + 1) % cfg.snapshot_stride == 0)
      record((j + 1) / cfg.snapshot_stride, t);
  }

  if (stats) {
    stats->steps = steps;
    stats->max_imag_residue = max_imag;
    stats->stability_warned = warned_stab;
  }
  return traj;
}

}  // namespace

RealField linear_propagate(const RealField& f, double t, EquationKind kind) {
  if (kind == EquationKind::DNLS)
    throw ConfigError("the Schroedinger group acts on complex fields");
  return apply_symbol(f, propagator_symbol(*f.grid, t, kind));
}

ComplexField linear_propagate(const ComplexField& f, double t,
                              EquationKind kind) {
  return apply_symbol(f, propagator_symbol(*f.grid, t, kind));
}

RealField nonlinear_rhs(const RealField& f, const EquationSpec& eq,
                        double dealias_fraction) {
  check_equation_scalar<double>(eq);
  SpectralRhs rhs(*f.grid, eq, dealias_fraction);
  const Eigen::ArrayXcd out =
      rhs(fft_forward(f.samples.cast<Complex>()));
  return {f.grid, fft_inverse(out).real()};
}

ComplexField nonlinear_rhs(const ComplexField& f, const EquationSpec& eq,
                           double dealias_fraction) {
  check_equation_scalar<Complex>(eq);
  SpectralRhs rhs(*f.grid, eq, dealias_fraction);
  return {f.grid, fft_inverse(rhs(fft_forward(f.samples)))};
}

namespace {
template <typename Scalar>
std::pair<double, Field<Scalar>> step_impl(double t, const Field<Scalar>& u,
                                           const EquationSpec& eq,
                                           const SolverConfig& cfg,
                                           std::vector<std::string>* warnings) {
  check_equation_scalar<Scalar>(eq);
  const Grid& grid = *u.grid;
  const double linf = linf_norm(u);
  if (warnings && !cfg.linear_only && linf > 0.0 &&
      cfg.dt > cfg.c_stab * grid.dx / linf)
    warnings->push_back("step: dt exceeds the stability heuristic");

  SpectralRhs rhs(grid, eq, cfg.dealias_fraction);
  Eigen::ArrayXcd chat = fft_forward(u.samples.template cast<Complex>());
  rk4_step(chat, cfg.dt, propagator_symbol(grid, 0.5 * cfg.dt, eq.kind),
           propagator_symbol(grid, cfg.dt, eq.kind), rhs, cfg.linear_only);
  if (!chat.isFinite().all())
    throw BlowUpError("step produced non-finite values", t);

  const Eigen::ArrayXcd out = fft_inverse(chat);
  Field<Scalar> next;
  next.grid = u.grid;
  if constexpr (std::is_same_v<Scalar, Complex>)
    next.samples = out;
  else
    next.samples = out.real();
  if (linf_norm(next) > 1e6 * std::max(linf, 1e-300))
    throw BlowUpError("solution blew up during the step", t);
  return {t + cfg.dt, next};
}
}  // namespace

std::pair<double, RealField> step(double t, const RealField& u,
                                  const EquationSpec& eq,
                                  const SolverConfig& cfg,
                                  std::vector<std::string>* warnings) {
  return step_impl<double>(t, u, eq, cfg, warnings);
}

std::pair<double, ComplexField> step(double t, const ComplexField& u,
                                     const EquationSpec& eq,
                                     const SolverConfig& cfg,
                                     std::vector<std::string>* warnings) {
  return step_impl<Complex>(t, u, eq, cfg, warnings);
}

RealTrajectory run(const RealField& u0, const EquationSpec& eq,
                   const SolverConfig& cfg, std::vector<std::string>* warnings,
                   RunStats* stats) {
  return run_impl<double>(u0, eq, cfg, warnings, stats);
}

ComplexTrajectory run(const ComplexField& u0, const EquationSpec& eq,
                      const SolverConfig& cfg,
                      std::vector<std::string>* warnings, RunStats* stats) {
  return run_impl<Complex>(u0, eq, cfg, warnings, stats);
}

}  // namespace bogs
