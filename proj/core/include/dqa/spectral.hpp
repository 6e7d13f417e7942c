#pragma once

#include <vector>

#include "dqa/evolve.hpp"
#include "dqa/lanczos.hpp"
#include "dqa/linear_op.hpp"
#include "dqa/schedule.hpp"

namespace dqa {

/// Lowest-k eigenpairs of one instantaneous Hamiltonian.
struct SpectralFrame {
  double s = 0.0;
  Eigen::VectorXd values;     // ascending
  Eigen::MatrixXd vectors;    // dim x k (empty if not requested)
  Eigen::VectorXd residuals;  // ||Hv - Ev|| per pair
};

struct SpectrumOptions {
  Eigen::Index dense_limit = Eigen::Index{1} << 12;
  bool vectors = true;
  LanczosOptions lanczos;
};

/// Dense solve up to dense_limit, restarted Lanczos above.
SpectralFrame spectrum_at(const LinearOp& H, int k, SpectrumOptions opts = {});

/// Band diagnostics over a grid: gap to level d and width of the d-level band,
///   Delta(s) = E_d - E_{d-1},  band_width(s) = E_{d-1} - E_0.
struct GapProfile {
  std::vector<double> s;
  std::vector<double> Delta;
  std::vector<double> band_width;
};

GapProfile gap_profile(const Assembler& H, const std::vector<double>& grid, int d,
                       SpectrumOptions opts = {});

struct GapMinimum {
  double s = 0.0;
  double gap = 0.0;
  bool global = false;
  bool boundary = false;
};

/// Coarse scan of Delta(s) followed by golden-section refinement of every
/// interior local minimum to s-resolution 1e-5. All local minima are
/// returned (ascending in s); the smallest is flagged global; grid-endpoint
/// minima are flagged boundary and not refined.
std::vector<GapMinimum> min_gap(const Assembler& H, int d,
                                const std::vector<double>& coarse_grid,
                                SpectrumOptions opts = {});
const GapMinimum& global_minimum(const std::vector<GapMinimum>& minima);

/// Adiabatic error functional for a d-level band,
///   xi(s) = d ||H'||/Delta^2 |_{0,s}
///           + int_0^s ( d ||H''||/Delta^2 + 7 d sqrt(d) ||H'||^2 / Delta^3 ) ds'
/// with X|_{a,b} = X(a) + X(b). Norms are spectral norms by power iteration;
/// the integral is a trapezoid rule on the grid, which must start at 0.
/// Delta below 1e-12 raises SingularGap.
std::vector<double> adiabatic_xi(const Assembler& H, const Assembler& dH,
                                 const Assembler& d2H, int d,
                                 const std::vector<double>& grid,
                                 SpectrumOptions opts = {});
/// Convenience form for a TIM family under a smooth schedule; throws
/// NotDifferentiable for piecewise schedules.
std::vector<double> adiabatic_xi(const TimFamily& fam, const Schedule& sched, int d,
                                 const std::vector<double>& grid,
                                 SpectrumOptions opts = {});

/// 1 - sum_{k<d} |<phi_k(s)|psi(s)>|^2 at every stored trajectory point.
std::vector<double> leakage(const Trajectory& traj, const Assembler& H, int d,
                            SpectrumOptions opts = {});

/// Instantaneous-eigenstate populations |<phi_k(s)|psi(s)>|^2 for the
/// requested levels. Ordering follows ascending eigenvalues; near-degenerate
/// frames where the overlap matching with the previous frame is ill
/// conditioned are flagged rather than silently resolved.
struct Populations {
  std::vector<double> s;
  std::vector<std::vector<double>> p;  // one array per requested level
  std::vector<bool> flagged;
};

Populations populations(const Trajectory& traj, const Assembler& H,
                        const std::vector<int>& levels, SpectrumOptions opts = {});

struct ThermalState {
  Eigen::MatrixXd rho;
  double beta = 0.0;
  double Z = 0.0;       // partition function after the ground-energy shift
  double shift = 0.0;   // the shift: true Z = e^{-beta*shift} * Z
};

/// e^{-beta H}/Z by dense eigendecomposition, shifted for overflow safety.
ThermalState thermal_state(const LinearOp& H, double beta);
ThermalState thermal_state(const Eigen::MatrixXd& H, double beta);

/// beta = (n ln 2 + ln(1/delta_tol)) / Delta.
double beta_for_target(double Delta, int n, double delta_tol);

/// (1/2) || rho - sigma ||_1.
double trace_distance(const Eigen::MatrixXd& rho, const Eigen::MatrixXd& sigma);
double trace_distance(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);

}  // namespace dqa
