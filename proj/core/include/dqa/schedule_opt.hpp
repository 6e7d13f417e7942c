#pragma once

#include <cstdint>
#include <vector>

#include "dqa/evolve.hpp"
#include "dqa/spin_problem.hpp"

namespace dqa {

/// m control values u_k in [0,1] over equal time slices of [0,T]:
/// H(t) = u(t) H_X + (1-u(t)) H_Z.
struct ControlVector {
  std::vector<double> u;

  std::size_t segments() const { return u.size(); }
  void validate() const;
};

/// Final state of the piecewise-constant evolution from |+>^n.
QuantumState evolve_control(const SpinProblem& p, double T, const ControlVector& u,
                            double exp_tol = 1e-12);

/// Final <H_Z> of the same evolution.
double control_objective(const SpinProblem& p, double T, const ControlVector& u);

struct GdResult {
  ControlVector control;
  std::vector<double> trace;  // objective per accepted iterate, non-increasing
};

/// Projected finite-difference gradient descent on control_objective with a
/// backtracking line search. Central differences, step 1e-4.
GdResult optimize_schedule_gd(const SpinProblem& p, double T, int m,
                              const ControlVector& init, int iters, double step);

struct QaoaOptimum {
  std::vector<double> gammas, betas;
  double value = 0.0;  // achieved <H_Z>
};

/// Best of multi-start coordinate descent with shrinking step over the 2p
/// angles; the zero-angle start is always included.
QaoaOptimum optimize_qaoa_angles(const SpinProblem& p, int layers, int restarts,
                                 std::uint64_t seed);

struct BangReport {
  bool start_bang = false;
  bool end_bang = false;
  double interior_smoothness = 0.0;  // max adjacent difference inside
};

/// start_bang iff u_1 >= 1-tol; end_bang iff u_m <= tol; smoothness over the
/// interior segments only.
BangReport bang_fraction(const ControlVector& u, double tol);

/// Random 3-regular MaxCut instance: J = -1 on the edges, h = 0.
SpinProblem gen_maxcut_3reg(int n, std::uint64_t seed);

}  // namespace dqa
