#pragma once

#include "dqa/linear_op.hpp"

namespace dqa {

struct LanczosOptions {
  int max_basis = 48;      // Krylov dimension per restart cycle
  int max_restarts = 400;
  double tol = 1e-10;      // residual tolerance, relative to the norm scale
  bool vectors = true;
  Eigen::VectorXd guess;   // warm start for the first basis vector
  std::uint64_t seed = 0x6a09e667f3bcc908ULL;
};

struct LanczosResult {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXd vectors;   // dim x k when requested
  Eigen::VectorXd residuals; // estimated ||Hv - Ev|| per pair
  int restarts = 0;
  long matvecs = 0;
  bool converged = false;
};

/// Lowest k eigenpairs of a real symmetric operator. Thick-restart Lanczos
/// with full reorthogonalization; falls back to a dense solve for small
/// dimensions. Throws IterativeFailure (with residuals in the message) if
/// the restart budget is exhausted.
LanczosResult lowest_eigs(const LinearOp& H, int k, LanczosOptions opts = {});

}  // namespace dqa
