#include "dqa/lanczos.hpp"

#include <cmath>
#include <sstream>

#include "dqa/rng.hpp"

namespace dqa {

namespace {

Eigen::VectorXd random_unit(Eigen::Index dim, Rng& rng) {
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = rng.normal();
  v /= v.norm();
  return v;
}

// Two-pass classical Gram-Schmidt against the first j columns of V, with the
// first-pass coefficients returned (they approximate V^T H v under full
// reorthogonalization).
Eigen::VectorXd orthogonalize(const Eigen::MatrixXd& V, int j, Eigen::VectorXd& w) {
  const auto Vj = V.leftCols(j);
  Eigen::VectorXd h = Vj.transpose() * w;
  w.noalias() -= Vj * h;
  Eigen::VectorXd h2 = Vj.transpose() * w;
  w.noalias() -= Vj * h2;
  h += h2;
  return h;
}

LanczosResult dense_solve(const LinearOp& H, int k, bool vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      H.dense_real(), vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  require(es.info() == Eigen::Success, "lowest_eigs: dense eigensolver failed");
  LanczosResult r;
  r.values = es.eigenvalues().head(k);
  if (vectors) r.vectors = es.eigenvectors().leftCols(k);
  r.residuals = Eigen::VectorXd::Zero(k);
  r.converged = true;
  return r;
}

}  // namespace

LanczosResult lowest_eigs(const LinearOp& H, int k, LanczosOptions opts) {
  const Eigen::Index dim = H.dim();
  require(k >= 1 && k <= dim, "lowest_eigs: k out of range");
  require(H.hermitian(), "lowest_eigs: operator must be Hermitian");
  require(H.is_real(), "lowest_eigs: real structured operator required");

  const int m = std::min<Eigen::Index>(opts.max_basis, dim);
  if (dim <= std::max<Eigen::Index>(4 * m, 256) && dim <= kDenseLimit)
    return dense_solve(H, k, opts.vectors);
  require(k + 2 < m, "lowest_eigs: max_basis too small for requested k");

  const double scale = std::max(1.0, H.norm_bound());
  Rng rng(opts.seed);

  Eigen::MatrixXd V(dim, m + 1);
  Eigen::MatrixXd Tm = Eigen::MatrixXd::Zero(m, m);
  if (opts.guess.size() == dim && opts.guess.norm() > 0.0)
    V.col(0) = opts.guess / opts.guess.norm();
  else
    V.col(0) = random_unit(dim, rng);

  LanczosResult res;
  int j = 0;  // current basis size
  Eigen::VectorXd w(dim), theta;
  Eigen::MatrixXd S;

  for (int cycle = 0; cycle <= opts.max_restarts; ++cycle) {
    double beta_last = 0.0;
    while (j < m) {
      H.apply_into(V.col(j), w);
      ++res.matvecs;
      Eigen::VectorXd h = orthogonalize(V, j + 1, w);
      Tm.col(j).head(j + 1) = h;
      Tm.row(j).head(j + 1) = h.transpose();
      double beta = w.norm();
      if (beta < 1e-13 * scale) {
        // Invariant subspace: continue in a fresh random direction.
        w = random_unit(dim, rng);
        orthogonalize(V, j + 1, w);
        beta = 0.0;
        const double wn = w.norm();
        require(wn > 1e-8, "lowest_eigs: basis breakdown");
        w /= wn;
      } else {
        w /= beta;
      }
      if (j + 1 < m) {
        Tm(j + 1, j) = beta;
        Tm(j, j + 1) = beta;
      }
      beta_last = beta;
      V.col(j + 1) = w;
      ++j;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Tm);
    require(es.info() == Eigen::Success, "lowest_eigs: projected eigensolver failed");
    theta = es.eigenvalues();
    S = es.eigenvectors();

    Eigen::VectorXd resid(k);
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      resid(i) = std::abs(beta_last * S(m - 1, i));
      if (resid(i) > opts.tol * scale) ok = false;
    }
    res.restarts = cycle;
    if (ok || cycle == opts.max_restarts) {
      res.values = theta.head(k);
      res.residuals = resid;
      res.converged = ok;
      if (opts.vectors) res.vectors = V.leftCols(m) * S.leftCols(k);
      if (!ok) {
        std::ostringstream msg;
        msg << "lowest_eigs: not converged after " << cycle
            << " restarts; residuals:";
        for (int i = 0; i < k; ++i) msg << ' ' << resid(i);
        throw IterativeFailure(msg.str());
      }
      return res;
    }

    // Thick restart: keep the lowest Ritz vectors plus the residual direction.
    const int l = std::min(k + 4, m - 2);
    Eigen::MatrixXd kept = V.leftCols(m) * S.leftCols(l);
    V.leftCols(l) = kept;
    V.col(l) = V.col(m);
    Tm.setZero();
    for (int i = 0; i < l; ++i) Tm(i, i) = theta(i);
    // Arrowhead couplings to the residual vector are recovered by the
    // Gram-Schmidt projections on the next growth step.
    j = l;
  }
  throw IterativeFailure("lowest_eigs: restart loop exited unexpectedly");
}

}  // namespace dqa
