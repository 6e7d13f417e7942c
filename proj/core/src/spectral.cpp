#include "dqa/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace dqa {

namespace {

// Shared evaluation state for repeated spectra along s: warm-starts the
// iterative path with the previous ground vector.
struct SpectrumCache {
  SpectrumOptions opts;

  SpectralFrame at(const LinearOp& H, double s, int k) {
    SpectralFrame f = spectrum_at(H, k, opts);
    f.s = s;
    if (f.vectors.cols() > 0) opts.lanczos.guess = f.vectors.col(0);
    return f;
  }
};

constexpr double kInvPhi = 0.6180339887498949;

}  // namespace

SpectralFrame spectrum_at(const LinearOp& H, int k, SpectrumOptions opts) {
  require(k >= 1 && k <= H.dim(), "spectrum_at: k out of range");
  SpectralFrame f;
  if (H.dim() <= opts.dense_limit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        H.dense_real(),
        opts.vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    require(es.info() == Eigen::Success, "spectrum_at: dense eigensolver failed");
    f.values = es.eigenvalues().head(k);
    if (opts.vectors) f.vectors = es.eigenvectors().leftCols(k);
  } else {
    LanczosOptions lo = opts.lanczos;
    lo.vectors = opts.vectors;
    LanczosResult r = lowest_eigs(H, k, std::move(lo));
    f.values = std::move(r.values);
    if (opts.vectors) f.vectors = std::move(r.vectors);
    f.residuals = std::move(r.residuals);
  }
  if (opts.vectors) {
    f.residuals.resize(k);
    Eigen::VectorXd hv(H.dim());
    for (int i = 0; i < k; ++i) {
      H.apply_into(f.vectors.col(i).eval(), hv);
      f.residuals(i) = (hv - f.values(i) * f.vectors.col(i)).norm();
    }
  } else if (f.residuals.size() == 0) {
    f.residuals = Eigen::VectorXd::Zero(k);
  }
  return f;
}

GapProfile gap_profile(const Assembler& H, const std::vector<double>& grid, int d,
                       SpectrumOptions opts) {
  require(d >= 1, "gap_profile: d must be >= 1");
  require(!grid.empty(), "gap_profile: empty grid");
  SpectrumCache cache{std::move(opts)};
  GapProfile g;
  g.s = grid;
  for (double s : grid) {
    const SpectralFrame f = cache.at(H(s), s, d + 1);
    g.Delta.push_back(f.values(d) - f.values(d - 1));
    g.band_width.push_back(f.values(d - 1) - f.values(0));
  }
  return g;
}

std::vector<GapMinimum> min_gap(const Assembler& H, int d,
                                const std::vector<double>& coarse_grid,
                                SpectrumOptions opts) {
  require(d >= 1, "min_gap: d must be >= 1");
  require(coarse_grid.size() >= 3, "min_gap: need at least 3 coarse points");
  SpectrumCache cache{std::move(opts)};
  auto gap = [&](double s) {
    const SpectralFrame f = cache.at(H(s), s, d + 1);
    return f.values(d) - f.values(d - 1);
  };

  const std::size_t m = coarse_grid.size();
  std::vector<double> g(m);
  for (std::size_t i = 0; i < m; ++i) g[i] = gap(coarse_grid[i]);

  std::vector<GapMinimum> out;
  if (g[0] < g[1]) out.push_back({coarse_grid[0], g[0], false, true});
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (!(g[i] <= g[i - 1] && g[i] < g[i + 1])) continue;
    // Golden-section refinement on the bracketing interval.
    double a = coarse_grid[i - 1], b = coarse_grid[i + 1];
    double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
    double f1 = gap(x1), f2 = gap(x2);
    while (b - a > 1e-5) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kInvPhi * (b - a);
        f1 = gap(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kInvPhi * (b - a);
        f2 = gap(x2);
      }
    }
    const double sm = 0.5 * (a + b);
    out.push_back({sm, std::min({gap(sm), f1, f2, g[i]}), false, false});
  }
  if (g[m - 1] < g[m - 2]) out.push_back({coarse_grid[m - 1], g[m - 1], false, true});
  require(!out.empty(), "min_gap: gap profile has no local minimum");

  std::size_t best = 0;
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].gap < out[best].gap) best = i;
  out[best].global = true;
  return out;
}

const GapMinimum& global_minimum(const std::vector<GapMinimum>& minima) {
  for (const auto& mg : minima)
    if (mg.global) return mg;
  throw ContractViolation("global_minimum: no global flag set");
}

std::vector<double> adiabatic_xi(const Assembler& H, const Assembler& dH,
                                 const Assembler& d2H, int d,
                                 const std::vector<double>& grid,
                                 SpectrumOptions opts) {
  require(d >= 1, "adiabatic_xi: d must be >= 1");
  require(grid.size() >= 2 && grid.front() == 0.0,
          "adiabatic_xi: quadrature grid must start at 0");
  SpectrumCache cache{std::move(opts)};
  cache.opts.vectors = true;

  const std::size_t m = grid.size();
  std::vector<double> Delta(m), n1(m), n2(m);
  for (std::size_t i = 0; i < m; ++i) {
    const SpectralFrame f = cache.at(H(grid[i]), grid[i], d + 1);
    Delta[i] = f.values(d) - f.values(d - 1);
    if (Delta[i] < 1e-12)
      throw SingularGap("adiabatic_xi: gap below 1e-12 on quadrature grid");
    n1[i] = dH(grid[i]).norm_est();
    n2[i] = d2H(grid[i]).norm_est();
  }

  const double dd = static_cast<double>(d);
  const double c3 = 7.0 * dd * std::sqrt(dd);
  auto integrand = [&](std::size_t i) {
    const double D2 = Delta[i] * Delta[i];
    return dd * n2[i] / D2 + c3 * n1[i] * n1[i] / (D2 * Delta[i]);
  };

  std::vector<double> xi(m);
  const double boundary0 = dd * n1[0] / (Delta[0] * Delta[0]);
  double integral = 0.0;
  xi[0] = 2.0 * boundary0;
  for (std::size_t i = 1; i < m; ++i) {
    integral += 0.5 * (grid[i] - grid[i - 1]) * (integrand(i - 1) + integrand(i));
    xi[i] = boundary0 + dd * n1[i] / (Delta[i] * Delta[i]) + integral;
  }
  return xi;
}

std::vector<double> adiabatic_xi(const TimFamily& fam, const Schedule& sched, int d,
                                 const std::vector<double>& grid,
                                 SpectrumOptions opts) {
  if (!sched.smooth())
    throw NotDifferentiable("adiabatic_xi: schedule is not twice differentiable");
  Assembler H = [&fam, A = sched.A, B = sched.B](double s) { return fam.at(A(s), B(s)); };
  Assembler dH = [&fam, A = sched.A, B = sched.B](double s) {
    return fam.at(A.deriv(s), B.deriv(s));
  };
  Assembler d2H = [&fam, A = sched.A, B = sched.B](double s) {
    return fam.at(A.deriv2(s), B.deriv2(s));
  };
  return adiabatic_xi(H, dH, d2H, d, grid, std::move(opts));
}

std::vector<double> leakage(const Trajectory& traj, const Assembler& H, int d,
                            SpectrumOptions opts) {
  require(!traj.states.empty(), "leakage: trajectory has no stored states");
  require(d >= 1, "leakage: d must be >= 1");
  SpectrumCache cache{std::move(opts)};
  cache.opts.vectors = true;
  std::vector<double> out;
  for (std::size_t i = 0; i < traj.s.size(); ++i) {
    const double s = traj.s[i];
    const Eigen::VectorXcd& psi = traj.states[i];
    const LinearOp op = H(s);
    const int k = static_cast<int>(std::min<Eigen::Index>(d, op.dim()));
    const SpectralFrame f = cache.at(op, s, k);
    double inband = 0.0;
    for (int j = 0; j < k; ++j)
      inband += std::norm(f.vectors.col(j).cast<Complex>().dot(psi));
    out.push_back(std::max(0.0, 1.0 - inband));
  }
  return out;
}

Populations populations(const Trajectory& traj, const Assembler& H,
                        const std::vector<int>& levels, SpectrumOptions opts) {
  require(!traj.states.empty(), "populations: trajectory has no stored states");
  require(!levels.empty(), "populations: no levels requested");
  int kmax = 0;
  for (int l : levels) {
    require(l >= 0, "populations: negative level");
    kmax = std::max(kmax, l);
  }
  const int k = kmax + 1;
  SpectrumCache cache{std::move(opts)};
  cache.opts.vectors = true;

  Populations out;
  out.s = traj.s;
  out.p.assign(levels.size(), {});
  Eigen::MatrixXd prev;
  for (std::size_t i = 0; i < traj.s.size(); ++i) {
    SpectralFrame f = cache.at(H(traj.s[i]), traj.s[i], k);
    bool flagged = false;
    if (prev.cols() == k) {
      // Maximal-overlap assignment against the previous frame resolves
      // ordering inside degenerate clusters; an ill-conditioned overlap
      // matrix flags the frame instead of guessing.
      Eigen::MatrixXd M = (prev.transpose() * f.vectors).cwiseAbs();
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
      const double smin = svd.singularValues()(k - 1);
      if (smin <= 0.0 || svd.singularValues()(0) / smin > 10.0) flagged = true;
      std::vector<int> perm(static_cast<std::size_t>(k), -1);
      std::vector<bool> used(static_cast<std::size_t>(k), false);
      for (int a = 0; a < k; ++a) {
        int best = -1;
        for (int b = 0; b < k; ++b)
          if (!used[static_cast<std::size_t>(b)] &&
              (best < 0 || M(a, b) > M(a, best)))
            best = b;
        perm[static_cast<std::size_t>(a)] = best;
        used[static_cast<std::size_t>(best)] = true;
      }
      Eigen::MatrixXd V(f.vectors.rows(), k);
      Eigen::VectorXd vals(k);
      for (int a = 0; a < k; ++a) {
        V.col(a) = f.vectors.col(perm[static_cast<std::size_t>(a)]);
        vals(a) = f.values(perm[static_cast<std::size_t>(a)]);
      }
      f.vectors = std::move(V);
      f.values = std::move(vals);
      cache.opts.lanczos.guess = f.vectors.col(0);
    }
    prev = f.vectors;
    const Eigen::VectorXcd& psi = traj.states[i];
    for (std::size_t li = 0; li < levels.size(); ++li) {
      const int l = levels[li];
      require(l < f.vectors.cols(), "populations: level exceeds spectrum size");
      out.p[li].push_back(std::norm(f.vectors.col(l).cast<Complex>().dot(psi)));
    }
    out.flagged.push_back(flagged);
  }
  return out;
}

ThermalState thermal_state(const Eigen::MatrixXd& H, double beta) {
  require(beta >= 0.0, "thermal_state: beta must be >= 0");
  require(H.rows() == H.cols() && H.rows() >= 1, "thermal_state: square matrix required");
  require(H.rows() <= (Eigen::Index{1} << 12), "thermal_state: dimension above 2^12");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  require(es.info() == Eigen::Success, "thermal_state: eigensolver failed");
  const Eigen::VectorXd& e = es.eigenvalues();
  const double shift = e(0);
  Eigen::VectorXd w = (-(beta * (e.array() - shift))).exp().matrix();
  const double Z = w.sum();
  if (!std::isfinite(Z) || Z <= 0.0)
    throw NumericError("thermal_state: partition function overflow");
  ThermalState t;
  t.beta = beta;
  t.Z = Z;
  t.shift = shift;
  t.rho = es.eigenvectors() * (w / Z).asDiagonal() * es.eigenvectors().transpose();
  return t;
}

ThermalState thermal_state(const LinearOp& H, double beta) {
  require(H.dim() <= (Eigen::Index{1} << 12), "thermal_state: dimension above 2^12");
  return thermal_state(H.dense_real(), beta);
}

double beta_for_target(double Delta, int n, double delta_tol) {
  require(Delta > 0.0, "beta_for_target: Delta must be > 0");
  require(n >= 1, "beta_for_target: n must be >= 1");
  require(delta_tol > 0.0 && delta_tol < 1.0, "beta_for_target: delta_tol in (0,1)");
  return (n * std::log(2.0) + std::log(1.0 / delta_tol)) / Delta;
}

double trace_distance(const Eigen::MatrixXd& rho, const Eigen::MatrixXd& sigma) {
  require(rho.rows() == sigma.rows() && rho.cols() == sigma.cols() &&
              rho.rows() == rho.cols(),
          "trace_distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho - sigma, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
  require(rho.rows() == sigma.rows() && rho.cols() == sigma.cols() &&
              rho.rows() == rho.cols(),
          "trace_distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho - sigma, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace dqa
