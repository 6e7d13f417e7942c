#include "dqa/evolve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace dqa {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
// Fourth-order commutator-free pair over the two Gauss nodes.
constexpr double kCf4A1 = (3.0 - 2.0 * kSqrt3) / 12.0;
constexpr double kCf4A2 = (3.0 + 2.0 * kSqrt3) / 12.0;

double binom(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b *= static_cast<double>(n - k + i) / i;
  return b;
}

LinearOp diagonal_op(const Eigen::VectorXd& table) {
  OpStructure s;
  s.kernel = OpStructure::Kernel::None;
  s.dim = table.size();
  s.diags.emplace_back(1.0, std::make_shared<const Eigen::VectorXd>(table));
  return LinearOp::from_structure(std::move(s));
}

}  // namespace

QuantumState QuantumState::make(Eigen::VectorXcd a, Basis basis) {
  require(a.size() >= 1, "QuantumState: empty amplitude vector");
  const double nrm = a.norm();
  require(std::abs(nrm - 1.0) < 1e-8, "QuantumState: state is not unit norm");
  QuantumState q;
  q.amps = std::move(a);
  q.basis = basis;
  return q;
}

QuantumState uniform_state(int n) {
  require(n >= 1, "uniform_state: n must be >= 1");
  const Eigen::Index dim = Eigen::Index{1} << n;
  return QuantumState::make(
      Eigen::VectorXcd::Constant(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

QuantumState basis_state(int n, std::uint64_t index) {
  require(n >= 1, "basis_state: n must be >= 1");
  const Eigen::Index dim = Eigen::Index{1} << n;
  require(index < static_cast<std::uint64_t>(dim), "basis_state: index out of range");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
  a(static_cast<Eigen::Index>(index)) = 1.0;
  return QuantumState::make(std::move(a));
}

QuantumState symmetric_uniform_state(int n) {
  require(n >= 1, "symmetric_uniform_state: n must be >= 1");
  Eigen::VectorXcd a(n + 1);
  const double norm = std::pow(2.0, -0.5 * n);
  for (int w = 0; w <= n; ++w) a(w) = std::sqrt(binom(n, w)) * norm;
  return QuantumState::make(std::move(a), Basis::Symmetric);
}

QuantumState embed_symmetric(const QuantumState& sym, int n) {
  require(sym.basis == Basis::Symmetric, "embed_symmetric: expected a symmetric-basis state");
  require(sym.amps.size() == n + 1, "embed_symmetric: dimension mismatch");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd full(dim);
  Eigen::VectorXd scale(n + 1);
  for (int w = 0; w <= n; ++w) scale(w) = 1.0 / std::sqrt(binom(n, w));
  for (Eigen::Index x = 0; x < dim; ++x) {
    const int w = std::popcount(static_cast<std::uint64_t>(x));
    full(x) = sym.amps(w) * scale(w);
  }
  return QuantumState::make(std::move(full));
}

Assembler tim_assembler(const SpinProblem& p, const Schedule& sched) {
  return tim_assembler(TimFamily(p), sched);
}

Assembler tim_assembler(const TimFamily& fam, const Schedule& sched) {
  return [fam, A = sched.A, B = sched.B](double s) { return fam.at(A(s), B(s)); };
}

Assembler reverse_assembler(const TimFamily& fam, const Schedule& sched, double Gamma) {
  require(sched.C.has_value(), "reverse_assembler: schedule has no C control");
  if (sched.lambda) {
    return [fam, A = sched.A, B = sched.B, C = *sched.C, L = *sched.lambda,
            Gamma](double s) {
      const double l = L(s);
      return fam.at(Gamma * l * A(s), B(s), (1.0 - l) * C(s));
    };
  }
  return [fam, A = sched.A, B = sched.B, C = *sched.C](double s) {
    return fam.at(A(s), B(s), C(s));
  };
}

Assembler symmetric_assembler(const SymmetricFamily& fam, const Schedule& sched) {
  return [fam, A = sched.A, B = sched.B](double s) { return fam.at(A(s), B(s)); };
}

Assembler glued_trees_assembler(const GluedTreesFamily& fam) {
  return [fam](double s) { return fam.at(s); };
}

void apply_exp_inplace(const LinearOp& H, double theta, Eigen::VectorXcd& psi,
                       double tol) {
  require(H.dim() == psi.size(), "apply_exp_inplace: dimension mismatch");
  if (theta == 0.0) return;
  const double nb = H.norm_bound();
  if (nb == 0.0) return;
  // Keep each partial angle small enough that the power series converges in
  // a couple dozen terms.
  const int chunks = std::max(1, static_cast<int>(std::ceil(std::abs(theta) * nb / 2.0)));
  const Complex mit(0.0, -theta / chunks);
  Eigen::VectorXcd term = psi, next(psi.size());
  for (int c = 0; c < chunks; ++c) {
    term = psi;
    const double ref = psi.norm();
    bool done = false;
    for (int k = 1; k <= 400; ++k) {
      H.apply_into(term, next);
      term = (mit / static_cast<double>(k)) * next;
      psi += term;
      if (term.norm() <= tol * ref) {
        done = true;
        break;
      }
    }
    if (!done)
      throw IntegratorFailure("apply_exp_inplace: exponential series did not converge");
  }
}

QuantumState quench_evolve(const LinearOp& H, double T, const QuantumState& psi0) {
  Eigen::VectorXcd psi = psi0.amps;
  apply_exp_inplace(H, T, psi);
  QuantumState out;
  out.amps = std::move(psi);
  out.basis = psi0.basis;
  return out;
}

namespace {

struct RunResult {
  std::vector<Eigen::VectorXcd> states;
  Eigen::VectorXcd final_state;
  long steps = 0;
};

// One pass over the checkpoint list at the given base step. Checkpoints are
// the union of the requested sample grid and the endpoints; record[i] marks
// which checkpoints belong to the sample grid.
RunResult run_once(const Assembler& H, double T, const Eigen::VectorXcd& psi0,
                   const std::vector<double>& checkpoints,
                   const std::vector<bool>& record, double ds,
                   const PropagateOptions& opts, bool store) {
  RunResult r;
  Eigen::VectorXcd psi = psi0;
  if (store && record.front()) r.states.push_back(psi);
  for (std::size_t c = 0; c + 1 < checkpoints.size(); ++c) {
    const double c0 = checkpoints[c], c1 = checkpoints[c + 1];
    const long m = std::max<long>(1, static_cast<long>(std::ceil((c1 - c0) / ds - 1e-12)));
    const double h = (c1 - c0) / static_cast<double>(m);
    for (long i = 0; i < m; ++i) {
      const double s0 = c0 + static_cast<double>(i) * h;
      if (opts.order == 2) {
        apply_exp_inplace(H(s0 + 0.5 * h), T * h, psi, opts.exp_tol);
      } else {
        const LinearOp H1 = H(s0 + (0.5 - kSqrt3 / 6.0) * h);
        const LinearOp H2 = H(s0 + (0.5 + kSqrt3 / 6.0) * h);
        apply_exp_inplace(linear_combination(kCf4A2, H1, kCf4A1, H2), T * h, psi,
                          opts.exp_tol);
        apply_exp_inplace(linear_combination(kCf4A1, H1, kCf4A2, H2), T * h, psi,
                          opts.exp_tol);
      }
      ++r.steps;
    }
    if (opts.check_norm && std::abs(psi.norm() - 1.0) > opts.norm_tol)
      throw IntegratorFailure("propagate: norm drift exceeded tolerance");
    if (store && record[c + 1]) r.states.push_back(psi);
  }
  r.final_state = std::move(psi);
  return r;
}

}  // namespace

Trajectory propagate(const Assembler& H, double T, const Eigen::VectorXcd& psi0,
                     PropagateOptions opts) {
  require(T > 0.0, "propagate: T must be > 0");
  require(opts.ds > 0.0 && opts.ds <= 1.0, "propagate: ds must lie in (0,1]");
  require(opts.order == 2 || opts.order == 4, "propagate: order must be 2 or 4");

  std::vector<double> grid = opts.s_grid;
  if (grid.empty()) {
    grid.resize(101);
    for (int i = 0; i <= 100; ++i) grid[static_cast<std::size_t>(i)] = i / 100.0;
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require(grid[i] >= 0.0 && grid[i] <= 1.0, "propagate: s_grid values must lie in [0,1]");
    if (i > 0) require(grid[i] > grid[i - 1], "propagate: s_grid must strictly increase");
  }

  std::vector<double> checkpoints;
  std::vector<bool> record;
  if (grid.front() > 0.0) {
    checkpoints.push_back(0.0);
    record.push_back(false);
  }
  for (double g : grid) {
    checkpoints.push_back(g);
    record.push_back(true);
  }
  if (grid.back() < 1.0) {
    checkpoints.push_back(1.0);
    record.push_back(false);
  }

  Trajectory traj;
  traj.T = T;
  traj.s = grid;

  double ds = opts.ds;
  RunResult run = run_once(H, T, psi0, checkpoints, record, ds, opts, opts.store_states);
  if (opts.max_doublings <= 0) {
    traj.self_consistency = 0.0;
  } else {
    bool converged = false;
    for (int k = 0; k < opts.max_doublings; ++k) {
      ds *= 0.5;
      RunResult fine = run_once(H, T, psi0, checkpoints, record, ds, opts, opts.store_states);
      const double diff = (fine.final_state - run.final_state).norm();
      run = std::move(fine);
      if (diff < opts.tolerance) {
        traj.self_consistency = diff;
        converged = true;
        break;
      }
    }
    if (!converged)
      throw IntegratorFailure("propagate: step halving did not reach the requested tolerance");
  }
  traj.steps = run.steps;
  traj.final_state = std::move(run.final_state);
  if (opts.store_states) traj.states = std::move(run.states);
  return traj;
}

Trajectory propagate(const Assembler& H, const Schedule& sched,
                     const QuantumState& psi0, PropagateOptions opts) {
  Trajectory t = propagate(H, sched.T, psi0.amps, std::move(opts));
  t.basis = psi0.basis;
  return t;
}

QuantumState qaoa_evolve(const SpinProblem& p, std::span<const double> gammas,
                         std::span<const double> betas) {
  return qaoa_evolve(DiagonalCost::from_problem(p), gammas, betas);
}

QuantumState qaoa_evolve(const DiagonalCost& cost, std::span<const double> gammas,
                         std::span<const double> betas) {
  require(gammas.size() == betas.size(), "qaoa_evolve: angle lists differ in length");
  const int n = cost.n;
  const Eigen::Index dim = cost.dim();
  Eigen::VectorXcd psi = uniform_state(n).amps;
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    // e^{i gamma H_Z}: a pure phase on each basis state.
    const double g = gammas[k];
    for (Eigen::Index x = 0; x < dim; ++x)
      psi(x) *= Complex(std::cos(g * cost(static_cast<std::uint64_t>(x))),
                        std::sin(g * cost(static_cast<std::uint64_t>(x))));
    // e^{i beta H_X} = prod_i e^{-i beta X_i} since H_X = -sum X_i.
    const double cb = std::cos(betas[k]), sb = std::sin(betas[k]);
    const Complex misb(0.0, -sb);
    for (int q = 0; q < n; ++q) {
      const Eigen::Index mask = static_cast<Eigen::Index>(flip_mask(q, n));
      for (Eigen::Index x = 0; x < dim; ++x) {
        if (x & mask) continue;
        const Complex lo = psi(x), hi = psi(x | mask);
        psi(x) = cb * lo + misb * hi;
        psi(x | mask) = cb * hi + misb * lo;
      }
    }
  }
  return QuantumState::make(std::move(psi));
}

QuantumState evolve_breakpoint(const DiagonalCost& cost, const BreakpointSchedule& bs) {
  require(!bs.gammas.empty() && bs.gammas.size() == bs.betas.size(),
          "evolve_breakpoint: schedule does not carry its layer angles");
  const LinearOp hz = diagonal_op(cost.materialized());
  const LinearOp hx = transverse_field(cost.n);
  Eigen::VectorXcd psi = uniform_state(cost.n).amps;
  for (std::size_t k = 0; k < bs.gammas.size(); ++k) {
    apply_exp_inplace(hz, -bs.gammas[k], psi);
    apply_exp_inplace(hx, -bs.betas[k], psi);
  }
  return QuantumState::make(std::move(psi));
}

QuantumState excited_transverse_init(const SpinProblem& p) {
  p.validate();
  const int n = p.n;
  require(n >= 2, "excited_transverse_init: n must be >= 2");
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::VectorXd cost = cost_table(p);
  // First excited level of H_X is n-fold degenerate, spanned by the states
  // |e_i> with amplitudes (-1)^{bit_i(x)} / sqrt(2^n). Diagonalize H_Z in
  // that subspace and take its lowest eigenvector.
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const double c = cost(x) / static_cast<double>(dim);
    for (int i = 0; i < n; ++i) {
      const double si = z_value(static_cast<std::uint64_t>(x), i, n);
      for (int j = i; j < n; ++j)
        M(i, j) += c * si * z_value(static_cast<std::uint64_t>(x), j, n);
    }
  }
  M = M.selfadjointView<Eigen::Upper>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  require(es.info() == Eigen::Success, "excited_transverse_init: eigensolver failed");
  const Eigen::VectorXd v = es.eigenvectors().col(0);
  const double norm = std::pow(2.0, -0.5 * n);
  Eigen::VectorXcd psi(dim);
  bool degenerate = es.eigenvalues().size() > 1 &&
                    es.eigenvalues()(1) - es.eigenvalues()(0) < 1e-10;
  for (Eigen::Index x = 0; x < dim; ++x) {
    double a = 0.0;
    for (int i = 0; i < n; ++i)
      a += v(i) * (bit_at(static_cast<std::uint64_t>(x), i, n) ? -1.0 : 1.0);
    psi(x) = a * norm;
  }
  QuantumState out = QuantumState::make(std::move(psi));
  out.degenerate_tiebreak = degenerate;
  return out;
}

Trajectory evolve_symmetric(const SymmetricProblem& sp, const Schedule& sched,
                            const QuantumState& psi0, PropagateOptions opts) {
  require(psi0.basis == Basis::Symmetric, "evolve_symmetric: expected a symmetric-basis state");
  SymmetricFamily fam(sp);
  require(psi0.amps.size() == fam.dim(), "evolve_symmetric: dimension mismatch");
  return propagate(symmetric_assembler(fam, sched), sched, psi0, std::move(opts));
}

std::vector<CycleRecord> iterated_reverse_run(const SpinProblem& p,
                                              const ReverseParams& params,
                                              int cycles, std::uint64_t seed) {
  p.validate();
  require(cycles >= 1, "iterated_reverse_run: need at least one cycle");
  const int n = p.n;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Rng rng(seed);
  const Eigen::VectorXd cost = cost_table(p);

  std::vector<int> bits = params.init_config;
  if (bits.empty()) {
    bits.resize(static_cast<std::size_t>(n));
    for (int& b : bits) b = rng.bernoulli(0.5) ? 1 : 0;
  }
  require(static_cast<int>(bits.size()) == n, "iterated_reverse_run: init_config length");
  for (int b : bits) require(b == 0 || b == 1, "iterated_reverse_run: init_config bits");

  auto bits_to_index = [n](const std::vector<int>& b) {
    std::uint64_t x = 0;
    for (int i = 0; i < n; ++i)
      if (b[static_cast<std::size_t>(i)]) x |= flip_mask(i, n);
    return x;
  };

  PropagateOptions opts = params.propagate;
  opts.store_states = false;

  std::vector<CycleRecord> out;
  double best = std::numeric_limits<double>::infinity();
  for (int cycle = 0; cycle < cycles; ++cycle) {
    const std::uint64_t start = bits_to_index(bits);
    const QuantumState psi0 = basis_state(n, start);

    const bool som = params.kind == ReverseParams::Kind::Sombrero;
    const Schedule sched = som ? sombrero(params.T, params.peak_height)
                               : reverse_dwave(params.s_target, params.pause_fraction,
                                               params.reinitialize, params.T);
    Assembler H;
    if (som) {
      std::vector<int> spins(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        spins[static_cast<std::size_t>(i)] = 1 - 2 * bits[static_cast<std::size_t>(i)];
      H = reverse_assembler(TimFamily(n, cost, init_field_table(n, spins)), sched);
    } else {
      H = tim_assembler(TimFamily(n, cost), sched);
    }

    const Trajectory traj = propagate(H, sched, psi0, opts);

    // Born-rule sample from the final state.
    const double r = rng.uniform();
    double acc = 0.0;
    Eigen::Index measured = dim - 1;
    for (Eigen::Index x = 0; x < dim; ++x) {
      acc += std::norm(traj.final_state(x));
      if (r < acc) {
        measured = x;
        break;
      }
    }

    CycleRecord rec;
    rec.cycle = cycle;
    rec.measured = static_cast<std::uint64_t>(measured);
    rec.energy = cost(measured);
    best = std::min(best, rec.energy);
    rec.best_energy = best;
    out.push_back(rec);

    if (params.reinitialize)
      for (int i = 0; i < n; ++i)
        bits[static_cast<std::size_t>(i)] = bit_at(rec.measured, i, n);
  }
  return out;
}

}  // namespace dqa
