#include "dqa/schedule_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dqa/hamiltonians.hpp"
#include "dqa/rng.hpp"

namespace dqa {

namespace {

constexpr double kPi = 3.14159265358979323846;

double diag_expectation(const Eigen::VectorXcd& psi, const Eigen::VectorXd& table) {
  double e = 0.0;
  for (Eigen::Index x = 0; x < psi.size(); ++x) e += std::norm(psi(x)) * table(x);
  return e;
}

double qaoa_objective(const DiagonalCost& cost, const Eigen::VectorXd& table,
                      const std::vector<double>& g, const std::vector<double>& b) {
  const QuantumState psi = qaoa_evolve(cost, g, b);
  return diag_expectation(psi.amps, table);
}

}  // namespace

void ControlVector::validate() const {
  require(u.size() >= 2, "ControlVector: need at least 2 segments");
  for (double v : u)
    require(v >= 0.0 && v <= 1.0, "ControlVector: values must lie in [0,1]");
}

QuantumState evolve_control(const SpinProblem& p, double T, const ControlVector& u,
                            double exp_tol) {
  p.validate();
  u.validate();
  require(T > 0.0, "evolve_control: T must be > 0");
  const TimFamily fam(p);
  const double dt = T / static_cast<double>(u.segments());
  Eigen::VectorXcd psi = uniform_state(p.n).amps;
  for (double uk : u.u)
    apply_exp_inplace(fam.at(uk, 1.0 - uk), dt, psi, exp_tol);
  return QuantumState::make(std::move(psi));
}

double control_objective(const SpinProblem& p, double T, const ControlVector& u) {
  const Eigen::VectorXd table = cost_table(p);
  const QuantumState psi = evolve_control(p, T, u);
  return diag_expectation(psi.amps, table);
}

GdResult optimize_schedule_gd(const SpinProblem& p, double T, int m,
                              const ControlVector& init, int iters, double step) {
  p.validate();
  require(m >= 2, "optimize_schedule_gd: m must be >= 2");
  require(static_cast<int>(init.segments()) == m,
          "optimize_schedule_gd: init has wrong segment count");
  init.validate();
  require(iters >= 0, "optimize_schedule_gd: negative iteration count");
  require(step > 0.0, "optimize_schedule_gd: step must be > 0");

  const Eigen::VectorXd table = cost_table(p);
  const TimFamily fam(p);
  const double dt = T / m;
  const Eigen::VectorXcd psi0 = uniform_state(p.n).amps;
  auto objective = [&](const std::vector<double>& u) {
    Eigen::VectorXcd psi = psi0;
    for (double uk : u) apply_exp_inplace(fam.at(uk, 1.0 - uk), dt, psi, 1e-12);
    return diag_expectation(psi, table);
  };
  auto clamp = [](std::vector<double>& u) {
    for (double& v : u) v = std::clamp(v, 0.0, 1.0);
  };

  GdResult res;
  res.control = init;
  double f = objective(res.control.u);
  res.trace.push_back(f);

  const double fd = 1e-4;
  for (int it = 0; it < iters; ++it) {
    std::vector<double> grad(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      std::vector<double> up = res.control.u, dn = res.control.u;
      up[static_cast<std::size_t>(k)] += fd;
      dn[static_cast<std::size_t>(k)] -= fd;
      clamp(up);
      clamp(dn);
      const double span = up[static_cast<std::size_t>(k)] - dn[static_cast<std::size_t>(k)];
      grad[static_cast<std::size_t>(k)] =
          span > 0.0 ? (objective(up) - objective(dn)) / span : 0.0;
    }
    double alpha = step;
    bool improved = false;
    for (int bt = 0; bt < 25; ++bt) {
      std::vector<double> trial = res.control.u;
      for (int k = 0; k < m; ++k)
        trial[static_cast<std::size_t>(k)] -= alpha * grad[static_cast<std::size_t>(k)];
      clamp(trial);
      const double ft = objective(trial);
      if (ft < f) {
        res.control.u = std::move(trial);
        f = ft;
        improved = true;
        break;
      }
      alpha *= 0.5;
    }
    res.trace.push_back(f);
    if (!improved) break;
  }
  return res;
}

QaoaOptimum optimize_qaoa_angles(const SpinProblem& p, int layers, int restarts,
                                 std::uint64_t seed) {
  p.validate();
  require(layers >= 1, "optimize_qaoa_angles: layers must be >= 1");
  require(restarts >= 0, "optimize_qaoa_angles: negative restart count");
  const DiagonalCost cost = DiagonalCost::from_problem(p);
  const Eigen::VectorXd table = cost.materialized();
  Rng rng(seed);

  QaoaOptimum best;
  best.value = std::numeric_limits<double>::infinity();
  for (int r = 0; r <= restarts; ++r) {
    std::vector<double> g(static_cast<std::size_t>(layers), 0.0),
        b(static_cast<std::size_t>(layers), 0.0);
    if (r > 0)
      for (int k = 0; k < layers; ++k) {
        g[static_cast<std::size_t>(k)] = rng.uniform(-kPi, kPi);
        b[static_cast<std::size_t>(k)] = rng.uniform(-kPi / 2.0, kPi / 2.0);
      }
    double f = qaoa_objective(cost, table, g, b);
    double step = 0.4;
    while (step > 1e-5) {
      bool improved = false;
      for (int k = 0; k < 2 * layers; ++k) {
        std::vector<double>& v = k < layers ? g : b;
        const std::size_t idx = static_cast<std::size_t>(k % layers);
        for (double delta : {step, -step}) {
          v[idx] += delta;
          const double ft = qaoa_objective(cost, table, g, b);
          if (ft < f - 1e-14) {
            f = ft;
            improved = true;
          } else {
            v[idx] -= delta;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (f < best.value) {
      best.value = f;
      best.gammas = g;
      best.betas = b;
    }
  }
  return best;
}

BangReport bang_fraction(const ControlVector& u, double tol) {
  u.validate();
  require(tol > 0.0 && tol < 0.5, "bang_fraction: tol in (0, 0.5)");
  BangReport r;
  r.start_bang = u.u.front() >= 1.0 - tol;
  r.end_bang = u.u.back() <= tol;
  for (std::size_t k = 2; k + 1 < u.u.size(); ++k)
    r.interior_smoothness = std::max(r.interior_smoothness,
                                     std::abs(u.u[k] - u.u[k - 1]));
  return r;
}

SpinProblem gen_maxcut_3reg(int n, std::uint64_t seed) {
  require(n >= 4 && n % 2 == 0, "gen_maxcut_3reg: n must be even and >= 4");
  Rng rng(seed);
  // Configuration model: three stubs per vertex, uniform perfect matching,
  // rejected until simple.
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(3 * n));
    for (int v = 0; v < n; ++v)
      for (int s = 0; s < 3; ++s) stubs.push_back(v);
    for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
      std::swap(stubs[static_cast<std::size_t>(i)],
                stubs[static_cast<std::size_t>(rng.uniform_int(0, i))]);
    std::vector<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      int a = stubs[i], bvtx = stubs[i + 1];
      if (a == bvtx) {
        ok = false;
        break;
      }
      if (a > bvtx) std::swap(a, bvtx);
      edges.emplace_back(a, bvtx);
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    SpinProblem p = SpinProblem::make(n);
    p.name = "maxcut3reg";
    for (const auto& [a, b] : edges) p.add_coupling(a, b, -1.0);
    return p;
  }
  throw NumericError("gen_maxcut_3reg: failed to sample a simple 3-regular graph");
}

}  // namespace dqa
