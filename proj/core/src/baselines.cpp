#include "dqa/baselines.hpp"

#include <cmath>
#include <limits>

#include "dqa/rng.hpp"

namespace dqa {

namespace {

constexpr std::uint64_t kStreamStride = 0x9E3779B97F4A7C15ULL;

struct CouplingLists {
  // Per-spin neighbor list as (other spin, J) pairs.
  std::vector<std::vector<std::pair<int, double>>> nb;

  explicit CouplingLists(const SpinProblem& p) : nb(static_cast<std::size_t>(p.n)) {
    for (const auto& [i, j, v] : p.couplings) {
      nb[static_cast<std::size_t>(i)].emplace_back(j, v);
      nb[static_cast<std::size_t>(j)].emplace_back(i, v);
    }
  }
};

double ising_energy(const SpinProblem& p, const std::vector<int>& z) {
  double e = 0.0;
  for (int i = 0; i < p.n; ++i) e -= p.h(i) * z[static_cast<std::size_t>(i)];
  for (const auto& [i, j, v] : p.couplings)
    e -= v * z[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(j)];
  return e;
}

}  // namespace

void AnnealerConfig::validate() const {
  require(sweeps >= 1, "AnnealerConfig: sweeps must be >= 1");
  require(beta_final >= beta_initial, "AnnealerConfig: beta_final must be >= beta_initial");
  require(beta_initial > 0.0, "AnnealerConfig: beta_initial must be > 0");
  require(repetitions >= 1, "AnnealerConfig: repetitions must be >= 1");
}

SaResult simulated_annealing(const SpinProblem& p, const AnnealerConfig& cfg) {
  p.validate();
  cfg.validate();
  const int n = p.n;
  const CouplingLists cl(p);

  double exact = std::numeric_limits<double>::quiet_NaN();
  if (n <= 24) exact = brute_force(p).energy;

  SaResult res;
  res.best_energy = std::numeric_limits<double>::infinity();
  int hits = 0;
  for (int rep = 0; rep < cfg.repetitions; ++rep) {
    Rng rng(cfg.seed + kStreamStride * static_cast<std::uint64_t>(rep));
    std::vector<int> z(static_cast<std::size_t>(n));
    for (int& s : z) s = rng.bernoulli(0.5) ? 1 : -1;
    double e = ising_energy(p, z);
    double best = e;
    std::vector<int> best_z = z;

    for (long sweep = 0; sweep < cfg.sweeps; ++sweep) {
      double beta = cfg.beta_final;
      if (cfg.sweeps > 1) {
        const double f = static_cast<double>(sweep) / (cfg.sweeps - 1);
        beta = cfg.geometric
                   ? cfg.beta_initial * std::pow(cfg.beta_final / cfg.beta_initial, f)
                   : cfg.beta_initial + f * (cfg.beta_final - cfg.beta_initial);
      }
      for (int i = 0; i < n; ++i) {
        double dE = 2.0 * p.h(i) * z[static_cast<std::size_t>(i)];
        for (const auto& [j, v] : cl.nb[static_cast<std::size_t>(i)])
          dE += 2.0 * v * z[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(j)];
        if (dE <= 0.0 || rng.uniform() < std::exp(-beta * dE)) {
          z[static_cast<std::size_t>(i)] = -z[static_cast<std::size_t>(i)];
          e += dE;
          if (e < best) {
            best = e;
            best_z = z;
          }
        }
      }
      if (rep == 0) res.best_trace.push_back(best);
    }
    if (!std::isnan(exact) && best <= exact + 1e-9) ++hits;
    if (best < res.best_energy) {
      res.best_energy = best;
      res.best_config.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        res.best_config[static_cast<std::size_t>(i)] =
            best_z[static_cast<std::size_t>(i)] == 1 ? 0 : 1;
    }
  }
  res.success_fraction = std::isnan(exact)
                             ? std::numeric_limits<double>::quiet_NaN()
                             : static_cast<double>(hits) / cfg.repetitions;
  return res;
}

SvmcResult svmc(const SpinProblem& p, const Schedule& sched, long sweeps,
                std::uint64_t seed, double beta) {
  p.validate();
  require(sweeps >= 1, "svmc: sweeps must be >= 1");
  require(beta > 0.0, "svmc: beta must be > 0");
  const int n = p.n;
  const CouplingLists cl(p);
  Rng rng(seed);

  constexpr double kPi = 3.14159265358979323846;
  std::vector<double> th(static_cast<std::size_t>(n));
  for (double& t : th) t = rng.uniform(0.0, kPi);

  SvmcResult res;
  for (long sweep = 0; sweep < sweeps; ++sweep) {
    const double s = sweeps > 1 ? static_cast<double>(sweep) / (sweeps - 1) : 1.0;
    const double A = sched.A(s), B = sched.B(s);
    for (int i = 0; i < n; ++i) {
      const double prop = rng.uniform(0.0, kPi);
      const double ci = std::cos(th[static_cast<std::size_t>(i)]);
      const double cp = std::cos(prop);
      double field = p.h(i);
      for (const auto& [j, v] : cl.nb[static_cast<std::size_t>(i)])
        field += v * std::cos(th[static_cast<std::size_t>(j)]);
      const double dE = -A * (std::sin(prop) - std::sin(th[static_cast<std::size_t>(i)])) -
                        B * field * (cp - ci);
      ++res.proposed;
      if (dE <= 0.0 || rng.uniform() < std::exp(-beta * dE)) {
        th[static_cast<std::size_t>(i)] = prop;
        ++res.accepted;
      }
    }
  }

  res.angles = th;
  res.bits.resize(static_cast<std::size_t>(n));
  std::vector<int> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const bool up = std::cos(th[static_cast<std::size_t>(i)]) >= 0.0;
    z[static_cast<std::size_t>(i)] = up ? 1 : -1;
    res.bits[static_cast<std::size_t>(i)] = up ? 0 : 1;
  }
  res.energy = ising_energy(p, z);
  return res;
}

BruteForceResult brute_force(const SpinProblem& p) {
  p.validate();
  if (p.n > 24) throw ResourceError("brute_force: n above 24");
  const std::uint64_t dim = std::uint64_t{1} << p.n;
  BruteForceResult r;
  r.energy = std::numeric_limits<double>::infinity();
  for (std::uint64_t x = 0; x < dim; ++x) {
    const double e = cost_energy(p, x);
    if (e < r.energy - 1e-10) {
      r.energy = e;
      r.configs.assign(1, x);
    } else if (e <= r.energy + 1e-10) {
      r.energy = std::min(r.energy, e);
      r.configs.push_back(x);
    }
  }
  return r;
}

double classical_walk_glued_trees(const GluedTreesGraph& g, long steps,
                                  int walkers, std::uint64_t seed) {
  g.validate();
  require(steps >= 0, "classical_walk_glued_trees: negative step budget");
  require(walkers >= 1, "classical_walk_glued_trees: need at least one walker");
  Rng rng(seed);
  long hits = 0;
  long snapshots = 0;
  for (int w = 0; w < walkers; ++w) {
    int v = g.entrance;
    int prev = v;
    for (long t = 0; t < steps; ++t) {
      const auto& nb = g.adjacency[static_cast<std::size_t>(v)];
      prev = v;
      v = nb[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(nb.size()) - 1))];
    }
    if (steps == 0) {
      ++snapshots;
      if (v == g.exit) ++hits;
    } else {
      snapshots += 2;
      if (v == g.exit) ++hits;
      if (prev == g.exit) ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(snapshots);
}

}  // namespace dqa
