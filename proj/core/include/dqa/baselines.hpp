#pragma once

#include <cstdint>
#include <vector>

#include "dqa/instances.hpp"
#include "dqa/schedule.hpp"
#include "dqa/spin_problem.hpp"

namespace dqa {

struct AnnealerConfig {
  long sweeps = 1000;
  double beta_initial = 0.1;
  double beta_final = 5.0;
  bool geometric = true;  // false: linear beta ramp
  int repetitions = 1;
  std::uint64_t seed = 1;

  void validate() const;
};

struct SaResult {
  double best_energy = 0.0;
  std::vector<int> best_config;       // bits
  double success_fraction = 0.0;      // vs brute force; NaN when n > 24
  std::vector<double> best_trace;     // best-so-far per sweep, repetition 0
};

/// Single-spin-flip Metropolis with the configured beta ramp.
SaResult simulated_annealing(const SpinProblem& p, const AnnealerConfig& cfg);

struct SvmcResult {
  std::vector<double> angles;  // final rotor angles in [0, pi]
  std::vector<int> bits;       // rounded by sign of cos(theta)
  double energy = 0.0;         // Ising energy of the rounded configuration
  long accepted = 0;
  long proposed = 0;
};

/// Spin-vector Monte Carlo: Metropolis over planar rotor angles under
///   E(theta) = -A(s) sum sin(theta_i)
///              - B(s) (sum h_i cos(theta_i) + sum J_ij cos(theta_i) cos(theta_j))
/// with s ramped 0 -> 1 across sweeps and uniform [0, pi] angle proposals.
/// The inverse temperature is fixed (the defining reference leaves it open).
SvmcResult svmc(const SpinProblem& p, const Schedule& sched, long sweeps,
                std::uint64_t seed, double beta = 3.0);

struct BruteForceResult {
  double energy = 0.0;
  std::vector<std::uint64_t> configs;  // every minimizing basis state
};

/// Exhaustive scan, n <= 24.
BruteForceResult brute_force(const SpinProblem& p);

/// Discrete-time uniform random walk from the entrance; exit occupancy
/// averaged over the last two steps (the graph is bipartite, so a single
/// step's occupancy oscillates instead of converging).
double classical_walk_glued_trees(const GluedTreesGraph& g, long steps,
                                  int walkers, std::uint64_t seed);

}  // namespace dqa
