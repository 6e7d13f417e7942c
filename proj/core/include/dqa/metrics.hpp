#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dqa/evolve.hpp"
#include "dqa/spin_problem.hpp"

namespace dqa {

struct RunResult {
  double p = 0.0;        // final success probability
  double residual = 0.0; // residual energy
  double T = 0.0;
  std::string instance;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Exact minimum of a diagonal cost and every basis state attaining it
/// (exhaustive scan, n <= 24).
struct GroundSet {
  double energy = 0.0;
  std::vector<std::uint64_t> states;
};

GroundSet ground_set(const DiagonalCost& cost);

/// Total probability on the exact-minimum basis states.
double success_probability(const QuantumState& state, const DiagonalCost& cost);
double success_probability(const Eigen::VectorXcd& amps, const DiagonalCost& cost);

/// <state|H_Z|state> - E_min.
double residual_energy(const QuantumState& state, const DiagonalCost& cost);
double residual_energy(const Eigen::VectorXcd& amps, const DiagonalCost& cost);

/// T * ln(1-target)/ln(1-p); T when p = 1, infinity when p = 0.
double tts(double T, double p, double target = 0.99);

/// Mean success probability of e^{-itH} psi0 over uniformly spaced t in
/// [t_lo, t_hi]. Uses a dense eigendecomposition when the dimension allows.
double late_time_success(const LinearOp& H, const QuantumState& psi0,
                         std::pair<double, double> t_window, int samples,
                         const DiagonalCost& cost);

/// Least-squares slope of -log2(P) against n, with its standard error.
std::pair<double, double> fit_alpha(const std::vector<std::pair<int, double>>& points);

}  // namespace dqa
