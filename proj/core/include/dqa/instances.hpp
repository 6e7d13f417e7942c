#pragma once

#include <cstdint>
#include <vector>

#include "dqa/spin_problem.hpp"

namespace dqa {

struct Max2SatClause {
  int var[2];    // distinct variable indices
  bool neg[2];   // literal polarity, true = negated
};

struct Max2SatInstance {
  SpinProblem problem;
  std::vector<Max2SatClause> clauses;
  double offset = 0.0;  // cost_energy(problem, x) + offset = violated clauses
};

/// m random clauses over two distinct variables with random polarities.
/// Each clause adds the penalty (1 - zt_i)(1 - zt_j)/4 to the Ising cost,
/// where zt is +-1 with the sign of the literal, so that the total cost plus
/// the reported offset counts violated clauses exactly.
Max2SatInstance gen_max2sat(int n, int m, std::uint64_t seed);

/// Number of violated clauses for a basis-state assignment (independent of
/// the Ising form; the brute-force oracle).
int violated_clauses(const Max2SatInstance& inst, std::uint64_t index);

/// Sherrington-Kirkpatrick: all-to-all J ~ N(0,1)/sqrt(n), h = 0.
SpinProblem gen_sk(int n, std::uint64_t seed);

/// Random energy model: 2^n i.i.d. standard normal diagonal energies,
/// materialized (n <= 24).
DiagonalCost gen_rem(int n, std::uint64_t seed);

struct GluedTreesGraph {
  int d = 0;
  std::vector<std::vector<int>> adjacency;
  int entrance = 0;
  int exit = 0;

  int vertex_count() const { return static_cast<int>(adjacency.size()); }
  void validate() const;
};

/// Two complete binary trees of depth d joined leaf-to-leaf by a random
/// alternating cycle, so every leaf has degree 3 and the two roots
/// (entrance, exit) have degree 2.
GluedTreesGraph gen_glued_trees(int d, std::uint64_t seed);

struct HardnessReport {
  std::vector<double> min_gaps;        // per instance, along the linear schedule
  std::vector<std::size_t> selected;   // indices with min gap below threshold
};

/// Minimum spectral gap of (1-s) H_X + s H_Z over the coarse grid for every
/// instance; gaps near or below the threshold are refined by golden-section
/// search before selection.
HardnessReport hardness_filter(const std::vector<SpinProblem>& problems,
                               double gap_threshold,
                               const std::vector<double>& coarse_grid);

}  // namespace dqa
