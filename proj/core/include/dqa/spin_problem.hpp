#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dqa/errors.hpp"

namespace dqa {

// Basis convention: the basis index is the big-endian bit string, so qubit i
// occupies bit (n-1-i) of the index. Bit value 0 corresponds to Z-eigenvalue
// z = +1, bit value 1 to z = -1.

inline int bit_at(std::uint64_t index, int qubit, int n) {
  return static_cast<int>((index >> (n - 1 - qubit)) & 1u);
}

inline int z_value(std::uint64_t index, int qubit, int n) {
  return 1 - 2 * bit_at(index, qubit, n);
}

inline std::uint64_t flip_mask(int qubit, int n) {
  return std::uint64_t{1} << (n - 1 - qubit);
}

/// Ising cost specification: local fields h_i and pairwise couplings J_ij on
/// an undirected graph. Energy of a configuration z in {-1,+1}^n is
///   E(z) = -sum_i h_i z_i - sum_{(i,j)} J_ij z_i z_j.
struct SpinProblem {
  int n = 0;
  Eigen::VectorXd h;                                   // size n
  std::vector<std::tuple<int, int, double>> couplings; // i < j, each pair once
  std::string name;

  static SpinProblem make(int n_qubits);

  /// Adds J_{ij}. Indices are canonicalized to i < j; adding a pair twice or
  /// a self-pair is a contract violation.
  void add_coupling(int i, int j, double value);

  /// Returns J_{ij} or 0.
  double coupling(int i, int j) const;

  void validate() const;
};

double cost_energy(const SpinProblem& p, const std::vector<int>& config_bits);
double cost_energy(const SpinProblem& p, std::uint64_t index);

/// All 2^n energies indexed by basis state.
Eigen::VectorXd cost_table(const SpinProblem& p);

/// p-spin cost -(1/n) (sum_i z_i)^p for one configuration.
double p_spin_cost(int n, int p, const std::vector<int>& config_bits);
double p_spin_cost(int n, int p, std::uint64_t index);

/// Hamming-weight spike cost: f(w) = w except f(n/4) = n. Requires 4 | n.
double spike_cost(int n, int w);

/// Diagonal Hamiltonian over the computational basis, available as an
/// evaluator by basis index and optionally materialized.
struct DiagonalCost {
  int n = 0;
  std::function<double(std::uint64_t)> eval;
  std::optional<Eigen::VectorXd> values;

  double operator()(std::uint64_t index) const {
    return values ? (*values)(static_cast<Eigen::Index>(index)) : eval(index);
  }
  Eigen::Index dim() const { return Eigen::Index{1} << n; }

  /// Materialized table (cached copy if present, else computed).
  Eigen::VectorXd materialized() const;

  static DiagonalCost from_vector(int n, Eigen::VectorXd v);
  static DiagonalCost from_eval(int n, std::function<double(std::uint64_t)> f);
  static DiagonalCost from_problem(const SpinProblem& p);
};

/// Permutation-symmetric cost: energy depends only on the Hamming weight.
struct SymmetricProblem {
  int n = 0;
  std::function<double(int)> f;  // defined on w = 0..n
  std::string name;
};

SymmetricProblem spike_problem(int n);

/// Full-space diagonal cost of a symmetric problem.
DiagonalCost symmetric_cost(const SymmetricProblem& sp);

}  // namespace dqa
