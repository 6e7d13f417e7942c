#pragma once

#include <vector>

#include "dqa/linear_op.hpp"
#include "dqa/spin_problem.hpp"

namespace dqa {

/// H_X = -sum_i X_i on n qubits.
LinearOp transverse_field(int n);

/// a * H_X + b * H_Z for the given Ising problem.
LinearOp assemble_tim(const SpinProblem& p, double a, double b);
LinearOp assemble_tim(const DiagonalCost& cost, double a, double b);

/// gamma * (n I + H_X) + H_C: hypercube-Laplacian walk Hamiltonian.
LinearOp hypercube_walk_hamiltonian(const DiagonalCost& cost, double gamma);

/// Default hopping rate: matches the spectral widths of the two terms,
/// gamma = sd(cost) / sd(L) with sd(L) = sqrt(n) over the uniform basis
/// distribution.
double walk_gamma_heuristic(const DiagonalCost& cost);

/// (1-s) H_0 + s(1-s) A + s H_1 over the vertex space of a graph, with
/// H_0 = -|entrance><entrance| and H_1 = -|exit><exit|.
LinearOp glued_trees_hamiltonian(const std::vector<std::vector<int>>& adjacency,
                                 int entrance, int exit, double s);

/// Gamma*lambda*a * H_X + b * H_Z + (1-lambda)*c * H_init, where
/// H_init = -sum_i s_i Z_i for the classical configuration s_i = +-1.
LinearOp ara_hamiltonian(const SpinProblem& p, const std::vector<int>& init_spins,
                         double Gamma, double lambda_val, double c_val,
                         double a, double b);

/// Diagonal table of H_init = -sum_i s_i Z_i.
Eigen::VectorXd init_field_table(int n, const std::vector<int>& init_spins);

/// Reusable factory for a*H_X + b*H_Z (+ c*extra diagonal) on a fixed
/// problem: the diagonal tables are materialized once and shared by every
/// operator produced, so operators from one family combine cheaply inside
/// the integrator.
class TimFamily {
 public:
  TimFamily(int n, Eigen::VectorXd cost_diag);
  TimFamily(int n, Eigen::VectorXd cost_diag, Eigen::VectorXd extra_diag);
  explicit TimFamily(const SpinProblem& p);

  int n() const { return n_; }
  Eigen::Index dim() const { return Eigen::Index{1} << n_; }
  LinearOp at(double a, double b) const;
  LinearOp at(double a, double b, double c) const;  // requires extra diagonal

 private:
  int n_;
  std::shared_ptr<const Eigen::VectorXd> cost_;
  std::shared_ptr<const Eigen::VectorXd> extra_;
};

/// Same idea for the glued-trees interpolation.
class GluedTreesFamily {
 public:
  GluedTreesFamily(std::vector<std::vector<int>> adjacency, int entrance, int exit);
  Eigen::Index dim() const { return dim_; }
  LinearOp at(double s) const;

 private:
  Eigen::Index dim_;
  std::shared_ptr<const std::vector<std::vector<int>>> adj_;
  std::shared_ptr<const Eigen::VectorXd> d0_, d1_;
};

/// Same idea for the symmetric-subspace reduction.
class SymmetricFamily {
 public:
  explicit SymmetricFamily(const SymmetricProblem& sp);
  Eigen::Index dim() const { return f_->size(); }
  LinearOp at(double a, double b) const;

 private:
  int n_;
  std::shared_ptr<const Eigen::VectorXd> f_;    // f(w), size n+1
  std::shared_ptr<const Eigen::VectorXd> off_;  // sqrt((w+1)(n-w)), size n
};

/// Restriction of a * H_X + b * H_Z to the symmetric (Hamming-weight) basis:
/// an (n+1)-dimensional tridiagonal operator with diagonal b*f(w) and
/// off-diagonal <w+1|.|w> = -a*sqrt((w+1)(n-w)).
LinearOp symmetric_reduce(const SymmetricProblem& sp, double a, double b);

}  // namespace dqa
