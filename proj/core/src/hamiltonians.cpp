#include "dqa/hamiltonians.hpp"

#include <cmath>
#include <utility>

namespace dqa {
namespace {

std::shared_ptr<const Eigen::VectorXd> share(Eigen::VectorXd v) {
  return std::make_shared<const Eigen::VectorXd>(std::move(v));
}

OpStructure pauli_x_structure(int n) {
  OpStructure s;
  s.kernel = OpStructure::Kernel::PauliX;
  s.dim = Eigen::Index{1} << n;
  s.n_qubits = n;
  s.alpha = 1.0;
  return s;
}

}  // namespace

LinearOp transverse_field(int n) {
  require(n >= 1, "transverse_field: n must be >= 1");
  return LinearOp::from_structure(pauli_x_structure(n));
}

TimFamily::TimFamily(int n, Eigen::VectorXd cost_diag)
    : n_(n), cost_(share(std::move(cost_diag))) {
  require(n >= 1, "TimFamily: n must be >= 1");
  require(cost_->size() == dim(), "TimFamily: diagonal length must be 2^n");
}

TimFamily::TimFamily(int n, Eigen::VectorXd cost_diag, Eigen::VectorXd extra_diag)
    : TimFamily(n, std::move(cost_diag)) {
  require(extra_diag.size() == dim(), "TimFamily: extra diagonal length must be 2^n");
  extra_ = share(std::move(extra_diag));
}

TimFamily::TimFamily(const SpinProblem& p) : TimFamily(p.n, cost_table(p)) {
  p.validate();
}

LinearOp TimFamily::at(double a, double b) const {
  OpStructure s = pauli_x_structure(n_);
  s.alpha = a;
  s.diags.emplace_back(b, cost_);
  if (extra_) s.diags.emplace_back(0.0, extra_);
  return LinearOp::from_structure(std::move(s));
}

LinearOp TimFamily::at(double a, double b, double c) const {
  require(extra_ != nullptr, "TimFamily: no extra diagonal configured");
  OpStructure s = pauli_x_structure(n_);
  s.alpha = a;
  s.diags.emplace_back(b, cost_);
  s.diags.emplace_back(c, extra_);
  return LinearOp::from_structure(std::move(s));
}

LinearOp assemble_tim(const SpinProblem& p, double a, double b) {
  return TimFamily(p).at(a, b);
}

LinearOp assemble_tim(const DiagonalCost& cost, double a, double b) {
  return TimFamily(cost.n, cost.materialized()).at(a, b);
}

LinearOp hypercube_walk_hamiltonian(const DiagonalCost& cost, double gamma) {
  require(gamma > 0.0, "hypercube_walk_hamiltonian: gamma must be > 0");
  const int n = cost.n;
  Eigen::VectorXd diag = cost.materialized();
  diag.array() += gamma * n;  // gamma * n I from the Laplacian
  OpStructure s = pauli_x_structure(n);
  s.alpha = gamma;
  s.diags.emplace_back(1.0, share(std::move(diag)));
  return LinearOp::from_structure(std::move(s));
}

double walk_gamma_heuristic(const DiagonalCost& cost) {
  require(cost.n >= 1 && cost.n <= 24, "walk_gamma_heuristic: n must be in [1,24]");
  const std::uint64_t dim = std::uint64_t{1} << cost.n;
  double mean = 0.0, sq = 0.0;
  for (std::uint64_t x = 0; x < dim; ++x) {
    const double c = cost(x);
    mean += c;
    sq += c * c;
  }
  mean /= static_cast<double>(dim);
  const double var = sq / static_cast<double>(dim) - mean * mean;
  require(var > 0.0, "walk_gamma_heuristic: constant cost");
  return std::sqrt(var / cost.n);
}

GluedTreesFamily::GluedTreesFamily(std::vector<std::vector<int>> adjacency,
                                   int entrance, int exit) {
  dim_ = static_cast<Eigen::Index>(adjacency.size());
  require(dim_ >= 2, "glued trees: need at least two vertices");
  require(entrance >= 0 && entrance < dim_ && exit >= 0 && exit < dim_ && entrance != exit,
          "glued trees: invalid entrance/exit vertex");
  for (const auto& nb : adjacency)
    for (int u : nb)
      require(u >= 0 && u < dim_, "glued trees: adjacency index out of range");
  adj_ = std::make_shared<const std::vector<std::vector<int>>>(std::move(adjacency));
  Eigen::VectorXd d0 = Eigen::VectorXd::Zero(dim_), d1 = Eigen::VectorXd::Zero(dim_);
  d0(entrance) = -1.0;  // H_0 = -|entrance><entrance|
  d1(exit) = -1.0;      // H_1 = -|exit><exit|
  d0_ = share(std::move(d0));
  d1_ = share(std::move(d1));
}

LinearOp GluedTreesFamily::at(double s) const {
  require(s >= 0.0 && s <= 1.0, "glued trees: s must lie in [0,1]");
  OpStructure st;
  st.kernel = OpStructure::Kernel::Adjacency;
  st.dim = dim_;
  st.adjacency = adj_;
  st.alpha = s * (1.0 - s);
  st.diags.emplace_back(1.0 - s, d0_);
  st.diags.emplace_back(s, d1_);
  return LinearOp::from_structure(std::move(st));
}

LinearOp glued_trees_hamiltonian(const std::vector<std::vector<int>>& adjacency,
                                 int entrance, int exit, double s) {
  return GluedTreesFamily(adjacency, entrance, exit).at(s);
}

Eigen::VectorXd init_field_table(int n, const std::vector<int>& init_spins) {
  require(static_cast<int>(init_spins.size()) == n, "init_field_table: length mismatch");
  for (int s : init_spins)
    require(s == 1 || s == -1, "init_field_table: entries must be +-1");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXd t(dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    double e = 0.0;
    for (int i = 0; i < n; ++i)
      e -= init_spins[static_cast<std::size_t>(i)] * z_value(static_cast<std::uint64_t>(x), i, n);
    t(x) = e;
  }
  return t;
}

LinearOp ara_hamiltonian(const SpinProblem& p, const std::vector<int>& init_spins,
                         double Gamma, double lambda_val, double c_val,
                         double a, double b) {
  require(lambda_val >= 0.0 && lambda_val <= 1.0, "ara_hamiltonian: lambda in [0,1]");
  TimFamily fam(p.n, cost_table(p), init_field_table(p.n, init_spins));
  return fam.at(Gamma * lambda_val * a, b, (1.0 - lambda_val) * c_val);
}

SymmetricFamily::SymmetricFamily(const SymmetricProblem& sp) : n_(sp.n) {
  require(sp.n >= 1, "SymmetricFamily: n must be >= 1");
  Eigen::VectorXd f(sp.n + 1), off(sp.n);
  for (int w = 0; w <= sp.n; ++w) f(w) = sp.f(w);
  for (int w = 0; w < sp.n; ++w)
    off(w) = std::sqrt(static_cast<double>(w + 1) * (sp.n - w));
  f_ = share(std::move(f));
  off_ = share(std::move(off));
}

LinearOp SymmetricFamily::at(double a, double b) const {
  OpStructure s;
  s.kernel = OpStructure::Kernel::TridiagSym;
  s.dim = n_ + 1;
  s.tridiag_off = off_;
  s.alpha = -a;  // <w+1|H|w> = -a * sqrt((w+1)(n-w))
  s.diags.emplace_back(b, f_);
  return LinearOp::from_structure(std::move(s));
}

LinearOp symmetric_reduce(const SymmetricProblem& sp, double a, double b) {
  return SymmetricFamily(sp).at(a, b);
}

}  // namespace dqa
