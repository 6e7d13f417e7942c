#include "dqa/spin_problem.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace dqa {

SpinProblem SpinProblem::make(int n_qubits) {
  require(n_qubits >= 1, "SpinProblem: n must be >= 1");
  SpinProblem p;
  p.n = n_qubits;
  p.h = Eigen::VectorXd::Zero(n_qubits);
  return p;
}

void SpinProblem::add_coupling(int i, int j, double value) {
  require(i != j, "SpinProblem: self-pair coupling");
  require(i >= 0 && j >= 0 && i < n && j < n, "SpinProblem: vertex index out of range");
  if (i > j) std::swap(i, j);
  for (const auto& [a, b, v] : couplings) {
    (void)v;
    require(!(a == i && b == j), "SpinProblem: pair stored twice");
  }
  couplings.emplace_back(i, j, value);
}

double SpinProblem::coupling(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& [a, b, v] : couplings)
    if (a == i && b == j) return v;
  return 0.0;
}

void SpinProblem::validate() const {
  require(n >= 1, "SpinProblem: n must be >= 1");
  require(h.size() == n, "SpinProblem: h size mismatch");
  std::vector<std::pair<int, int>> seen;
  for (const auto& [i, j, v] : couplings) {
    (void)v;
    require(i >= 0 && j >= 0 && i < n && j < n, "SpinProblem: vertex index out of range");
    require(i < j, "SpinProblem: pair not canonical");
    seen.emplace_back(i, j);
  }
  std::sort(seen.begin(), seen.end());
  require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
          "SpinProblem: duplicate pair");
}

double cost_energy(const SpinProblem& p, const std::vector<int>& config_bits) {
  require(static_cast<int>(config_bits.size()) == p.n,
          "cost_energy: config length mismatch");
  double e = 0.0;
  for (int i = 0; i < p.n; ++i) e -= p.h(i) * (1 - 2 * config_bits[i]);
  for (const auto& [i, j, v] : p.couplings)
    e -= v * (1 - 2 * config_bits[i]) * (1 - 2 * config_bits[j]);
  return e;
}

double cost_energy(const SpinProblem& p, std::uint64_t index) {
  double e = 0.0;
  for (int i = 0; i < p.n; ++i) e -= p.h(i) * z_value(index, i, p.n);
  for (const auto& [i, j, v] : p.couplings)
    e -= v * z_value(index, i, p.n) * z_value(index, j, p.n);
  return e;
}

Eigen::VectorXd cost_table(const SpinProblem& p) {
  const Eigen::Index dim = Eigen::Index{1} << p.n;
  Eigen::VectorXd t(dim);
  for (Eigen::Index x = 0; x < dim; ++x)
    t(x) = cost_energy(p, static_cast<std::uint64_t>(x));
  return t;
}

double p_spin_cost(int n, int p, const std::vector<int>& config_bits) {
  require(p >= 1, "p_spin_cost: p must be >= 1");
  require(static_cast<int>(config_bits.size()) == n, "p_spin_cost: config length mismatch");
  int m = 0;
  for (int b : config_bits) m += 1 - 2 * b;
  return -std::pow(static_cast<double>(m), p) / n;
}

double p_spin_cost(int n, int p, std::uint64_t index) {
  require(p >= 1, "p_spin_cost: p must be >= 1");
  const int ones = std::popcount(index & ((n < 64) ? ((std::uint64_t{1} << n) - 1) : ~std::uint64_t{0}));
  const int m = n - 2 * ones;
  return -std::pow(static_cast<double>(m), p) / n;
}

double spike_cost(int n, int w) {
  require(n % 4 == 0, "spike_cost: n must be divisible by 4");
  require(w >= 0 && w <= n, "spike_cost: weight out of range");
  return (w == n / 4) ? static_cast<double>(n) : static_cast<double>(w);
}

Eigen::VectorXd DiagonalCost::materialized() const {
  if (values) return *values;
  Eigen::VectorXd v(dim());
  for (Eigen::Index x = 0; x < v.size(); ++x) v(x) = eval(static_cast<std::uint64_t>(x));
  return v;
}

DiagonalCost DiagonalCost::from_vector(int n, Eigen::VectorXd v) {
  require(v.size() == (Eigen::Index{1} << n), "DiagonalCost: materialized length must be 2^n");
  DiagonalCost c;
  c.n = n;
  c.values = std::move(v);
  // operator() reads the table directly; no separate evaluator needed.
  return c;
}

DiagonalCost DiagonalCost::from_eval(int n, std::function<double(std::uint64_t)> f) {
  DiagonalCost c;
  c.n = n;
  c.eval = std::move(f);
  return c;
}

DiagonalCost DiagonalCost::from_problem(const SpinProblem& p) {
  p.validate();
  if (p.n <= 20) return from_vector(p.n, cost_table(p));
  return from_eval(p.n, [p](std::uint64_t x) { return cost_energy(p, x); });
}

SymmetricProblem spike_problem(int n) {
  require(n % 4 == 0, "spike_problem: n must be divisible by 4");
  SymmetricProblem sp;
  sp.n = n;
  sp.f = [n](int w) { return spike_cost(n, w); };
  sp.name = "spike";
  return sp;
}

DiagonalCost symmetric_cost(const SymmetricProblem& sp) {
  const int n = sp.n;
  require(n >= 1 && n <= 24, "symmetric_cost: full-space table needs n <= 24");
  Eigen::VectorXd v(Eigen::Index{1} << n);
  for (Eigen::Index x = 0; x < v.size(); ++x)
    v(x) = sp.f(std::popcount(static_cast<std::uint64_t>(x)));
  return DiagonalCost::from_vector(n, std::move(v));
}

}  // namespace dqa
