#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "dqa/errors.hpp"

namespace dqa {

using Complex = std::complex<double>;

/// Largest dimension for which dense materialization is permitted.
inline constexpr Eigen::Index kDenseLimit = Eigen::Index{1} << 14;

/// Structured form of the Hamiltonians used here:
///   H = alpha * K + sum_j beta_j * diag(d_j)
/// where K is a fixed real off-diagonal kernel. Linear combinations of two
/// operators sharing the same kernel and diagonal tables merge by coefficient
/// arithmetic, which keeps the time integrator cheap.
struct OpStructure {
  enum class Kernel { None, PauliX, Adjacency, TridiagSym };

  Kernel kernel = Kernel::None;
  Eigen::Index dim = 0;
  int n_qubits = 0;  // PauliX only
  double alpha = 0.0;
  // Adjacency kernel: neighbor lists (entries +1).
  std::shared_ptr<const std::vector<std::vector<int>>> adjacency;
  // TridiagSym kernel: off-diagonal values t_w coupling w and w+1 (size dim-1).
  std::shared_ptr<const Eigen::VectorXd> tridiag_off;
  // Scaled diagonal tables.
  std::vector<std::pair<double, std::shared_ptr<const Eigen::VectorXd>>> diags;

  bool same_shape(const OpStructure& o) const;
  double row_bound() const;  // Gershgorin bound on the spectral norm
};

/// Hermitian (in this codebase: real symmetric) linear operator with a
/// uniform apply-to-state interface. Structured when possible; an arbitrary
/// closure otherwise.
class LinearOp {
 public:
  using ApplyC = std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>;

  LinearOp() = default;

  static LinearOp from_structure(OpStructure s);
  static LinearOp from_apply(Eigen::Index dim, ApplyC apply, bool hermitian,
                             double norm_hint = 0.0);

  Eigen::Index dim() const { return dim_; }
  bool hermitian() const { return hermitian_; }
  bool is_real() const { return structure_.has_value(); }
  const std::optional<OpStructure>& structure() const { return structure_; }

  void apply_into(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& in) const;

  void apply_into(const Eigen::VectorXd& in, Eigen::VectorXd& out) const;
  Eigen::VectorXd apply(const Eigen::VectorXd& in) const;

  /// Dense materialization; ResourceError above kDenseLimit.
  Eigen::MatrixXd dense_real() const;
  Eigen::MatrixXcd dense() const;

  /// Upper bound on the spectral norm (Gershgorin for structured operators,
  /// the caller-supplied hint otherwise; power-iteration fallback).
  double norm_bound() const;

  /// Power-method estimate of the spectral norm. Deterministic start vector.
  double norm_est(int max_iters = 200, double rel_tol = 1e-8) const;

 private:
  Eigen::Index dim_ = 0;
  bool hermitian_ = true;
  std::optional<OpStructure> structure_;
  ApplyC apply_c_;
  double norm_hint_ = 0.0;
};

/// c1 * a + c2 * b. Merges structure when the operators share shape.
LinearOp linear_combination(double c1, const LinearOp& a, double c2, const LinearOp& b);

}  // namespace dqa
