#include "dqa/linear_op.hpp"

#include <cmath>

namespace dqa {
namespace {

// y -= c * sum_i X_i x  restricted to one qubit mask m: pairwise swap gather.
template <class Scalar>
void pauli_x_accumulate(int n, double coeff,
                        const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& in,
                        Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& out) {
  const Eigen::Index N = in.size();
  for (int q = 0; q < n; ++q) {
    const Eigen::Index m = Eigen::Index{1} << (n - 1 - q);
    for (Eigen::Index base = 0; base < N; base += 2 * m) {
      const Scalar* lo = in.data() + base;
      const Scalar* hi = in.data() + base + m;
      Scalar* olo = out.data() + base;
      Scalar* ohi = out.data() + base + m;
      for (Eigen::Index j = 0; j < m; ++j) {
        olo[j] -= coeff * hi[j];
        ohi[j] -= coeff * lo[j];
      }
    }
  }
}

template <class Scalar>
void structured_apply(const OpStructure& s,
                      const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& in,
                      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& out) {
  out.setZero(in.size());
  for (const auto& [beta, d] : s.diags)
    if (beta != 0.0) out.array() += (beta * d->array()).template cast<Scalar>() * in.array();
  if (s.alpha != 0.0) {
    switch (s.kernel) {
      case OpStructure::Kernel::None:
        break;
      case OpStructure::Kernel::PauliX:
        // Kernel is H_X = -sum_i X_i; the sign lives in the kernel.
        pauli_x_accumulate(s.n_qubits, s.alpha, in, out);
        break;
      case OpStructure::Kernel::Adjacency: {
        const auto& adj = *s.adjacency;
        for (Eigen::Index v = 0; v < in.size(); ++v) {
          Scalar acc{};
          for (int u : adj[static_cast<std::size_t>(v)]) acc += in(u);
          out(v) += s.alpha * acc;
        }
        break;
      }
      case OpStructure::Kernel::TridiagSym: {
        const auto& t = *s.tridiag_off;
        const Eigen::Index N = in.size();
        for (Eigen::Index w = 0; w + 1 < N; ++w) {
          out(w) += s.alpha * t(w) * in(w + 1);
          out(w + 1) += s.alpha * t(w) * in(w);
        }
        break;
      }
    }
  }
}

}  // namespace

bool OpStructure::same_shape(const OpStructure& o) const {
  if (kernel != o.kernel || dim != o.dim || n_qubits != o.n_qubits) return false;
  if (adjacency != o.adjacency || tridiag_off != o.tridiag_off) return false;
  if (diags.size() != o.diags.size()) return false;
  for (std::size_t i = 0; i < diags.size(); ++i)
    if (diags[i].second != o.diags[i].second) return false;
  return true;
}

double OpStructure::row_bound() const {
  double diag_bound = 0.0;
  for (const auto& [beta, d] : diags)
    diag_bound += std::abs(beta) * d->cwiseAbs().maxCoeff();
  double off = 0.0;
  switch (kernel) {
    case Kernel::None:
      break;
    case Kernel::PauliX:
      off = n_qubits;
      break;
    case Kernel::Adjacency: {
      std::size_t deg = 0;
      for (const auto& nb : *adjacency) deg = std::max(deg, nb.size());
      off = static_cast<double>(deg);
      break;
    }
    case Kernel::TridiagSym: {
      const auto& t = *tridiag_off;
      for (Eigen::Index w = 0; w < dim; ++w) {
        double r = 0.0;
        if (w > 0) r += std::abs(t(w - 1));
        if (w + 1 < dim) r += std::abs(t(w));
        off = std::max(off, r);
      }
      break;
    }
  }
  return diag_bound + std::abs(alpha) * off;
}

LinearOp LinearOp::from_structure(OpStructure s) {
  require(s.dim >= 1, "LinearOp: dimension must be >= 1");
  LinearOp op;
  op.dim_ = s.dim;
  op.hermitian_ = true;
  op.structure_ = std::move(s);
  return op;
}

LinearOp LinearOp::from_apply(Eigen::Index dim, ApplyC apply, bool hermitian,
                              double norm_hint) {
  require(dim >= 1, "LinearOp: dimension must be >= 1");
  LinearOp op;
  op.dim_ = dim;
  op.hermitian_ = hermitian;
  op.apply_c_ = std::move(apply);
  op.norm_hint_ = norm_hint;
  return op;
}

void LinearOp::apply_into(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
  require(in.size() == dim_, "LinearOp: state dimension mismatch");
  if (structure_) {
    structured_apply(*structure_, in, out);
  } else {
    apply_c_(in, out);
  }
}

Eigen::VectorXcd LinearOp::apply(const Eigen::VectorXcd& in) const {
  Eigen::VectorXcd out(dim_);
  apply_into(in, out);
  return out;
}

void LinearOp::apply_into(const Eigen::VectorXd& in, Eigen::VectorXd& out) const {
  require(structure_.has_value(), "LinearOp: real apply needs a structured operator");
  require(in.size() == dim_, "LinearOp: state dimension mismatch");
  structured_apply(*structure_, in, out);
}

Eigen::VectorXd LinearOp::apply(const Eigen::VectorXd& in) const {
  Eigen::VectorXd out(dim_);
  apply_into(in, out);
  return out;
}

Eigen::MatrixXd LinearOp::dense_real() const {
  if (dim_ > kDenseLimit)
    throw ResourceError("LinearOp: dense materialization above 2^14");
  require(structure_.has_value(), "LinearOp: dense_real needs a structured operator");
  Eigen::MatrixXd M(dim_, dim_);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(dim_), col(dim_);
  for (Eigen::Index j = 0; j < dim_; ++j) {
    e(j) = 1.0;
    apply_into(e, col);
    M.col(j) = col;
    e(j) = 0.0;
  }
  return M;
}

Eigen::MatrixXcd LinearOp::dense() const {
  if (structure_) return dense_real().cast<Complex>();
  if (dim_ > kDenseLimit)
    throw ResourceError("LinearOp: dense materialization above 2^14");
  Eigen::MatrixXcd M(dim_, dim_);
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim_), col(dim_);
  for (Eigen::Index j = 0; j < dim_; ++j) {
    e(j) = 1.0;
    apply_c_(e, col);
    M.col(j) = col;
    e(j) = 0.0;
  }
  return M;
}

double LinearOp::norm_bound() const {
  if (structure_) return structure_->row_bound();
  if (norm_hint_ > 0.0) return norm_hint_;
  return 1.05 * norm_est();
}

double LinearOp::norm_est(int max_iters, double rel_tol) const {
  // Power iteration for the dominant |eigenvalue|. Deterministic start.
  Eigen::VectorXcd v(dim_);
  std::uint64_t x = 0x9e3779b97f4a7c15ull;
  for (Eigen::Index i = 0; i < dim_; ++i) {
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    v(i) = Complex(1.0 + static_cast<double>(x >> 40) * 0x1.0p-24, 0.0);
  }
  v.normalize();
  Eigen::VectorXcd w(dim_);
  double prev = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    apply_into(v, w);
    const double nrm = w.norm();
    if (nrm == 0.0) return 0.0;
    if (it > 0 && std::abs(nrm - prev) <= rel_tol * nrm) return nrm;
    prev = nrm;
    v = w / nrm;
  }
  return prev;
}

LinearOp linear_combination(double c1, const LinearOp& a, double c2, const LinearOp& b) {
  require(a.dim() == b.dim(), "linear_combination: dimension mismatch");
  if (a.structure() && b.structure() && a.structure()->same_shape(*b.structure())) {
    OpStructure s = *a.structure();
    const OpStructure& sb = *b.structure();
    s.alpha = c1 * s.alpha + c2 * sb.alpha;
    for (std::size_t i = 0; i < s.diags.size(); ++i)
      s.diags[i].first = c1 * s.diags[i].first + c2 * sb.diags[i].first;
    return LinearOp::from_structure(std::move(s));
  }
  const double hint = std::abs(c1) * a.norm_bound() + std::abs(c2) * b.norm_bound();
  auto apply = [c1, a, c2, b](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
    out = c1 * a.apply(in);
    out.noalias() += c2 * b.apply(in);
  };
  return LinearOp::from_apply(a.dim(), std::move(apply),
                              a.hermitian() && b.hermitian(), hint);
}

}  // namespace dqa
