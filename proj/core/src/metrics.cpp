#include "dqa/metrics.hpp"

#include <cmath>
#include <limits>

namespace dqa {

namespace {
constexpr double kGroundTol = 1e-10;
}

void RunResult::validate() const {
  require(p >= 0.0 && p <= 1.0, "RunResult: p outside [0,1]");
  require(residual >= -1e-9, "RunResult: negative residual energy");
}

GroundSet ground_set(const DiagonalCost& cost) {
  require(cost.n >= 1 && cost.n <= 24, "ground_set: n must be in [1,24]");
  const std::uint64_t dim = std::uint64_t{1} << cost.n;
  GroundSet g;
  g.energy = std::numeric_limits<double>::infinity();
  for (std::uint64_t x = 0; x < dim; ++x) {
    const double e = cost(x);
    if (e < g.energy - kGroundTol) {
      g.energy = e;
      g.states.assign(1, x);
    } else if (e <= g.energy + kGroundTol) {
      g.energy = std::min(g.energy, e);
      g.states.push_back(x);
    }
  }
  return g;
}

double success_probability(const Eigen::VectorXcd& amps, const DiagonalCost& cost) {
  require(amps.size() == cost.dim(), "success_probability: dimension mismatch");
  const GroundSet g = ground_set(cost);
  double p = 0.0;
  for (std::uint64_t x : g.states) p += std::norm(amps(static_cast<Eigen::Index>(x)));
  return std::min(p, 1.0);
}

double success_probability(const QuantumState& state, const DiagonalCost& cost) {
  require(state.basis == Basis::Full, "success_probability: full-basis state required");
  return success_probability(state.amps, cost);
}

double residual_energy(const Eigen::VectorXcd& amps, const DiagonalCost& cost) {
  require(amps.size() == cost.dim(), "residual_energy: dimension mismatch");
  const GroundSet g = ground_set(cost);
  double mean = 0.0;
  const std::uint64_t dim = std::uint64_t{1} << cost.n;
  for (std::uint64_t x = 0; x < dim; ++x)
    mean += std::norm(amps(static_cast<Eigen::Index>(x))) * cost(x);
  return mean - g.energy;
}

double residual_energy(const QuantumState& state, const DiagonalCost& cost) {
  require(state.basis == Basis::Full, "residual_energy: full-basis state required");
  return residual_energy(state.amps, cost);
}

double tts(double T, double p, double target) {
  require(T > 0.0, "tts: T must be > 0");
  require(p >= 0.0 && p <= 1.0, "tts: p outside [0,1]");
  require(target > 0.0 && target < 1.0, "tts: target in (0,1)");
  if (p >= 1.0) return T;
  if (p <= 0.0) return std::numeric_limits<double>::infinity();
  return T * std::log(1.0 - target) / std::log(1.0 - p);
}

double late_time_success(const LinearOp& H, const QuantumState& psi0,
                         std::pair<double, double> t_window, int samples,
                         const DiagonalCost& cost) {
  require(t_window.first < t_window.second, "late_time_success: empty time window");
  require(samples >= 2, "late_time_success: need at least 2 samples");
  require(psi0.amps.size() == H.dim() && H.dim() == cost.dim(),
          "late_time_success: dimension mismatch");

  const GroundSet g = ground_set(cost);
  double acc = 0.0;
  if (H.dim() <= (Eigen::Index{1} << 12)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.dense_real());
    require(es.info() == Eigen::Success, "late_time_success: eigensolver failed");
    const Eigen::MatrixXd& V = es.eigenvectors();
    const Eigen::VectorXd& E = es.eigenvalues();
    const Eigen::VectorXcd c = V.transpose().cast<Complex>() * psi0.amps;
    // Only the ground-set rows of V are ever read back.
    Eigen::MatrixXd Vg(g.states.size(), V.cols());
    for (std::size_t r = 0; r < g.states.size(); ++r)
      Vg.row(static_cast<Eigen::Index>(r)) =
          V.row(static_cast<Eigen::Index>(g.states[r]));
    for (int k = 0; k < samples; ++k) {
      const double t = t_window.first +
                       (t_window.second - t_window.first) * k / (samples - 1.0);
      const Eigen::VectorXcd phase =
          (Complex(0.0, -t) * E.cast<Complex>().array()).exp().matrix();
      const Eigen::VectorXcd amp_g = Vg.cast<Complex>() * phase.cwiseProduct(c);
      acc += std::min(1.0, amp_g.squaredNorm());
    }
  } else {
    for (int k = 0; k < samples; ++k) {
      const double t = t_window.first +
                       (t_window.second - t_window.first) * k / (samples - 1.0);
      Eigen::VectorXcd psi = psi0.amps;
      apply_exp_inplace(H, t, psi);
      double p = 0.0;
      for (std::uint64_t x : g.states) p += std::norm(psi(static_cast<Eigen::Index>(x)));
      acc += std::min(1.0, p);
    }
  }
  return acc / samples;
}

std::pair<double, double> fit_alpha(const std::vector<std::pair<int, double>>& points) {
  require(points.size() >= 3, "fit_alpha: need at least 3 points");
  const double N = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [n, P] : points) {
    require(P > 0.0, "fit_alpha: nonpositive probability");
    sx += n;
    sy += -std::log2(P);
  }
  const double mx = sx / N, my = sy / N;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [n, P] : points) {
    const double dx = n - mx;
    sxx += dx * dx;
    sxy += dx * (-std::log2(P) - my);
  }
  require(sxx > 0.0, "fit_alpha: degenerate abscissae");
  const double slope = sxy / sxx;
  double ssr = 0.0;
  for (const auto& [n, P] : points) {
    const double pred = my + slope * (n - mx);
    const double r = -std::log2(P) - pred;
    ssr += r * r;
  }
  const double stderr_slope = std::sqrt(ssr / (N - 2.0) / sxx);
  return {slope, stderr_slope};
}

}  // namespace dqa
