#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dqa/errors.hpp"

namespace dqa {

/// One named control function over dimensionless time s in [0,1].
/// Representations: constant, piecewise-linear breakpoints, clamped
/// truncated sine series on top of a linear ramp, sin^2 pulse, and a
/// piecewise-linear time reparameterization of any of those.
class Control {
 public:
  enum class Kind { Constant, PiecewiseLinear, Fourier, Sine2, Reparam };

  double operator()(double s) const;
  /// First/second derivative w.r.t. s. NotDifferentiable for piecewise
  /// representations.
  double deriv(double s) const;
  double deriv2(double s) const;
  bool smooth() const;
  Kind kind() const;

  static Control constant(double value);
  static Control piecewise_linear(std::vector<double> xs, std::vector<double> ys);
  /// clamp01(1 - s + sum_k c_k sin(k pi s)); complement=true evaluates the
  /// clamped complement (used for B = 1 - A ramps).
  static Control fourier(std::vector<double> coeffs, bool complement = false);
  /// peak * sin^2(pi s).
  static Control sine2(double peak);
  /// Composition with a piecewise-linear map s' -> s (breakpoints map_x -> map_y).
  Control reparameterized(std::vector<double> map_x, std::vector<double> map_y) const;

  struct Impl;
  explicit Control(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  const Impl& impl() const { return *impl_; }

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Named controls plus total time. A and B are always present; C and lambda
/// only for the reverse/ARA families.
struct Schedule {
  Control A, B;
  std::optional<Control> C, lambda;
  double T = 1.0;
  std::string label;

  // Metadata consumed by the iterated reverse-anneal driver.
  bool reinitialize = false;
  double s_target = 0.0;
  double pause_fraction = 0.0;

  bool smooth() const;
};

/// A(s) = 1-s, B(s) = s (smooth representation).
Schedule linear_forward(double T);

/// D-Wave-style reverse anneal: start at the classical end (A=0, B=1),
/// retreat to the linear-schedule point s_target, optionally hold for
/// pause_fraction of T, and anneal forward again. Piecewise-linear.
Schedule reverse_dwave(double s_target, double pause_fraction, bool reinitialize,
                       double T);

/// Sombrero reverse anneal: A = peak*sin^2(pi s), B = s, C = 1-s.
Schedule sombrero(double T, double peak_height);

/// Smooth family for bound checks and optimization:
/// A = clamp01(1 - s + sum_k c_k sin(k pi s)), B the clamped complement.
Schedule fourier_schedule(const std::vector<double>& coeffs, double T);

/// Time-reparameterized copy holding every control fixed for
/// pause_fraction*T at s_pause; total time becomes (1+pause_fraction)*T.
Schedule with_pause(const Schedule& sched, double s_pause, double pause_fraction);

/// Digitized schedule H(t) = f(t) H_X + (1-f(t)) H_Z given as (t_i, f_i)
/// breakpoints. When built from QAOA angles the signed layer angles are
/// retained, which pins down the exact bang-bang realization.
struct BreakpointSchedule {
  std::vector<double> t;        // layer midpoints t_i
  std::vector<double> f;        // f(t_i)
  std::vector<double> seg_end;  // cumulative layer boundaries
  std::vector<double> gammas, betas;  // signed originals; empty if not from angles
  double T = 0.0;
  bool piecewise_constant = true;

  /// f at absolute time (piecewise-constant over layer cells, or linearly
  /// interpolated between midpoints when piecewise_constant is false).
  double value(double time) const;
};

/// Angle-to-schedule conversion:
///   T = sum_k (|gamma_k| + |beta_k|)
///   t_i = sum_{k<=i} (|gamma_k| + |beta_k|) - (|gamma_i| + |beta_i|)/2
///   f(t_i) = gamma_i / (|gamma_i| + |beta_i|)
BreakpointSchedule qaoa_to_schedule(std::span<const double> gammas,
                                    std::span<const double> betas);

}  // namespace dqa
