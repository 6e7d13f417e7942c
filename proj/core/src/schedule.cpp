#include "dqa/schedule.hpp"

#include <algorithm>
#include <cmath>

namespace dqa {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

struct Control::Impl {
  Kind kind;
  // Constant
  double value = 0.0;
  // PiecewiseLinear
  std::vector<double> xs, ys;
  // Fourier
  std::vector<double> coeffs;
  bool complement = false;
  // Sine2
  double peak = 0.0;
  // Reparam
  std::shared_ptr<const Impl> inner;
  std::vector<double> map_x, map_y;

  double eval(double s) const;
  double d1(double s) const;
  double d2(double s) const;
  bool smooth() const;
};

namespace {

double pwl_eval(const std::vector<double>& xs, const std::vector<double>& ys, double s) {
  if (s <= xs.front()) return ys.front();
  if (s >= xs.back()) return ys.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), s);
  const std::size_t j = static_cast<std::size_t>(it - xs.begin());
  const double x0 = xs[j - 1], x1 = xs[j];
  const double w = (s - x0) / (x1 - x0);
  return ys[j - 1] + w * (ys[j] - ys[j - 1]);
}

double fourier_g(const std::vector<double>& c, double s) {
  double g = 1.0 - s;
  for (std::size_t k = 0; k < c.size(); ++k)
    g += c[k] * std::sin((k + 1) * kPi * s);
  return g;
}

double fourier_g1(const std::vector<double>& c, double s) {
  double g = -1.0;
  for (std::size_t k = 0; k < c.size(); ++k)
    g += c[k] * (k + 1) * kPi * std::cos((k + 1) * kPi * s);
  return g;
}

double fourier_g2(const std::vector<double>& c, double s) {
  double g = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double w = (k + 1) * kPi;
    g -= c[k] * w * w * std::sin(w * s);
  }
  return g;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

double Control::Impl::eval(double s) const {
  switch (kind) {
    case Kind::Constant:
      return value;
    case Kind::PiecewiseLinear:
      return pwl_eval(xs, ys, s);
    case Kind::Fourier: {
      const double g = fourier_g(coeffs, s);
      return clamp01(complement ? 1.0 - g : g);
    }
    case Kind::Sine2: {
      const double sn = std::sin(kPi * s);
      return peak * sn * sn;
    }
    case Kind::Reparam:
      return inner->eval(pwl_eval(map_x, map_y, s));
  }
  return 0.0;
}

double Control::Impl::d1(double s) const {
  switch (kind) {
    case Kind::Constant:
      return 0.0;
    case Kind::Fourier: {
      const double g = fourier_g(coeffs, s);
      if (g < 0.0 || g > 1.0) return 0.0;  // clamped region
      const double d = fourier_g1(coeffs, s);
      return complement ? -d : d;
    }
    case Kind::Sine2:
      return peak * kPi * std::sin(2.0 * kPi * s);
    case Kind::PiecewiseLinear:
    case Kind::Reparam:
      throw NotDifferentiable("Control: derivative of a piecewise representation");
  }
  return 0.0;
}

double Control::Impl::d2(double s) const {
  switch (kind) {
    case Kind::Constant:
      return 0.0;
    case Kind::Fourier: {
      const double g = fourier_g(coeffs, s);
      if (g < 0.0 || g > 1.0) return 0.0;
      const double d = fourier_g2(coeffs, s);
      return complement ? -d : d;
    }
    case Kind::Sine2:
      return 2.0 * peak * kPi * kPi * std::cos(2.0 * kPi * s);
    case Kind::PiecewiseLinear:
    case Kind::Reparam:
      throw NotDifferentiable("Control: derivative of a piecewise representation");
  }
  return 0.0;
}

bool Control::Impl::smooth() const {
  return kind == Kind::Constant || kind == Kind::Fourier || kind == Kind::Sine2;
}

double Control::operator()(double s) const { return impl_->eval(s); }
double Control::deriv(double s) const { return impl_->d1(s); }
double Control::deriv2(double s) const { return impl_->d2(s); }
bool Control::smooth() const { return impl_->smooth(); }
Control::Kind Control::kind() const { return impl_->kind; }

Control Control::constant(double value) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Constant;
  impl->value = value;
  return Control(impl);
}

Control Control::piecewise_linear(std::vector<double> xs, std::vector<double> ys) {
  require(xs.size() >= 2 && xs.size() == ys.size(), "Control: need matching breakpoints");
  for (std::size_t i = 1; i < xs.size(); ++i)
    require(xs[i] > xs[i - 1], "Control: breakpoint abscissae must strictly increase");
  require(xs.front() >= 0.0 && xs.back() <= 1.0, "Control: breakpoints must lie in [0,1]");
  for (double y : ys) require(std::isfinite(y), "Control: non-finite breakpoint value");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::PiecewiseLinear;
  impl->xs = std::move(xs);
  impl->ys = std::move(ys);
  return Control(impl);
}

Control Control::fourier(std::vector<double> coeffs, bool complement) {
  for (double c : coeffs) require(std::isfinite(c), "Control: non-finite coefficient");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Fourier;
  impl->coeffs = std::move(coeffs);
  impl->complement = complement;
  return Control(impl);
}

Control Control::sine2(double peak) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Sine2;
  impl->peak = peak;
  return Control(impl);
}

Control Control::reparameterized(std::vector<double> map_x, std::vector<double> map_y) const {
  require(map_x.size() == map_y.size() && map_x.size() >= 2, "Control: bad time map");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Reparam;
  impl->inner = impl_;
  impl->map_x = std::move(map_x);
  impl->map_y = std::move(map_y);
  return Control(impl);
}

bool Schedule::smooth() const {
  if (!A.smooth() || !B.smooth()) return false;
  if (C && !C->smooth()) return false;
  if (lambda && !lambda->smooth()) return false;
  return true;
}

Schedule linear_forward(double T) {
  require(T > 0.0, "linear_forward: T must be > 0");
  Schedule s{Control::fourier({}), Control::fourier({}, true)};
  s.T = T;
  s.label = "linear_forward";
  return s;
}

Schedule reverse_dwave(double s_target, double pause_fraction, bool reinitialize,
                       double T) {
  require(s_target > 0.0 && s_target < 1.0, "reverse_dwave: s_target in (0,1)");
  require(pause_fraction >= 0.0 && pause_fraction < 1.0,
          "reverse_dwave: pause_fraction in [0,1)");
  require(T > 0.0, "reverse_dwave: T must be > 0");
  // Apex control values coincide with the linear schedule at s_target.
  const double a_top = 1.0 - s_target;
  std::vector<double> xs, a_ys, b_ys;
  const double m1 = 0.5 * (1.0 - pause_fraction);
  const double m2 = 0.5 * (1.0 + pause_fraction);
  xs = {0.0, m1, m2, 1.0};
  a_ys = {0.0, a_top, a_top, 0.0};
  b_ys = {1.0, s_target, s_target, 1.0};
  if (pause_fraction == 0.0) {
    xs = {0.0, 0.5, 1.0};
    a_ys = {0.0, a_top, 0.0};
    b_ys = {1.0, s_target, 1.0};
  }
  Schedule s{Control::piecewise_linear(xs, a_ys), Control::piecewise_linear(xs, b_ys)};
  s.T = T;
  s.label = "reverse_dwave";
  s.reinitialize = reinitialize;
  s.s_target = s_target;
  s.pause_fraction = pause_fraction;
  return s;
}

Schedule sombrero(double T, double peak_height) {
  require(T > 0.0, "sombrero: T must be > 0");
  require(peak_height >= 0.0, "sombrero: peak_height must be >= 0");
  Schedule s{Control::sine2(peak_height), Control::fourier({}, true)};
  s.C = Control::fourier({});  // 1 - s
  s.T = T;
  s.label = "sombrero";
  return s;
}

Schedule fourier_schedule(const std::vector<double>& coeffs, double T) {
  require(T > 0.0, "fourier_schedule: T must be > 0");
  Schedule s{Control::fourier(coeffs), Control::fourier(coeffs, true)};
  s.T = T;
  s.label = "fourier";
  return s;
}

Schedule with_pause(const Schedule& sched, double s_pause, double pause_fraction) {
  require(s_pause > 0.0 && s_pause < 1.0, "with_pause: s_pause in (0,1)");
  require(pause_fraction >= 0.0, "with_pause: pause_fraction must be >= 0");
  if (pause_fraction == 0.0) return sched;
  const double stretch = 1.0 + pause_fraction;
  const std::vector<double> mx = {0.0, s_pause / stretch, (s_pause + pause_fraction) / stretch, 1.0};
  const std::vector<double> my = {0.0, s_pause, s_pause, 1.0};
  auto remap = [&](const Control& c) { return c.reparameterized(mx, my); };
  Schedule out{remap(sched.A), remap(sched.B)};
  if (sched.C) out.C = remap(*sched.C);
  if (sched.lambda) out.lambda = remap(*sched.lambda);
  out.T = sched.T * stretch;
  out.label = sched.label + "+pause";
  out.reinitialize = sched.reinitialize;
  out.s_target = sched.s_target;
  out.pause_fraction = pause_fraction;
  return out;
}

double BreakpointSchedule::value(double time) const {
  if (piecewise_constant) {
    for (std::size_t k = 0; k < seg_end.size(); ++k)
      if (time < seg_end[k]) return f[k];
    return f.back();
  }
  return pwl_eval(t, f, time);
}

BreakpointSchedule qaoa_to_schedule(std::span<const double> gammas,
                                    std::span<const double> betas) {
  require(!gammas.empty() && gammas.size() == betas.size(),
          "qaoa_to_schedule: need equal-length nonempty angle lists");
  BreakpointSchedule bs;
  double acc = 0.0;
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    const double layer = std::abs(gammas[k]) + std::abs(betas[k]);
    if (layer == 0.0)
      throw DegenerateLayer("qaoa_to_schedule: layer with |gamma|+|beta| = 0");
    bs.t.push_back(acc + 0.5 * layer);
    bs.f.push_back(gammas[k] / layer);
    acc += layer;
    bs.seg_end.push_back(acc);
    bs.gammas.push_back(gammas[k]);
    bs.betas.push_back(betas[k]);
  }
  bs.T = acc;
  return bs;
}

}  // namespace dqa
