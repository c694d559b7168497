#ifndef QES_ODE_HPP
#define QES_ODE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include <boost/numeric/odeint.hpp>

#include "qes/types.hpp"

namespace qes {

template <class T>
using State2 = std::array<T, 2>;

struct StepperOptions {
  real_t tolerance = 1e-12;
  real_t h_init = 1e-3;
  real_t h_max = 0.1;
  long max_steps = 2000000;
};

template <class T>
real_t state_norm(const State2<T>& y) {
  return std::hypot(std::abs(y[0]), std::abs(y[1]));
}

/// Dormand-Prince 5(4) from s0 to s1 (either direction) for y' = f(s, y).
/// The state starts at unit norm and is rescaled whenever it leaves
/// [1e-8, 1e8] and on return, so the absolute tolerance tolerance*1e-8 acts
/// as a floor relative to the norm. The accumulated log of the discarded
/// scale is returned. `observer(s, y)` may return false to stop.
template <class T, class Rhs, class Observer>
real_t integrate_path(Rhs&& f, real_t s0, real_t s1, State2<T>& y, const StepperOptions& opt, Observer&& observer) {
  namespace odeint = boost::numeric::odeint;
  using S = State2<T>;
  auto stepper = odeint::make_controlled(opt.tolerance * real_t(1e-8), opt.tolerance, odeint::runge_kutta_dopri5<S, real_t>());
  auto sys = [&f](const S& st, S& dst, real_t s) { dst = f(s, st); };
  const real_t dir = s1 >= s0 ? 1 : -1;
  real_t s = s0;
  real_t h = dir * std::min(opt.h_init, std::abs(s1 - s0));
  real_t log_scale = 0;
  long steps = 0;
  auto rescale = [&]() {
    const real_t n = state_norm(y);
    require(std::isfinite(n) && n > 0, ErrorKind::ConvergenceFailure, "ODE state lost");
    y[0] /= n;
    y[1] /= n;
    log_scale += std::log(n);
  };
  rescale();
  while (dir * (s1 - s) > 0) {
    require(++steps < opt.max_steps, ErrorKind::ConvergenceFailure, "ODE step budget exhausted");
    if (dir * (s + h - s1) > 0) h = s1 - s;
    if (stepper.try_step(sys, y, s, h) == odeint::fail) {
      require(std::abs(h) > 1e-15 * (1 + std::abs(s)), ErrorKind::ConvergenceFailure, "ODE step size underflow");
      continue;
    }
    const real_t n = state_norm(y);
    if (!(n < 1e8 && n > 1e-8)) {
      rescale();
      stepper.reset();
    }
    if (std::abs(h) > opt.h_max) h = dir * opt.h_max;
    if (!observer(s, y)) break;
  }
  rescale();
  return log_scale;
}

template <class T, class Rhs>
real_t integrate_path(Rhs&& f, real_t s0, real_t s1, State2<T>& y, const StepperOptions& opt) {
  return integrate_path<T>(f, s0, s1, y, opt, [](real_t, const State2<T>&) { return true; });
}

}  // namespace qes

#endif
