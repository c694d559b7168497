#ifndef QES_HOMOTOPY_HPP
#define QES_HOMOTOPY_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include "qes/polynomial.hpp"

namespace qes {

struct TrackerOptions {
  real_t initial_step = 0.01;
  real_t max_step = 0.05;
  real_t min_step = 1e-10;
  real_t corrector_tol = 1e-10;
  int max_corrector_iterations = 6;
  int max_steps = 200000;
};

struct TrackResult {
  ComplexVector end;
  int steps = 0;
  int rejections = 0;
  bool ok = false;
  std::string failure;
};

/// Straight segment in the complex parameter plane bent by `bend * t (1 - t)`.
struct ParameterPath {
  complex_t start;
  complex_t target;
  complex_t bend{0, 0};
  complex_t at(real_t t) const { return (real_t(1) - t) * start + t * target + bend * t * (real_t(1) - t); }
  complex_t velocity(real_t t) const { return target - start + bend * (real_t(1) - real_t(2) * t); }
};

/// Predictor-corrector continuation of one solution of F(v; lambda) = 0.
///
/// `System` provides residual(v, lambda), jacobian(v, lambda),
/// dparam(v, lambda) (= dF/dlambda) and `step_scale(v)`, a length below
/// which a Newton correction is trusted not to have jumped paths.
template <class System>
TrackResult track_path(const System& sys, const ParameterPath& path, ComplexVector v, const TrackerOptions& opt = {}) {
  TrackResult res;
  real_t t = 0, h = opt.initial_step;
  int streak = 0;

  auto tangent = [&](const ComplexVector& x, real_t s, ComplexVector& out) -> bool {
    const complex_t lam = path.at(s);
    const ComplexMatrix jac = sys.jacobian(x, lam);
    Eigen::PartialPivLU<ComplexMatrix> lu(jac);
    if (!(std::abs(lu.determinant()) > 0)) return false;
    out = -lu.solve(sys.dparam(x, lam) * path.velocity(s));
    return out.allFinite();
  };

  while (t < 1) {
    if (res.steps++ > opt.max_steps) {
      res.failure = "step budget exhausted at t=" + std::to_string(static_cast<double>(t));
      return res;
    }
    h = std::min(h, real_t(1) - t);
    ComplexVector k1, k2, k3, k4;
    bool ok = tangent(v, t, k1) && tangent(v + h / 2 * k1, t + h / 2, k2) && tangent(v + h / 2 * k2, t + h / 2, k3) &&
              tangent(v + h * k3, t + h, k4);
    ComplexVector x;
    if (ok) {
      x = v + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
      const complex_t lam = path.at(t + h);
      const real_t trust = sys.step_scale(v) * real_t(0.25);
      real_t prev = std::numeric_limits<real_t>::infinity();
      ok = false;
      for (int it = 0; it < opt.max_corrector_iterations; ++it) {
        const ComplexMatrix jac = sys.jacobian(x, lam);
        const ComplexVector dx = Eigen::PartialPivLU<ComplexMatrix>(jac).solve(sys.residual(x, lam));
        const real_t n = dx.cwiseAbs().maxCoeff();
        if (!std::isfinite(n) || n > trust || (it > 0 && n > prev * real_t(0.5) && n > opt.corrector_tol)) break;
        x -= dx;
        prev = n;
        if (n <= opt.corrector_tol * (1 + x.cwiseAbs().maxCoeff())) {
          ok = true;
          break;
        }
      }
      // the predictor must also stay inside the trust region
      if (ok && (x - v).cwiseAbs().maxCoeff() > sys.step_scale(v) * real_t(0.5)) ok = false;
    }
    if (ok) {
      v = x;
      t += h;
      if (++streak >= 3) {
        h = std::min(h * 2, opt.max_step);
        streak = 0;
      }
    } else {
      ++res.rejections;
      streak = 0;
      h /= 2;
      if (h < opt.min_step) {
        res.failure = "step size underflow at t=" + std::to_string(static_cast<double>(t));
        return res;
      }
    }
  }
  res.end = v;
  res.ok = true;
  return res;
}

/// Newton iteration at fixed parameter. Returns the final correction size.
template <class System>
real_t newton_polish(const System& sys, complex_t lambda, ComplexVector& v, int max_iter = 50, real_t tol = 1e-15) {
  real_t last = std::numeric_limits<real_t>::infinity();
  for (int it = 0; it < max_iter; ++it) {
    const ComplexVector dx = Eigen::PartialPivLU<ComplexMatrix>(sys.jacobian(v, lambda)).solve(sys.residual(v, lambda));
    const real_t n = dx.cwiseAbs().maxCoeff();
    if (!std::isfinite(n)) return n;
    v -= dx;
    if (n <= tol * (1 + v.cwiseAbs().maxCoeff()) || (it > 3 && n >= last)) return n;
    last = n;
  }
  return last;
}

}  // namespace qes

#endif
