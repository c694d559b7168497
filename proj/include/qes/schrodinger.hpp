#ifndef QES_SCHRODINGER_HPP
#define QES_SCHRODINGER_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "qes/model_core.hpp"
#include "qes/ode.hpp"
#include "qes/polynomial.hpp"
#include "qes/potential.hpp"

namespace qes {

struct ShootingConfig {
  real_t x_inner = 0.05;
  real_t x_match = 1.2;
  real_t x_outer = 5.0;
  real_t step_tolerance = 1e-12;
  std::pair<real_t, real_t> energy_bracket{-100, 200};
  int max_levels = 5;
  real_t energy_tolerance = 1e-9;
  real_t scan_step = 0.5;  // PT scans only
};

/// Two decay rays joined by an arc around the origin, matched where the arc
/// crosses the imaginary axis. The rays must be mirror images under
/// x -> -conj(x). arc_radius is the smallest junction radius; it grows with E
/// to the depth of the complex turning points.
struct ContourSpec {
  std::pair<real_t, real_t> ray_angles{-pi / 4, -3 * pi / 4};
  real_t ray_radius = 4.5;
  real_t arc_radius = 0.6;
};

inline void validate(const ShootingConfig& c) {
  require(c.x_inner > 0 && c.x_inner < c.x_match && c.x_match < c.x_outer, ErrorKind::InvalidParameter,
          "need 0 < x_inner < x_match < x_outer");
  require(c.step_tolerance > 0, ErrorKind::InvalidParameter, "step_tolerance must be positive");
  require(c.energy_bracket.first < c.energy_bracket.second, ErrorKind::InvalidParameter, "empty energy bracket");
  require(c.max_levels >= 1, ErrorKind::InvalidParameter, "max_levels must be positive");
  require(c.energy_tolerance > 0 && c.scan_step > 0, ErrorKind::InvalidParameter, "tolerances must be positive");
}

inline void validate(const ContourSpec& c) {
  require(c.arc_radius > 0, ErrorKind::ContourError, "the arc must avoid the origin");
  require(c.ray_radius > c.arc_radius, ErrorKind::ContourError, "ray_radius must exceed arc_radius");
  require(c.ray_angles.first != c.ray_angles.second, ErrorKind::ContourError, "ray angles must differ");
  const real_t s = c.ray_angles.first + c.ray_angles.second;
  require(std::abs(std::abs(s) - pi) < 1e-12, ErrorKind::ContourError,
          "ray angles must be mirror images under x -> -conj(x)");
}

namespace detail {

inline StepperOptions stepper_for(const ShootingConfig& c) {
  StepperOptions o;
  o.tolerance = c.step_tolerance;
  return o;
}

inline real_t refine_root(const std::function<real_t(real_t)>& f, real_t lo, real_t hi, real_t flo, real_t fhi) {
  std::uintmax_t iters = 200;
  auto tol = [](real_t a, real_t b) { return std::abs(b - a) <= 4e-15 * (1 + std::abs(a)); };
  auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  return (r.first + r.second) / 2;
}

/// Outward/inward shooting for -psi'' + v psi = E psi on [x_left, inf).
struct RealShooter {
  std::function<real_t(real_t)> v;
  std::function<real_t(real_t)> v_floor;  // v without attractive inverse-square terms
  real_t x_left = 0;
  std::function<State2<real_t>(real_t)> left_start;  // state at x_start(E)
  real_t x_start = 0;
  real_t x_match = 1;
  std::function<real_t(real_t)> outer_radius;
  StepperOptions opt;

  State2<real_t> rhs(real_t x, const State2<real_t>& y, real_t e) const { return {y[1], (v(x) - e) * y[0]}; }

  real_t lower_bound(real_t x_hi) const {
    real_t m = v_floor(x_hi);
    const int n = 4000;
    for (int i = 1; i < n; ++i) m = std::min(m, v_floor(x_start + (x_hi - x_start) * i / n));
    return m - 1;
  }

  State2<real_t> outer_state(real_t e, real_t r) const {
    const real_t k2 = v(r) - e;
    require(k2 > 0, ErrorKind::ConvergenceFailure, "outer start is not classically forbidden");
    const real_t h = 1e-5 * std::max(real_t(1), r);
    const real_t dv = (v(r + h) - v(r - h)) / (2 * h);
    return {1, -(std::sqrt(k2) + dv / (4 * k2))};
  }

  State2<real_t> left_state(real_t e, real_t x_end) const {
    State2<real_t> y = left_start(e);
    integrate_path<real_t>([&](real_t x, const State2<real_t>& s) { return rhs(x, s, e); }, x_start, x_end, y, opt);
    return y;
  }

  State2<real_t> right_state(real_t e, real_t x_end) const {
    const real_t r = outer_radius(e);
    State2<real_t> y = outer_state(e, r);
    integrate_path<real_t>([&](real_t x, const State2<real_t>& s) { return rhs(x, s, e); }, r, x_end, y, opt);
    return y;
  }

  /// Wronskian of the unit-normalized inner and outer solutions at x_match.
  real_t mismatch(real_t e) const {
    const auto l = left_state(e, x_match);
    const auto r = right_state(e, x_match);
    return l[0] * r[1] - l[1] * r[0];
  }

  /// Zeros of the regular solution; equals the number of levels below e.
  int nodes(real_t e) const {
    const real_t r = outer_radius(e);
    real_t x_turn = x_start;
    const int n = 4000;
    for (int i = n; i >= 0; --i) {
      const real_t x = x_start + (r - x_start) * i / n;
      if (v(x) < e) {
        x_turn = x;
        break;
      }
    }
    State2<real_t> y = left_start(e);
    int count = 0;
    int sign = y[0] > 0 ? 1 : (y[0] < 0 ? -1 : 0);
    if (sign == 0) sign = y[1] > 0 ? 1 : -1;
    integrate_path<real_t>([&](real_t x, const State2<real_t>& s) { return rhs(x, s, e); }, x_start, r, y, opt,
                           [&](real_t x, const State2<real_t>& s) {
                             const int sg = s[0] > 0 ? 1 : (s[0] < 0 ? -1 : sign);
                             if (sg != sign) ++count;
                             sign = sg;
                             return !(x > x_turn && s[0] * s[1] > 0);
                           });
    return count;
  }

  /// Inner and outer solutions joined at x_match; zero outside the
  /// integration range. Samples are returned in the order given.
  std::vector<std::pair<real_t, real_t>> sample(real_t e, const std::vector<real_t>& xs) const {
    auto f = [&](real_t x, const State2<real_t>& s) { return rhs(x, s, e); };
    const real_t r = outer_radius(e);
    std::vector<std::size_t> order(xs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<real_t> psi(xs.size(), 0);
    // inner: chain forward, remembering state and log scale at each sample
    State2<real_t> y = left_start(e);
    real_t at = x_start, log_scale = 0;
    std::vector<std::pair<std::size_t, real_t>> inner;
    for (std::size_t i : order) {
      if (xs[i] < x_start || xs[i] > x_match) continue;
      log_scale += integrate_path<real_t>(f, at, xs[i], y, opt);
      at = xs[i];
      inner.emplace_back(i, y[0]);
      psi[i] = log_scale;
    }
    log_scale += integrate_path<real_t>(f, at, x_match, y, opt);
    const State2<real_t> l_hat = y;
    for (auto [i, v] : inner) psi[i] = v * std::exp(psi[i] - log_scale);
    // outer: chain backward from the decaying start
    State2<real_t> z = outer_state(e, r);
    at = r;
    log_scale = 0;
    std::vector<std::pair<std::size_t, real_t>> outer;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t i = *it;
      if (xs[i] <= x_match || xs[i] >= r) continue;
      log_scale += integrate_path<real_t>(f, at, xs[i], z, opt);
      at = xs[i];
      outer.emplace_back(i, z[0]);
      psi[i] = log_scale;
    }
    log_scale += integrate_path<real_t>(f, at, x_match, z, opt);
    const real_t sign = l_hat[0] * z[0] + l_hat[1] * z[1] >= 0 ? 1 : -1;
    for (auto [i, v] : outer) psi[i] = sign * v * std::exp(psi[i] - log_scale);
    real_t peak = 0;
    for (real_t p : psi) peak = std::max(peak, std::abs(p));
    std::vector<std::pair<real_t, real_t>> out;
    for (std::size_t i = 0; i < xs.size(); ++i) out.emplace_back(xs[i], peak > 0 ? psi[i] / peak : 0);
    return out;
  }

  Spectrum levels(int max_levels, real_t energy_tol) const {
    std::map<real_t, int> counts;
    auto n_at = [&](real_t e) {
      auto it = counts.find(e);
      if (it != counts.end()) return it->second;
      const int c = nodes(e);
      counts.emplace(e, c);
      return c;
    };
    long evaluations = 0;
    const real_t floor = lower_bound(outer_radius(0));
    require(n_at(floor) == 0, ErrorKind::BracketFailure, "regular solution has nodes below the potential minimum");
    std::vector<real_t> found;
    for (int n = 0; n < max_levels; ++n) {
      real_t lo = floor, hi = floor;
      for (const auto& [e, c] : counts) {
        if (c <= n) lo = std::max(lo, e);
      }
      std::optional<real_t> hi_known;
      for (const auto& [e, c] : counts) {
        if (c >= n + 1 && e > lo) {
          hi_known = e;
          break;
        }
      }
      if (hi_known) {
        hi = *hi_known;
      } else {
        real_t step = 10;
        hi = lo + step;
        int guard = 0;
        while (n_at(hi) <= n) {
          lo = hi;
          step *= 2;
          hi = lo + step;
          require(++guard < 60, ErrorKind::BracketFailure, "no upper bracket for level " + std::to_string(n));
        }
      }
      while (!(n_at(lo) == n && n_at(hi) == n + 1)) {
        require(hi - lo > 1e-13 * (1 + std::abs(lo)), ErrorKind::ResolutionFailure,
                "levels near " + std::to_string(lo) + " cannot be separated");
        const real_t mid = (lo + hi) / 2;
        if (n_at(mid) <= n) lo = mid;
        else hi = mid;
      }
      std::function<real_t(real_t)> f = [&](real_t e) {
        ++evaluations;
        return mismatch(e);
      };
      const real_t flo = f(lo), fhi = f(hi);
      require(flo * fhi <= 0, ErrorKind::BracketFailure, "matching function has no sign change for level " +
                                                              std::to_string(n));
      const real_t e = flo == 0 ? lo : (fhi == 0 ? hi : refine_root(f, lo, hi, flo, fhi));
      if (!found.empty()) {
        require(e - found.back() > energy_tol, ErrorKind::ResolutionFailure, "adjacent levels coincide");
      }
      found.push_back(e);
    }
    Spectrum s = make_spectrum(found, Method::ODE);
    // Wronskian of unit-norm states, so already dimensionless
    for (auto& l : s.levels) l.residual = std::abs(mismatch(l.energy));
    s.diagnostics["node_count_evaluations"] = static_cast<double>(counts.size());
    s.diagnostics["matching_evaluations"] = static_cast<double>(evaluations);
    return s;
  }
};

inline State2<real_t> frobenius_radial(const SexticSpec& s, real_t e, real_t x) {
  // psi = x^(l+1) sum_k a_k x^(2k); the common factor x^(l+1) is dropped.
  const real_t l = s.l, b = s.x2_coeff();
  std::vector<real_t> a{1};
  const real_t x2 = x * x;
  real_t psi = 1, dpsi = (l + 1) / x, pw = 1;
  int small = 0;
  for (int k = 1; k < 2000 && small < 4; ++k) {
    real_t rhs = (s.c_shift - e) * a[k - 1];
    if (k >= 2) rhs += b * a[k - 2];
    if (k >= 3) rhs += 2 * s.delta * a[k - 3];
    if (k >= 4) rhs += a[k - 4];
    a.push_back(rhs / (2 * k * (2 * k + 2 * l + 1)));
    pw *= x2;
    const real_t t = a[k] * pw;
    psi += t;
    dpsi += t * (2 * k + l + 1) / x;
    small = std::abs(t) < 1e-18 * std::abs(psi) ? small + 1 : 0;
  }
  require(small >= 4, ErrorKind::ConvergenceFailure, "Frobenius series did not converge");
  return {psi, dpsi};
}

inline RealShooter radial_shooter(const SexticSpec& spec, const ShootingConfig& cfg) {
  RealShooter sh;
  sh.v = [spec](real_t x) { return sextic_potential(spec, x); };
  sh.v_floor = [spec](real_t x) {
    real_t v = sextic_potential(spec, x);
    if (spec.centrifugal() < 0) v -= spec.centrifugal() / (x * x);
    return v;
  };
  sh.x_start = cfg.x_inner;
  sh.left_start = [spec, x = cfg.x_inner](real_t e) { return frobenius_radial(spec, e, x); };
  sh.x_match = cfg.x_match;
  sh.outer_radius = [spec, r0 = cfg.x_outer](real_t e) {
    real_t r = r0;
    while (true) {
      const real_t v = sextic_potential(spec, r);
      if (std::abs(v) >= 1e3 * std::abs(e) && v - e >= 400) return r;
      r += 0.25;
    }
  };
  sh.opt = stepper_for(cfg);
  return sh;
}

}  // namespace detail

/// Lowest cfg.max_levels levels of -psi'' + V psi = E psi on (0, inf) with
/// psi ~ x^(l+1) at the origin. Level n has n interior nodes.
inline Spectrum radial_eigenvalues(const SexticSpec& spec, const ShootingConfig& cfg = {}) {
  validate(cfg);
  require(spec.bc == SexticBC::HermitianRadial, ErrorKind::InvalidParameter, "spec is not HermitianRadial");
  require(spec.l >= -0.5, ErrorKind::InvalidParameter, "HermitianRadial needs l >= -1/2");
  return detail::radial_shooter(spec, cfg).levels(cfg.max_levels, cfg.energy_tolerance);
}

/// (x, psi) samples of the eigenfunction at energy e, max |psi| scaled to 1.
inline std::vector<std::pair<real_t, real_t>> radial_wavefunction(const SexticSpec& spec, real_t e,
                                                                  const std::vector<real_t>& xs,
                                                                  const ShootingConfig& cfg = {}) {
  validate(cfg);
  return detail::radial_shooter(spec, cfg).sample(e, xs);
}

namespace detail {

/// Depth below the real axis of the complex turning points V(x) = E, the
/// roots of z^4 + 2 delta z^3 + b z^2 + (C - E) z + l(l+1) in z = x^2.
/// Matching at that depth keeps the two branch solutions well separated;
/// near the origin both are dominated by one mode as soon as E is large.
inline real_t turning_depth(const SexticSpec& spec, real_t e) {
  real_t best = 0;
  for (const complex_t z : poly_roots({spec.centrifugal(), spec.c_shift - e, spec.x2_coeff(), 2 * spec.delta, 1})) {
    best = std::max(best, std::abs(std::sqrt(z).imag()));
  }
  return best;
}

/// Solution decaying along the ray at angle theta, carried inward to the
/// junction radius and along the arc to the imaginary axis.
inline State2<complex_t> pt_branch(const SexticSpec& spec, const ContourSpec& c, real_t theta, complex_t e,
                                   const StepperOptions& opt) {
  const real_t rho = std::max(c.arc_radius, turning_depth(spec, e.real()));
  const complex_t u = std::polar(real_t(1), theta);
  real_t r = std::max(c.ray_radius, rho + 1);
  while (std::abs(sextic_potential(spec, complex_t(r) * u)) < 1e3 * std::abs(e) ||
         std::abs(sextic_potential(spec, complex_t(r) * u)) < 400)
    r += 0.25;
  const complex_t x0 = r * u;
  const complex_t k2 = sextic_potential(spec, x0) - e;
  complex_t k = std::sqrt(k2);
  if ((k * u).real() < 0) k = -k;
  const complex_t h = 1e-5 * r * u;
  const complex_t dv = (sextic_potential(spec, x0 + h) - sextic_potential(spec, x0 - h)) / (real_t(2) * h);
  State2<complex_t> y{complex_t(1), -k - dv / (real_t(4) * k2)};
  integrate_path<complex_t>(
      [&](real_t t, const State2<complex_t>& s) {
        const complex_t x = t * u;
        return State2<complex_t>{u * s[1], u * (sextic_potential(spec, x) - e) * s[0]};
      },
      r, rho, y, opt);
  const real_t theta_m = (c.ray_angles.first + c.ray_angles.second) / 2;
  integrate_path<complex_t>(
      [&](real_t phi, const State2<complex_t>& s) {
        const complex_t x = std::polar(rho, phi);
        const complex_t dx = complex_t(0, 1) * x;
        return State2<complex_t>{dx * s[1], dx * (sextic_potential(spec, x) - e) * s[0]};
      },
      theta, theta_m, y, opt);
  return y;
}

inline complex_t pt_wronskian(const SexticSpec& spec, const ContourSpec& c, complex_t e, const StepperOptions& opt) {
  const auto a = pt_branch(spec, c, c.ray_angles.first, e, opt);
  const auto b = pt_branch(spec, c, c.ray_angles.second, e, opt);
  return a[0] * b[1] - a[1] * b[0];
}

}  // namespace detail

/// Real levels of -psi'' + V psi = E psi on the contour: E is scanned upward
/// from cfg.energy_bracket.first and sign changes of the Wronskian refined.
/// Near-miss minima of |W| are resampled; unresolved ones are probed for a
/// complex-conjugate pair, which is reported in the diagnostics.
inline Spectrum pt_eigenvalues(const SexticSpec& spec, const ContourSpec& contour = {},
                               const ShootingConfig& cfg = {}) {
  validate(cfg);
  validate(contour);
  require(spec.bc == SexticBC::PTContour, ErrorKind::InvalidParameter, "spec is not PTContour");
  const auto opt = detail::stepper_for(cfg);
  long evaluations = 0;
  real_t max_imag = 0;
  auto w = [&](real_t e) {
    ++evaluations;
    const complex_t v = detail::pt_wronskian(spec, contour, e, opt);
    max_imag = std::max(max_imag, std::abs(v.imag()));
    return v.real();
  };
  std::vector<real_t> found;
  std::vector<complex_t> complex_pairs;
  auto refine = [&](real_t a, real_t b, real_t fa, real_t fb) {
    const real_t e = fa == 0 ? a : (fb == 0 ? b : detail::refine_root(w, a, b, fa, fb));
    if (found.empty() || e - found.back() > cfg.energy_tolerance) found.push_back(e);
  };
  std::function<bool(real_t, real_t, real_t, real_t, real_t, real_t, int)> resample;
  // Looks for sign changes inside [a, c] around a suspicious minimum at b.
  resample = [&](real_t a, real_t fa, real_t b, real_t fb, real_t c, real_t fc, int depth) {
    const int n = 8;
    std::vector<real_t> es, fs;
    for (int i = 0; i <= n; ++i) {
      const real_t e = a + (c - a) * i / n;
      es.push_back(e);
      fs.push_back(i == 0 ? fa : (i == n ? fc : w(e)));
    }
    (void)b;
    (void)fb;
    bool hit = false;
    for (int i = 0; i < n; ++i) {
      if (fs[i] * fs[i + 1] < 0 || fs[i + 1] == 0) {
        refine(es[i], es[i + 1], fs[i], fs[i + 1]);
        hit = true;
      }
    }
    if (hit || depth == 0) return hit;
    for (int i = 1; i < n; ++i) {
      if (std::abs(fs[i]) < std::abs(fs[i - 1]) && std::abs(fs[i]) < std::abs(fs[i + 1]))
        return resample(es[i - 1], fs[i - 1], es[i], fs[i], es[i + 1], fs[i + 1], depth - 1);
    }
    return false;
  };
  auto probe_complex = [&](real_t e0, real_t h) {
    complex_t z(e0, h / 2);
    for (int it = 0; it < 40; ++it) {
      const real_t eta = 1e-6 * (1 + std::abs(z));
      const complex_t f = detail::pt_wronskian(spec, contour, z, opt);
      const complex_t df = (detail::pt_wronskian(spec, contour, z + eta, opt) -
                            detail::pt_wronskian(spec, contour, z - eta, opt)) /
                           (real_t(2) * eta);
      evaluations += 3;
      const complex_t dz = f / df;
      z -= dz;
      if (std::abs(dz) < 1e-10 * (1 + std::abs(z))) {
        if (std::abs(z.imag()) > 1e-7) complex_pairs.push_back(z.imag() > 0 ? z : std::conj(z));
        return;
      }
    }
  };

  const real_t h = cfg.scan_step;
  real_t e_prev2 = cfg.energy_bracket.first, e_prev = e_prev2 + h;
  real_t f_prev2 = w(e_prev2), f_prev = w(e_prev);
  if (f_prev2 * f_prev <= 0) refine(e_prev2, e_prev, f_prev2, f_prev);
  const real_t width = cfg.energy_bracket.second - cfg.energy_bracket.first;
  real_t limit = cfg.energy_bracket.second;
  int extensions = 0;
  while (static_cast<int>(found.size()) < cfg.max_levels) {
    const real_t e = e_prev + h;
    if (e > limit) {
      if (extensions == 8 && !complex_pairs.empty())
        throw Error(ErrorKind::ComplexEigenvalue, "real levels missing; complex pair near " +
                                                      std::to_string(static_cast<double>(complex_pairs.front().real())));
      require(++extensions <= 8, ErrorKind::BracketFailure,
              "found " + std::to_string(found.size()) + " real levels below " + std::to_string(limit));
      limit += width;
    }
    const real_t f = w(e);
    if (f_prev * f <= 0) {
      refine(e_prev, e, f_prev, f);
    } else if (std::abs(f_prev) < std::abs(f_prev2) && std::abs(f_prev) < std::abs(f) && f_prev * f_prev2 > 0) {
      if (!resample(e_prev2, f_prev2, e_prev, f_prev, e, f, 3)) probe_complex(e_prev, h);
      std::sort(found.begin(), found.end());
    }
    e_prev2 = e_prev;
    f_prev2 = f_prev;
    e_prev = e;
    f_prev = f;
  }
  found.resize(cfg.max_levels);
  Spectrum s = make_spectrum(found, Method::ODE);
  for (auto& l : s.levels) l.residual = std::abs(detail::pt_wronskian(spec, contour, l.energy, opt));
  s.diagnostics["wronskian_evaluations"] = static_cast<double>(evaluations);
  s.diagnostics["max_imag_wronskian"] = max_imag;
  s.diagnostics["complex_pairs"] = static_cast<double>(complex_pairs.size());
  for (std::size_t i = 0; i < complex_pairs.size(); ++i) {
    s.diagnostics["complex_pair_" + std::to_string(i) + "_re"] = complex_pairs[i].real();
    s.diagnostics["complex_pair_" + std::to_string(i) + "_im"] = complex_pairs[i].imag();
  }
  return s;
}

namespace detail {

inline RealShooter hyperbolic_shooter(const HyperbolicSpec& spec, real_t m, const ShootingConfig& cfg) {
  const bool shifted = spec.bc == HyperbolicBC::PTShifted;
  // On Im x = pi the problem is the Hermitian one of the swapped spec.
  const HyperbolicSpec herm = shifted ? herm_pt_swap(spec) : spec;
  const real_t ag = herm.a_lin * herm.gamma;
  require(ag < 0, ErrorKind::DomainError, "bound states need A*gamma < 0 on the real line");
  const HyperbolicBC bc = herm.bc;
  const real_t b = herm.b_pole;
  // Either parity is allowed whenever the (cosh x - 1) pole is absent.
  if (bc == HyperbolicBC::RealLineEven || bc == HyperbolicBC::RealLineOdd)
    require(b == real_t(-0.5) || b == real_t(-1.5), ErrorKind::InvalidParameter,
            "real-line parity classes need B = -1/2 or -3/2");
  require(bc != HyperbolicBC::HalfLine || b < 0, ErrorKind::DomainError,
          "x^(-B-1/2) is not square integrable at the origin for B >= 0");

  RealShooter sh;
  if (shifted) {
    sh.v = [spec, m](real_t x) { return hyperbolic_potential(spec, m, complex_t(x, pi)).real(); };
  } else {
    sh.v = [spec, m](real_t x) { return hyperbolic_potential(spec, m, x); };
  }
  const real_t pole = (2 * b + 1) * (2 * b + 3) / 8;
  sh.v_floor = [v = sh.v, pole](real_t x) {
    real_t out = v(x);
    if (pole < 0) out -= pole / (std::cosh(x) - 1);
    return out;
  };
  if (bc == HyperbolicBC::RealLineEven) {
    sh.x_start = 0;
    sh.left_start = [](real_t) { return State2<real_t>{1, 0}; };
  } else if (bc == HyperbolicBC::RealLineOdd) {
    sh.x_start = 0;
    sh.left_start = [](real_t) { return State2<real_t>{0, 1}; };
  } else {
    // psi = x^s (1 + a x^2), s = -B - 1/2; the x^(s) factor is dropped.
    const real_t s = -b - real_t(0.5);
    const real_t x0 = std::min(cfg.x_inner, real_t(1e-3));
    const real_t v_reg0 = hyperbolic_regular_at_origin(herm, m);
    sh.x_start = x0;
    sh.left_start = [s, x0, v_reg0](real_t e) {
      const real_t a = (v_reg0 - e) / (4 * s + 2);
      return State2<real_t>{1 + a * x0 * x0, s / x0 + a * (s + 2) * x0};
    };
  }
  sh.x_match = cfg.x_match;
  sh.outer_radius = [v = sh.v, ag, r0 = cfg.x_outer](real_t e) {
    real_t r = std::max(r0, std::acosh(std::max(real_t(1), 120 / std::abs(ag))));
    while (v(r) - e < 10 * (1 + std::abs(e))) r += 0.25;
    return r;
  };
  sh.opt = stepper_for(cfg);
  return sh;
}

}  // namespace detail

/// Levels of -psi'' + V(x; A,B,C,gamma) psi = E psi in the parity class or
/// domain selected by spec.bc. M enters through the M-dependent block of V.
inline Spectrum hyperbolic_eigenvalues(const HyperbolicSpec& spec, real_t m, const ShootingConfig& cfg = {}) {
  validate(cfg);
  return detail::hyperbolic_shooter(spec, m, cfg).levels(cfg.max_levels, cfg.energy_tolerance);
}

inline std::vector<std::pair<real_t, real_t>> hyperbolic_wavefunction(const HyperbolicSpec& spec, real_t m, real_t e,
                                                                      const std::vector<real_t>& xs,
                                                                      const ShootingConfig& cfg = {}) {
  validate(cfg);
  return detail::hyperbolic_shooter(spec, m, cfg).sample(e, xs);
}

}  // namespace qes

#endif
