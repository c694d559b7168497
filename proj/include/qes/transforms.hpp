#ifndef QES_TRANSFORMS_HPP
#define QES_TRANSFORMS_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qes/bender_dunne.hpp"
#include "qes/bethe_gaudin.hpp"
#include "qes/model_core.hpp"
#include "qes/polynomial.hpp"
#include "qes/potential.hpp"
#include "qes/schrodinger.hpp"

namespace qes {

/// W = psi0'/psi0 for psi0 = (cosh x + 1)^((M+1)/2) exp((gamma/2) cosh x).
struct SuperPotential {
  real_t m_param = 0;
  real_t gamma = -1;

  real_t w(real_t x) const { return (m_param + 1) / 2 * std::tanh(x / 2) + gamma / 2 * std::sinh(x); }
  real_t dw(real_t x) const {
    const real_t ch2 = std::cosh(x / 2);
    return (m_param + 1) / (4 * ch2 * ch2) + gamma / 2 * std::cosh(x);
  }
  real_t psi0(real_t x) const {
    const real_t ch2 = std::cosh(x / 2);
    return std::pow(2 * ch2 * ch2, (m_param + 1) / 2) * std::exp(gamma / 2 * std::cosh(x));
  }
  // product rule on the closed form, not through w()
  real_t dpsi0(real_t x) const {
    const real_t a = (m_param + 1) / 2, c = std::cosh(x), s = std::sinh(x);
    const real_t ch2 = std::cosh(x / 2);
    return a * std::pow(2 * ch2 * ch2, a - 1) * s * std::exp(gamma / 2 * c) + psi0(x) * gamma / 2 * s;
  }

  /// -psi'' + (W^2 + W') psi: annihilates psi0, V(x; 2, -3/2, M-1/2, gamma) - gamma(M+1).
  HyperbolicSpec zero_mode_potential() const {
    return {2, -1.5, m_param - real_t(0.5), gamma, -gamma * (m_param + 1), HyperbolicBC::RealLineEven};
  }
  /// -psi'' + (W^2 - W') psi: V(x; 2, -1/2, M+1/2, gamma) + M - gamma(M+1).
  HyperbolicSpec partner_potential() const {
    return {2, -0.5, m_param + real_t(0.5), gamma, m_param - gamma * (m_param + 1), HyperbolicBC::RealLineEven};
  }
};

struct SusyPartnerReport {
  real_t zero_mode_residual = 0;      // max |psi0' - W psi0| / max |psi0|
  real_t zero_mode_side_deviation = 0;  // max |W^2 + W' - V_zero|
  real_t partner_side_deviation = 0;    // max |W^2 - W' - V_partner|
  real_t worst_x = 0;
};

inline SusyPartnerReport susy_partner_check(real_t m_param, real_t gamma, const std::vector<real_t>& grid) {
  require(gamma < 0, ErrorKind::InvalidParameter, "gamma must be negative for a normalizable zero mode");
  const SuperPotential sp{m_param, gamma};
  const auto v0 = sp.zero_mode_potential(), v1 = sp.partner_potential();
  SusyPartnerReport r;
  real_t peak = 0, worst = -1;
  for (real_t x : grid) peak = std::max(peak, std::abs(sp.psi0(x)));
  for (real_t x : grid) {
    const real_t w = sp.w(x), dw = sp.dw(x);
    r.zero_mode_residual = std::max(r.zero_mode_residual, std::abs(sp.dpsi0(x) - w * sp.psi0(x)) / peak);
    const real_t d0 = std::abs(w * w + dw - hyperbolic_potential(v0, m_param, x));
    const real_t d1 = std::abs(w * w - dw - hyperbolic_potential(v1, m_param, x));
    r.zero_mode_side_deviation = std::max(r.zero_mode_side_deviation, d0);
    r.partner_side_deviation = std::max(r.partner_side_deviation, d1);
    if (std::max(d0, d1) > worst) {
      worst = std::max(d0, d1);
      r.worst_x = x;
    }
  }
  return r;
}

/// Lowest n levels on the whole real line: even and odd classes merged.
inline std::vector<real_t> full_line_levels(HyperbolicSpec spec, real_t m, int n, ShootingConfig cfg = {}) {
  cfg.max_levels = n;
  spec.bc = HyperbolicBC::RealLineEven;
  auto out = hyperbolic_eigenvalues(spec, m, cfg).energies();
  spec.bc = HyperbolicBC::RealLineOdd;
  const auto odd = hyperbolic_eigenvalues(spec, m, cfg).energies();
  out.insert(out.end(), odd.begin(), odd.end());
  std::sort(out.begin(), out.end());
  out.resize(static_cast<std::size_t>(n));
  return out;
}

struct SusyIsospectralityReport {
  std::vector<real_t> zero_mode_side;  // n_levels + 1 levels
  std::vector<real_t> partner_side;    // n_levels levels
  real_t zero_mode_energy = 0;
  real_t zero_mode_residual = 0;  // max |-psi0'' + V psi0| / max |psi0| on [-5, 5]
  real_t max_level_difference = 0;
};

inline SusyIsospectralityReport susy_isospectrality_report(real_t m_param, real_t gamma, int n_levels,
                                                           const ShootingConfig& cfg = {}) {
  require(gamma < 0, ErrorKind::InvalidParameter, "gamma must be negative for a normalizable zero mode");
  require(n_levels >= 1, ErrorKind::InvalidParameter, "need at least one level");
  const SuperPotential sp{m_param, gamma};
  SusyIsospectralityReport r;
  r.zero_mode_side = full_line_levels(sp.zero_mode_potential(), m_param, n_levels + 1, cfg);
  r.partner_side = full_line_levels(sp.partner_potential(), m_param, n_levels, cfg);
  r.zero_mode_energy = r.zero_mode_side.front();
  for (int i = 0; i < n_levels; ++i)
    r.max_level_difference = std::max(r.max_level_difference, std::abs(r.zero_mode_side[i + 1] - r.partner_side[i]));
  // psi0''/psi0 = (log psi0)'' + (log psi0)'^2 from the closed form
  const auto v0 = sp.zero_mode_potential();
  const real_t a = (m_param + 1) / 2;
  real_t peak = 0;
  for (int i = 0; i <= 200; ++i) peak = std::max(peak, sp.psi0(-5 + real_t(i) / 20));
  for (int i = 0; i <= 200; ++i) {
    const real_t x = -5 + real_t(i) / 20, c = std::cosh(x), s = std::sinh(x);
    const real_t lp = a * std::tanh(x / 2) + gamma / 2 * s;
    const real_t lpp = a / (c + 1) + gamma / 2 * c;
    const real_t psi = sp.psi0(x);
    const real_t res = -(lpp + lp * lp) * psi + hyperbolic_potential(v0, m_param, x) * psi;
    r.zero_mode_residual = std::max(r.zero_mode_residual, std::abs(res) / peak);
  }
  return r;
}

/// Throws MissingZeroMode / LevelMismatch when the partner spectra disagree.
inline SusyIsospectralityReport susy_isospectrality_check(real_t m_param, real_t gamma, int n_levels,
                                                          real_t tol = 1e-7, const ShootingConfig& cfg = {}) {
  auto r = susy_isospectrality_report(m_param, gamma, n_levels, cfg);
  require(std::abs(r.zero_mode_energy) <= tol, ErrorKind::MissingZeroMode,
          "lowest level " + std::to_string(static_cast<double>(r.zero_mode_energy)) + " is not 0");
  require(r.max_level_difference <= tol, ErrorKind::LevelMismatch,
          "partner levels differ by " + std::to_string(static_cast<double>(r.max_level_difference)));
  return r;
}

/// Value and first two derivatives at a point.
struct Jet {
  real_t f = 0, d1 = 0, d2 = 0;
};

/// Closed-form QES state: prefactor times a polynomial in y = x^2 (sextic)
/// or u = (gamma/2) cosh x (hyperbolic).
struct QESWavefunction {
  enum class Family { Sextic, Hyperbolic };
  Family family = Family::Sextic;
  // sextic prefactor x^power exp(quad x^2/2 + quart x^4/4)
  real_t power = 0, quad = 0, quart = 0;
  // hyperbolic prefactor (cosh x - 1)^b_exp (cosh x + 1)^c_exp exp(k cosh x)
  real_t b_exp = 0, c_exp = 0, k = 0, u_scale = 1;
  std::vector<real_t> poly{1};
  real_t energy = 0;
  // the equation -psi'' + V psi = energy psi this state solves
  SexticSpec sextic;
  HyperbolicSpec hyperbolic;
  real_t m_param = 0;

  /// log-derivatives of the prefactor: (log P, (log P)', (log P)'').
  Jet log_prefactor(real_t x) const {
    if (family == Family::Sextic) {
      const real_t x2 = x * x;
      return {power * std::log(x) + quad * x2 / 2 + quart * x2 * x2 / 4, power / x + quad * x + quart * x2 * x,
              -power / x2 + quad + 3 * quart * x2};
    }
    const real_t c = std::cosh(x), sh2 = std::sinh(x / 2), ch2 = std::cosh(x / 2), th = std::tanh(x / 2);
    return {b_exp * std::log(2 * sh2 * sh2) + c_exp * std::log(2 * ch2 * ch2) + k * c,
            b_exp / th + c_exp * th + k * std::sinh(x),
            -b_exp / (2 * sh2 * sh2) + c_exp / (2 * ch2 * ch2) + k * c};
  }

  /// Q and its x-derivatives through the inner variable.
  Jet polynomial(real_t x) const {
    real_t t, dt, ddt;
    if (family == Family::Sextic) {
      t = x * x, dt = 2 * x, ddt = 2;
    } else {
      t = u_scale * std::cosh(x), dt = u_scale * std::sinh(x), ddt = t;
    }
    const auto p1 = poly_derivative(poly), p2 = poly_derivative(p1);
    const real_t q1 = poly_eval(p1, t);
    return {poly_eval(poly, t), q1 * dt, poly_eval(p2, t) * dt * dt + q1 * ddt};
  }

  /// Defined for x > 0.
  Jet eval(real_t x) const {
    const Jet l = log_prefactor(x), q = polynomial(x);
    const real_t p = std::exp(l.f);
    return {p * q.f, p * (l.d1 * q.f + q.d1), p * ((l.d2 + l.d1 * l.d1) * q.f + 2 * l.d1 * q.d1 + q.d2)};
  }

  real_t potential(real_t x) const {
    return family == Family::Sextic ? sextic_potential(sextic, x) : hyperbolic_potential(hyperbolic, m_param, x);
  }
};

/// max |-psi'' + (V - E) psi| / max(|psi| (1 + |V| + |E|)) over the grid.
inline real_t qes_residual(const QESWavefunction& wf, const std::vector<real_t>& grid) {
  real_t num = 0, den = 0;
  for (real_t x : grid) {
    const Jet j = wf.eval(x);
    const real_t v = wf.potential(x);
    num = std::max(num, std::abs(-j.d2 + (v - wf.energy) * j.f));
    den = std::max(den, std::abs(j.f) * (1 + std::abs(v) + std::abs(wf.energy)));
  }
  return den > 0 ? num / den : 0;
}

/// psi_p = x^(2 kappa - 1/2) exp[(x^2/2)(A/B + xi x^2/2)] prod (x^2 - v_j), solving
/// the branch's potential (V1 for P1, V2 for P2) at Ehat.
inline QESWavefunction qes_wavefunctions_sextic(const SexticModelSpec& model, const BetheSolution& sol) {
  const auto bp = branch_params(model);
  QESWavefunction wf;
  wf.family = QESWavefunction::Family::Sextic;
  wf.power = 2 * bp.kappa - real_t(0.5);
  wf.quad = bp.a_coeff / bp.b_coeff;
  wf.quart = bp.xi;
  wf.poly = roots_to_polynomial(sol);
  const auto [v1, v2] = sextic_potentials(model);
  wf.sextic = model.branch == SexticBranch::P1 ? v1 : v2;
  wf.energy = sextic_energy_map(model, sol.energy);
  return wf;
}

/// psi = (cosh x - 1)^(-(B/2+1/4)) (cosh x + 1)^(-(C/2+1/4)) exp(A gamma cosh x / 4) prod (gamma/2 cosh x + v_j)
/// for V(x; A,B,C,gamma) + spec.shift.
inline QESWavefunction qes_wavefunction_hyperbolic(const HyperbolicSpec& spec, const std::vector<complex_t>& roots) {
  QESWavefunction wf;
  wf.family = QESWavefunction::Family::Hyperbolic;
  wf.b_exp = -(spec.b_pole / 2 + real_t(0.25));
  wf.c_exp = -(spec.c_pole / 2 + real_t(0.25));
  wf.k = spec.a_lin * spec.gamma / 4;
  wf.u_scale = spec.gamma / 2;
  const GenericBAESpec g{spec.a_lin, spec.b_pole, spec.c_pole, spec.gamma, static_cast<int>(roots.size())};
  wf.poly = roots_to_polynomial(BetheSolution{g, roots, 0, 0});
  wf.energy = spec.shift + bae_energy(g, roots).real();
  wf.hyperbolic = spec;
  wf.m_param = static_cast<real_t>(roots.size());
  return wf;
}

struct CrumResult {
  SexticSpec base;
  SexticSpec target;
  std::vector<real_t> removed_energies;
  std::vector<real_t> grid;
  std::vector<real_t> transformed;  // V - 2 (log W)''
  std::vector<real_t> target_values;
  real_t max_deviation = 0;
  real_t min_abs_wronskian = 0;  // of the polynomial factors, for the record
};

namespace detail {

using RealPoly = std::vector<real_t>;

inline RealPoly poly_add(RealPoly a, const RealPoly& b, real_t sign) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
  return a;
}

/// Wronskian of polynomials by the Leibniz expansion.
inline RealPoly polynomial_wronskian(const std::vector<RealPoly>& fs) {
  const std::size_t n = fs.size();
  // d[i][k] = k-th derivative of f_i
  std::vector<std::vector<RealPoly>> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i].push_back(fs[i]);
    for (std::size_t k = 1; k < n; ++k) d[i].push_back(poly_derivative(d[i].back()));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  RealPoly w{0};
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    RealPoly term{1};
    for (std::size_t row = 0; row < n; ++row) term = poly_multiply(term, d[perm[row]][row]);
    w = poly_add(w, term, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return w;
}

}  // namespace detail

/// V - 2 (log W(psi_1..psi_J))'' for QES states sharing one sextic prefactor.
/// W = prefactor^J * W(Q_1..Q_J), so the log-derivative splits and no
/// determinant of exponentially scaled entries is ever formed.
inline CrumResult crum_transform(const SexticSpec& spec, const std::vector<QESWavefunction>& wfs,
                                 const std::vector<real_t>& grid) {
  const int J = static_cast<int>(wfs.size());
  require(J >= 1, ErrorKind::InvalidParameter, "need at least one state to remove");
  require(spec.alpha == qes_alpha(J, spec.l), ErrorKind::InvalidParameter, "spec is not at the QES point alpha_J");
  const auto& ref = wfs.front();
  std::vector<detail::RealPoly> qs;
  CrumResult out;
  out.base = spec;
  for (const auto& wf : wfs) {
    require(wf.family == QESWavefunction::Family::Sextic && wf.power == ref.power && wf.quad == ref.quad &&
                wf.quart == ref.quart,
            ErrorKind::InvalidParameter, "states must share one sextic prefactor");
    const auto& s = wf.sextic;
    const real_t mismatch = std::max({std::abs(s.delta - spec.delta), std::abs(s.alpha - spec.alpha),
                                      std::abs(s.centrifugal() - spec.centrifugal())});
    require(mismatch <= 1e-12 * (1 + std::abs(spec.alpha)), ErrorKind::InvalidParameter,
            "state does not solve the given potential");
    out.removed_energies.push_back(wf.energy + spec.c_shift - wf.sextic.c_shift);
    // Q(x^2) as a polynomial in x
    detail::RealPoly q(2 * wf.poly.size() - 1, 0);
    for (std::size_t k = 0; k < wf.poly.size(); ++k) q[2 * k] = wf.poly[k];
    qs.push_back(std::move(q));
  }
  std::sort(out.removed_energies.begin(), out.removed_energies.end());
  const auto w = detail::polynomial_wronskian(qs);
  const auto w1 = poly_derivative(w), w2 = poly_derivative(w1);
  real_t wscale = 0;
  for (real_t c : w) wscale = std::max(wscale, std::abs(c));
  out.target = SexticSpec{spec.delta, 2 * J - 2 * spec.l - 1, spec.l + J, spec.c_shift + 2 * spec.delta * J,
                          SexticBC::HermitianRadial};
  out.grid = grid;
  out.min_abs_wronskian = std::numeric_limits<real_t>::infinity();
  for (real_t x : grid) {
    require(x > 0, ErrorKind::InvalidParameter, "grid must lie on x > 0");
    const real_t wv = poly_eval(w, x);
    out.min_abs_wronskian = std::min(out.min_abs_wronskian, std::abs(wv));
    require(std::abs(wv) > 1e-13 * wscale * (1 + std::pow(x, static_cast<real_t>(w.size() - 1))),
            ErrorKind::WronskianZero, "Wronskian vanishes at x = " + std::to_string(static_cast<double>(x)));
    const real_t dlog2_w = (poly_eval(w2, x) * wv - std::pow(poly_eval(w1, x), 2)) / (wv * wv);
    const real_t dlog2_p = ref.log_prefactor(x).d2;
    const real_t v = sextic_potential(spec, x) - 2 * (J * dlog2_p + dlog2_w);
    const real_t t = sextic_potential(out.target, x);
    out.transformed.push_back(v);
    out.target_values.push_back(t);
    out.max_deviation = std::max(out.max_deviation, std::abs(v - t));
  }
  return out;
}

/// The J QES states of x^6 + 2 delta x^4 + (delta^2 + alpha_J) x^2 + l(l+1)/x^2,
/// from the P2 branch with epsilon = delta/3, q = l + 1/2, M = J - 1.
inline std::vector<QESWavefunction> hermitian_qes_states(real_t delta, int J, real_t l, const BAEOptions& opt = {}) {
  require(J >= 1, ErrorKind::InvalidParameter, "J must be >= 1");
  require(l > -0.5, ErrorKind::InvalidParameter, "l must exceed -1/2");
  const SexticModelSpec m{delta / 3, l + real_t(0.5), J - 1, SexticBranch::P2};
  std::vector<QESWavefunction> out;
  for (const auto& sol : solve_sextic_bae(m, opt)) out.push_back(qes_wavefunctions_sextic(m, sol));
  return out;
}

inline CrumResult crum_transform(real_t delta, int J, real_t l, const std::vector<real_t>& grid) {
  const SexticSpec spec{delta, qes_alpha(J, l), l, 0, SexticBC::HermitianRadial};
  return crum_transform(spec, hermitian_qes_states(delta, J, l), grid);
}

}  // namespace qes

#endif
