#ifndef QES_BETHE_GAUDIN_HPP
#define QES_BETHE_GAUDIN_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qes/homotopy.hpp"
#include "qes/model_core.hpp"
#include "qes/polynomial.hpp"

namespace qes {

/// A + B/(v + gamma/2) + C/(v - gamma/2) = sum_{k != j} 2/(v_j - v_k).
struct GenericBAESpec {
  real_t a_lin = 1;
  real_t b_res = 0;
  real_t c_res = 0;
  real_t gamma = 1;
  int m_roots = 0;
  bool operator==(const GenericBAESpec&) const = default;
};

using BAEModel = std::variant<SexticModelSpec, HyperbolicModelSpec, GenericBAESpec>;

struct BetheSolution {
  BAEModel model;
  std::vector<complex_t> roots;
  real_t energy = 0;
  real_t residual = 0;
};

struct BAEOptions {
  real_t certification_tol = 1e-10;
  real_t degeneracy_tol = 1e-8;
  int attempts = 6;
  TrackerOptions tracker{};
};

/// Gaudin-type system sum_{k != j} 2/(v_j - v_k) = R(v_j) with
/// R(v) = lin(lambda) + slope v + sum_i res_i / (v - pole_i).
/// The continuation parameter enters only through the constant term:
/// lin = lin_scale * lambda (Linear) or lin = 1/lambda (Inverse).
struct GaudinSystem {
  enum class Param { Linear, Inverse };
  Param kind = Param::Linear;
  real_t lin_scale = 1;
  real_t slope = 0;
  std::vector<std::pair<real_t, real_t>> poles;  // (position, residue)
  int m = 0;

  complex_t lin(complex_t lam) const { return kind == Param::Linear ? lin_scale * lam : real_t(1) / lam; }
  complex_t dlin(complex_t lam) const { return kind == Param::Linear ? complex_t(lin_scale) : -real_t(1) / (lam * lam); }

  ComplexVector residual(const ComplexVector& v, complex_t lam) const {
    ComplexVector f(m);
    const complex_t c = lin(lam);
    for (int j = 0; j < m; ++j) {
      complex_t lhs = 0, rhs = c + slope * v[j];
      for (int k = 0; k < m; ++k)
        if (k != j) lhs += real_t(2) / (v[j] - v[k]);
      for (const auto& [pos, res] : poles) rhs += res / (v[j] - pos);
      f[j] = lhs - rhs;
    }
    return f;
  }

  ComplexMatrix jacobian(const ComplexVector& v, complex_t) const {
    ComplexMatrix jac = ComplexMatrix::Zero(m, m);
    for (int j = 0; j < m; ++j) {
      complex_t diag = -slope;
      for (const auto& [pos, res] : poles) diag += res / ((v[j] - pos) * (v[j] - pos));
      for (int k = 0; k < m; ++k)
        if (k != j) {
          const complex_t d = v[j] - v[k];
          const complex_t w = real_t(2) / (d * d);
          jac(j, k) = w;
          diag -= w;
        }
      jac(j, j) = diag;
    }
    return jac;
  }

  ComplexVector dparam(const ComplexVector&, complex_t lam) const {
    return ComplexVector::Constant(m, -dlin(lam));
  }

  /// Smallest geometric scale of the configuration (root-root and root-pole).
  real_t step_scale(const ComplexVector& v) const {
    real_t s = 1 + v.cwiseAbs().maxCoeff();
    for (int j = 0; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) s = std::min(s, std::abs(v[j] - v[k]));
      for (const auto& pole : poles) s = std::min(s, std::abs(v[j] - pole.first));
    }
    return s;
  }
};

namespace detail {

inline std::vector<complex_t> scaled_roots(const std::vector<real_t>& poly, complex_t scale, complex_t shift) {
  std::vector<complex_t> out;
  for (auto r : poly_roots(poly)) out.push_back(shift + scale * r);
  return out;
}

struct ProblemSetup {
  GaudinSystem sys;
  complex_t target;
  // start parameter for a given attempt angle, and the M+1 asymptotic guesses
  std::function<complex_t(real_t)> start;
  std::function<std::vector<std::vector<complex_t>>(complex_t)> guesses;
};

inline ProblemSetup sextic_setup(const SexticModelSpec& m) {
  const auto bp = branch_params(m);
  const int M = m.m_roots;
  ProblemSetup ps;
  ps.sys.kind = GaudinSystem::Param::Linear;
  ps.sys.lin_scale = -1;
  ps.sys.slope = -bp.xi;
  ps.sys.poles = {{0, -2 * bp.kappa}};
  ps.sys.m = M;
  const real_t a1 = bp.a_coeff / bp.b_coeff;
  ps.target = a1;
  const real_t radius = 40 + 2 * std::abs(a1) + 4 * M + 2 * std::abs(bp.kappa);
  ps.start = [radius](real_t theta) { return std::polar(radius, theta); };
  const real_t xi = bp.xi, kappa = bp.kappa;
  ps.guesses = [M, xi, kappa](complex_t a0) {
    // k roots near the origin follow L_k^(2 kappa - 1), the rest sit around
    // -xi a0 on a Hermite cluster.
    std::vector<std::vector<complex_t>> out;
    const complex_t c = std::sqrt(complex_t(-2 / xi));
    for (int k = 0; k <= M; ++k) {
      auto near = scaled_roots(laguerre_coefficients(k, 2 * kappa - 1), -real_t(1) / a0, 0);
      auto far = scaled_roots(hermite_coefficients(M - k), c, -xi * a0);
      near.insert(near.end(), far.begin(), far.end());
      out.push_back(std::move(near));
    }
    return out;
  };
  return ps;
}

inline ProblemSetup hyperbolic_setup(real_t a_lin, real_t b, real_t c, real_t gamma, int M) {
  require(gamma != 0, ErrorKind::InvalidParameter, "coincident poles: gamma must be nonzero");
  require(a_lin != 0, ErrorKind::InvalidParameter, "linear coefficient A must be nonzero");
  ProblemSetup ps;
  ps.sys.kind = GaudinSystem::Param::Inverse;
  ps.sys.slope = 0;
  ps.sys.poles = {{-gamma / 2, b}, {gamma / 2, c}};
  ps.sys.m = M;
  ps.target = real_t(1) / a_lin;
  const real_t radius = real_t(0.02) * std::abs(gamma) / (4 * M + std::abs(b) + std::abs(c) + 4);
  ps.start = [radius](real_t theta) { return std::polar(radius, theta); };
  ps.guesses = [M, b, c, gamma](complex_t s0) {
    std::vector<std::vector<complex_t>> out;
    for (int k = 0; k <= M; ++k) {
      auto left = scaled_roots(laguerre_coefficients(k, -b - 1), s0, -gamma / 2);
      auto right = scaled_roots(laguerre_coefficients(M - k, -c - 1), s0, gamma / 2);
      left.insert(left.end(), right.begin(), right.end());
      out.push_back(std::move(left));
    }
    return out;
  };
  return ps;
}

inline ProblemSetup setup_for(const BAEModel& model) {
  return std::visit(
      [](const auto& m) -> ProblemSetup {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SexticModelSpec>) {
          validate(m);
          return sextic_setup(m);
        } else if constexpr (std::is_same_v<T, HyperbolicModelSpec>) {
          validate(m);
          if (m.branch == HyperbolicBranch::Alpha)
            return hyperbolic_setup(2 / m.g, -(m.p + real_t(1)), -(m.q + real_t(1)), 2 * m.epsilon, m.m_roots);
          return hyperbolic_setup(2 / m.g, m.q, m.p, 2 * m.epsilon, m.m_roots);
        } else {
          require(m.m_roots >= 0, ErrorKind::InvalidParameter, "M must be non-negative");
          return hyperbolic_setup(m.a_lin, m.b_res, m.c_res, m.gamma, m.m_roots);
        }
      },
      model);
}

inline complex_t root_sum(const std::vector<complex_t>& roots) {
  complex_t s = 0;
  for (auto r : roots) s += r;
  return s;
}

}  // namespace detail

/// Energy attached to a root set by the model's energy formula.
inline complex_t bae_energy(const BAEModel& model, const std::vector<complex_t>& roots) {
  const complex_t sum = detail::root_sum(roots);
  return std::visit(
      [&](const auto& m) -> complex_t {
        using T = std::decay_t<decltype(m)>;
        const real_t M = static_cast<real_t>(roots.size());
        if constexpr (std::is_same_v<T, SexticModelSpec>) {
          const auto bp = branch_params(m);
          const complex_t e_p = bp.a_coeff * (M + bp.kappa) + bp.xi * bp.b_coeff * sum;
          if (m.branch == SexticBranch::P1) return e_p - m.epsilon / 2 * (M - m.q);
          return e_p + m.epsilon / 2 * (2 * M + m.q + 3);
        } else if constexpr (std::is_same_v<T, HyperbolicModelSpec>) {
          const real_t p = m.p, q = m.q, g = m.g;
          if (m.branch == HyperbolicBranch::Alpha)
            return g * (p + M) * (q + M) + (p - q) * m.epsilon - real_t(2) * sum;
          return g * (M - p) * (M - q) - g * M + (p - q) * m.epsilon - real_t(2) * sum;
        } else {
          // eigenvalue of -psi'' + V(x; A,B,C,gamma) psi for the product state
          return m.a_lin * sum;
        }
      },
      model);
}

/// max_j |LHS_j - RHS_j| of the governing equations at the model's own parameters.
inline real_t bae_residual(const BetheSolution& sol) {
  const auto ps = detail::setup_for(sol.model);
  if (sol.roots.empty()) return 0;
  ComplexVector v(static_cast<Eigen::Index>(sol.roots.size()));
  for (std::size_t i = 0; i < sol.roots.size(); ++i) v[static_cast<Eigen::Index>(i)] = sol.roots[i];
  auto sys = ps.sys;
  sys.m = static_cast<int>(sol.roots.size());
  return sys.residual(v, ps.target).cwiseAbs().maxCoeff();
}

inline real_t min_pairwise_distance(const std::vector<complex_t>& r) {
  real_t d = std::numeric_limits<real_t>::infinity();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) d = std::min(d, std::abs(r[i] - r[j]));
  return d;
}

/// All M+1 solution classes of the model's BAE, each certified.
inline std::vector<BetheSolution> solve_bae(const BAEModel& model, const BAEOptions& opt = {}) {
  auto ps = detail::setup_for(model);
  const int M = ps.sys.m;
  if (M == 0) {
    BetheSolution s{model, {}, 0, 0};
    s.energy = bae_energy(model, {}).real();
    return {s};
  }

  std::vector<std::vector<complex_t>> found;
  std::string last_failure;
  const real_t angles[] = {0.37, 1.13, -0.81, 2.29, -1.9, 0.71, 2.8, -2.6};
  for (int attempt = 0; attempt < opt.attempts && static_cast<int>(found.size()) < M + 1; ++attempt) {
    const real_t theta = angles[attempt % 8];
    const complex_t lam0 = ps.start(theta);
    const ParameterPath path{lam0, ps.target, complex_t(0, real_t(0.3) * std::abs(ps.target - lam0)) *
                                                  (attempt % 2 ? real_t(-1) : real_t(1))};
    for (const auto& guess : ps.guesses(lam0)) {
      ComplexVector v(M);
      for (int i = 0; i < M; ++i) v[i] = guess[static_cast<std::size_t>(i)];
      newton_polish(ps.sys, lam0, v, 30, 1e-14);
      if (!v.allFinite() || ps.sys.residual(v, lam0).cwiseAbs().maxCoeff() > 1e-8) {
        last_failure = "start solution did not converge";
        continue;
      }
      auto tr = track_path(ps.sys, path, v, opt.tracker);
      if (!tr.ok) {
        last_failure = tr.failure;
        continue;
      }
      ComplexVector end = tr.end;
      newton_polish(ps.sys, ps.target, end);
      std::vector<complex_t> roots(end.data(), end.data() + M);
      if (ps.sys.residual(end, ps.target).cwiseAbs().maxCoeff() > opt.certification_tol) {
        last_failure = "endpoint residual above tolerance";
        continue;
      }
      const bool duplicate = std::any_of(found.begin(), found.end(),
                                         [&](const auto& f) { return multiset_distance(f, roots) < 1e-6; });
      if (!duplicate) found.push_back(std::move(roots));
    }
  }
  if (static_cast<int>(found.size()) != M + 1)
    throw Error(ErrorKind::ContinuationFailure, "recovered " + std::to_string(found.size()) + " of " +
                                                    std::to_string(M + 1) + " solution classes (" + last_failure + ")");

  std::vector<BetheSolution> out;
  for (auto& roots : found) {
    std::sort(roots.begin(), roots.end(), [](complex_t a, complex_t b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    if (min_pairwise_distance(roots) < opt.degeneracy_tol)
      throw Error(ErrorKind::DegenerateConfiguration, "coincident Bethe roots");
    BetheSolution s{model, roots, 0, 0};
    s.residual = bae_residual(s);
    require(s.residual <= opt.certification_tol, ErrorKind::CertificationFailure,
            "residual " + std::to_string(static_cast<double>(s.residual)));
    std::vector<complex_t> conj;
    for (auto r : roots) conj.push_back(std::conj(r));
    require(multiset_distance(roots, conj) < 1e-7, ErrorKind::CertificationFailure,
            "root set not closed under conjugation");
    const complex_t e = bae_energy(model, roots);
    require(std::abs(e.imag()) < 1e-8 * (1 + std::abs(e)), ErrorKind::CertificationFailure, "energy not real");
    s.energy = e.real();
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.energy < b.energy; });
  return out;
}

inline std::vector<BetheSolution> solve_sextic_bae(const SexticModelSpec& m, const BAEOptions& opt = {}) {
  return solve_bae(BAEModel{m}, opt);
}

inline std::vector<BetheSolution> solve_hyperbolic_bae(const HyperbolicModelSpec& m, const BAEOptions& opt = {}) {
  return solve_bae(BAEModel{m}, opt);
}

inline std::vector<real_t> energies_of(const std::vector<BetheSolution>& sols) {
  std::vector<real_t> e;
  for (const auto& s : sols) e.push_back(s.energy);
  return e;
}

/// Sextic: coefficients of Q in y = x^2, Q = prod (y - v_j).
/// Hyperbolic/generic: coefficients in u = (gamma/2) cosh x, Q = prod (u + v_j).
/// Ascending order, imaginary parts (conjugate pairs) checked and dropped.
inline std::vector<real_t> roots_to_polynomial(const BetheSolution& sol) {
  const bool sextic = std::holds_alternative<SexticModelSpec>(sol.model);
  std::vector<complex_t> c{1};
  for (auto v : sol.roots) c = poly_multiply(c, std::vector<complex_t>{sextic ? -v : v, 1});
  std::vector<real_t> out;
  real_t scale = 1;
  for (auto z : c) scale = std::max(scale, std::abs(z));
  for (auto z : c) {
    require(std::abs(z.imag()) <= 1e-12 * scale, ErrorKind::CertificationFailure,
            "polynomial coefficient has an imaginary part");
    out.push_back(z.real());
  }
  return out;
}

}  // namespace qes

#endif
