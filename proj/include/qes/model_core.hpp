#ifndef QES_MODEL_CORE_HPP
#define QES_MODEL_CORE_HPP

#include <cmath>
#include <string>
#include <utility>

#include "qes/types.hpp"

namespace qes {

enum class SexticBC { HermitianRadial, PTContour };
enum class HyperbolicBC { RealLineEven, RealLineOdd, HalfLine, PTShifted };
enum class SexticBranch { P1, P2 };
enum class HyperbolicBranch { Alpha, Beta };

/// V(x) = x^6 + 2 delta x^4 + (delta^2 + alpha) x^2 + l(l+1)/x^2 + c_shift.
struct SexticSpec {
  real_t delta = 0;
  real_t alpha = 0;
  real_t l = 0;
  real_t c_shift = 0;
  SexticBC bc = SexticBC::HermitianRadial;

  real_t x2_coeff() const { return delta * delta + alpha; }
  real_t centrifugal() const { return l * (l + 1); }
  bool operator==(const SexticSpec&) const = default;
};

/// Hyperbolic potential V(x; A, B, C, gamma) plus a constant shift.
struct HyperbolicSpec {
  real_t a_lin = 0;
  real_t b_pole = 0;
  real_t c_pole = 0;
  real_t gamma = 0;
  real_t shift = 0;
  HyperbolicBC bc = HyperbolicBC::HalfLine;
  bool operator==(const HyperbolicSpec&) const = default;
};

/// Three-boson model sector with Omega = 1. `q` is the reference-state
/// occupation q2; it may be non-integer when only the Bethe/ODE side is used.
struct SexticModelSpec {
  real_t epsilon = 0;
  real_t q = 0;
  int m_roots = 0;
  SexticBranch branch = SexticBranch::P2;
  bool operator==(const SexticModelSpec&) const = default;
};

/// Four-boson model sector. On the Beta branch `p`, `q` hold p_beta, q_beta.
struct HyperbolicModelSpec {
  real_t epsilon = 0;
  real_t g = 1;
  int p = 0;
  int q = 0;
  int m_roots = 0;
  HyperbolicBranch branch = HyperbolicBranch::Alpha;
  bool operator==(const HyperbolicModelSpec&) const = default;
};

/// Coefficients of the generic Gaudin Hamiltonian H_p = A S^z + B(d^+ S^- + xi d S^+).
struct SexticBranchParams {
  real_t a_coeff;
  real_t b_coeff;
  real_t xi;
  real_t kappa;
};

inline SexticBranchParams branch_params(const SexticModelSpec& m) {
  const real_t eps = m.epsilon;
  if (m.branch == SexticBranch::P1) {
    const real_t q1 = m.m_roots + m.q;
    return {3 * eps, 1, 1, -q1 / 2};
  }
  return {-3 * eps, 1, -1, (m.q + 1) / 2};
}

inline void validate(const SexticModelSpec& m) {
  require(m.m_roots >= 0, ErrorKind::InvalidParameter, "M must be non-negative");
  require(m.q >= 0, ErrorKind::InvalidParameter, "q must be non-negative");
  require(std::isfinite(m.epsilon), ErrorKind::InvalidParameter, "epsilon must be finite");
}

inline void validate(const HyperbolicModelSpec& m) {
  require(m.m_roots >= 0 && m.p >= 0 && m.q >= 0, ErrorKind::InvalidParameter,
          "p, q and M must be non-negative");
  require(m.g != 0, ErrorKind::InvalidParameter, "g must be nonzero");
  if (m.branch == HyperbolicBranch::Beta)
    require(m.m_roots <= std::min(m.p, m.q), ErrorKind::InvalidSector,
            "Beta branch needs M <= min(p_beta, q_beta); the Bethe state vanishes otherwise");
}

/// Ehat = -4 (E + (eps/2)(M - q)): the common QES eigenvalue of V1 and V2.
inline real_t sextic_energy_map(const SexticModelSpec& m, real_t e_fock) {
  return -4 * (e_fock + m.epsilon / 2 * (m.m_roots - m.q));
}

/// Inverse of sextic_energy_map.
inline real_t sextic_energy_unmap(const SexticModelSpec& m, real_t e_hat) {
  return -e_hat / 4 - m.epsilon / 2 * (m.m_roots - m.q);
}

/// (V1 on the PT contour, V2 on the half line), written in the general
/// (delta, alpha, l, C) form.
inline std::pair<SexticSpec, SexticSpec> sextic_potentials(const SexticModelSpec& m) {
  validate(m);
  const real_t eps = m.epsilon, q = m.q;
  const real_t M = m.m_roots;
  SexticSpec v1{3 * eps, 2 * (M - q + 1), M + q + real_t(0.5), 0, SexticBC::PTContour};
  SexticSpec v2{3 * eps, -4 * M - 2 * (q + 2), q - real_t(0.5), -6 * eps * (M + 1), SexticBC::HermitianRadial};
  return {v1, v2};
}

/// (p_alpha, q_alpha, M) -> (p_alpha + M, q_alpha + M, M) on the Beta branch.
inline HyperbolicModelSpec hyperbolic_parameter_map(const HyperbolicModelSpec& alpha_side) {
  require(alpha_side.branch == HyperbolicBranch::Alpha, ErrorKind::InvalidParameter,
          "parameter map expects an Alpha-branch spec");
  validate(alpha_side);
  HyperbolicModelSpec beta = alpha_side;
  beta.branch = HyperbolicBranch::Beta;
  beta.p = alpha_side.p + alpha_side.m_roots;
  beta.q = alpha_side.q + alpha_side.m_roots;
  return beta;
}

/// Real-line tag implied by the pole parameter B.
inline HyperbolicBC natural_bc(real_t b_pole) {
  if (b_pole == real_t(-0.5)) return HyperbolicBC::RealLineEven;
  if (b_pole == real_t(-1.5)) return HyperbolicBC::RealLineOdd;
  return HyperbolicBC::HalfLine;
}

/// V(x; A,B,C,g) = V(x + i pi; A,C,B,-g): swap the poles, flip gamma and
/// move to (or back from) the line Im x = pi.
inline HyperbolicSpec herm_pt_swap(const HyperbolicSpec& s) {
  HyperbolicSpec out = s;
  std::swap(out.b_pole, out.c_pole);
  out.gamma = -s.gamma;
  out.bc = s.bc == HyperbolicBC::PTShifted ? natural_bc(out.b_pole) : HyperbolicBC::PTShifted;
  return out;
}

/// Potential and ODE energy offset for the QES map of a four-boson branch
/// (g fixed to 1): E = calE + shift.
inline HyperbolicSpec hyperbolic_potential_for(const HyperbolicModelSpec& m) {
  validate(m);
  require(m.g == 1, ErrorKind::InvalidParameter, "the ODE map is defined for g = 1");
  const real_t eps = m.epsilon, M = m.m_roots, p = m.p, q = m.q;
  HyperbolicSpec s;
  s.a_lin = 2;
  s.gamma = 2 * eps;
  if (m.branch == HyperbolicBranch::Alpha) {
    s.b_pole = -(p + 1);
    s.c_pole = -(q + 1);
    s.shift = (p + M) * (q + M) + (p - q) * eps;
  } else {
    s.b_pole = q;
    s.c_pole = p;
    s.shift = (M - p) * (M - q) - M + (p - q) * eps;
  }
  s.bc = natural_bc(s.b_pole);
  return s;
}

inline std::string to_string(SexticBC b) { return b == SexticBC::HermitianRadial ? "HermitianRadial" : "PTContour"; }
inline std::string to_string(SexticBranch b) { return b == SexticBranch::P1 ? "P1" : "P2"; }
inline std::string to_string(HyperbolicBranch b) { return b == HyperbolicBranch::Alpha ? "Alpha" : "Beta"; }
inline std::string to_string(HyperbolicBC b) {
  switch (b) {
    case HyperbolicBC::RealLineEven: return "RealLineEven";
    case HyperbolicBC::RealLineOdd: return "RealLineOdd";
    case HyperbolicBC::HalfLine: return "HalfLine";
    case HyperbolicBC::PTShifted: return "PTShifted";
  }
  return "HalfLine";
}

}  // namespace qes

#endif
