#ifndef QES_POTENTIAL_HPP
#define QES_POTENTIAL_HPP

#include <cmath>
#include <complex>

#include "qes/model_core.hpp"

namespace qes {

template <class T>
T sextic_potential(const SexticSpec& s, T x) {
  const T x2 = x * x;
  T v = x2 * x2 * x2 + real_t(2) * s.delta * x2 * x2 + s.x2_coeff() * x2 + s.c_shift;
  if (s.centrifugal() != 0) v += s.centrifugal() / x2;
  return v;
}

inline complex_t evaluate_potential(const SexticSpec& s, complex_t x) {
  require(!(x == complex_t(0) && s.centrifugal() != 0), ErrorKind::SingularPoint,
          "centrifugal term is singular at x = 0");
  return sextic_potential(s, x);
}

/// V(x;A,B,C,gamma) with the M-dependent block, plus spec.shift.
template <class T>
T hyperbolic_potential(const HyperbolicSpec& s, real_t m, T x) {
  using std::cosh, std::sinh;
  const real_t A = s.a_lin, B = s.b_pole, C = s.c_pole, g = s.gamma;
  const T ch = cosh(x), sh = sinh(x);
  const real_t pole_minus = (2 * B + 1) * (2 * B + 3) / 8;
  const real_t pole_plus = (2 * C + 1) * (2 * C + 3) / 8;
  T v = m * (m - B - C - real_t(1) + A * g / 2 * ch) + (B + C + 1) * (B + C + 1) / 4 +
        A * A * g * g / 16 * sh * sh + A * g * (C - B) / 4 - A * g * (B + C) / 4 * ch + s.shift;
  // cosh x -+ 1 written without cancellation near the poles
  const T sh2 = sinh(x / real_t(2)), ch2 = cosh(x / real_t(2));
  if (pole_minus != 0) v += pole_minus / (real_t(2) * sh2 * sh2);
  if (pole_plus != 0) v -= pole_plus / (real_t(2) * ch2 * ch2);
  return v;
}

/// Finite part of V at x = 0 once the (cosh x - 1) pole, 2p/x^2 - p/6 + ..., is removed.
inline real_t hyperbolic_regular_at_origin(const HyperbolicSpec& s, real_t m) {
  const real_t A = s.a_lin, B = s.b_pole, C = s.c_pole, g = s.gamma;
  const real_t pole_minus = (2 * B + 1) * (2 * B + 3) / 8;
  const real_t pole_plus = (2 * C + 1) * (2 * C + 3) / 8;
  return m * (m - B - C - 1 + A * g / 2) + (B + C + 1) * (B + C + 1) / 4 + A * g * (C - B) / 4 -
         A * g * (B + C) / 4 + s.shift - pole_plus / 2 - pole_minus / 6;
}

inline complex_t evaluate_potential(const HyperbolicSpec& s, real_t m, complex_t x) {
  const real_t pm = (2 * s.b_pole + 1) * (2 * s.b_pole + 3);
  const real_t pp = (2 * s.c_pole + 1) * (2 * s.c_pole + 3);
  const complex_t ch = std::cosh(x);
  require(!(pm != 0 && std::abs(ch - real_t(1)) < 1e-300), ErrorKind::SingularPoint, "cosh x = 1 pole");
  require(!(pp != 0 && std::abs(ch + real_t(1)) < 1e-300), ErrorKind::SingularPoint, "cosh x = -1 pole");
  return hyperbolic_potential(s, m, x);
}

}  // namespace qes

#endif
