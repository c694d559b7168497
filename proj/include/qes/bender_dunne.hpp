#ifndef QES_BENDER_DUNNE_HPP
#define QES_BENDER_DUNNE_HPP

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "qes/model_core.hpp"
#include "qes/polynomial.hpp"

namespace qes {

/// Coefficient table of P_0..P_{n_max}; coeffs[n] is ascending in E.
struct BDPolySequence {
  SexticSpec spec;
  std::vector<std::vector<real_t>> coeffs;
};

struct QESLevels {
  int J = 0;
  std::vector<real_t> roots;
  std::vector<complex_t> complex_roots;  // filled when some roots are not real
  bool all_real = true;
};

inline real_t qes_alpha(int J, real_t l) { return -(4 * J + 2 * l + 1); }

namespace detail {

// P_n = (E - b_n) P_{n-1} + c_n P_{n-2}
inline real_t bd_shift(const SexticSpec& s, int n) { return s.c_shift + s.delta * (2 * s.l + 4 * n - 1); }
inline real_t bd_coupling(const SexticSpec& s, int n) {
  return 16 * real_t(n - 1) * (n + (s.alpha + 2 * s.l - 3) / 4) * (n + s.l - real_t(0.5));
}

inline void check_l(real_t l) {
  const real_t t = -l - real_t(1.5);
  const real_t n = std::round(t);
  require(!(n >= 0 && std::abs(t - n) < 1e-12), ErrorKind::SingularL, "l = -n - 3/2 is excluded");
}

}  // namespace detail

inline BDPolySequence bd_sequence(const SexticSpec& spec, int n_max) {
  detail::check_l(spec.l);
  require(n_max >= 0, ErrorKind::InvalidParameter, "n_max must be non-negative");
  BDPolySequence seq{spec, {{1}}};
  for (int n = 1; n <= n_max; ++n) {
    const auto& p1 = seq.coeffs[n - 1];
    std::vector<real_t> p(n + 1, 0);
    const real_t b = detail::bd_shift(spec, n);
    for (int i = 0; i < n; ++i) {
      p[i + 1] += p1[i];
      p[i] -= b * p1[i];
    }
    if (n >= 2) {
      const real_t c = detail::bd_coupling(spec, n);
      const auto& p2 = seq.coeffs[n - 2];
      for (std::size_t i = 0; i < p2.size(); ++i) p[i] += c * p2[i];
    }
    seq.coeffs.push_back(std::move(p));
  }
  return seq;
}

/// (P_n(E), P_n'(E)) by running the recursion directly.
inline std::pair<real_t, real_t> bd_evaluate(const SexticSpec& spec, int n, real_t e) {
  real_t p0 = 1, d0 = 0;
  if (n == 0) return {p0, d0};
  real_t p1 = e - detail::bd_shift(spec, 1), d1 = 1;
  for (int k = 2; k <= n; ++k) {
    const real_t b = detail::bd_shift(spec, k), c = detail::bd_coupling(spec, k);
    const real_t p2 = (e - b) * p1 + c * p0;
    const real_t d2 = p1 + (e - b) * d1 + c * d0;
    p0 = p1;
    d0 = d1;
    p1 = p2;
    d1 = d2;
  }
  return {p1, d1};
}

/// Zeros of P_J at the QES point alpha_J (spec.alpha is overridden).
inline QESLevels qes_roots(SexticSpec spec, int J) {
  require(J >= 1, ErrorKind::InvalidParameter, "J must be >= 1");
  spec.alpha = qes_alpha(J, spec.l);
  const auto seq = bd_sequence(spec, J);
  QESLevels out;
  out.J = J;
  auto roots = poly_roots(seq.coeffs[J]);
  for (auto& z : roots) {
    if (std::abs(z.imag()) > 1e-9 * (1 + std::abs(z))) {
      out.all_real = false;
      continue;
    }
    real_t e = z.real();
    for (int it = 0; it < 8; ++it) {
      const auto [p, dp] = bd_evaluate(spec, J, e);
      if (dp == 0) break;
      const real_t step = p / dp;
      e -= step;
      if (std::abs(step) <= 4 * std::numeric_limits<real_t>::epsilon() * (1 + std::abs(e))) break;
    }
    z = e;
  }
  if (!out.all_real) {
    out.complex_roots = roots;
    return out;
  }
  for (auto z : roots) out.roots.push_back(z.real());
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

/// (alpha, l, C) -> ((6l+3-alpha)/2, (alpha+2l-1)/4, C + delta(1+2l-alpha)/2).
/// C is the potential's additive constant; the recursion coefficients are invariant.
inline SexticSpec recursion_symmetry_transform(const SexticSpec& s) {
  SexticSpec t = s;
  t.alpha = (6 * s.l + 3 - s.alpha) / 2;
  t.l = (s.alpha + 2 * s.l - 1) / 4;
  t.c_shift = s.c_shift + s.delta * (1 + 2 * s.l - s.alpha) / 2;
  return t;
}

/// psi(x, E) = exp(-x^4/4 - delta x^2/2) x^(l+1) sum_n (-1/4)^n P_n(E) x^(2n) / (n! Gamma(n+l+3/2)).
inline real_t bd_wavefunction(const SexticSpec& spec, real_t e, real_t x, int n_terms) {
  detail::check_l(spec.l);
  require(x >= 0, ErrorKind::InvalidParameter, "x must be non-negative");
  require(n_terms >= 2, ErrorKind::InvalidParameter, "need at least two terms");
  if (x == 0) return spec.l > -1 ? 0 : std::numeric_limits<real_t>::infinity();
  const real_t x2 = x * x;
  // t_n = r_1..r_n P_n with r_n = -x^2 / (4 n (n + l + 1/2)); P_n itself overflows long
  // before the series converges, so the recursion runs on t_n directly
  auto ratio = [&](int n) { return -x2 / 4 / (n * (n + spec.l + real_t(0.5))); };
  real_t t0 = 1, t1 = ratio(1) * (e - detail::bd_shift(spec, 1));
  real_t sum = t0 + t1, tail = t1, largest = std::max<real_t>(1, std::abs(t1));
  for (int n = 2; n < n_terms; ++n) {
    const real_t r = ratio(n);
    const real_t t2 = r * (e - detail::bd_shift(spec, n)) * t1 + r * ratio(n - 1) * detail::bd_coupling(spec, n) * t0;
    t0 = t1;
    t1 = t2;
    tail = t2;
    sum += t2;
    largest = std::max(largest, std::abs(t2));
  }
  require(std::abs(tail) <= 1e-14 * std::max(largest, std::abs(sum)), ErrorKind::ConvergenceFailure,
          "series tail not below 1e-14 after " + std::to_string(n_terms) + " terms");
  sum /= std::tgamma(spec.l + real_t(1.5));
  return std::exp(-x2 * x2 / 4 - spec.delta * x2 / 2) * std::pow(x, spec.l + 1) * sum;
}

/// qes_roots(delta) == -qes_roots(-delta) with C = -2 delta J.
inline bool anti_isospectral_check(SexticSpec spec, int J, real_t tol = 1e-10) {
  spec.c_shift = -2 * spec.delta * J;
  SexticSpec mirrored = spec;
  mirrored.delta = -spec.delta;
  mirrored.c_shift = -spec.c_shift;
  const auto a = qes_roots(spec, J), b = qes_roots(mirrored, J);
  if (!a.all_real || !b.all_real) return false;
  std::vector<real_t> neg;
  for (auto r : b.roots) neg.push_back(-r);
  return multiset_distance(a.roots, neg) <= tol;
}

/// Degree-major CSV: one row per degree n, columns c_0..c_{n_max}.
inline void write_csv(std::ostream& os, const BDPolySequence& seq) {
  const std::size_t width = seq.coeffs.size();
  os << "n";
  for (std::size_t i = 0; i < width; ++i) os << ",c" << i;
  os << "\n";
  char buf[64];
  for (std::size_t n = 0; n < width; ++n) {
    os << n;
    for (std::size_t i = 0; i < width; ++i) {
      std::snprintf(buf, sizeof buf, "%.12g", static_cast<double>(i < seq.coeffs[n].size() ? seq.coeffs[n][i] : 0));
      os << "," << buf;
    }
    os << "\n";
  }
}

}  // namespace qes

#endif
