#ifndef QES_POLYNOMIAL_HPP
#define QES_POLYNOMIAL_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "qes/types.hpp"

namespace qes {

using RealMatrix = Eigen::Matrix<real_t, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexMatrix = Eigen::Matrix<complex_t, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexVector = Eigen::Matrix<complex_t, Eigen::Dynamic, 1>;

// Polynomials are stored with ascending coefficients: c[0] + c[1] x + ...

template <class T, class X>
auto poly_eval(const std::vector<T>& c, X x) {
  using R = decltype(T{} * x);
  R acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

template <class T>
std::vector<T> poly_derivative(const std::vector<T>& c) {
  if (c.size() <= 1) return {T{}};
  std::vector<T> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<real_t>(i);
  return d;
}

template <class T>
std::vector<T> poly_multiply(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size() + b.size() - 1, T{});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Parlett-Reinsch balancing by powers of two; leaves eigenvalues unchanged.
inline void balance(RealMatrix& a) {
  const Eigen::Index n = a.rows();
  const real_t radix = 2;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      real_t r = 0, c = 0;
      for (Eigen::Index j = 0; j < n; ++j)
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      if (c == 0 || r == 0) continue;
      real_t g = r / radix, f = 1;
      const real_t s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < real_t(0.95) * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

/// All complex roots of a real polynomial via the balanced companion matrix.
inline std::vector<complex_t> poly_roots(std::vector<real_t> c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return {};
  require(c.back() != 0, ErrorKind::InvalidParameter, "zero polynomial has no roots");
  RealMatrix comp = RealMatrix::Zero(deg, deg);
  for (std::size_t i = 0; i < deg; ++i) comp(0, i) = -c[deg - 1 - i] / c[deg];
  for (std::size_t i = 1; i < deg; ++i) comp(i, i - 1) = 1;
  balance(comp);
  Eigen::EigenSolver<RealMatrix> es(comp, false);
  require(es.info() == Eigen::Success, ErrorKind::ConvergenceFailure, "companion eigenvalues failed");
  std::vector<complex_t> roots(deg);
  for (std::size_t i = 0; i < deg; ++i) roots[i] = es.eigenvalues()[static_cast<Eigen::Index>(i)];
  std::sort(roots.begin(), roots.end(), [](complex_t a, complex_t b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

/// Generalized Laguerre L_n^(a)(x), ascending coefficients; any real a.
inline std::vector<real_t> laguerre_coefficients(int n, real_t a) {
  // L_n^(a)(x) = sum_i (-1)^i binom(n + a, n - i) x^i / i!
  std::vector<real_t> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    real_t binom = 1;
    for (int k = 1; k <= n - i; ++k) binom *= (a + i + k) / k;
    real_t fact = 1;
    for (int k = 2; k <= i; ++k) fact *= k;
    c[i] = ((i % 2) ? -binom : binom) / fact;
  }
  return c;
}

/// Physicists' Hermite H_n, ascending coefficients.
inline std::vector<real_t> hermite_coefficients(int n) {
  std::vector<real_t> h0{1}, h1{0, 2};
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    std::vector<real_t> h2(k + 2, 0);
    for (int i = 0; i <= k; ++i) h2[i + 1] += 2 * h1[i];
    for (int i = 0; i < k; ++i) h2[i] -= 2 * k * h0[i];
    h0 = std::move(h1);
    h1 = std::move(h2);
  }
  return h1;
}

/// Greedy nearest-neighbour distance between two root multisets of equal size.
inline real_t multiset_distance(std::vector<complex_t> a, std::vector<complex_t> b) {
  if (a.size() != b.size()) return std::numeric_limits<real_t>::infinity();
  real_t worst = 0;
  for (const auto& x : a) {
    auto best = std::min_element(b.begin(), b.end(),
                                 [&](complex_t u, complex_t v) { return std::abs(u - x) < std::abs(v - x); });
    worst = std::max(worst, std::abs(*best - x));
    b.erase(best);
  }
  return worst;
}

inline real_t multiset_distance(std::vector<real_t> a, std::vector<real_t> b) {
  if (a.size() != b.size()) return std::numeric_limits<real_t>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  real_t worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace qes

#endif
