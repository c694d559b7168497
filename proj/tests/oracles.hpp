// Independent reference computations for the test suites. Nothing here
// calls into the library's numerical kernels.
#ifndef QES_TESTS_ORACLES_HPP
#define QES_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

inline Vec dense_eigenvalues(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return Vec(ev.data(), ev.data() + ev.size());
}

/// eps(na - nb - nc) + omega(a+ b c + a b+ c+) on all states with
/// 2na + nb + nc = N and nb - nc = K, built by applying the operators.
inline Vec fock3_spectrum(double eps, double omega, int N, int K) {
  std::map<std::array<int, 3>, int> index;
  std::vector<std::array<int, 3>> states;
  for (int na = 0; 2 * na <= N; ++na)
    for (int nb = 0; 2 * na + nb <= N; ++nb) {
      const int nc = N - 2 * na - nb;
      if (nb - nc != K) continue;
      index[{na, nb, nc}] = static_cast<int>(states.size());
      states.push_back({na, nb, nc});
    }
  const int d = static_cast<int>(states.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const auto [na, nb, nc] = states[i];
    h(i, i) = eps * (na - nb - nc);
    if (nb > 0 && nc > 0) {  // a+ b c
      const auto it = index.find({na + 1, nb - 1, nc - 1});
      if (it != index.end()) h(it->second, i) += omega * std::sqrt(double(na + 1) * nb * nc);
    }
    if (na > 0) {  // a b+ c+
      const auto it = index.find({na - 1, nb + 1, nc + 1});
      if (it != index.end()) h(it->second, i) += omega * std::sqrt(double(na) * (nb + 1) * (nc + 1));
    }
  }
  return dense_eigenvalues(h);
}

/// eps(n1+n2-n3-n4) + g(n1 n3 + n2 n4 + a1+ a2+ a3 a4 + a3+ a4+ a1 a2) with
/// fixed (n1 - n2, n1 + n3, n2 + n4).
inline Vec fock4_spectrum(double eps, double g, std::array<int, 3> charges) {
  const auto [d12, s13, s24] = charges;
  std::map<std::array<int, 4>, int> index;
  std::vector<std::array<int, 4>> states;
  for (int n1 = 0; n1 <= s13; ++n1)
    for (int n2 = 0; n2 <= s24; ++n2) {
      if (n1 - n2 != d12) continue;
      index[{n1, n2, s13 - n1, s24 - n2}] = static_cast<int>(states.size());
      states.push_back({n1, n2, s13 - n1, s24 - n2});
    }
  const int d = static_cast<int>(states.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const auto [n1, n2, n3, n4] = states[i];
    h(i, i) = eps * (n1 + n2 - n3 - n4) + g * (double(n1) * n3 + double(n2) * n4);
    if (n3 > 0 && n4 > 0) {
      const auto it = index.find({n1 + 1, n2 + 1, n3 - 1, n4 - 1});
      if (it != index.end()) h(it->second, i) += g * std::sqrt(double(n1 + 1) * (n2 + 1) * n3 * n4);
    }
    if (n1 > 0 && n2 > 0) {
      const auto it = index.find({n1 - 1, n2 - 1, n3 + 1, n4 + 1});
      if (it != index.end()) h(it->second, i) += g * std::sqrt(double(n1) * n2 * (n3 + 1) * (n4 + 1));
    }
  }
  return dense_eigenvalues(h);
}

/// Lowest n eigenvalues of -psi'' + V psi on (a, b) with Dirichlet ends,
/// second-order differences on N interior points.
inline Vec fd_levels(const std::function<double(double)>& v, double a, double b, int N, int n) {
  const double h = (b - a) / (N + 1);
  Eigen::VectorXd diag(N), off(N - 1);
  for (int i = 0; i < N; ++i) diag[i] = 2 / (h * h) + v(a + (i + 1) * h);
  off.setConstant(-1 / (h * h));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  return Vec(es.eigenvalues().data(), es.eigenvalues().data() + n);
}

/// Richardson-extrapolated fd_levels (h^2 error term removed).
inline Vec fd_levels_extrapolated(const std::function<double(double)>& v, double a, double b, int N, int n) {
  const Vec coarse = fd_levels(v, a, b, N, n);
  const Vec fine = fd_levels(v, a, b, 2 * N + 1, n);
  Vec out(n);
  for (int i = 0; i < n; ++i) out[i] = (4 * fine[i] - coarse[i]) / 3;
  return out;
}

/// P_n(E) coefficient table by expanding the three-term recursion
/// P_n = (E - b_n) P_{n-1} + c_n P_{n-2} with b, c given as functions of n.
inline std::vector<Vec> recursion_table(const std::function<double(int)>& b, const std::function<double(int)>& c,
                                        int n_max) {
  std::vector<Vec> p{{1.0}};
  for (int n = 1; n <= n_max; ++n) {
    Vec next(n + 1, 0.0);
    for (std::size_t k = 0; k < p[n - 1].size(); ++k) {
      next[k + 1] += p[n - 1][k];
      next[k] -= b(n) * p[n - 1][k];
    }
    if (n >= 2)
      for (std::size_t k = 0; k < p[n - 2].size(); ++k) next[k] += c(n) * p[n - 2][k];
    p.push_back(next);
  }
  return p;
}

/// Five-point second derivative.
inline double second_derivative(const std::function<double(double)>& f, double x, double h = 1e-3) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

inline double max_abs_diff(Vec a, Vec b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace oracle

#endif
