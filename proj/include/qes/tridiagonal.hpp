#ifndef QES_TRIDIAGONAL_HPP
#define QES_TRIDIAGONAL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qes/types.hpp"

namespace qes {

// Eigenvalues of a real symmetric tridiagonal matrix by the implicit QL
// method with Wilkinson-type shifts (tql1 lineage). `diag` has n entries,
// `offdiag` has n-1 (offdiag[i] couples i and i+1). Returns ascending values.
inline std::vector<real_t> tridiagonal_eigenvalues(std::vector<real_t> d, std::vector<real_t> offdiag) {
  const std::size_t n = d.size();
  if (n == 0) return {};
  require(offdiag.size() + 1 == n, ErrorKind::InvalidParameter, "off-diagonal length must be n-1");
  std::vector<real_t> e(n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = offdiag[i];

  const real_t eps = std::numeric_limits<real_t>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const real_t dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        require(++iter <= 60, ErrorKind::ConvergenceFailure, "tridiagonal QL did not converge");
        real_t g = (d[l + 1] - d[l]) / (2 * e[l]);
        real_t r = std::hypot(g, real_t(1));
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        real_t s = 1, c = 1, p = 0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          real_t f = s * e[i];
          const real_t b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0) {
            d[i + 1] -= p;
            e[m] = 0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace qes

#endif
