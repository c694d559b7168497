#ifndef QES_FOCK_ORACLE_HPP
#define QES_FOCK_ORACLE_HPP

#include <array>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "qes/model_core.hpp"
#include "qes/tridiagonal.hpp"

namespace qes {

/// Joint eigenspace of N = 2 n_a + n_b + n_c and K = n_b - n_c.
struct FockSector3 {
  int n_total = 0;
  int k_diff = 0;
  std::vector<std::array<int, 3>> basis;  // (n_a, n_b, n_c), increasing n_a
};

/// Joint eigenspace of (n1 - n2, n1 + n3, n2 + n4).
struct FockSector4 {
  std::array<int, 3> charges{};
  std::vector<std::array<int, 4>> basis;  // increasing n1
};

struct SectorMatrix {
  std::vector<real_t> diagonal;
  std::vector<real_t> off_diagonal;
  std::size_t size() const { return diagonal.size(); }
};

inline FockSector3 sector3(int N, int K) {
  FockSector3 s{N, K, {}};
  if (N < std::abs(K) || (N - K) % 2 != 0) return s;
  for (int na = 0; 2 * na <= N - std::abs(K); ++na) {
    const int rest = N - 2 * na;
    s.basis.push_back({na, (rest + K) / 2, (rest - K) / 2});
  }
  return s;
}

inline FockSector4 sector4(std::array<int, 3> charges) {
  FockSector4 s{charges, {}};
  const auto [d12, s13, s24] = charges;
  for (int n1 = 0; n1 <= s13; ++n1) {
    const int n2 = n1 - d12, n3 = s13 - n1, n4 = s24 - n2;
    if (n2 < 0 || n3 < 0 || n4 < 0) continue;
    s.basis.push_back({n1, n2, n3, n4});
  }
  return s;
}

/// H = eps(n_a - n_b - n_c) + Omega(a^+ b c + a b^+ c^+) restricted to (N, K).
inline SectorMatrix build_sector3(real_t epsilon, real_t omega, int N, int K) {
  const auto s = sector3(N, K);
  require(!s.basis.empty(), ErrorKind::EmptySector, "no states with N=" + std::to_string(N) + ", K=" + std::to_string(K));
  SectorMatrix m;
  for (const auto& [na, nb, nc] : s.basis) m.diagonal.push_back(epsilon * (na - nb - nc));
  for (std::size_t i = 0; i + 1 < s.basis.size(); ++i) {
    const auto& [na, nb, nc] = s.basis[i];
    m.off_diagonal.push_back(omega * std::sqrt(real_t(na + 1) * nb * nc));
  }
  return m;
}

/// H = eps(n1+n2-n3-n4) + g(n1 n3 + n2 n4 + a1^+ a2^+ a3 a4 + h.c.).
inline SectorMatrix build_sector4(real_t epsilon, real_t g, std::array<int, 3> charges) {
  const auto s = sector4(charges);
  require(!s.basis.empty(), ErrorKind::EmptySector, "empty four-boson sector");
  SectorMatrix m;
  for (const auto& [n1, n2, n3, n4] : s.basis)
    m.diagonal.push_back(epsilon * (n1 + n2 - n3 - n4) + g * (real_t(n1) * n3 + real_t(n2) * n4));
  for (std::size_t i = 0; i + 1 < s.basis.size(); ++i) {
    const auto& [n1, n2, n3, n4] = s.basis[i];
    m.off_diagonal.push_back(g * std::sqrt(real_t(n1 + 1) * (n2 + 1) * n3 * n4));
  }
  return m;
}

inline Spectrum diagonalize(const SectorMatrix& mat) {
  auto s = make_spectrum(tridiagonal_eigenvalues(mat.diagonal, mat.off_diagonal), Method::Fock);
  s.diagnostics["dimension"] = static_cast<double>(mat.size());
  return s;
}

/// spectrum(eps) == -spectrum(-eps) within the sector.
inline bool unitary_negation_check3(real_t epsilon, int N, int K, real_t tol = 1e-10) {
  auto plus = diagonalize(build_sector3(epsilon, 1, N, K)).energies();
  auto minus = diagonalize(build_sector3(-epsilon, 1, N, K)).energies();
  const std::size_t n = plus.size();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(plus[i] + minus[n - 1 - i]) > tol) return false;
  return true;
}

/// Sector of the three-boson model that hosts the sextic QES states:
/// N = 2M + q, K = -q.
inline SectorMatrix sextic_model_sector(const SexticModelSpec& m, real_t omega = 1) {
  validate(m);
  const int q = static_cast<int>(std::lround(m.q));
  require(std::abs(m.q - q) < 1e-12, ErrorKind::InvalidParameter, "Fock sector needs integer q");
  return build_sector3(m.epsilon, omega, 2 * m.m_roots + q, -q);
}

/// Charges of the four-boson sector reached by a branch spec.
inline std::array<int, 3> hyperbolic_model_charges(const HyperbolicModelSpec& m) {
  validate(m);
  if (m.branch == HyperbolicBranch::Alpha) return {-m.p, m.m_roots, m.p + m.q + m.m_roots};
  return {m.m_roots - m.p, m.m_roots, m.p + m.q - m.m_roots};
}

inline SectorMatrix hyperbolic_model_sector(const HyperbolicModelSpec& m) {
  return build_sector4(m.epsilon, m.g, hyperbolic_model_charges(m));
}

}  // namespace qes

#endif
