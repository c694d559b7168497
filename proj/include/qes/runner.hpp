#ifndef QES_RUNNER_HPP
#define QES_RUNNER_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "qes/bender_dunne.hpp"
#include "qes/bethe_gaudin.hpp"
#include "qes/fock_oracle.hpp"
#include "qes/model_core.hpp"
#include "qes/schrodinger.hpp"

namespace qes {

/// Worker count: QES_THREADS if set and positive, else hardware concurrency.
inline unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QES_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  return n;
}

/// out[i] = f(i) for i < n, spread over worker_count() threads. Results keep
/// their index, so output does not depend on scheduling. The first exception
/// thrown by f is rethrown.
template <class R>
std::vector<R> parallel_map(std::size_t n, const std::function<R(std::size_t)>& f) {
  std::vector<std::optional<R>> slots(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&]() {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = f(i);
      } catch (...) {
        std::lock_guard<std::mutex> g(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Hermitian radial problem (delta, alpha, l) and its PT partner with
/// alpha' = -(alpha + 6l + 3)/2, l' = (2l - 1 - alpha)/4, C' = -(delta/2)(alpha + 1 + 2l).
inline std::pair<SexticSpec, SexticSpec> table1_specs(real_t delta, real_t alpha, real_t l) {
  const SexticSpec h{delta, alpha, l, 0, SexticBC::HermitianRadial};
  const SexticSpec p{delta, -(alpha + 6 * l + 3) / 2, (2 * l - 1 - alpha) / 4, -delta / 2 * (alpha + 1 + 2 * l),
                     SexticBC::PTContour};
  return {h, p};
}

/// QES point alpha_J, C = 0, posed on the half line and on the contour.
inline std::pair<SexticSpec, SexticSpec> table2_specs(real_t delta, int J, real_t l) {
  const SexticSpec h{delta, qes_alpha(J, l), l, 0, SexticBC::HermitianRadial};
  SexticSpec p = h;
  p.bc = SexticBC::PTContour;
  return {h, p};
}

struct TableRow {
  int n = 0;
  real_t hermitian = 0, pt = 0, difference = 0;
  real_t hermitian_residual = 0, pt_residual = 0;
};

struct Table1Result {
  SexticSpec hermitian, pt;
  std::vector<TableRow> rows;
  real_t max_difference = 0;
};

inline void check_table_inputs(real_t l, int n_levels) {
  require(l > -0.5, ErrorKind::InvalidParameter, "l must exceed -1/2");
  require(n_levels >= 1, ErrorKind::InvalidParameter, "need at least one level");
}

inline Table1Result run_table1(real_t delta, real_t alpha, real_t l, int n_levels, ShootingConfig cfg = {},
                               const ContourSpec& contour = {}) {
  check_table_inputs(l, n_levels);
  Table1Result r;
  std::tie(r.hermitian, r.pt) = table1_specs(delta, alpha, l);
  cfg.max_levels = n_levels;
  const auto spectra = parallel_map<Spectrum>(2, [&](std::size_t i) {
    return i == 0 ? radial_eigenvalues(r.hermitian, cfg) : pt_eigenvalues(r.pt, contour, cfg);
  });
  for (int n = 0; n < n_levels; ++n) {
    const auto& h = spectra[0].levels[n];
    const auto& p = spectra[1].levels[n];
    r.rows.push_back({n, h.energy, p.energy, p.energy - h.energy, h.residual, p.residual});
    r.max_difference = std::max(r.max_difference, std::abs(p.energy - h.energy));
  }
  return r;
}

struct Table2Result {
  SexticSpec hermitian, pt;
  int J = 0;
  std::vector<Level> hermitian_levels;  // n_levels + J
  std::vector<Level> pt_levels;         // n_levels
  std::vector<real_t> offset_differences;  // E_n^PT - E_{n+J}^H
  real_t max_offset_difference = 0;
};

inline Table2Result run_table2(real_t delta, int J, real_t l, int n_levels, ShootingConfig cfg = {},
                               const ContourSpec& contour = {}) {
  check_table_inputs(l, n_levels);
  require(J >= 1, ErrorKind::InvalidParameter, "J must be >= 1");
  Table2Result r;
  r.J = J;
  std::tie(r.hermitian, r.pt) = table2_specs(delta, J, l);
  const auto spectra = parallel_map<Spectrum>(2, [&](std::size_t i) {
    ShootingConfig c = cfg;
    c.max_levels = i == 0 ? n_levels + J : n_levels;
    return i == 0 ? radial_eigenvalues(r.hermitian, c) : pt_eigenvalues(r.pt, contour, c);
  });
  r.hermitian_levels = spectra[0].levels;
  r.pt_levels = spectra[1].levels;
  for (int n = 0; n < n_levels; ++n) {
    const real_t d = r.pt_levels[n].energy - r.hermitian_levels[n + J].energy;
    r.offset_differences.push_back(d);
    r.max_offset_difference = std::max(r.max_offset_difference, std::abs(d));
  }
  return r;
}

struct CrosscheckTolerances {
  real_t algebraic = 1e-8;
  real_t ode = 1e-6;
};

/// One sextic grid cell: every method mapped to the common eigenvalue Ehat.
struct SexticCell {
  SexticModelSpec model;
  std::vector<real_t> fock, bae_p1, bae_p2, bender_dunne, ode_hermitian, ode_pt;
  real_t algebraic_deviation = 0, ode_deviation = 0;
  bool counts_ok = false;
  bool passed = false;
  std::string error;
  std::optional<ErrorKind> error_kind;
};

inline std::vector<real_t> sorted(std::vector<real_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline SexticCell sextic_cell(real_t eps, real_t q, int M, bool with_ode, const CrosscheckTolerances& tol,
                              const ShootingConfig& base_cfg = {}) {
  SexticCell c;
  c.model = SexticModelSpec{eps, q, M, SexticBranch::P2};
  try {
    const auto& m = c.model;
    for (real_t e : diagonalize(sextic_model_sector(m)).energies()) c.fock.push_back(sextic_energy_map(m, e));
    c.fock = sorted(c.fock);
    SexticModelSpec m1 = m;
    m1.branch = SexticBranch::P1;
    for (const auto& s : solve_sextic_bae(m1)) c.bae_p1.push_back(sextic_energy_map(m1, s.energy));
    for (const auto& s : solve_sextic_bae(m)) c.bae_p2.push_back(sextic_energy_map(m, s.energy));
    c.bae_p1 = sorted(c.bae_p1);
    c.bae_p2 = sorted(c.bae_p2);
    const auto [v1, v2] = sextic_potentials(m);
    c.bender_dunne = qes_roots(v2, M + 1).roots;
    const std::size_t dim = static_cast<std::size_t>(M + 1);
    c.counts_ok = c.fock.size() == dim && c.bae_p1.size() == dim && c.bae_p2.size() == dim &&
                  c.bender_dunne.size() == dim;
    if (c.counts_ok)
      c.algebraic_deviation = std::max({multiset_distance(c.fock, c.bae_p1), multiset_distance(c.fock, c.bae_p2),
                                        multiset_distance(c.fock, c.bender_dunne)});
    if (with_ode && c.counts_ok) {
      ShootingConfig cfg = base_cfg;
      cfg.max_levels = M + 1;
      c.ode_hermitian = radial_eigenvalues(v2, cfg).energies();
      // scan a window around the algebraic levels; any extra real level inside shows up as a mismatch
      cfg.energy_bracket = {c.fock.front() - 1, c.fock.back() + 1};
      c.ode_pt = pt_eigenvalues(v1, ContourSpec{}, cfg).energies();
      c.ode_deviation = std::max(multiset_distance(c.fock, c.ode_hermitian), multiset_distance(c.fock, c.ode_pt));
    }
    c.passed = c.counts_ok && c.algebraic_deviation <= tol.algebraic && c.ode_deviation <= tol.ode;
  } catch (const Error& e) {
    c.error = e.what();
    c.error_kind = e.kind();
  }
  return c;
}

/// One hyperbolic grid cell: Alpha and mapped Beta BAE energies against the
/// four-boson sector, plus (for epsilon < 0) the ODE levels of V_alpha.
struct HyperbolicCell {
  HyperbolicModelSpec alpha, beta;
  std::vector<real_t> fock, bae_alpha, bae_beta;
  std::vector<real_t> ode_qes, ode_levels;  // QES energies of V_alpha and its lowest M+1 levels
  real_t algebraic_deviation = 0, ode_deviation = 0;
  bool ode_checked = false;
  bool counts_ok = false;
  bool passed = false;
  std::string error;
  std::optional<ErrorKind> error_kind;
};

inline HyperbolicCell hyperbolic_cell(real_t eps, int p, int q, int M, bool with_ode, const CrosscheckTolerances& tol,
                                      const ShootingConfig& base_cfg = {}) {
  HyperbolicCell c;
  c.alpha = HyperbolicModelSpec{eps, 1, p, q, M, HyperbolicBranch::Alpha};
  try {
    c.beta = hyperbolic_parameter_map(c.alpha);
    c.fock = sorted(diagonalize(hyperbolic_model_sector(c.alpha)).energies());
    c.bae_alpha = sorted(energies_of(solve_hyperbolic_bae(c.alpha)));
    c.bae_beta = sorted(energies_of(solve_hyperbolic_bae(c.beta)));
    const std::size_t dim = static_cast<std::size_t>(M + 1);
    c.counts_ok = c.fock.size() == dim && c.bae_alpha.size() == dim && c.bae_beta.size() == dim;
    if (c.counts_ok)
      c.algebraic_deviation = std::max({multiset_distance(c.bae_alpha, c.bae_beta),
                                        multiset_distance(c.fock, c.bae_alpha), multiset_distance(c.fock, c.bae_beta)});
    if (with_ode && c.counts_ok && eps < 0) {
      const auto spec = hyperbolic_potential_for(c.alpha);
      const GenericBAESpec g{spec.a_lin, spec.b_pole, spec.c_pole, spec.gamma, M};
      for (const auto& s : solve_bae(g)) c.ode_qes.push_back(spec.shift + s.energy);
      c.ode_qes = sorted(c.ode_qes);
      ShootingConfig cfg = base_cfg;
      cfg.max_levels = M + 1;
      c.ode_levels = hyperbolic_eigenvalues(spec, M, cfg).energies();
      c.ode_deviation = multiset_distance(c.ode_qes, c.ode_levels);
      c.ode_checked = true;
    }
    c.passed = c.counts_ok && c.algebraic_deviation <= tol.algebraic && c.ode_deviation <= tol.ode;
  } catch (const Error& e) {
    c.error = e.what();
    c.error_kind = e.kind();
  }
  return c;
}

struct SexticGrid {
  std::vector<real_t> epsilons, qs;
  std::vector<int> ms;
};

struct HyperbolicGrid {
  std::vector<real_t> epsilons;
  std::vector<int> ps, qs, ms;
};

inline std::vector<SexticCell> crosscheck_sextic(const SexticGrid& grid, bool with_ode,
                                                 const CrosscheckTolerances& tol = {},
                                                 const ShootingConfig& cfg = {}) {
  struct Point {
    real_t eps, q;
    int m;
  };
  std::vector<Point> pts;
  for (real_t e : grid.epsilons)
    for (real_t q : grid.qs)
      for (int m : grid.ms) {
        require(m >= 0 && m <= 6 && q >= 0 && q <= 4, ErrorKind::InvalidParameter,
                "crosscheck grid is limited to M <= 6, q <= 4");
        pts.push_back({e, q, m});
      }
  return parallel_map<SexticCell>(pts.size(), [&](std::size_t i) {
    return sextic_cell(pts[i].eps, pts[i].q, pts[i].m, with_ode, tol, cfg);
  });
}

inline std::vector<HyperbolicCell> crosscheck_hyperbolic(const HyperbolicGrid& grid, bool with_ode,
                                                         const CrosscheckTolerances& tol = {},
                                                         const ShootingConfig& cfg = {}) {
  struct Point {
    real_t eps;
    int p, q, m;
  };
  std::vector<Point> pts;
  for (real_t e : grid.epsilons)
    for (int p : grid.ps)
      for (int q : grid.qs)
        for (int m : grid.ms) {
          require(m >= 0 && m <= 6 && p >= 0 && p <= 4 && q >= 0 && q <= 4, ErrorKind::InvalidParameter,
                  "crosscheck grid is limited to M <= 6, p, q <= 4");
          pts.push_back({e, p, q, m});
        }
  return parallel_map<HyperbolicCell>(pts.size(), [&](std::size_t i) {
    return hyperbolic_cell(pts[i].eps, pts[i].p, pts[i].q, pts[i].m, with_ode, tol, cfg);
  });
}

}  // namespace qes

#endif
