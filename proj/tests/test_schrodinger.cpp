#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "support.hpp"
#include "qes/bender_dunne.hpp"
#include "qes/bethe_gaudin.hpp"
#include "qes/schrodinger.hpp"

using Catch::Matchers::WithinAbs;
using namespace qes;

namespace {

ShootingConfig levels(int n) {
  ShootingConfig c;
  c.max_levels = n;
  return c;
}

int sign_changes(const std::vector<std::pair<real_t, real_t>>& samples) {
  int n = 0;
  for (std::size_t i = 1; i < samples.size(); ++i)
    if ((samples[i - 1].second < 0) != (samples[i].second < 0)) ++n;
  return n;
}

}  // namespace

TEST_CASE("radial ground states against tabulated values") {
  const auto t1 = radial_eigenvalues({0.2, 0.31, 0.54, 0}, levels(1));
  CHECK_THAT(t1.levels[0].energy, WithinAbs(7.17030615, 5e-6));
  const auto t2 = radial_eigenvalues({0.2, qes_alpha(3, 0.54), 0.54, 0}, levels(1));
  CHECK_THAT(t2.levels[0].energy, WithinAbs(-11.0798088, 5e-6));
  const auto q = radial_eigenvalues({0, qes_alpha(1, 0), 0, 0}, levels(1));
  CHECK_THAT(q.levels[0].energy, WithinAbs(0, 1e-8));
}

TEST_CASE("radial levels agree with an extrapolated finite-difference solve") {
  const SexticSpec s{0.2, 0.31, 0.54, 0};
  const auto shoot = radial_eigenvalues(s, levels(5)).energies();
  const auto fd = oracle::fd_levels_extrapolated([&](double x) { return sextic_potential(s, x); }, 0, 4, 3000, 5);
  for (int i = 0; i < 5; ++i) CHECK_THAT(shoot[i], WithinAbs(fd[i], 2e-3));
}

TEST_CASE("level n has n interior nodes; residuals are reported") {
  const SexticSpec s{0.2, 0.31, 0.54, 0};
  const auto spec = radial_eigenvalues(s, levels(6));
  std::vector<real_t> xs;
  for (int i = 1; i <= 600; ++i) xs.push_back(0.005 * i);
  for (int n = 0; n <= 5; ++n) {
    CHECK(spec.levels[n].index == n);
    CHECK(spec.levels[n].residual < 1e-6);
    CHECK(sign_changes(radial_wavefunction(s, spec.levels[n].energy, xs)) == n);
  }
  const auto e = spec.energies();
  CHECK(std::is_sorted(e.begin(), e.end()));
}

TEST_CASE("radial preconditions") {
  CHECK(thrown_kind([] { radial_eigenvalues({0, 0, -0.6, 0}); }) == ErrorKind::InvalidParameter);
  CHECK(thrown_kind([] { radial_eigenvalues({0, 0, 0, 0, SexticBC::PTContour}); }) == ErrorKind::InvalidParameter);
  ShootingConfig bad;
  bad.x_match = 0.01;
  CHECK(thrown_kind([&] { radial_eigenvalues({0, 0, 0, 0}, bad); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("eigenvalues are stable when the matching and outer points move") {
  const SexticSpec s{0.2, 0.31, 0.54, 0};
  ShootingConfig a = levels(5), b = levels(5);
  b.x_match *= 2;
  b.x_outer *= 2;
  const auto ea = radial_eigenvalues(s, a).energies(), eb = radial_eigenvalues(s, b).energies();
  for (int i = 0; i < 5; ++i) CHECK_THAT(ea[i], WithinAbs(eb[i], 10 * a.energy_tolerance));
}

TEST_CASE("PT contour spectra") {
  // partner of (0.2, 0.31, 0.54)
  const real_t d = 0.2, a = 0.31, l = 0.54;
  const SexticSpec pt{d, -(a + 6 * l + 3) / 2, (2 * l - 1 - a) / 4, -d / 2 * (a + 1 + 2 * l), SexticBC::PTContour};
  ShootingConfig c = levels(1);
  c.energy_bracket = {0, 100};
  CHECK_THAT(pt_eigenvalues(pt, {}, c).levels[0].energy, WithinAbs(7.17030616, 5e-6));

  const SexticSpec vpt{0.2, qes_alpha(3, 0.54), 0.54, 0, SexticBC::PTContour};
  c.energy_bracket = {-40, 150};
  const auto v = pt_eigenvalues(vpt, {}, c);
  CHECK_THAT(v.levels[0].energy, WithinAbs(30.1033297, 5e-6));
  CHECK(v.levels[0].residual < 1e-6);
}

TEST_CASE("PT spectrum of V1 contains the QES levels") {
  const SexticModelSpec m{0.2, 1, 2};
  const auto [v1, v2] = sextic_potentials(m);
  const auto roots = qes_roots(v2, 3).roots;
  ShootingConfig c = levels(3);
  c.energy_bracket = {roots.front() - 1, roots.back() + 1};
  const auto e = pt_eigenvalues(v1, {}, c).energies();
  CHECK(multiset_distance(e, roots) < 1e-6);
}

TEST_CASE("contour validation") {
  ContourSpec c;
  c.ray_angles = {-pi / 4, pi / 4};
  CHECK(thrown_kind([&] { pt_eigenvalues({0, 0, 0, 0, SexticBC::PTContour}, c); }) == ErrorKind::ContourError);
  c = {};
  c.arc_radius = 0;
  CHECK(thrown_kind([&] { pt_eigenvalues({0, 0, 0, 0, SexticBC::PTContour}, c); }) == ErrorKind::ContourError);
}

TEST_CASE("hyperbolic QES levels mirror the four-boson spectrum about the shift") {
  // the sector energies are shift - 2 sum v, the ODE levels shift + 2 sum v
  for (auto [eps, p, q, M] : {std::tuple{-0.3, 0, 1, 2}, {-1.0, 2, 1, 2}, {-0.25, 1, 3, 3}}) {
    const HyperbolicModelSpec m{eps, 1, p, q, M};
    const auto spec = hyperbolic_potential_for(m);
    const auto ode = hyperbolic_eigenvalues(spec, M, levels(M + 1)).energies();
    std::vector<double> reflected;
    for (double e : oracle::fock4_spectrum(eps, 1, {-p, M, p + q + M})) reflected.push_back(2 * spec.shift - e);
    CHECK(oracle::max_abs_diff(ode, reflected) < 1e-7);
  }

  const auto m0 = hyperbolic_potential_for({-0.5, 1, 2, 1, 0});
  CHECK_THAT(hyperbolic_eigenvalues(m0, 0, levels(1)).levels[0].energy, WithinAbs(m0.shift, 1e-8));
}

TEST_CASE("hyperbolic: SUSY zero-mode potential has a level at 0") {
  for (real_t M : {0.0, 1.0, 2.0}) {
    const real_t g = -1;
    const HyperbolicSpec s{2, -1.5, M - 0.5, g, -g * (M + 1), HyperbolicBC::RealLineEven};
    CHECK_THAT(hyperbolic_eigenvalues(s, M, levels(1)).levels[0].energy, WithinAbs(0, 1e-8));
  }
}

TEST_CASE("hyperbolic levels agree with a finite-difference solve") {
  const HyperbolicSpec s{2, -0.5, 1.5, -1, 0, HyperbolicBC::RealLineEven};
  const real_t M = 1;
  const auto even = hyperbolic_eigenvalues(s, M, levels(3)).energies();
  HyperbolicSpec o = s;
  o.bc = HyperbolicBC::RealLineOdd;
  const auto odd = hyperbolic_eigenvalues(o, M, levels(3)).energies();
  std::vector<real_t> both(even);
  both.insert(both.end(), odd.begin(), odd.end());
  std::sort(both.begin(), both.end());
  const auto fd =
      oracle::fd_levels_extrapolated([&](double x) { return hyperbolic_potential(s, M, x); }, -7, 7, 3000, 6);
  for (int i = 0; i < 6; ++i) CHECK_THAT(both[i], WithinAbs(fd[i], 1e-5));
}

TEST_CASE("PT-shifted problem reproduces its Hermitian image") {
  const HyperbolicSpec h{2, -0.5, 1.5, -1, 0.2, HyperbolicBC::RealLineEven};
  const auto a = hyperbolic_eigenvalues(h, 1, levels(4)).energies();
  const auto b = hyperbolic_eigenvalues(herm_pt_swap(h), 1, levels(4)).energies();
  for (int i = 0; i < 4; ++i) CHECK_THAT(a[i], WithinAbs(b[i], 1e-8));
}

TEST_CASE("hyperbolic domain errors") {
  const HyperbolicSpec unbound{2, -0.5, 1.5, 1, 0, HyperbolicBC::RealLineEven};
  CHECK(thrown_kind([&] { hyperbolic_eigenvalues(unbound, 1); }) == ErrorKind::DomainError);
  const HyperbolicSpec pole{2, 0.5, 1.5, -1, 0, HyperbolicBC::HalfLine};
  CHECK(thrown_kind([&] { hyperbolic_eigenvalues(pole, 1); }) == ErrorKind::DomainError);
  const HyperbolicSpec parity{2, -2, 1.5, -1, 0, HyperbolicBC::RealLineEven};
  CHECK(thrown_kind([&] { hyperbolic_eigenvalues(parity, 1); }) == ErrorKind::InvalidParameter);
}
