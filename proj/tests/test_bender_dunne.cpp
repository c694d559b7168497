#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "support.hpp"
#include "qes/bender_dunne.hpp"
#include "qes/fock_oracle.hpp"
#include "qes/schrodinger.hpp"

using Catch::Matchers::WithinAbs;
using namespace qes;

namespace {

real_t table_gap(const BDPolySequence& a, const BDPolySequence& b) {
  real_t worst = 0;
  for (std::size_t n = 0; n < a.coeffs.size(); ++n)
    for (std::size_t k = 0; k < a.coeffs[n].size(); ++k)
      worst = std::max(worst, std::abs(a.coeffs[n][k] - b.coeffs[n][k]) / std::max<real_t>(1, std::abs(a.coeffs[n][k])));
  return worst;
}

}  // namespace

TEST_CASE("first polynomials") {
  const auto seq = bd_sequence({0, 0.31, 0.54, 0}, 3);
  REQUIRE(seq.coeffs.size() == 4);
  CHECK(seq.coeffs[0] == std::vector<real_t>{1});
  CHECK(seq.coeffs[1] == std::vector<real_t>{0, 1});
  const SexticSpec s{0.2, 0.31, 0.54, -0.7};
  const auto t = bd_sequence(s, 1);
  CHECK_THAT(t.coeffs[1][0], WithinAbs(-(s.c_shift + s.delta * (2 * s.l + 3)), 1e-15));
}

TEST_CASE("table matches an independent expansion of the recursion") {
  const SexticSpec s{0.2, -3.1, 0.54, 0.4};
  const auto seq = bd_sequence(s, 10);
  const auto ref = oracle::recursion_table(
      [&](int n) { return s.c_shift + s.delta * (2 * s.l + 4 * n - 1); },
      [&](int n) { return 16.0 * (n - 1) * (n + (s.alpha + 2 * s.l - 3) / 4) * (n + s.l - 0.5); }, 10);
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK_THAT(seq.coeffs[n][k], WithinAbs(ref[n][k], 1e-12 * std::max(1.0, std::abs(ref[n][k]))));
}

TEST_CASE("monic of degree n across a parameter grid") {
  for (real_t d : {-0.5, 0.0, 0.2})
    for (real_t a : {-9.0, 0.31, 4.0})
      for (real_t l : {-0.4, 0.0, 0.54, 2.0}) {
        const auto seq = bd_sequence({d, a, l, 0.1}, 12);
        for (int n = 0; n <= 12; ++n) {
          REQUIRE(seq.coeffs[n].size() == static_cast<std::size_t>(n + 1));
          CHECK(seq.coeffs[n].back() == 1);
        }
      }
}

TEST_CASE("forbidden l values") {
  CHECK(thrown_kind([] { bd_sequence({0, 0, -1.5, 0}, 3); }) == ErrorKind::SingularL);
  CHECK(thrown_kind([] { bd_sequence({0, 0, -3.5, 0}, 3); }) == ErrorKind::SingularL);
  CHECK_FALSE(thrown_kind([] { bd_sequence({0, 0, -0.5, 0}, 3); }));
}

TEST_CASE("QES roots: closed forms") {
  const auto j1 = qes_roots({0, 0, 0, 0}, 1);
  REQUIRE(j1.roots.size() == 1);
  CHECK_THAT(j1.roots[0], WithinAbs(0, 1e-15));
  // P1 root is C + delta(2l + 3)
  const auto r = qes_roots({0.2, 0, 0.54, -0.4}, 1);
  CHECK_THAT(r.roots[0], WithinAbs(-0.4 + 0.2 * 4.08, 1e-14));
  // ... and it is the ground state of the potential
  SexticSpec v{0.2, qes_alpha(1, 0.54), 0.54, -0.4};
  ShootingConfig cfg;
  cfg.max_levels = 1;
  CHECK_THAT(radial_eigenvalues(v, cfg).levels[0].energy, WithinAbs(0.416, 1e-7));

  const auto j2 = qes_roots({0, 0, 0, 0}, 2);
  REQUIRE(j2.roots.size() == 2);
  // P2 = E^2 + c_2 with c_2 = 16 (2 + (alpha + 2l - 3)/4)(2 + l - 1/2), alpha = -9
  const real_t c2 = 16 * (2 + (-9.0 - 3) / 4) * 1.5;
  CHECK_THAT(j2.roots[0], WithinAbs(-std::sqrt(-c2), 1e-12));
  CHECK_THAT(j2.roots[1], WithinAbs(std::sqrt(-c2), 1e-12));
}

TEST_CASE("QES roots are eigenvalues of the radial problem") {
  const real_t l = 0.54, delta = 0.2;
  const int J = 3;
  SexticSpec s{delta, qes_alpha(J, l), l, -2 * delta * J};
  const auto roots = qes_roots(s, J);
  REQUIRE(roots.all_real);
  REQUIRE(roots.roots.size() == 3);
  ShootingConfig cfg;
  cfg.max_levels = 3;
  const auto levels = radial_eigenvalues(s, cfg).energies();
  for (int i = 0; i < 3; ++i) CHECK_THAT(roots.roots[i], WithinAbs(levels[i], 1e-7));
}

TEST_CASE("QES roots equal mapped Fock eigenvalues") {
  for (real_t eps : {-1.0, -0.2, 0.0, 0.2, 1.0})
    for (int q = 0; q <= 3; ++q)
      for (int M = 0; M <= 4; ++M) {
        const SexticModelSpec m{eps, real_t(q), M};
        const auto [v1, v2] = sextic_potentials(m);
        const auto roots = qes_roots(v2, M + 1);
        std::vector<real_t> mapped;
        for (real_t e : oracle::fock3_spectrum(eps, 1, 2 * M + q, -q)) mapped.push_back(sextic_energy_map(m, e));
        INFO("eps=" << eps << " q=" << q << " M=" << M);
        CHECK(oracle::max_abs_diff(roots.roots, mapped) < 1e-8 * std::max<real_t>(1, std::abs(mapped.back())));
      }
}

TEST_CASE("P_J divides P_{J+1} and P_{J+2} at QES points") {
  for (real_t delta : {-0.3, 0.0, 0.2})
    for (real_t l : {0.0, 0.54, 1.5})
      for (int J = 1; J <= 5; ++J) {
        SexticSpec s{delta, qes_alpha(J, l), l, 0.3};
        s.alpha = qes_alpha(J, l);
        const auto roots = qes_roots(s, J);
        const auto seq = bd_sequence(s, J + 2);
        for (real_t e : roots.roots)
          for (int k : {1, 2}) {
            // |P(E)| against the size of its terms
            real_t scale = 0;
            for (std::size_t i = 0; i < seq.coeffs[J + k].size(); ++i)
              scale += std::abs(seq.coeffs[J + k][i]) * std::pow(std::abs(e), real_t(i));
            CHECK(std::abs(bd_evaluate(s, J + k, e).first) <= 1e-9 * std::max<real_t>(1, scale));
          }
      }
}

TEST_CASE("recursion-symmetry transform") {
  const SexticSpec s{0.2, 0.31, 0.54, 0};
  const auto t = recursion_symmetry_transform(s);
  CHECK(table_gap(bd_sequence(s, 10), bd_sequence(t, 10)) < 1e-12);
  const auto tt = recursion_symmetry_transform(t);
  CHECK_THAT(tt.alpha, WithinAbs(s.alpha, 1e-14));
  CHECK_THAT(tt.l, WithinAbs(s.l, 1e-14));
  // alpha = 2l + 1 is fixed
  const SexticSpec f{0.2, 2 * 0.7 + 1, 0.7, 0.1};
  const auto ft = recursion_symmetry_transform(f);
  CHECK_THAT(ft.alpha, WithinAbs(f.alpha, 1e-14));
  CHECK_THAT(ft.l, WithinAbs(f.l, 1e-14));
  CHECK_THAT(ft.c_shift, WithinAbs(f.c_shift, 1e-14));
}

TEST_CASE("series wavefunction") {
  const SexticSpec s{0, -5, 0, 0};
  CHECK(bd_wavefunction(s, 0, 0, 40) == 0);
  // QES state x exp(-x^4/4) at E = 0
  const real_t ref = bd_wavefunction(s, 0, 1, 80) / std::exp(-0.25);
  for (real_t x : {0.3, 0.8, 1.4, 2.0})
    CHECK_THAT(bd_wavefunction(s, 0, x, 80), WithinAbs(ref * x * std::exp(-x * x * x * x / 4), 1e-12));
  for (real_t x : {0.5, 1.0, 1.5}) {
    auto psi = [&](double y) { return static_cast<double>(bd_wavefunction(s, 0, y, 80)); };
    const double res = -oracle::second_derivative(psi, x) + sextic_potential(s, x) * psi(x);
    CHECK(std::abs(res) < 1e-8);
  }
  CHECK(thrown_kind([&] { bd_wavefunction(s, 1, 3, 5); }) == ErrorKind::ConvergenceFailure);
}

TEST_CASE("series wavefunction at a non-QES eigenvalue is the shooting eigenfunction") {
  const SexticSpec s{0.2, 0.31, 0.54, 0};
  ShootingConfig cfg;
  cfg.max_levels = 2;
  const auto levels = radial_eigenvalues(s, cfg).energies();
  const std::vector<real_t> xs{0.4, 0.8, 1.2};
  const auto shoot = radial_wavefunction(s, levels[1], xs, cfg);
  const real_t ratio = bd_wavefunction(s, levels[1], xs[0], 120) / shoot[0].second;
  for (std::size_t i = 1; i < xs.size(); ++i)
    CHECK_THAT(bd_wavefunction(s, levels[1], xs[i], 120) / shoot[i].second, WithinAbs(ratio, 1e-6 * std::abs(ratio)));
}

TEST_CASE("anti-isospectral duality") {
  const auto sym = qes_roots({0, 0, 0.54, 0}, 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK_THAT(sym.roots[i], WithinAbs(-sym.roots[3 - i], 1e-10));
  CHECK(anti_isospectral_check({0.2, 0, 0.54, 0}, 3));
  CHECK(anti_isospectral_check({1.5, 0, 0, 0}, 2));
}

TEST_CASE("non-real roots are flagged, not thrown") {
  bool any = false;
  for (real_t l : {-2.2, -2.9, -3.2, -4.1}) {
    const auto r = qes_roots({0.1, 0, l, 0}, 4);
    if (!r.all_real) {
      any = true;
      CHECK(r.complex_roots.size() == 4);
    }
  }
  CHECK(any);
}
