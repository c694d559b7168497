#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "qes/model_core.hpp"
#include "qes/potential.hpp"

using Catch::Matchers::WithinAbs;
using namespace qes;

TEST_CASE("sextic energy map") {
  CHECK(sextic_energy_map({0, 0, 0}, 0) == 0);
  CHECK_THAT(sextic_energy_map({1, 2, 0}, -2), WithinAbs(12, 1e-15));
  const SexticModelSpec m{0.3, 1, 2};
  for (real_t e : {-1.7, 0.0, 2.4}) {
    CHECK_THAT(sextic_energy_map(m, e + 1) - sextic_energy_map(m, e), WithinAbs(-4, 1e-14));
    CHECK_THAT(sextic_energy_unmap(m, sextic_energy_map(m, e)), WithinAbs(e, 1e-14));
  }
}

TEST_CASE("sextic potentials as printed") {
  {
    const auto [v1, v2] = sextic_potentials({0, 0, 0});
    CHECK(v1.bc == SexticBC::PTContour);
    CHECK(v2.bc == SexticBC::HermitianRadial);
    CHECK(v1.x2_coeff() == 2);
    CHECK_THAT(v1.centrifugal(), WithinAbs(0.75, 1e-15));
    CHECK(v2.x2_coeff() == -4);
    CHECK_THAT(v2.centrifugal(), WithinAbs(-0.25, 1e-15));
    CHECK(v2.c_shift == 0);
  }
  {
    const auto [v1, v2] = sextic_potentials({0.2, 0, 2});
    CHECK_THAT(2 * v1.delta, WithinAbs(1.2, 1e-15));
    CHECK_THAT(2 * v2.delta, WithinAbs(1.2, 1e-15));
  }
  // full coefficient check against the closed forms at a generic point
  const real_t eps = -0.35, q = 1.5;
  const int M = 3;
  const auto [v1, v2] = sextic_potentials({eps, q, M});
  for (real_t x : {0.3, 0.9, 1.7}) {
    const real_t x2 = x * x;
    const real_t w1 = x2 * x2 * x2 + 6 * eps * x2 * x2 + x2 * (2 * (M - q + 1) + 9 * eps * eps) +
                      (M + q + 0.5) * (M + q + 1.5) / x2;
    const real_t w2 = x2 * x2 * x2 + 6 * eps * x2 * x2 + x2 * (-4 * M - 2 * (q + 2) + 9 * eps * eps) -
                      6 * eps * (M + 1) + (q + 0.5) * (q - 0.5) / x2;
    CHECK_THAT(sextic_potential(v1, x), WithinAbs(w1, 1e-12));
    CHECK_THAT(sextic_potential(v2, x), WithinAbs(w2, 1e-12));
  }
}

TEST_CASE("x^6 and x^4 coefficients agree between V1 and V2") {
  for (real_t eps : {-1.0, 0.0, 0.2, 1.0})
    for (real_t q : {0.0, 1.0, 2.5})
      for (int M : {0, 1, 4}) {
        const auto [v1, v2] = sextic_potentials({eps, q, M});
        CHECK(v1.delta == v2.delta);
      }
}

TEST_CASE("hyperbolic parameter map") {
  const auto b0 = hyperbolic_parameter_map({0.5, 1, 0, 0, 0});
  CHECK(b0.branch == HyperbolicBranch::Beta);
  CHECK((b0.p == 0 && b0.q == 0 && b0.m_roots == 0));
  const auto b1 = hyperbolic_parameter_map({0.5, 1, 1, 2, 3});
  CHECK((b1.p == 4 && b1.q == 5 && b1.m_roots == 3));
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (int M = 0; M <= 4; ++M) {
        const auto b = hyperbolic_parameter_map({0.25, 1, p, q, M});
        CHECK(b.m_roots <= std::min(b.p, b.q));
      }
  HyperbolicModelSpec beta{0.5, 1, 1, 1, 0, HyperbolicBranch::Beta};
  CHECK(thrown_kind([&] { hyperbolic_parameter_map(beta); }) == ErrorKind::InvalidParameter);
  beta.m_roots = 2;
  CHECK(thrown_kind([&] { validate(beta); }) == ErrorKind::InvalidSector);
}

TEST_CASE("herm_pt_swap: involution and pointwise identity") {
  const HyperbolicSpec s{2, -0.5, -1.5, -1, 0.3, HyperbolicBC::RealLineEven};
  const auto t = herm_pt_swap(s);
  CHECK(t.b_pole == -1.5);
  CHECK(t.c_pole == -0.5);
  CHECK(t.gamma == 1);
  CHECK(t.bc == HyperbolicBC::PTShifted);
  CHECK(herm_pt_swap(t) == s);

  const complex_t ipi(0, pi);
  for (real_t m : {0.0, 2.0}) {
    const complex_t lhs = hyperbolic_potential(s, m, complex_t(1));
    const complex_t rhs = hyperbolic_potential(t, m, complex_t(1) + ipi);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }

  const HyperbolicSpec g{2, 0.7, -0.2, -1, 0, HyperbolicBC::HalfLine};
  const auto gs = herm_pt_swap(g);
  CHECK(herm_pt_swap(gs) == g);
  for (int i = 1; i <= 6; ++i) {
    const real_t x = 0.5 * i;
    const complex_t d = hyperbolic_potential(g, 0.0, complex_t(x)) - hyperbolic_potential(gs, 0.0, complex_t(x) + ipi);
    CHECK(std::abs(d) < 1e-12);
  }
}

TEST_CASE("natural boundary conditions from B") {
  CHECK(natural_bc(-0.5) == HyperbolicBC::RealLineEven);
  CHECK(natural_bc(-1.5) == HyperbolicBC::RealLineOdd);
  CHECK(natural_bc(-2) == HyperbolicBC::HalfLine);
}

TEST_CASE("evaluate_potential") {
  CHECK(evaluate_potential(SexticSpec{}, complex_t(1)) == complex_t(1));
  const SexticSpec cent{0, 0, 0.5, 0};
  CHECK(thrown_kind([&] { evaluate_potential(cent, complex_t(0)); }) == ErrorKind::SingularPoint);
  CHECK(evaluate_potential(SexticSpec{}, complex_t(0)) == complex_t(0));

  // B = -1/2 removes the (cosh x - 1) pole: finite at the origin
  const HyperbolicSpec h{2, -0.5, 0.5, -1, 0, HyperbolicBC::RealLineEven};
  CHECK(std::isfinite(evaluate_potential(h, 1.0, complex_t(0)).real()));
  CHECK_THAT(hyperbolic_potential(h, 1.0, 1e-9), WithinAbs(hyperbolic_regular_at_origin(h, 1.0), 1e-8));
  const HyperbolicSpec singular{2, 0.5, 0.5, -1, 0};
  CHECK(thrown_kind([&] { evaluate_potential(singular, 1.0, complex_t(0)); }) == ErrorKind::SingularPoint);

  // the M-dependent block written out
  const HyperbolicSpec k{2, 0.7, -0.2, -1.3, 0.4};
  const real_t A = 2, B = 0.7, C = -0.2, gm = -1.3, M = 1.6;
  for (real_t x : {0.4, 1.1, 2.5}) {
    const real_t ch = std::cosh(x), sh = std::sinh(x);
    const real_t v = M * (M - B - C + A * gm / 2 * ch - 1) + (B + C + 1) * (B + C + 1) / 4 +
                     A * A * gm * gm / 16 * sh * sh + A * gm * (C - B) / 4 - A * gm * (B + C) / 4 * ch +
                     (2 * B + 1) * (2 * B + 3) / (8 * (ch - 1)) - (2 * C + 1) * (2 * C + 3) / (8 * (ch + 1)) + 0.4;
    CHECK_THAT(evaluate_potential(k, M, complex_t(x)).real(), WithinAbs(v, 1e-11));
  }
}

TEST_CASE("model validation") {
  CHECK(thrown_kind([] { validate(SexticModelSpec{0, -1, 0}); }) == ErrorKind::InvalidParameter);
  CHECK(thrown_kind([] { validate(SexticModelSpec{0, 0, -1}); }) == ErrorKind::InvalidParameter);
  CHECK(thrown_kind([] { validate(HyperbolicModelSpec{0, 0, 0, 0, 0}); }) == ErrorKind::InvalidParameter);
  CHECK_FALSE(thrown_kind([] { validate(HyperbolicModelSpec{0.2, 1, 1, 2, 3}); }));
}
