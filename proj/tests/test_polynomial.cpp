#include <catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "qes/polynomial.hpp"
#include "qes/tridiagonal.hpp"

using Catch::Matchers::WithinAbs;
using namespace qes;

TEST_CASE("poly_eval uses ascending coefficients") {
  const std::vector<real_t> p{1, -3, 2};  // 2x^2 - 3x + 1
  CHECK(poly_eval(p, 0.0) == 1);
  CHECK(poly_eval(p, 1.0) == 0);
  CHECK(poly_eval(p, 0.5) == 0);
  CHECK_THAT(poly_eval(p, 2.0), WithinAbs(3, 1e-15));
}

TEST_CASE("derivative and product") {
  const std::vector<real_t> a{1, 1}, b{-1, 1};
  const auto ab = poly_multiply(a, b);
  REQUIRE(ab.size() == 3);
  CHECK(ab[0] == -1);
  CHECK(ab[1] == 0);
  CHECK(ab[2] == 1);
  const auto d = poly_derivative(ab);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 0);
  CHECK(d[1] == 2);
  CHECK(poly_derivative(std::vector<real_t>{5}).front() == 0);
}

TEST_CASE("roots of a product of known linear factors") {
  std::vector<real_t> p{1};
  const std::vector<real_t> want{-3.5, -1, 0.25, 2, 7};
  for (real_t r : want) p = poly_multiply(p, std::vector<real_t>{-r, 1});
  std::vector<complex_t> got = poly_roots(p), ref;
  for (real_t r : want) ref.push_back(r);
  CHECK(multiset_distance(got, ref) < 1e-10);
}

TEST_CASE("complex conjugate roots") {
  const auto r = poly_roots({5, -2, 1});  // (x - 1)^2 + 4
  CHECK(multiset_distance(r, {complex_t(1, 2), complex_t(1, -2)}) < 1e-12);
}

TEST_CASE("multiset distance ignores order and flags size mismatch") {
  CHECK(multiset_distance(std::vector<real_t>{3, 1, 2}, std::vector<real_t>{1, 2, 3}) == 0);
  CHECK(std::isinf(multiset_distance(std::vector<real_t>{1}, std::vector<real_t>{1, 2})));
}

TEST_CASE("tridiagonal eigenvalues: closed forms and a dense oracle") {
  CHECK(tridiagonal_eigenvalues({0}, {}) == std::vector<real_t>{0});
  const real_t a = 1.5, d = -0.25, b = 0.7;
  const auto two = tridiagonal_eigenvalues({a, d}, {b});
  const real_t mid = (a + d) / 2, rad = std::sqrt((a - d) * (a - d) / 4 + b * b);
  CHECK_THAT(two[0], WithinAbs(mid - rad, 1e-14));
  CHECK_THAT(two[1], WithinAbs(mid + rad, 1e-14));

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  std::vector<real_t> diag(10), off(9);
  for (auto& x : diag) x = u(rng);
  for (auto& x : off) x = u(rng);
  const auto ev = tridiagonal_eigenvalues(diag, off);
  REQUIRE(std::is_sorted(ev.begin(), ev.end()));
  real_t trace = 0, sum = 0;
  for (real_t x : diag) trace += x;
  for (real_t x : ev) sum += x;
  CHECK_THAT(sum, WithinAbs(trace, 1e-10));

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(10, 10);
  for (int i = 0; i < 10; ++i) m(i, i) = diag[i];
  for (int i = 0; i < 9; ++i) m(i, i + 1) = m(i + 1, i) = off[i];
  CHECK(oracle::max_abs_diff(ev, oracle::dense_eigenvalues(m)) < 1e-12);
}
