#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <vector>

#include "landau/errors.hpp"
#include "landau/transitions.hpp"

using namespace landau;
using cplx = std::complex<double>;

namespace {

// Independent oracle for displacement matrix elements, kept deliberately
// dumb: build the generator alpha a^dag - conj(alpha) a on a truncated basis
// as a plain vector-of-vectors and exponentiate it by scaling and squaring
// with a straight Taylor series.  No shared code with the library.
using mat = std::vector<std::vector<cplx>>;

mat mat_mul(const mat& a, const mat& b) {
  std::size_t n = a.size();
  mat c(n, std::vector<cplx>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      cplx aik = a[i][k];
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

mat taylor_expm(const mat& g) {
  std::size_t n = g.size();
  // crude norm estimate for the scaling step
  double norm = 0.0;
  for (const auto& row : g) {
    double s = 0.0;
    for (const auto& v : row) s += std::abs(v);
    norm = std::max(norm, s);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  mat scaled(n, std::vector<cplx>(n));
  double factor = std::ldexp(1.0, -squarings);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled[i][j] = g[i][j] * factor;

  mat result(n, std::vector<cplx>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = 1.0;
  mat term = result;
  for (int k = 1; k <= 60; ++k) {
    term = mat_mul(term, scaled);
    for (auto& row : term)
      for (auto& v : row) v /= double(k);
    double largest = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        result[i][j] += term[i][j];
        largest = std::max(largest, std::abs(term[i][j]));
      }
    if (largest < 1e-19) break;
  }
  for (int s = 0; s < squarings; ++s) result = mat_mul(result, result);
  return result;
}

mat displacement_oracle(int dim, cplx alpha) {
  mat g(dim, std::vector<cplx>(dim, 0.0));
  for (int i = 0; i + 1 < dim; ++i) {
    double r = std::sqrt(double(i + 1));
    g[i + 1][i] += alpha * r;              // alpha a^dag
    g[i][i + 1] -= std::conj(alpha) * r;   // -conj(alpha) a
  }
  return taylor_expm(g);
}

}  // namespace

TEST_CASE("survival special values") {
  // P(0 -> 0) = e^{-x}
  for (double x : {0.1, 1.0, 5.0}) {
    auto r = survival(0, x);
    CHECK(r.survival == doctest::Approx(std::exp(-x)).epsilon(1e-14));
  }
  // L_1(1) = 0: exact extinction
  CHECK(survival(1, 1.0).survival <= 1e-28);
  // no drive, no transition
  auto idle = survival(7, 0.0);
  CHECK(idle.survival == 1.0);
  CHECK(idle.transition == 0.0);
}

TEST_CASE("survival reference values at high level") {
  CHECK(survival(2, 1.0).survival ==
        doctest::Approx(0.09196986029286058).epsilon(1e-13));
  CHECK(survival(10, 8.0).survival ==
        doctest::Approx(0.0042007842935455354238).epsilon(1e-12));
  CHECK(survival(100, 1.0).survival ==
        doctest::Approx(0.026950862864976311804).epsilon(1e-11));
  CHECK(survival(100, 8.0).survival ==
        doctest::Approx(0.0053336567695851276779).epsilon(1e-11));
}

TEST_CASE("survival bookkeeping is exact") {
  auto r = survival(2, 2.0);
  // L_2(2) = -1: amplitude modulus e^{-1}, negative sign
  CHECK(r.amplitude_modulus == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(r.amplitude_sign == -1);
  CHECK(r.survival == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  // transition is literally 1 - survival
  CHECK(r.transition == 1.0 - r.survival);
  // survival is the squared modulus
  CHECK(r.survival == doctest::Approx(r.amplitude_modulus * r.amplitude_modulus).epsilon(1e-15));
}

TEST_CASE("gamma is a spectator phase, bit for bit") {
  for (int n : {0, 3, 25}) {
    for (double x : {0.3, 2.0, 9.0}) {
      auto plain = survival(n, x, 0.0);
      auto phased = survival(n, x, 1.234);
      CHECK(std::memcmp(&plain.survival, &phased.survival, sizeof(double)) == 0);
      CHECK(std::memcmp(&plain.transition, &phased.transition, sizeof(double)) == 0);
      CHECK(phased.gamma == 1.234);
    }
  }
}

TEST_CASE("Fejer survival estimate") {
  CHECK(survival_fejer(100, 8.0) ==
        doctest::Approx(0.0087791002609881013362).epsilon(1e-12));
  // consistency between the two asymptotic forms on a grid
  for (int n : {50, 400}) {
    for (double x : {2.0, 8.0}) {
      double via_amp = std::pow(std::cos(2.0 * std::sqrt((n + 1.0) * x) - M_PI / 4.0), 2) /
                       (M_PI * std::sqrt(x) * std::sqrt(n + 1.0));
      CHECK(survival_fejer(n, x) == doctest::Approx(via_amp).epsilon(1e-13));
    }
  }
}

TEST_CASE("small-x transition probabilities grow linearly with 2n+1") {
  // reference values at x = 0.01
  double expected[4] = {0.0099501662508319464, 0.029652157942440391,
                        0.049059112308466999, 0.068174304813253414};
  for (int n = 0; n < 4; ++n) {
    auto r = survival(n, 0.01);
    CHECK(r.transition == doctest::Approx(expected[n]).epsilon(1e-12));
  }
  // leading order: transition ~ (2n+1) x as x -> 0
  for (int n = 0; n < 4; ++n) {
    auto r = survival(n, 1e-6);
    CHECK(r.transition / ((2.0 * n + 1.0) * 1e-6) == doctest::Approx(1.0).epsilon(1e-4));
  }
}

TEST_CASE("displacement argument convention") {
  physical_params p;
  auto sc = derive_scales(p);
  cplx u{0.25, -0.5};
  cplx a = displacement_argument(u, sc);
  CHECK(a == -std::conj(u) * sc.k);
  // x and |alpha|^2 agree
  CHECK(std::norm(a) == doctest::Approx(intensity(u, sc)).epsilon(1e-15));
}

TEST_CASE("displacement elements: identity at alpha = 0") {
  CHECK(displacement_element(3, 3, 0.0) == cplx(1.0, 0.0));
  CHECK(displacement_element(2, 5, 0.0) == cplx(0.0, 0.0));
}

TEST_CASE("displacement elements: reference magnitudes") {
  cplx alpha{0.7, 0.4};
  CHECK(std::abs(displacement_element(0, 0, alpha)) ==
        doctest::Approx(0.72252735364207218912).epsilon(1e-13));
  CHECK(std::abs(displacement_element(3, 1, alpha)) ==
        doctest::Approx(0.45056752572242070283).epsilon(1e-13));
  CHECK(std::abs(displacement_element(1, 3, alpha)) ==
        doctest::Approx(0.45056752572242070283).epsilon(1e-13));
  CHECK(std::abs(displacement_element(7, 4, alpha)) ==
        doctest::Approx(0.4278097578530971868).epsilon(1e-13));
  CHECK(std::abs(displacement_element(12, 12, alpha)) ==
        doctest::Approx(0.056558873748623464395).epsilon(1e-12));
  CHECK(std::abs(displacement_element(25, 20, alpha)) ==
        doctest::Approx(0.24494977994211734591).epsilon(1e-12));
}

TEST_CASE("displacement elements match a brute-force matrix exponential") {
  cplx alpha{0.7, 0.4};
  int dim = 48;
  auto d = displacement_oracle(dim, alpha);
  for (int n : {0, 3, 9}) {
    for (int m = 0; m < 24; ++m) {
      cplx closed = displacement_element(m, n, alpha);
      CHECK(std::abs(closed - d[m][n]) < 1e-12);
    }
  }
}

TEST_CASE("displacement element symmetries") {
  cplx alpha{-0.35, 0.8};
  for (int m : {0, 2, 6, 13}) {
    for (int n : {1, 5, 12}) {
      // |<m|D|n>| = |<n|D|m>|
      CHECK(std::abs(displacement_element(m, n, alpha)) ==
            doctest::Approx(std::abs(displacement_element(n, m, alpha))).epsilon(1e-14));
      // D(alpha)^dag = D(-alpha): <m|D(a)|n> = conj(<n|D(-a)|m>)
      cplx lhs = displacement_element(m, n, alpha);
      cplx rhs = std::conj(displacement_element(n, m, -alpha));
      CHECK(std::abs(lhs - rhs) < 1e-14);
    }
  }
  // rotating alpha leaves every magnitude alone
  for (double theta : {M_PI / 7.0, 1.0}) {
    cplx rot = alpha * std::polar(1.0, theta);
    for (int m : {0, 4, 11}) {
      for (int n : {2, 7}) {
        CHECK(std::abs(displacement_element(m, n, rot)) ==
              doctest::Approx(std::abs(displacement_element(m, n, alpha))).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("displacement columns are unit vectors") {
  cplx alpha{1.3 * std::cos(0.4), 1.3 * std::sin(0.4)};
  for (int n : {0, 5, 40}) {
    double sum = 0.0;
    int m_hi = default_m_max(n, std::norm(alpha));
    for (int m = 0; m <= m_hi; ++m) sum += std::norm(displacement_element(m, n, alpha));
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("diagonal displacement element reproduces the survival amplitude") {
  cplx alpha{-1.1, 2.3};
  double x = std::norm(alpha);
  for (int n : {0, 1, 17, 64}) {
    double via_element = std::norm(displacement_element(n, n, alpha));
    CHECK(via_element == doctest::Approx(survival(n, x).survival).epsilon(1e-12));
  }
}

TEST_CASE("transition matrix bookkeeping") {
  cplx alpha{2.0, -1.5};
  auto t = transition_matrix(10, alpha);
  CHECK(t.n_source == 10);
  CHECK(int(t.probabilities.size()) == t.m_max + 1);
  CHECK(t.row_sum >= 1.0 - 1e-10);
  CHECK(t.row_sum <= 1.0 + 1e-12);
  CHECK(t.tail_mass == doctest::Approx(1.0 - t.row_sum).epsilon(1e-15));
  CHECK(t.diagonal == doctest::Approx(t.probabilities[10]).epsilon(1e-15));
  double up = 0.0, down = 0.0;
  for (int m = 0; m < 10; ++m) down += t.probabilities[m];
  for (int m = 11; m <= t.m_max; ++m) up += t.probabilities[m];
  CHECK(t.up_mass == doctest::Approx(up).epsilon(1e-13));
  CHECK(t.down_mass == doctest::Approx(down).epsilon(1e-13));
  for (double p : t.probabilities) {
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }
  CHECK(t.diagonal == doctest::Approx(survival(10, std::norm(alpha)).survival).epsilon(1e-12));
}

TEST_CASE("transition matrix raises m_max on demand and fails honestly at a hard cap") {
  cplx alpha{std::sqrt(8.0), 0.0};
  transition_settings s;
  s.m_max = 8;  // far too small for x = 8; must be raised automatically
  auto t = transition_matrix(0, alpha, s);
  CHECK(t.m_max > 8);
  CHECK(t.tail_mass <= s.tail_tolerance);

  transition_settings hard;
  hard.m_max = 4;
  hard.m_cap = 6;
  CHECK_THROWS_AS(transition_matrix(0, alpha, hard), truncation_error);
}

TEST_CASE("level sweep matches individual survival calls") {
  auto rows = sweep_over_levels(1.0, 0, 40);
  REQUIRE(rows.size() == 41);
  for (int n = 0; n <= 40; ++n) {
    CHECK(rows[n].index == double(n));
    auto direct = survival(n, 1.0);
    CHECK(rows[n].survival == doctest::Approx(direct.survival).epsilon(1e-13));
    CHECK(rows[n].transition == doctest::Approx(direct.transition).epsilon(1e-13));
    CHECK(rows[n].fejer_survival ==
          doctest::Approx(survival_fejer(n, 1.0)).epsilon(1e-13));
    CHECK(rows[n].fejer_transition ==
          doctest::Approx(1.0 - survival_fejer(n, 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("level sweep golden values at x = 1") {
  auto rows = sweep_over_levels(1.0, 0, 2);
  CHECK(rows[0].survival == doctest::Approx(0.36787944117144233).epsilon(1e-14));
  CHECK(rows[0].transition == doctest::Approx(0.6321205588285577).epsilon(1e-14));
  CHECK(rows[0].fejer_transition == doctest::Approx(0.9612939149806423).epsilon(1e-13));
  CHECK(rows[1].survival <= 1e-28);
  CHECK(rows[1].transition == 1.0);
  CHECK(rows[2].survival == doctest::Approx(0.09196986029286058).epsilon(1e-13));
  CHECK(rows[2].fejer_transition == doctest::Approx(0.8528675228792206).epsilon(1e-13));
}

TEST_CASE("sweeps at zero intensity leave the asymptotic columns undefined") {
  auto rows = sweep_over_levels(0.0, 0, 3);
  for (const auto& r : rows) {
    CHECK(r.survival == 1.0);
    CHECK(r.transition == 0.0);
    CHECK(std::isnan(r.fejer_survival));
    CHECK(std::isnan(r.fejer_transition));
  }
}

TEST_CASE("intensity sweep") {
  std::vector<double> xs{0.0, 0.5, 1.0, 2.5};
  auto rows = sweep_over_intensity(2, xs);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(rows[i].index == xs[i]);
    if (xs[i] > 0.0) {
      CHECK(rows[i].survival ==
            doctest::Approx(survival(2, xs[i]).survival).epsilon(1e-13));
      CHECK(rows[i].fejer_survival ==
            doctest::Approx(survival_fejer(2, xs[i])).epsilon(1e-13));
    } else {
      CHECK(std::isnan(rows[i].fejer_survival));
    }
  }
}

TEST_CASE("invalid arguments are rejected") {
  CHECK_THROWS_AS(survival(-1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(survival(0, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(displacement_element(-1, 0, cplx(0.1, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(transition_matrix(-3, cplx(1.0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(sweep_over_levels(1.0, 5, 3), std::invalid_argument);
}
