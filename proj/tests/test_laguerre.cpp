#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "landau/laguerre.hpp"

using namespace landau;

namespace {

// Independent route: the finite alternating series
//   L_n^{(a)}(x) = sum_{j=0}^{n} (-1)^j C(n+a, n-j) x^j / j!
// evaluated term by term.  magsum tracks sum |term| so callers can budget
// for the cancellation this series suffers.
struct series_result {
  double value;
  double magsum;
};

series_result laguerre_series(int n, int a, double x) {
  series_result r{0.0, 0.0};
  for (int j = 0; j <= n; ++j) {
    double term = (j % 2 == 0) ? 1.0 : -1.0;
    // C(n+a, n-j)
    for (int i = 0; i < n - j; ++i) term *= double(n + a - i) / double(n - j - i);
    for (int i = 1; i <= j; ++i) term *= x / double(i);
    r.value += term;
    r.magsum += std::abs(term);
  }
  return r;
}

}  // namespace

TEST_CASE("closed forms for tiny orders") {
  CHECK(laguerre(0, 3.7) == 1.0);
  CHECK(laguerre(1, 3.7) == doctest::Approx(1.0 - 3.7).epsilon(1e-15));
  CHECK(laguerre(2, 2.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(assoc_laguerre(1, 2, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(assoc_laguerre(0, 5, 9.0) == 1.0);
}

TEST_CASE("recurrence agrees with the alternating series for small n") {
  for (int n : {2, 5, 9, 14, 18}) {
    for (int a : {0, 1, 3, 7}) {
      for (double x : {0.1, 0.9, 2.5, 6.0}) {
        auto ref = laguerre_series(n, a, x);
        double got = assoc_laguerre(n, a, x);
        // rounding budget: the series loses digits to cancellation, the
        // recurrence itself is good to ~n ulps
        double tol = 1e-14 * ref.magsum + 1e-12 * std::abs(ref.value) + 1e-14;
        CHECK(std::abs(got - ref.value) <= tol);
      }
    }
  }
}

TEST_CASE("reference values, moderate order") {
  // high-precision reference evaluations
  CHECK(laguerre(10, 1.0) == doctest::Approx(0.41894593253968253968).epsilon(1e-14));
  CHECK(laguerre(10, 8.0) == doctest::Approx(-3.5386948853615520282).epsilon(1e-13));
  CHECK(laguerre(40, 20.0) == doctest::Approx(-90.499259344319837101).epsilon(1e-12));
  CHECK(laguerre(50, 8.0) == doctest::Approx(0.86894192137521699474).epsilon(1e-12));
  CHECK(laguerre(100, 1.0) == doctest::Approx(0.27066592099331011128).epsilon(1e-12));
  CHECK(laguerre(100, 8.0) == doctest::Approx(3.9874060173794653743).epsilon(1e-12));
  CHECK(assoc_laguerre(7, 3, 2.5) == doctest::Approx(-2.4138532366071428571).epsilon(1e-13));
  CHECK(assoc_laguerre(25, 7, 12.5) == doctest::Approx(621.38274359802496368).epsilon(1e-12));
}

TEST_CASE("scaled evaluation matches e^{-x/2} times the raw value") {
  for (int n : {0, 3, 17, 60}) {
    for (double x : {0.3, 2.0, 11.0}) {
      double want = std::exp(-x / 2) * laguerre(n, x);
      CHECK(laguerre_scaled(n, x) == doctest::Approx(want).epsilon(1e-12));
    }
  }
  CHECK(assoc_laguerre_scaled(9, 4, 5.0) ==
        doctest::Approx(std::exp(-2.5) * assoc_laguerre(9, 4, 5.0)).epsilon(1e-13));
}

TEST_CASE("scaled evaluation at very large order") {
  // reference values; the raw polynomials overflow long before these orders
  CHECK(laguerre_scaled(100, 8.0) ==
        doctest::Approx(0.073031888717088014784).epsilon(1e-12));
  CHECK(laguerre_scaled(1000, 1.0) ==
        doctest::Approx(0.093872349358775399093).epsilon(1e-11));
  CHECK(laguerre_scaled(10000, 4.0) ==
        doctest::Approx(-0.038794872176996710581).epsilon(1e-10));
  CHECK(laguerre_scaled(100000, 8.0) ==
        doctest::Approx(-0.016544599608209146439).epsilon(1e-9));
}

TEST_CASE("mantissa/exponent form reconstructs representable values") {
  for (int n : {4, 30, 90}) {
    for (int a : {0, 6}) {
      for (double x : {0.7, 5.0, 16.0}) {
        auto v = assoc_laguerre_mantexp(n, a, x);
        double raw = v.mantissa * std::exp(v.log_scale);
        CHECK(raw == doctest::Approx(assoc_laguerre(n, a, x)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("mantissa/exponent form survives where raw doubles cannot") {
  // L_200^(150)(30) ~ -3.87e76: representable, but the recurrence passes
  // through much larger intermediates relative to the scaled track.
  auto v = assoc_laguerre_mantexp(200, 150, 30.0);
  double reconstructed = v.mantissa * std::exp(v.log_scale);
  CHECK(reconstructed == doctest::Approx(-3.8745393126232580387e+76).epsilon(1e-11));

  // far beyond the spectral edge the polynomial leaves double range entirely
  auto big = assoc_laguerre_mantexp(500, 0, 3000.0);
  CHECK(std::isfinite(big.mantissa));
  CHECK(std::isfinite(big.log_scale));
  double log10_value = (std::log(std::abs(big.mantissa)) + big.log_scale) / std::log(10.0);
  CHECK(log10_value > 400.0);  // raw value would overflow
  CHECK_THROWS_AS(laguerre(500, 3000.0), std::overflow_error);
}

TEST_CASE("evaluate_laguerre returns a coherent pair") {
  auto e = evaluate_laguerre(25, 7, 12.5);
  CHECK(e.n == 25);
  CHECK(e.alpha_order == 7);
  CHECK(e.value == doctest::Approx(621.38274359802496368).epsilon(1e-12));
  CHECK(e.scaled_value == doctest::Approx(e.value * std::exp(-12.5 / 2)).epsilon(1e-12));

  // raw slot goes non-finite past double range, scaled slot stays good
  auto far = evaluate_laguerre(100000, 0, 8.0);
  CHECK(far.scaled_value == doctest::Approx(-0.016544599608209146439).epsilon(1e-9));
}

TEST_CASE("Fejer form tracks the scaled polynomial at large order") {
  for (double x : {1.0, 4.0, 8.0}) {
    for (int n : {2000, 20000}) {
      double exact = laguerre_scaled(n, x);
      double asym = std::exp(-x / 2) * fejer_asymptotic(n, x);
      // leading term decays like (n+1)^{-1/4}; the defect decays a full
      // power of sqrt(n+1) faster, so this bound is far from trivial
      CHECK(std::abs(exact - asym) * std::pow(n + 1.0, 0.75) < 3.0);
    }
  }
}

TEST_CASE("argument checking") {
  CHECK_THROWS_AS(laguerre(-1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(laguerre(3, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(laguerre(3, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(assoc_laguerre(3, -2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fejer_asymptotic(10, 0.0), std::domain_error);
  CHECK_THROWS_AS(fejer_asymptotic(10, -1.0), std::domain_error);
}
