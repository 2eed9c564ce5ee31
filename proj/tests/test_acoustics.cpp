#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "tammann/acoustics.hpp"
#include "tammann/error.hpp"

using namespace tammann;

TEST_CASE("interface coefficients: limits and the pressure-continuity identity") {
  auto [t, r] = interface_coefficients(4.0e5, 4.0e5);
  CHECK(t == 1.0);
  CHECK(r == 0.0);
  std::tie(t, r) = interface_coefficients(415.0, std::numeric_limits<double>::infinity());
  CHECK(t == 2.0);
  CHECK(r == 1.0);
  std::tie(t, r) = interface_coefficients(415.0, 1.465e6);
  CHECK(t == doctest::Approx(1.99943).epsilon(1e-5));
  CHECK(1.0 + r == doctest::Approx(t));
  CHECK_THROWS_AS(interface_coefficients(0.0, 1.0), ConfigError);
}

TEST_CASE("layer series matches explicit bounce bookkeeping and its closed form") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> lz(std::log(10.0), std::log(1e7));
  for (int k = 0; k < 50; ++k) {
    const double za = std::exp(lz(rng)), zp = std::exp(lz(rng)), zw = std::exp(lz(rng));
    for (int n : {1, 2, 7, 30})
      CHECK(partial_transmission(za, zp, zw, n) ==
            doctest::Approx(oracle::bounce_sum(za, zp, zw, n)).epsilon(1e-12));
  }
  // Realistic layer: the series converges to the no-layer value.
  const double za = 413.0, zp = 2.33e6, zw = 1.465e6;
  CHECK(partial_transmission(za, zp, zw, 20000) ==
        doctest::Approx(total_transmission(za, zw)).epsilon(1e-6));
  CHECK(nth_transmission(za, zp, zw, 1) ==
        doctest::Approx((2 * zw / (zw + zp)) * (2 * zp / (zp + za))));
  CHECK_THROWS_AS(nth_transmission(za, zp, zw, 0), ConfigError);
}

TEST_CASE("reverberation time of a thin plastic layer") {
  CHECK(reverberation_time(0.1, 2240.0) == doctest::Approx(8.93e-5).epsilon(1e-3));
  CHECK(reverberation_time(0.0, 2240.0) == 0.0);
  CHECK_THROWS_AS(reverberation_time(-1.0, 2240.0), ConfigError);
}

TEST_CASE("acoustic medium from the equation of state") {
  const AcousticMedium w = acoustic_medium(1000.0, kAtmosphere, {7.15, 3.0e8, "water"});
  CHECK(w.c == doctest::Approx(std::sqrt(7.15 * (kAtmosphere + 3.0e8) / 1000.0)));
  CHECK(w.impedance() == doctest::Approx(1000.0 * w.c));
}
