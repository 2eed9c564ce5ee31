#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tammann/eos.hpp"
#include "tammann/error.hpp"

using namespace tammann;

TEST_CASE("pressure and internal energy are inverse") {
  const TammannEos water{7.15, 3.0e8, "water"};
  for (double p : {-2.0e8, 0.0, kAtmosphere, 5.0e7}) {
    const double e = internal_energy(1000.0, p, water);
    CHECK(pressure(1000.0, e, water) == doctest::Approx(p).epsilon(1e-12).scale(3e8));
  }
}

TEST_CASE("default sound speeds and impedances") {
  const MaterialTable t = MaterialTable::defaults();
  const Material& air = t.at("air");
  const Material& water = t.at("water");
  const double ca = sound_speed({air.rho_ref, 0, 0, kAtmosphere}, air.eos);
  const double cw = sound_speed({water.rho_ref, 0, 0, kAtmosphere}, water.eos);
  CHECK(ca == doctest::Approx(std::sqrt(1.4 * kAtmosphere / 1.204)));
  CHECK(cw == doctest::Approx(std::sqrt(7.15 * (3.0e8 + kAtmosphere) / 1000.0)));
  CHECK(air.rho_ref * ca == doctest::Approx(413.3).epsilon(1e-3));
  CHECK(water.rho_ref * cw == doctest::Approx(1.465e6).epsilon(1e-3));
  CHECK(t.at("plastic").eos.p_inf == 4.79e9);
}

TEST_CASE("conservative round trip matches an independent energy formula") {
  const TammannEos plastic{1.1, 4.79e9, "plastic"};
  const PrimState w{1050.0, 12.5, -3.0, 2.0e6};
  const ConsState q = prim_to_cons(w, plastic);
  const double E = (w.p + plastic.gamma * plastic.p_inf) / (plastic.gamma - 1.0) +
                   0.5 * w.rho * (w.u * w.u + w.v * w.v);
  CHECK(q.E == doctest::Approx(E).epsilon(1e-14));
  const PrimState back = cons_to_prim(q, plastic);
  CHECK(back.rho == doctest::Approx(w.rho));
  CHECK(back.u == doctest::Approx(w.u));
  CHECK(back.v == doctest::Approx(w.v));
  CHECK(back.p == doctest::Approx(w.p).epsilon(1e-6));
}

TEST_CASE("inadmissible states and bad parameters are rejected") {
  const TammannEos water{7.15, 3.0e8, "water"};
  CHECK_THROWS_AS(check_state({-1.0, 0, 0, 1e5}, water), InvalidStateError);
  CHECK_THROWS_AS(check_state({1000.0, 0, 0, -3.0e8}, water), InvalidStateError);
  CHECK_THROWS_AS(check_state({1000.0, NAN, 0, 1e5}, water), InvalidStateError);
  CHECK(is_admissible({1000.0, 0, 0, -1.0e8}, water));  // tension allowed above -p_inf
  CHECK_THROWS_AS((TammannEos{1.0, 0.0, "bad"}.validate()), ConfigError);
  CHECK_THROWS_AS((TammannEos{1.4, -1.0, "bad"}.validate()), ConfigError);
  CHECK_THROWS_AS(sound_speed({1.0, 0, 0, -1.0}, TammannEos{1.4, 0.0, "air"}), InvalidStateError);
}

TEST_CASE("isentropic density keeps the entropy function") {
  const TammannEos water{7.15, 3.0e8, "water"};
  const PrimState w{1000.0, 0.0, 0.0, kAtmosphere};
  const double rho = isentropic_density(w, 5.0e7, water);
  const oracle::Gas g{7.15, 3.0e8};
  CHECK(oracle::entropy({rho, 0, 5.0e7}, g) ==
        doctest::Approx(oracle::entropy({w.rho, 0, w.p}, g)).epsilon(1e-12));
}
