#include <doctest.h>

#include <cmath>
#include <random>

#include "tammann/error.hpp"
#include "tammann/solver1d.hpp"
#include "tammann/solver2d.hpp"

using namespace tammann;

namespace {

const TammannEos kAir{1.4, 0.0, "air"};
const TammannEos kWater{7.15, 3.0e8, "water"};

MaterialSet one(const TammannEos& e) {
  MaterialSet m;
  m.add(e.label, e, e.p_inf > 0.0);
  return m;
}

Mapping circular() {
  Mapping m;
  m.kind = MappingKind::circular_inclusion;
  m.circle.branch = OuterBranch::automatic;
  return m;
}

const Boundaries2D kOpen{BoundaryKind::outflow, BoundaryKind::outflow, BoundaryKind::wall,
                         BoundaryKind::outflow};

} // namespace

TEST_CASE("transverse splitting: equal sound speeds and vertical normals") {
  const double c = 340.0, a1 = 2.5;
  const auto t = transverse_fluctuations({a1, 0, 0, 0}, c, c, c, {0, 1}, {0, 1});
  CHECK(t.up[0] == doctest::Approx(c * a1 / 2));
  CHECK(t.up[1] == 0.0);
  CHECK(t.up[2] == doctest::Approx(c * a1 / 2 * c));
  CHECK(t.up[3] == 0.0);
  CHECK(t.down[0] == doctest::Approx(-c * a1 / 2));
  CHECK(t.down[2] == doctest::Approx(c * a1 / 2 * c));
}

TEST_CASE("transverse splitting is linear in the fluctuation") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const Vec4 a{u(rng), u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng), u(rng)};
    const double s = 3.0 * u(rng);
    const std::array<double, 2> n2{0.6, 0.8}, n3{-0.28, 0.96};
    const auto ta = transverse_fluctuations(a, 300, 1500, 2400, n2, n3, 4e5, 5e7);
    const auto tb = transverse_fluctuations(b, 300, 1500, 2400, n2, n3, 4e5, 5e7);
    const auto tab = transverse_fluctuations(a + s * b, 300, 1500, 2400, n2, n3, 4e5, 5e7);
    for (int m = 0; m < 4; ++m) {
      CHECK(tab.up[m] == doctest::Approx(ta.up[m] + s * tb.up[m]).scale(1e3));
      CHECK(tab.down[m] == doctest::Approx(ta.down[m] + s * tb.down[m]).scale(1e3));
    }
  }
}

TEST_CASE("axisymmetric source: no-op at zero radial velocity, midpoint order otherwise") {
  const ConsState q = prim_to_cons({1.2, 30.0, 0.0, 2e5}, kAir);
  CHECK(axisymmetric_source_step(q, kAir, 0.01, 1e-4) == q);
  const ConsState m = prim_to_cons({1.2, 0.0, 20.0, 2e5}, kAir);
  // Halving dt reduces the one-step error against a fine reference by ~8.
  auto fine = [&](double dt) {
    ConsState s = m;
    for (int k = 0; k < 256; ++k) s = axisymmetric_source_step(s, kAir, 0.01, dt / 256);
    return s;
  };
  const double e1 = std::abs(axisymmetric_source_step(m, kAir, 0.01, 2e-5).rho - fine(2e-5).rho);
  const double e2 = std::abs(axisymmetric_source_step(m, kAir, 0.01, 1e-5).rho - fine(1e-5).rho);
  CHECK(e1 / e2 > 6.0);
}

TEST_CASE("mapped grid preserves a uniform stream") {
  for (bool axi : {false, true}) {
    Numerics num;
    num.axisymmetric = axi;
    MappedGrid2D g(64, 32, -1.0, 1.0, 0.0, 1.0, circular());
    Solver2D s(g, one(kWater), num, kOpen);
    // Axial flow only: v = 0 keeps the wall and the source inert.
    s.initialize([](double, double, int) { return PrimState{1000.0, 5.0, 0.0, 2e5}; });
    const ConsState ref = s.cons(10, 10);
    for (int k = 0; k < 100; ++k) s.advance(1.0);
    double worst = 0.0;
    for (int j = 0; j < 32; ++j)
      for (int i = 0; i < 64; ++i) {
        const ConsState q = s.cons(i, j);
        worst = std::max({worst, std::abs(q.rho - ref.rho) / ref.rho,
                          std::abs(q.mu - ref.mu) / ref.mu, std::abs(q.mv) / ref.mu,
                          std::abs(q.E - ref.E) / ref.E});
      }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("a y-uniform planar problem reproduces the 1D solver") {
  const int n = 200;
  Numerics num;
  num.axisymmetric = false;
  auto init = [](double x) {
    return x < 0.3 ? PrimState{2.0, 100.0, 0.0, 3e5} : PrimState{1.2, 0.0, 0.0, 1e5};
  };
  Solver1D s1(Grid1D(0.0, 1.0, n), one(kAir), num);
  s1.initialize([&](double x, int) { return init(x); });
  Solver2D s2(MappedGrid2D(n, 4, 0.0, 1.0, 0.0, 0.02, Mapping{}), one(kAir), num,
              {BoundaryKind::outflow, BoundaryKind::outflow, BoundaryKind::wall, BoundaryKind::wall});
  s2.initialize([&](double x, double, int) { return init(x); });
  const double dt = 0.8 * s1.cfl_dt(1.0);
  for (int k = 0; k < 60; ++k) {
    s1.step(dt);
    s2.step(dt);
  }
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < n; ++i) {
      CHECK(s2.prim(i, j).p == doctest::Approx(s1.prim(i).p).epsilon(1e-12));
      CHECK(std::abs(s2.prim(i, j).v) < 1e-9);
    }
}

TEST_CASE("periodic 2D run conserves the capacity-weighted totals") {
  Numerics num;
  num.axisymmetric = false;
  MappedGrid2D g(32, 32, 0.0, 1.0, 0.0, 1.0, Mapping{});
  Solver2D s(g, one(kAir), num,
             {BoundaryKind::periodic, BoundaryKind::periodic, BoundaryKind::periodic,
              BoundaryKind::periodic});
  s.initialize([](double x, double y, int) {
    return PrimState{1.0 + 0.3 * std::sin(2 * M_PI * x) * std::cos(2 * M_PI * y), 0.4, -0.2, 1.0};
  });
  const Vec4 a = s.totals();
  s.run(0.2);
  const Vec4 b = s.totals();
  for (int m = 0; m < 4; ++m) CHECK(b[m] == doctest::Approx(a[m]).epsilon(1e-12).scale(1.0));
}

TEST_CASE("2D solver rejects bad settings") {
  Numerics num;
  MappedGrid2D g(8, 8, 0.0, 1.0, -0.5, 0.5, Mapping{});
  CHECK_THROWS_AS(Solver2D(g, one(kAir), num, kOpen), ConfigError);  // centroids at y <= 0
  num.axisymmetric = false;
  CHECK_THROWS_AS(Solver2D(g, one(kAir), num,
                           {BoundaryKind::periodic, BoundaryKind::wall, BoundaryKind::wall,
                            BoundaryKind::wall}),
                  ConfigError);
  Solver2D s(g, one(kAir), num, kOpen);
  s.initialize([](double, double, int) { return PrimState{1.0, 1.0, 0.0, 1.0}; });
  CHECK_THROWS_AS(s.step(10.0), NumericalError);
}
