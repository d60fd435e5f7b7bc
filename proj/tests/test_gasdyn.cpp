#include <cmath>

#include "doctest.h"
#include "tcfv/error.hpp"
#include "tcfv/oblique.hpp"
#include "tcfv/vortex.hpp"
#include "test_support.hpp"

using namespace tcfv;
using tcfv::test::random_state;

TEST_CASE("primitive/conserved conversions") {
  SUBCASE("hand values") {
    const ConsState q = prim_to_cons({1.0, 1.0, 0.0, 1.0});
    CHECK(q.rho == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(q.rho_u == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(q.rho_v == 0.0);
    CHECK(q.rho_E == doctest::Approx(3.0).epsilon(1e-14));  // 1/0.4 + 1/2

    const ConsState rest = prim_to_cons({1.0, 0.0, 0.0, 1.0});
    CHECK(rest.rho_E == doctest::Approx(2.5).epsilon(1e-14));
  }
  SUBCASE("round trip on random valid states") {
    for (int k = 0; k < 1000; ++k) {
      const PrimState w = random_state();
      const PrimState back = cons_to_prim(prim_to_cons(w));
      CHECK(tcfv::test::close(back.rho, w.rho, 1e-14));
      CHECK(tcfv::test::close(back.u, w.u, 1e-14, 1e-14));
      CHECK(tcfv::test::close(back.v, w.v, 1e-14, 1e-14));
      CHECK(tcfv::test::close(back.p, w.p, 1e-14));
    }
  }
  SUBCASE("invalid states rejected") {
    CHECK_THROWS_AS(prim_to_cons({-1.0, 0.0, 0.0, 1.0}), InvalidStateError);
    CHECK_THROWS_AS(prim_to_cons({1.0, 0.0, 0.0, 0.0}), InvalidStateError);
    // kinetic energy exceeding total energy means negative pressure
    CHECK_THROWS_AS(cons_to_prim({1.0, 10.0, 0.0, 1.0}), InvalidStateError);
  }
}

TEST_CASE("oblique shock exact relations") {
  SUBCASE("M=3 beta=30") {
    const ObliqueShockSolution s = oblique_shock_exact(3.0, 30.0);
    CHECK(tcfv::test::close(s.pressure_ratio, 2.45833333, 1e-8));
    CHECK(std::abs(s.deflection_deg - 12.77) < 0.01);
    CHECK(tcfv::test::close(s.density_ratio, 1.8620690, 1e-6));  // 5.4/2.9
  }
  SUBCASE("all nine table rows") {
    const struct {
      double mach, beta, pr;
    } rows[] = {
        {3.0, 30.0, 2.45833333},         {3.85672566, 30.0, 4.17168040},
        {4.59626666, 30.0, 5.99498626},  {2.33358574, 40.0, 2.45833333},
        {3.0, 40.0, 4.17168040},         {3.57526078, 40.0, 5.99498626},
        {1.958110935, 50.0, 2.45833333}, {2.517298895, 50.0, 4.17168040},
        {3.0, 50.0, 5.99498626},
    };
    for (const auto& r : rows)
      CHECK(tcfv::test::close(oblique_shock_exact(r.mach, r.beta).pressure_ratio, r.pr, 1e-6));
  }
  SUBCASE("subsonic normal Mach rejected") {
    CHECK_THROWS_AS(oblique_shock_exact(1.5, 30.0), ConfigError);  // Mn = 0.75
  }
  SUBCASE("mass flux continuous across the jump") {
    for (double beta : {30.0, 40.0, 50.0})
      for (double mach : {2.1, 3.0, 4.5}) {
        ShockSpec spec{mach, beta, 0.0, {0.0, 0.0}, {1.0, std::tan(beta * M_PI / 180.0)}};
        const PrimState w1 = upstream_state(spec);
        const PrimState w2 = downstream_state(spec);
        // Shock-normal direction for a line through the origin at angle beta.
        const double b = beta * M_PI / 180.0;
        const Vec2 n{std::sin(b), -std::cos(b)};
        const double flux1 = w1.rho * (w1.u * n.x + w1.v * n.y);
        const double flux2 = w2.rho * (w2.u * n.x + w2.v * n.y);
        CHECK(tcfv::test::close(flux1, flux2, 1e-10));
      }
  }
}

TEST_CASE("shock field classification") {
  StructuredMesh mesh = build_uniform_mesh(0.0, 1.0, 0.0, 1.0, 10, 10);
  SUBCASE("aligned vertical shock splits at x=0.5") {
    ShockSpec spec{3.0, 30.0, 60.0, {0.5, 0.0}, {0.5, 1.0}};
    const PrimField w = shock_field(spec, mesh);
    const PrimState up = upstream_state(spec);
    const PrimState down = downstream_state(spec);
    for (int j = 0; j < 10; ++j)
      for (int i = 0; i < 10; ++i) {
        const bool is_up = mesh.center(i, j).x < 0.5;
        CHECK(w(i, j).rho == (is_up ? up.rho : down.rho));
      }
  }
  SUBCASE("classification matches a signed-distance oracle") {
    for (int k = 0; k < 1000; ++k) {
      ShockSpec spec{3.0, tcfv::test::uniform(25.0, 55.0), tcfv::test::uniform(-20.0, 20.0)};
      spec.p1 = {tcfv::test::uniform(0.0, 1.0), tcfv::test::uniform(0.0, 1.0)};
      const double ang = spec.grid_angle_deg() * M_PI / 180.0;
      spec.p2 = spec.p1 + Vec2{std::cos(ang), std::sin(ang)};

      const double px = tcfv::test::uniform(-1.0, 2.0);
      const double py = tcfv::test::uniform(-1.0, 2.0);
      // Signed distance along the flow-facing normal of the line.
      const Vec2 d = spec.p2 - spec.p1;
      const double len = std::hypot(d.x, d.y);
      Vec2 n{d.y / len, -d.x / len};
      const double fa = spec.flow_angle_deg * M_PI / 180.0;
      if (n.x * std::cos(fa) + n.y * std::sin(fa) < 0.0) n = -1.0 * n;
      const double dist = (px - spec.p1.x) * n.x + (py - spec.p1.y) * n.y;
      if (std::abs(dist) < 1e-12) continue;  // on-line ties are convention
      CHECK(is_downstream(spec, px, py) == (dist > 0.0));
    }
  }
  SUBCASE("fixed misalignment: grid angle 30 from flow -10, beta 40") {
    ShockSpec spec{3.0, 40.0, -10.0, {0.5, 0.0}, {0.0, 0.0}};
    CHECK(spec.grid_angle_deg() == doctest::Approx(30.0));
    const double ang = spec.grid_angle_deg() * M_PI / 180.0;
    spec.p2 = spec.p1 + Vec2{std::cos(ang), std::sin(ang)};
    const PrimState w2 = downstream_state(spec);
    // Downstream flow angle = flow angle + deflection = 11.84 degrees.
    const double flow2 = std::atan2(w2.v, w2.u) * 180.0 / M_PI;
    CHECK(std::abs(flow2 - 11.84) < 0.01);
  }
}

TEST_CASE("isentropic vortex state") {
  SUBCASE("far field is freestream") {
    const PrimState w = isentropic_vortex_state(4.9, 4.9, 0.0);
    CHECK(tcfv::test::close(w.rho, 1.0, 1e-9));
    CHECK(tcfv::test::close(w.u, 1.0, 1e-9));
    CHECK(std::abs(w.v) < 1e-9);
    CHECK(tcfv::test::close(w.p, 1.0, 1e-9));
  }
  SUBCASE("translation symmetry with periodic wrap") {
    for (int k = 0; k < 100; ++k) {
      const double x = tcfv::test::uniform(-5.0, 5.0);
      const double y = tcfv::test::uniform(-5.0, 5.0);
      const double t = tcfv::test::uniform(0.0, 30.0);
      double x0 = std::fmod(x - t, 10.0);
      if (x0 < -5.0) x0 += 10.0;
      if (x0 > 5.0) x0 -= 10.0;
      const PrimState a = isentropic_vortex_state(x, y, t);
      const PrimState b = isentropic_vortex_state(x0, y, 0.0);
      CHECK(tcfv::test::close(a.rho, b.rho, 1e-12));
      CHECK(tcfv::test::close(a.p, b.p, 1e-12));
    }
  }
  SUBCASE("entropy is uniform") {
    const double s_inf = 1.0;  // p/rho^gamma at freestream
    for (double r : {0.0, 0.3, 1.0, 2.5}) {
      const PrimState w = isentropic_vortex_state(r, 0.0, 0.0);
      CHECK(tcfv::test::close(w.p / std::pow(w.rho, kGamma), s_inf, 1e-12));
    }
  }
}
