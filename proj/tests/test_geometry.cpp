#include <doctest.h>

#include <cmath>

#include "holonum/quadrature.hpp"
#include "holonum/rng.hpp"

using namespace holonum;

namespace {

const QuadratureSpec kQuad{};

// independent Riemann-sum oracle for the parametric line integral
// int_0^1 g(gamma(t)) gamma'(t) dt at high resolution
cplx parametric_oracle(const std::function<cplx(cplx)>& g, const Contour& c, int n) {
  cplx acc = 0.0;
  for (int k = 0; k < n; ++k) {
    double t = (k + 0.5) / n;
    acc += g(c.position(t)) * c.velocity(t);
  }
  return acc / static_cast<double>(n);
}

// independent oracle for the disc kernel integral: in polar coordinates
// around the pole the integrand collapses to e^{-i theta} dr dtheta, with the
// disc boundary in direction theta at distance rho solving
// |pole + rho e^{i theta}| = 1
cplx disc_kernel_oracle(cplx pole, int na) {
  cplx acc = 0.0;
  for (int m = 0; m < na; ++m) {
    double theta = 2.0 * kPi * (m + 0.5) / na;
    cplx dir = std::polar(1.0, theta);
    double b = (pole * std::conj(dir)).real();
    double rho = -b + std::sqrt(b * b + 1.0 - std::norm(pole));
    acc += std::conj(dir) * rho;
  }
  return acc * (2.0 * kPi / na);
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("contour integral of 1/z over the unit circle") {
  QuadratureSpec q;
  q.contour_nodes = 64;
  Contour circle = Contour::circle(0.0, 1.0);
  cplx got = contour_integral([](cplx z) { return 1.0 / z; }, circle, q);
  CHECK(std::abs(got - cplx(0.0, 2.0 * kPi)) < 1e-12);
}

TEST_CASE("contour integral of a constant vanishes") {
  Contour circle = Contour::circle(0.0, 1.0);
  cplx got = contour_integral([](cplx) { return cplx{1.0}; }, circle, kQuad);
  CHECK(std::abs(got) < 1e-14);
}

TEST_CASE("contour integral of conj over the unit circle") {
  Contour circle = Contour::circle(0.0, 1.0);
  cplx oracle = parametric_oracle([](cplx z) { return std::conj(z); }, circle, 1 << 14);
  CHECK(std::abs(oracle - cplx(0.0, 2.0 * kPi)) < 1e-10);  // 2 pi i, frozen from the oracle
  cplx got = contour_integral([](cplx z) { return std::conj(z); }, circle, kQuad);
  CHECK(std::abs(got - cplx(0.0, 2.0 * kPi)) < 1e-12);
}

TEST_CASE("contour integral error paths") {
  Contour circle = Contour::circle(0.0, 1.0);
  CHECK_THROWS_AS(contour_integral([](cplx z) { return 1.0 / (z - 1.0); }, circle, kQuad),
                  error);  // pole sits on the t=0 node

  auto pos = [](double t) { return std::polar(1.0, 2.0 * kPi * t); };
  auto stalled = [](double t) {
    return cplx(0.0, 2.0 * kPi) * std::polar(1.0, 2.0 * kPi * t) * t;  // zero at t=0
  };
  Contour bad(pos, stalled, Orientation::Counterclockwise);
  CHECK_THROWS_AS(contour_integral([](cplx) { return cplx{1.0}; }, bad, kQuad), error);
}

TEST_CASE("contours must close") {
  auto pos = [](double t) { return cplx(t, 0.0); };
  auto vel = [](double) { return cplx(1.0, 0.0); };
  CHECK_THROWS_AS(Contour(pos, vel, Orientation::Counterclockwise), error);
}

TEST_CASE("area integral over the unit disc") {
  PlanarDomain disc = PlanarDomain::disc(0.0, 1.0);
  QuadratureSpec q;
  q.area_resolution = 512;
  CHECK(std::abs(area_integral([](cplx) { return cplx{1.0}; }, disc, q) - kPi) < 1e-2);
  CHECK(std::abs(area_integral([](cplx z) { return z; }, disc, q)) < 1e-3);

  // oracle: 2 pi int_0^1 r^3 dr = pi/2
  double oracle = 0.0;
  const int n = 1 << 16;
  for (int j = 0; j < n; ++j) {
    double r = (j + 0.5) / n;
    oracle += r * r * r / n;
  }
  oracle *= 2.0 * kPi;
  CHECK(std::abs(oracle - kPi / 2.0) < 1e-9);
  cplx got = area_integral([](cplx z) { return cplx(std::norm(z), 0.0); }, disc, q);
  CHECK(std::abs(got - oracle) < 1e-2);
}

TEST_CASE("area integral needs a nonempty domain") {
  Contour circle = Contour::circle(0.0, 1.0);
  PlanarDomain empty(circle, {}, [](cplx) { return false; }, cplx(-1, -1), cplx(1, 1));
  CHECK_THROWS_AS(area_integral([](cplx) { return cplx{1.0}; }, empty, kQuad), error);
}

TEST_CASE("singular area integral, pole at the center") {
  PlanarDomain disc = PlanarDomain::disc(0.0, 1.0);
  cplx got = singular_area_integral([](cplx) { return cplx{1.0}; }, cplx{0.0}, disc, kQuad);
  CHECK(std::abs(got) < 1e-3);
}

TEST_CASE("singular area integral, off-center pole against the polar oracle") {
  // oracle gives -pi * conj(pole) for a pole inside the unit disc
  cplx pole(0.5, 0.0);
  cplx oracle = disc_kernel_oracle(pole, 4096);
  CHECK(std::abs(oracle - (-kPi * std::conj(pole))) < 1e-6);

  PlanarDomain disc = PlanarDomain::disc(0.0, 1.0);
  QuadratureSpec q;
  q.area_resolution = 512;
  cplx got = singular_area_integral([](cplx) { return cplx{1.0}; }, pole, disc, q);
  CHECK(std::abs(got - oracle) < 2e-2);

  cplx pole2(0.3, -0.4);
  cplx oracle2 = disc_kernel_oracle(pole2, 4096);
  CHECK(std::abs(oracle2 - (-kPi * std::conj(pole2))) < 1e-6);
  CHECK(std::abs(singular_area_integral([](cplx) { return cplx{1.0}; }, pole2, disc, q) -
                 oracle2) < 2e-2);
}

TEST_CASE("singular area integral of the zero integrand") {
  PlanarDomain disc = PlanarDomain::disc(0.0, 1.0);
  cplx got = singular_area_integral([](cplx) { return cplx{0.0}; }, cplx(0.5, 0.0), disc, kQuad);
  CHECK(got == cplx{0.0});
}

TEST_CASE("wirtinger derivatives") {
  auto [dz1, dzbar1] = wirtinger([](cplx z) { return z; }, cplx(0.7, -0.2), 1e-4);
  CHECK(std::abs(dz1 - cplx{1.0}) < 1e-10);
  CHECK(std::abs(dzbar1) < 1e-10);

  auto [dz2, dzbar2] = wirtinger([](cplx z) { return std::conj(z); }, cplx(0.1, 0.4), 1e-4);
  CHECK(std::abs(dz2) < 1e-10);
  CHECK(std::abs(dzbar2 - cplx{1.0}) < 1e-10);

  // product rule gives (conj z, z) at z = 1+i; cross-checked at two steps
  cplx z(1.0, 1.0);
  auto f = [](cplx w) { return w * std::conj(w); };
  auto a = wirtinger(f, z, 1e-4);
  auto b = wirtinger(f, z, 5e-5);
  CHECK(std::abs(a.dz - cplx(1.0, -1.0)) < 1e-6);
  CHECK(std::abs(a.dzbar - cplx(1.0, 1.0)) < 1e-6);
  CHECK(std::abs(a.dz - b.dz) < 1e-7);
  CHECK(std::abs(a.dzbar - b.dzbar) < 1e-7);

  // halving the step moves other smooth functions below 1e-7 as well
  auto g = [](cplx w) { return std::exp(w) + std::conj(w) * std::conj(w); };
  auto ga = wirtinger(g, cplx(0.4, -0.3), 1e-4);
  auto gb = wirtinger(g, cplx(0.4, -0.3), 5e-5);
  CHECK(std::abs(ga.dz - gb.dz) < 1e-7);
  CHECK(std::abs(ga.dzbar - gb.dzbar) < 1e-7);
}

TEST_CASE("wirtinger rejects a non-finite stencil") {
  auto f = [](cplx z) { return 1.0 / (z - cplx(1e-4, 0.0)); };
  CHECK_THROWS_AS(wirtinger(f, cplx{0.0}, 1e-4), error);
}

TEST_CASE("orientation antisymmetry holds to machine precision") {
  Contour circle = Contour::circle(cplx(0.2, -0.1), 1.3);
  Contour rev = circle.reversed();
  auto g = [](cplx z) { return std::exp(z) + std::conj(z) * z; };
  cplx fwd = contour_integral(g, circle, kQuad);
  cplx bwd = contour_integral(g, rev, kQuad);
  // the reversed rule resums the same terms, so only accumulation order noise
  CHECK(std::abs(fwd + bwd) <= 1e-13 * (1.0 + std::abs(fwd)));
}

TEST_CASE("spectral convergence of the contour rule") {
  // 1/z with the pole off-center: analyticity annulus controls the rate
  for (double radius : {1.0, 2.0}) {
    Contour circle = Contour::circle(cplx(0.3, 0.0), radius);
    auto g = [](cplx z) { return 1.0 / z; };
    double prev = -1.0;
    for (int n = 8; n <= 256; n *= 2) {
      QuadratureSpec q;
      q.contour_nodes = n;
      double err = std::abs(contour_integral(g, circle, q) - cplx(0.0, 2.0 * kPi));
      if (prev >= 0.0) CHECK(err <= prev / 10.0 + 1e-12);
      prev = err;
    }
  }
}

TEST_CASE("linearity of the integral engines") {
  Rng rng(41);
  Contour circle = Contour::circle(0.0, 1.0);
  PlanarDomain disc = PlanarDomain::disc(0.0, 1.0);
  auto g1 = [](cplx z) { return std::exp(z); };
  auto g2 = [](cplx z) { return std::conj(z) + z * z; };
  for (int trial = 0; trial < 4; ++trial) {
    cplx a = rng.complex_in_box(2.0), b = rng.complex_in_box(2.0);
    auto combo = [&](cplx z) { return a * g1(z) + b * g2(z); };
    cplx lhs = contour_integral(combo, circle, kQuad);
    cplx rhs = a * contour_integral(g1, circle, kQuad) + b * contour_integral(g2, circle, kQuad);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));

    cplx alhs = area_integral(combo, disc, kQuad);
    cplx arhs = a * area_integral(g1, disc, kQuad) + b * area_integral(g2, disc, kQuad);
    CHECK(std::abs(alhs - arhs) < 1e-12 * (1.0 + std::abs(arhs)));
  }
}

TEST_CASE("complex Stokes identity for u = z conj(z)") {
  Contour circle = Contour::circle(0.0, 1.0);
  PlanarDomain disc = PlanarDomain::disc(0.0, 1.0);
  cplx boundary = contour_integral([](cplx z) { return z * std::conj(z); }, circle, kQuad);
  cplx area = cplx(0.0, 2.0) * area_integral([](cplx z) { return z; }, disc, kQuad);
  CHECK(std::abs(boundary - area) < 1e-2);
}

TEST_CASE("grid field interpolation is exact on bilinear data") {
  auto fn = [](cplx z) { return cplx(2.0 * z.real() - z.imag() + 0.5, z.real() * z.imag()); };
  GridField g = GridField::sample(cplx(-1.0, -1.0), 2.0, 32, fn, [](cplx) { return true; });
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    cplx z = rng.complex_in_box(0.8);
    CHECK(std::abs(g.interpolate(z) - fn(z)) < 1e-2);
  }
  // exact at the nodes
  CHECK(std::abs(g.interpolate(g.point(7, 9)) - fn(g.point(7, 9))) < 1e-14);
}

}  // TEST_SUITE
