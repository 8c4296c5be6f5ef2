#include <doctest.h>

#include <cmath>
#include <sstream>

#include "holonum/osgood.hpp"
#include "holonum/quadrature.hpp"
#include "holonum/rng.hpp"
#include "holonum/serialize.hpp"

using namespace holonum;

TEST_SUITE("serialize") {

TEST_CASE("grid field json round trip is exact") {
  Rng rng(61);
  GridField g = GridField::sample(
      cplx(-1.3, 0.2), 2.6, 24,
      [&rng](cplx) { return rng.complex_in_box(5.0); },
      [&rng](cplx) { return rng.uniform01() < 0.8; });
  json j = gridfield_to_json(g);
  CHECK(j.at("width") == 24);
  CHECK(j.at("values").size() == 24 * 24);
  GridField back = gridfield_from_json(json::parse(j.dump()));
  CHECK(back.same_geometry(g));
  CHECK(back.values == g.values);  // shortest-round-trip doubles are exact
  CHECK(back.mask == g.mask);
}

TEST_CASE("grid field json rejects malformed payloads") {
  json j = gridfield_to_json(GridField::lattice(cplx(0, 0), 1.0, 4, [](cplx) { return true; }));
  j["values"] = json::array();
  CHECK_THROWS_AS(gridfield_from_json(j), error);
}

TEST_CASE("contours serialize as sampled node lists") {
  Contour c = Contour::circle(cplx(0.5, 0.0), 2.0, Orientation::Clockwise, 64);
  json j = contour_to_json(c);
  CHECK(j.at("orientation") == "clockwise");
  CHECK(j.at("nodes").size() == 64);
  cplx first = complex_from_json(j.at("nodes")[0]);
  CHECK(std::abs(first - cplx(2.5, 0.0)) < 1e-12);
}

TEST_CASE("boundary csv round trip") {
  BoundaryData data = BoundaryData::from_function(
      [](double psi) { return cplx(1.0 + std::sin(psi), 0.0); }, 32);
  std::ostringstream out;
  write_boundary_csv(out, data);
  std::istringstream in(out.str());
  BoundaryData back = read_boundary_csv(in);
  REQUIRE(back.count() == data.count());
  for (int k = 0; k < data.count(); ++k)
    CHECK(back.samples[static_cast<std::size_t>(k)] == data.samples[static_cast<std::size_t>(k)]);
}

TEST_CASE("boundary csv rejects non-equispaced angles") {
  std::istringstream in("0,1\n0.5,1\n1.0,1\n1.5,1\n2.0,1\n2.5,1\n3.0,1\n3.5,1\n");
  CHECK_THROWS_AS(read_boundary_csv(in), error);
}

TEST_CASE("mask bitmaps use plain pbm") {
  BoundednessMask m;
  m.origin = cplx(0.0, 0.0);
  m.spacing = 1.0;
  m.width = 2;
  m.height = 2;
  m.k = 1.0;
  m.region = {1, 1, 1, 1};
  m.mask = {1, 0, 0, 1};
  std::ostringstream out;
  write_mask_pbm(out, m);
  CHECK(out.str() == "P1\n2 2\n0 1\n1 0\n");
}

}  // TEST_SUITE
