#include <doctest.h>

#include <cmath>
#include <vector>

#include "holonum/osgood.hpp"
#include "holonum/rng.hpp"

using namespace holonum;

namespace {

GridField disc_geometry(double radius, int resolution) {
  return GridField::lattice(cplx(-radius, -radius), 2.0 * radius, resolution,
                            [radius](cplx z) { return std::abs(z) <= radius; });
}

GridField square_geometry(cplx lo, double side, int resolution) {
  return GridField::lattice(lo, side, resolution, [](cplx) { return true; });
}

// sup oracle with the reduction coded the other way round: j outer, points
// inner, explicit comparison chain
std::vector<std::uint8_t> sup_oracle(const FunctionSequence& seq, const GridField& geom,
                                     double k) {
  std::vector<double> sup(geom.mask.size(), 0.0);
  for (int j = 1; j <= seq.j_max; ++j)
    for (int iy = 0; iy < geom.height; ++iy)
      for (int ix = 0; ix < geom.width; ++ix) {
        if (!geom.mask[geom.index(ix, iy)]) continue;
        double v = std::abs(seq.member(j, geom.point(ix, iy)));
        if (v > sup[geom.index(ix, iy)]) sup[geom.index(ix, iy)] = v;
      }
  std::vector<std::uint8_t> mask(geom.mask.size(), 0);
  for (std::size_t i = 0; i < mask.size(); ++i)
    mask[i] = geom.mask[i] && sup[i] <= k ? 1 : 0;
  return mask;
}

}  // namespace

TEST_SUITE("osgood") {

TEST_CASE("power family is bounded by 1 on the closed disc") {
  const SequenceSpec* power = find_sequence("power");
  REQUIRE(power != nullptr);
  FunctionSequence seq{power->member, 48};
  GridField geom = disc_geometry(1.0, 48);
  BoundednessMask m = boundedness_set(seq, geom, 1.0);
  for (std::size_t i = 0; i < m.mask.size(); ++i)
    if (m.region[i]) CHECK(m.mask[i] == 1);
}

TEST_CASE("exp partial sums stay under 8 on |z| <= 2") {
  const SequenceSpec* exps = find_sequence("exp_partial");
  REQUIRE(exps != nullptr);
  FunctionSequence seq{exps->member, 64};
  GridField geom = disc_geometry(2.0, 48);

  // brute-force sup oracle first: the partial sums never exceed e^2
  double sup = 0.0;
  for (int j = 1; j <= seq.j_max; ++j)
    for (int iy = 0; iy < geom.height; ++iy)
      for (int ix = 0; ix < geom.width; ++ix)
        if (geom.mask[geom.index(ix, iy)])
          sup = std::max(sup, std::abs(seq.member(j, geom.point(ix, iy))));
  CHECK(sup <= 8.0);

  BoundednessMask m = boundedness_set(seq, geom, 8.0);
  for (std::size_t i = 0; i < m.mask.size(); ++i)
    if (m.region[i]) CHECK(m.mask[i] == 1);
}

TEST_CASE("threshold below a constant family empties the mask") {
  FunctionSequence seq{[](int, cplx) { return cplx{1.0}; }, 16};
  GridField geom = square_geometry(cplx(0, 0), 1.0, 8);
  BoundednessMask m = boundedness_set(seq, geom, 0.5);
  for (std::uint8_t b : m.mask) CHECK(b == 0);
  CHECK_THROWS_AS(boundedness_set(seq, geom, 0.0), error);
}

TEST_CASE("masks match the independently coded sup oracle exactly") {
  GridField geom = disc_geometry(1.0, 32);
  for (const char* name : {"power", "exp_partial", "divergent_const"}) {
    const SequenceSpec* spec = find_sequence(name);
    REQUIRE(spec != nullptr);
    FunctionSequence seq{spec->member, 24};
    for (double k : {1.0, 3.0, 8.0}) {
      BoundednessMask m = boundedness_set(seq, geom, k);
      CHECK(m.mask == sup_oracle(seq, geom, k));
    }
  }
}

TEST_CASE("cover check") {
  GridField geom = disc_geometry(1.0, 24);
  const SequenceSpec* power = find_sequence("power");
  FunctionSequence seq{power->member, 24};
  std::vector<BoundednessMask> masks{boundedness_set(seq, geom, 1.0)};
  CHECK(cover_check(masks).covered);

  const SequenceSpec* div = find_sequence("divergent_const");
  FunctionSequence dseq{div->member, 24};
  std::vector<BoundednessMask> dmasks;
  for (double k = 1.0; k <= 8.0; k += 1.0) dmasks.push_back(boundedness_set(dseq, geom, k));
  CoverResult res = cover_check(dmasks);
  CHECK_FALSE(res.covered);
  CHECK(res.uncovered_points.size() > 0);

  const SequenceSpec* exps = find_sequence("exp_partial");
  GridField wide = disc_geometry(2.0, 24);
  FunctionSequence eseq{exps->member, 24};
  std::vector<BoundednessMask> emasks;
  for (double k = 1.0; k <= 8.0; k += 1.0) emasks.push_back(boundedness_set(eseq, wide, k));
  CHECK(cover_check(emasks).covered);

  std::vector<BoundednessMask> mismatched{boundedness_set(seq, geom, 1.0),
                                          boundedness_set(eseq, wide, 1.0)};
  CHECK_THROWS_AS(cover_check(mismatched), error);
}

TEST_CASE("mask monotonicity in k and in j_max") {
  GridField geom = disc_geometry(2.0, 24);
  const SequenceSpec* exps = find_sequence("exp_partial");
  FunctionSequence seq{exps->member, 24};
  BoundednessMask m3 = boundedness_set(seq, geom, 3.0);
  BoundednessMask m6 = boundedness_set(seq, geom, 6.0);
  for (std::size_t i = 0; i < m3.mask.size(); ++i)
    if (m3.mask[i]) CHECK(m6.mask[i] == 1);

  FunctionSequence longer{exps->member, 48};
  BoundednessMask m3l = boundedness_set(longer, geom, 3.0);
  for (std::size_t i = 0; i < m3l.mask.size(); ++i)
    if (m3l.mask[i]) CHECK(m3.mask[i] == 1);
}

TEST_CASE("dense ball in the all-true square grid") {
  GridField geom = square_geometry(cplx(0, 0), 1.0, 16);
  FunctionSequence seq{[](int, cplx) { return cplx{0.5}; }, 4};
  std::vector<BoundednessMask> masks{boundedness_set(seq, geom, 1.0)};
  DenseBall ball = dense_ball_search(masks);
  CHECK(ball.k == 1.0);
  CHECK(ball.radius == doctest::Approx(0.46875));  // inscribed disc of the grid
  CHECK(std::abs(ball.center - cplx(0.46875, 0.46875)) < 1e-15);
}

TEST_CASE("dense ball confined to a half plane") {
  GridField geom = square_geometry(cplx(-1, -1), 2.0, 32);
  FunctionSequence seq{[](int, cplx z) { return z.real() < 0.0 ? cplx{0.0} : cplx{9.0}; }, 4};
  std::vector<BoundednessMask> masks{boundedness_set(seq, geom, 1.0)};
  DenseBall ball = dense_ball_search(masks);
  CHECK(ball.center.real() < 0.0);

  // brute-force largest-inscribed-disc oracle over all lattice centers; the
  // cell region spans [-1, 1] per axis
  const BoundednessMask& m = masks[0];
  double best = 0.0;
  cplx best_center;
  for (int ix = 0; ix < m.width; ++ix)
    for (int iy = 0; iy < m.height; ++iy) {
      if (!m.mask[m.index(ix, iy)]) continue;
      cplx c = m.point(ix, iy);
      double r = std::min(std::min(c.real() + 1.0, 1.0 - c.real()),
                          std::min(c.imag() + 1.0, 1.0 - c.imag()));
      for (int jx = 0; jx < m.width; ++jx)
        for (int jy = 0; jy < m.height; ++jy)
          if (!m.mask[m.index(jx, jy)]) r = std::min(r, std::abs(m.point(jx, jy) - c));
      if (r > best) {
        best = r;
        best_center = c;
      }
    }
  CHECK(ball.radius == doctest::Approx(best));
  CHECK(std::abs(ball.center - best_center) < 1e-15);
}

TEST_CASE("single true cell yields a one-cell ball") {
  GridField geom = square_geometry(cplx(0, 0), 1.0, 9);
  FunctionSequence seq{[&geom](int, cplx z) {
                         return std::abs(z - geom.point(4, 4)) < 1e-12 ? cplx{0.0} : cplx{9.0};
                       },
                       2};
  std::vector<BoundednessMask> masks{boundedness_set(seq, geom, 1.0)};
  DenseBall ball = dense_ball_search(masks);
  CHECK(std::abs(ball.center - geom.point(4, 4)) < 1e-15);
  CHECK(ball.radius == doctest::Approx(geom.spacing));

  FunctionSequence none{[](int, cplx) { return cplx{9.0}; }, 2};
  std::vector<BoundednessMask> empty{boundedness_set(none, geom, 1.0)};
  CHECK_THROWS_AS(dense_ball_search(empty), error);
}

TEST_CASE("discrete pigeonhole on cumulative random masks") {
  Rng rng(29);
  GridField geom = square_geometry(cplx(-1, -1), 2.0, 16);
  for (int trial = 0; trial < 20; ++trial) {
    const int K = 5;
    // partition the grid, then accumulate so the masks are monotone like
    // genuine boundedness sets
    std::vector<BoundednessMask> masks;
    std::vector<int> owner(geom.mask.size());
    for (int& o : owner) o = rng.uniform_int(0, K - 1);
    for (int k = 0; k < K; ++k) {
      BoundednessMask m;
      m.origin = geom.origin;
      m.spacing = geom.spacing;
      m.width = geom.width;
      m.height = geom.height;
      m.k = static_cast<double>(k + 1);
      m.region = geom.mask;
      m.mask.resize(geom.mask.size());
      for (std::size_t i = 0; i < owner.size(); ++i) m.mask[i] = owner[i] <= k ? 1 : 0;
      masks.push_back(std::move(m));
    }
    CHECK(cover_check(masks).covered);
    DenseBall ball = dense_ball_search(masks);
    CHECK(ball.radius >= geom.spacing);
  }
}

TEST_CASE("holomorphy residual of the proxy limit") {
  const SequenceSpec* exps = find_sequence("exp_partial");
  QuadratureSpec q;
  FunctionSequence seq{exps->member, 30};
  // oracle: the degree-30 tail of exp inside |z| <= 0.5 is below 1e-40
  double tail = std::pow(0.5, 31);
  for (int m = 1; m <= 31; ++m) tail /= m;
  CHECK(tail < 1e-40);
  CHECK(limit_holomorphy_residual(seq, cplx{0.0}, 0.5, q) < 1e-10);

  const SequenceSpec* conj = find_sequence("conj");
  FunctionSequence cseq{conj->member, 30};
  CHECK(limit_holomorphy_residual(cseq, cplx{0.0}, 0.5, q) >= 0.1);

  FunctionSequence zero{[](int, cplx) { return cplx{0.0}; }, 4};
  CHECK(limit_holomorphy_residual(zero, cplx{0.0}, 0.5, q) == 0.0);
}

}  // TEST_SUITE
