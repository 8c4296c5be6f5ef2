#include "holonum/osgood.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "holonum/cauchy.hpp"

namespace holonum {

bool BoundednessMask::same_geometry(const BoundednessMask& o) const {
  return width == o.width && height == o.height && region == o.region &&
         std::abs(origin - o.origin) <= 1e-12 * (1.0 + std::abs(origin)) &&
         std::abs(spacing - o.spacing) <= 1e-12 * spacing;
}

BoundednessMask boundedness_set(const FunctionSequence& seq, const GridField& geometry, double k) {
  if (!(k > 0.0)) throw_error(errc::invalid_argument, "threshold k must be positive");
  if (seq.j_max < 1) throw_error(errc::invalid_argument, "j_max must be positive");

  BoundednessMask out;
  out.origin = geometry.origin;
  out.spacing = geometry.spacing;
  out.width = geometry.width;
  out.height = geometry.height;
  out.k = k;
  out.region = geometry.mask;
  out.mask.assign(out.region.size(), 0);

  for (int iy = 0; iy < out.height; ++iy)
    for (int ix = 0; ix < out.width; ++ix) {
      if (!out.region[out.index(ix, iy)]) continue;
      cplx z = out.point(ix, iy);
      bool bounded = true;
      for (int j = 1; j <= seq.j_max; ++j) {
        cplx v = seq.member(j, z);
        if (!is_finite(v)) throw_error(errc::non_finite_sample, "sequence member not finite");
        if (std::abs(v) > k) {
          bounded = false;
          break;
        }
      }
      out.mask[out.index(ix, iy)] = bounded ? 1 : 0;
    }
  return out;
}

CoverResult cover_check(std::span<const BoundednessMask> masks) {
  if (masks.empty()) throw_error(errc::invalid_argument, "no masks given");
  for (const BoundednessMask& m : masks)
    if (!m.same_geometry(masks[0]))
      throw_error(errc::geometry_mismatch, "masks do not share a geometry");

  const BoundednessMask& g = masks[0];
  CoverResult res;
  res.covered = true;
  for (int iy = 0; iy < g.height; ++iy)
    for (int ix = 0; ix < g.width; ++ix) {
      std::size_t i = g.index(ix, iy);
      if (!g.region[i]) continue;
      bool hit = false;
      for (const BoundednessMask& m : masks)
        if (m.mask[i]) {
          hit = true;
          break;
        }
      if (!hit) {
        res.covered = false;
        if (res.uncovered_points.size() < 64) res.uncovered_points.push_back(g.point(ix, iy));
      }
    }
  return res;
}

namespace {

// Largest disc around the given lattice point that stays inside the mask and
// inside the lattice's cell region.
double inscribed_radius(const BoundednessMask& m, int cx, int cy) {
  cplx c = m.point(cx, cy);
  double half = m.spacing / 2.0;
  // cell region spans [origin - h/2, origin + (n-1)h + h/2] per axis
  double cap = std::min(
      std::min(c.real() - (m.origin.real() - half),
               (m.origin.real() + (m.width - 1) * m.spacing + half) - c.real()),
      std::min(c.imag() - (m.origin.imag() - half),
               (m.origin.imag() + (m.height - 1) * m.spacing + half) - c.imag()));
  double r = cap;
  for (int iy = 0; iy < m.height; ++iy)
    for (int ix = 0; ix < m.width; ++ix) {
      std::size_t i = m.index(ix, iy);
      if (!m.region[i] || m.mask[i]) continue;
      r = std::min(r, std::abs(m.point(ix, iy) - c));
      if (r <= 0.0) return 0.0;
    }
  return r;
}

}  // namespace

DenseBall dense_ball_search(std::span<const BoundednessMask> masks) {
  if (masks.empty()) throw_error(errc::invalid_argument, "no masks given");
  bool any = false;
  DenseBall best;
  best.radius = 0.0;

  std::vector<std::size_t> order(masks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&masks](std::size_t a, std::size_t b) { return masks[a].k < masks[b].k; });

  for (std::size_t oi : order) {
    const BoundednessMask& m = masks[oi];
    for (int ix = 0; ix < m.width; ++ix)
      for (int iy = 0; iy < m.height; ++iy) {
        std::size_t i = m.index(ix, iy);
        if (!m.region[i] || !m.mask[i]) continue;
        any = true;
        double r = inscribed_radius(m, ix, iy);
        if (r > best.radius) {
          best.radius = r;
          best.center = m.point(ix, iy);
          best.k = m.k;
        }
      }
  }
  if (!any) throw_error(errc::all_masks_empty, "every mask is empty");
  return best;
}

double limit_holomorphy_residual(const FunctionSequence& seq, cplx center, double radius,
                                 const QuadratureSpec& q) {
  if (!(radius > 0.0)) throw_error(errc::invalid_argument, "ball radius must be positive");
  PlanarDomain ball = PlanarDomain::disc(center, radius);
  auto proxy = [&seq](cplx z) { return seq.member(seq.j_max, z); };
  std::vector<cplx> samples{center};
  for (int s = 0; s < 8; ++s)
    samples.push_back(center + std::polar(0.6 * radius, 2.0 * kPi * s / 8.0));
  return holomorphy_residual(proxy, ball, samples, q);
}

namespace {

cplx exp_partial_sum(int j, cplx z) {
  cplx acc = 1.0, term = 1.0;
  for (int m = 1; m <= j; ++m) {
    term *= z / static_cast<double>(m);
    acc += term;
  }
  return acc;
}

const std::array<SequenceSpec, 4> kRegistry{{
    {"power", "f_j(z) = z^j", [](int j, cplx z) { return std::pow(z, j); }},
    {"exp_partial", "f_j(z) = sum_{m<=j} z^m/m!", exp_partial_sum},
    {"divergent_const", "f_j(z) = j", [](int j, cplx) { return cplx(static_cast<double>(j), 0.0); }},
    {"conj", "f_j(z) = conj(z)", [](int, cplx z) { return std::conj(z); }},
}};

}  // namespace

std::span<const SequenceSpec> sequence_registry() { return kRegistry; }

const SequenceSpec* find_sequence(const std::string& name) {
  for (const SequenceSpec& s : kRegistry)
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace holonum
