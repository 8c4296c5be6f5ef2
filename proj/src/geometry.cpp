#include "holonum/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace holonum {

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_finite_integrand: return "NonFiniteIntegrand";
    case errc::degenerate_contour: return "DegenerateContour";
    case errc::empty_domain: return "EmptyDomain";
    case errc::non_finite_stencil: return "NonFiniteStencil";
    case errc::point_on_boundary: return "PointOnBoundary";
    case errc::lattice_mismatch: return "LatticeMismatch";
    case errc::radius_out_of_range: return "RadiusOutOfRange";
    case errc::lattice_too_small: return "LatticeTooSmall";
    case errc::degenerate_sample_set: return "DegenerateSampleSet";
    case errc::negative_data: return "NegativeData";
    case errc::non_finite_sample: return "NonFiniteSample";
    case errc::unsupported_base_point: return "UnsupportedBasePoint";
    case errc::point_outside_domain: return "PointOutsideDomain";
    case errc::map_leaves_target: return "MapLeavesTarget";
    case errc::candidate_not_admissible: return "CandidateNotAdmissible";
    case errc::kind_mismatch: return "KindMismatch";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::not_on_sphere: return "NotOnSphere";
    case errc::coincident_points: return "CoincidentPoints";
    case errc::degree_overflow: return "DegreeOverflow";
    case errc::geometry_mismatch: return "GeometryMismatch";
    case errc::all_masks_empty: return "AllMasksEmpty";
    case errc::singularity_inside_cutoff_transition: return "SingularityInsideCutoffTransition";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

Contour::Contour(std::function<cplx(double)> position, std::function<cplx(double)> velocity,
                 Orientation orientation, int node_count)
    : position_(std::move(position)),
      velocity_(std::move(velocity)),
      orientation_(orientation),
      node_count_(node_count) {
  if (node_count_ < 4) throw_error(errc::invalid_argument, "contour needs at least 4 nodes");
  cplx a = position_(0.0), b = position_(1.0);
  if (!is_finite(a) || !is_finite(b))
    throw_error(errc::degenerate_contour, "non-finite contour endpoints");
  if (std::abs(a - b) > 1e-12 * (1.0 + std::abs(a)))
    throw_error(errc::degenerate_contour, "contour is not closed");
}

Contour Contour::circle(cplx center, double radius, Orientation orientation, int node_count) {
  if (!(radius > 0.0)) throw_error(errc::invalid_argument, "circle radius must be positive");
  double sign = orientation == Orientation::Counterclockwise ? 1.0 : -1.0;
  auto pos = [center, radius, sign](double t) {
    return center + std::polar(radius, sign * 2.0 * 3.14159265358979323846 * t);
  };
  auto vel = [radius, sign](double t) {
    const double tau = 2.0 * 3.14159265358979323846;
    return cplx(0.0, sign * tau) * std::polar(radius, sign * tau * t);
  };
  return Contour(pos, vel, orientation, node_count);
}

Contour Contour::reversed() const {
  auto pos = position_;
  auto vel = velocity_;
  Orientation o = orientation_ == Orientation::Counterclockwise ? Orientation::Clockwise
                                                                : Orientation::Counterclockwise;
  return Contour([pos](double t) { return pos(1.0 - t); },
                 [vel](double t) { return -vel(1.0 - t); }, o, node_count_);
}

std::vector<cplx> Contour::nodes(int n) const {
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = position_(static_cast<double>(k) / n);
  return out;
}

double Contour::max_node_gap(int n) const {
  auto p = nodes(n);
  double gap = 0.0;
  for (int k = 0; k < n; ++k)
    gap = std::max(gap, std::abs(p[static_cast<std::size_t>((k + 1) % n)] - p[static_cast<std::size_t>(k)]));
  return gap;
}

namespace {

double point_segment_distance(cplx z, cplx a, cplx b) {
  cplx ab = b - a;
  double den = std::norm(ab);
  if (den == 0.0) return std::abs(z - a);
  double t = std::clamp(((z - a) * std::conj(ab)).real() / den, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

}  // namespace

double Contour::distance_to(cplx z, int n) const {
  auto p = nodes(n);
  double dist = std::abs(z - p[0]);
  for (int k = 0; k < n; ++k)
    dist = std::min(dist, point_segment_distance(z, p[static_cast<std::size_t>(k)],
                                                 p[static_cast<std::size_t>((k + 1) % n)]));
  return dist;
}

PlanarDomain::PlanarDomain(Contour outer, std::vector<Contour> holes,
                           std::function<bool(cplx)> contains, cplx box_lo, cplx box_hi)
    : outer_(std::move(outer)),
      holes_(std::move(holes)),
      contains_(std::move(contains)),
      box_lo_(box_lo),
      box_hi_(box_hi) {
  if (!(box_hi_.real() > box_lo_.real()) || !(box_hi_.imag() > box_lo_.imag()))
    throw_error(errc::invalid_argument, "empty bounding box");
}

PlanarDomain PlanarDomain::disc(cplx center, double radius, int node_count) {
  Contour outer = Contour::circle(center, radius, Orientation::Counterclockwise, node_count);
  auto inside = [center, radius](cplx z) { return std::abs(z - center) <= radius; };
  return PlanarDomain(std::move(outer), {}, inside, center - cplx(radius, radius),
                      center + cplx(radius, radius));
}

PlanarDomain PlanarDomain::annulus(cplx center, double inner_radius, double outer_radius,
                                   int node_count) {
  if (!(0.0 < inner_radius && inner_radius < outer_radius))
    throw_error(errc::invalid_argument, "annulus radii must satisfy 0 < inner < outer");
  Contour outer = Contour::circle(center, outer_radius, Orientation::Counterclockwise, node_count);
  Contour hole = Contour::circle(center, inner_radius, Orientation::Clockwise, node_count);
  auto inside = [center, inner_radius, outer_radius](cplx z) {
    double r = std::abs(z - center);
    return r >= inner_radius && r <= outer_radius;
  };
  return PlanarDomain(std::move(outer), {std::move(hole)}, inside,
                      center - cplx(outer_radius, outer_radius),
                      center + cplx(outer_radius, outer_radius));
}

double PlanarDomain::boundary_distance(cplx z, int n) const {
  double d = outer_.distance_to(z, n);
  for (const Contour& h : holes_) d = std::min(d, h.distance_to(z, n));
  return d;
}

double PlanarDomain::max_boundary_gap(int n) const {
  double g = outer_.max_node_gap(n);
  for (const Contour& h : holes_) g = std::max(g, h.max_node_gap(n));
  return g;
}

GridField GridField::sample(cplx box_lo, double side, int resolution,
                            const std::function<cplx(cplx)>& fn,
                            const std::function<bool(cplx)>& pred) {
  GridField g = lattice(box_lo, side, resolution, pred);
  for (int iy = 0; iy < g.height; ++iy)
    for (int ix = 0; ix < g.width; ++ix) {
      if (!g.in_mask(ix, iy)) continue;
      cplx v = fn(g.point(ix, iy));
      if (!is_finite(v)) throw_error(errc::non_finite_sample, "non-finite sample on lattice");
      g.values[g.index(ix, iy)] = v;
    }
  return g;
}

GridField GridField::lattice(cplx box_lo, double side, int resolution,
                             const std::function<bool(cplx)>& pred) {
  if (resolution < 2) throw_error(errc::lattice_too_small, "lattice needs resolution >= 2");
  if (!(side > 0.0)) throw_error(errc::invalid_argument, "lattice box side must be positive");
  GridField g;
  g.spacing = side / resolution;
  g.origin = box_lo + cplx(g.spacing / 2.0, g.spacing / 2.0);
  g.width = resolution;
  g.height = resolution;
  g.values.assign(static_cast<std::size_t>(resolution) * resolution, cplx{0.0});
  g.mask.assign(static_cast<std::size_t>(resolution) * resolution, 0);
  for (int iy = 0; iy < g.height; ++iy)
    for (int ix = 0; ix < g.width; ++ix)
      g.mask[g.index(ix, iy)] = pred ? (pred(g.point(ix, iy)) ? 1 : 0) : 1;
  return g;
}

cplx GridField::interpolate(cplx z) const {
  double fx = (z.real() - origin.real()) / spacing;
  double fy = (z.imag() - origin.imag()) / spacing;
  int ix = static_cast<int>(std::floor(fx));
  int iy = static_cast<int>(std::floor(fy));
  double tx = fx - ix, ty = fy - iy;
  auto val = [this](int jx, int jy) -> cplx {
    if (jx < 0 || jy < 0 || jx >= width || jy >= height) return 0.0;
    std::size_t k = index(jx, jy);
    return mask[k] ? values[k] : cplx{0.0};
  };
  return (1.0 - tx) * (1.0 - ty) * val(ix, iy) + tx * (1.0 - ty) * val(ix + 1, iy) +
         (1.0 - tx) * ty * val(ix, iy + 1) + tx * ty * val(ix + 1, iy + 1);
}

void QuadratureSpec::validate() const {
  if (contour_nodes < 4 || area_resolution < 4 || singular_radial_nodes < 4 ||
      singular_angular_nodes < 4)
    throw_error(errc::invalid_argument, "quadrature node counts must be >= 4");
}

}  // namespace holonum
