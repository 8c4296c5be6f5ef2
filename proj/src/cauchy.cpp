#include "holonum/cauchy.hpp"

#include <cmath>

namespace holonum {

namespace {

void require_strictly_inside(const PlanarDomain& d, cplx z, const QuadratureSpec& q) {
  if (!d.contains(z)) throw_error(errc::point_on_boundary, "evaluation point outside the domain");
  double gap = d.max_boundary_gap(q.contour_nodes);
  if (d.boundary_distance(z, q.contour_nodes) <= 2.0 * gap)
    throw_error(errc::point_on_boundary, "evaluation point too close to the boundary");
}

cplx boundary_term(const std::function<cplx(cplx)>& f, const PlanarDomain& d, cplx z,
                   const QuadratureSpec& q) {
  auto kernel = [&f, z](cplx zeta) { return f(zeta) / (zeta - z); };
  cplx acc = contour_integral(kernel, d.outer(), q);
  for (const Contour& h : d.holes()) acc += contour_integral(kernel, h, q);
  return acc / cplx(0.0, 2.0 * kPi);
}

}  // namespace

cplx cauchy_eval(const std::function<cplx(cplx)>& f, const PlanarDomain& d, cplx z,
                 const QuadratureSpec& q) {
  q.validate();
  require_strictly_inside(d, z, q);
  return boundary_term(f, d, z, q);
}

cplx pompeiu_eval(const std::function<cplx(cplx)>& f, const PlanarDomain& d, cplx z,
                  const QuadratureSpec& q, std::optional<std::function<cplx(cplx)>> dbar_f) {
  q.validate();
  require_strictly_inside(d, z, q);

  std::function<cplx(cplx)> dbar;
  if (dbar_f) {
    dbar = *dbar_f;
  } else {
    double h = (d.box_hi().real() - d.box_lo().real()) / q.area_resolution;
    double step = h / 4.0;
    dbar = [f, step](cplx xi) { return wirtinger(f, xi, step).dzbar; };
  }

  // dzetabar ^ dzeta = 2i dA, so the area term is (1/pi) * singular integral.
  cplx area = singular_area_integral(dbar, z, d, q);
  return boundary_term(f, d, z, q) - area / kPi;
}

double holomorphy_residual(const std::function<cplx(cplx)>& f, const PlanarDomain& d,
                           std::span<const cplx> sample_points, const QuadratureSpec& q) {
  double worst = 0.0;
  for (cplx z : sample_points) worst = std::max(worst, std::abs(f(z) - cauchy_eval(f, d, z, q)));
  return worst;
}

}  // namespace holonum
