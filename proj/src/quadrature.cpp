#include "holonum/quadrature.hpp"

#include <cmath>

namespace holonum {

double smoothstep5(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

cplx contour_integral(const std::function<cplx(cplx)>& g, const Contour& c,
                      const QuadratureSpec& q) {
  q.validate();
  const int n = q.contour_nodes;
  cplx acc = 0.0;
  for (int k = 0; k < n; ++k) {
    double t = static_cast<double>(k) / n;
    cplx v = c.velocity(t);
    if (!is_finite(v) || std::abs(v) == 0.0)
      throw_error(errc::degenerate_contour, "zero or non-finite velocity at quadrature node");
    cplx gv = g(c.position(t));
    if (!is_finite(gv)) throw_error(errc::non_finite_integrand, "integrand not finite at contour node");
    acc += gv * v;
  }
  return acc / static_cast<double>(n);
}

namespace {

struct AreaLattice {
  cplx lo;
  double h;
  int nx, ny;
};

AreaLattice make_lattice(const PlanarDomain& d, const QuadratureSpec& q) {
  AreaLattice lat;
  lat.lo = d.box_lo();
  double wx = d.box_hi().real() - d.box_lo().real();
  double wy = d.box_hi().imag() - d.box_lo().imag();
  lat.nx = q.area_resolution;
  lat.h = wx / lat.nx;
  lat.ny = static_cast<int>(std::ceil(wy / lat.h - 1e-12));
  return lat;
}

}  // namespace

cplx area_integral(const std::function<cplx(cplx)>& g, const PlanarDomain& d,
                   const QuadratureSpec& q) {
  q.validate();
  AreaLattice lat = make_lattice(d, q);
  cplx acc = 0.0;
  long inside = 0;
  for (int iy = 0; iy < lat.ny; ++iy)
    for (int ix = 0; ix < lat.nx; ++ix) {
      cplx mid = lat.lo + cplx((ix + 0.5) * lat.h, (iy + 0.5) * lat.h);
      if (!d.contains(mid)) continue;
      cplx gv = g(mid);
      if (!is_finite(gv)) throw_error(errc::non_finite_integrand, "integrand not finite at lattice node");
      acc += gv;
      ++inside;
    }
  if (inside == 0) throw_error(errc::empty_domain, "no lattice point inside the domain");
  return acc * lat.h * lat.h;
}

cplx singular_area_integral(const std::function<cplx(cplx)>& g, cplx pole, const PlanarDomain& d,
                            const QuadratureSpec& q) {
  q.validate();
  if (!is_finite(pole)) throw_error(errc::invalid_argument, "pole must be finite");
  AreaLattice lat = make_lattice(d, q);
  const double r0 = 8.0 * lat.h;

  // Far part: midpoint lattice, kernel damped to zero inside the patch.
  cplx far = 0.0;
  long inside = 0;
  for (int iy = 0; iy < lat.ny; ++iy)
    for (int ix = 0; ix < lat.nx; ++ix) {
      cplx mid = lat.lo + cplx((ix + 0.5) * lat.h, (iy + 0.5) * lat.h);
      if (!d.contains(mid)) continue;
      ++inside;
      double r = std::abs(mid - pole);
      double w = 1.0 - smoothstep5(r / r0);
      if (w >= 1.0) continue;  // also skips an exact pole hit
      cplx gv = g(mid);
      if (!is_finite(gv)) throw_error(errc::non_finite_integrand, "integrand not finite at lattice node");
      far += gv * (1.0 - w) / (mid - pole);
    }
  if (inside == 0) throw_error(errc::empty_domain, "no lattice point inside the domain");
  far *= lat.h * lat.h;

  // Near part: polar patch around the pole; the r from dA = r dr dtheta
  // cancels the kernel's 1/r.
  const int nr = q.singular_radial_nodes;
  const int na = q.singular_angular_nodes;
  cplx near = 0.0;
  for (int j = 0; j < nr; ++j) {
    double r = (j + 0.5) * r0 / nr;
    double w = 1.0 - smoothstep5(r / r0);
    cplx ring = 0.0;
    for (int m = 0; m < na; ++m) {
      double theta = 2.0 * kPi * m / na;
      cplx p = pole + std::polar(r, theta);
      if (!d.contains(p)) continue;
      cplx gv = g(p);
      if (!is_finite(gv)) throw_error(errc::non_finite_integrand, "integrand not finite on polar patch");
      ring += gv * std::polar(1.0, -theta);
    }
    near += w * ring;
  }
  near *= (r0 / nr) * (2.0 * kPi / na);

  return far + near;
}

WirtingerDerivatives wirtinger(const std::function<cplx(cplx)>& f, cplx z, double step) {
  if (!(step > 0.0)) throw_error(errc::invalid_argument, "step must be positive");
  cplx fe = f(z + step), fw = f(z - step);
  cplx fn = f(z + cplx(0.0, step)), fs = f(z - cplx(0.0, step));
  if (!is_finite(fe) || !is_finite(fw) || !is_finite(fn) || !is_finite(fs))
    throw_error(errc::non_finite_stencil, "non-finite value on Wirtinger stencil");
  cplx fx = (fe - fw) / (2.0 * step);
  cplx fy = (fn - fs) / (2.0 * step);
  const cplx I(0.0, 1.0);
  return {0.5 * (fx - I * fy), 0.5 * (fx + I * fy)};
}

}  // namespace holonum
