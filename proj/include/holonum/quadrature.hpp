#pragma once

#include <functional>
#include <utility>

#include "holonum/geometry.hpp"
#include "holonum/types.hpp"

namespace holonum {

inline constexpr double kPi = 3.14159265358979323846;

/// Quintic smoothstep: 0 for s <= 0, 1 for s >= 1, C^2 at both ends.
double smoothstep5(double s);

/// Periodic-trapezoid approximation of the oriented line integral of g along c.
cplx contour_integral(const std::function<cplx(cplx)>& g, const Contour& c,
                      const QuadratureSpec& q);

/// Midpoint-rule approximation of the area integral of g over d, on the cell
/// lattice of d's bounding box restricted by the membership predicate.
cplx area_integral(const std::function<cplx(cplx)>& g, const PlanarDomain& d,
                   const QuadratureSpec& q);

/// Integral of g(xi)/(xi - pole) dA over d. The kernel is split by a C^2
/// radial weight supported on |xi - pole| <= r0 = 8h: the near part is
/// integrated on a polar patch around the pole (the substitution
/// xi = pole + r e^{i theta} cancels the 1/r singularity exactly), the far
/// part on the midpoint lattice.
cplx singular_area_integral(const std::function<cplx(cplx)>& g, cplx pole, const PlanarDomain& d,
                            const QuadratureSpec& q);

struct WirtingerDerivatives {
  cplx dz;
  cplx dzbar;
};

/// Central-difference Wirtinger derivatives of f at z: dz = (fx - i fy)/2,
/// dzbar = (fx + i fy)/2, O(step^2) for C^3 inputs.
WirtingerDerivatives wirtinger(const std::function<cplx(cplx)>& f, cplx z, double step);

/// Default finite-difference step at z.
inline double default_fd_step(cplx z) { return 1e-4 * (1.0 + std::abs(z)); }

}  // namespace holonum
