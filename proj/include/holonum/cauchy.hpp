#pragma once

#include <functional>
#include <optional>
#include <span>

#include "holonum/quadrature.hpp"

namespace holonum {

/// Cauchy integral over all boundary contours of d:
/// (1/2 pi i) sum_contours of the oriented integral of f(zeta)/(zeta - z).
/// Reproduces f(z) for f holomorphic on the closure.
cplx cauchy_eval(const std::function<cplx(cplx)>& f, const PlanarDomain& d, cplx z,
                 const QuadratureSpec& q);

/// Cauchy-Pompeiu value: boundary term minus (1/pi) * integral of
/// (df/dzbar)/(zeta - z) dA. When dbar_f is absent it is obtained by the
/// Wirtinger stencil with step h/4 (h = area lattice spacing). Approximates
/// f(z) for C^1 inputs.
cplx pompeiu_eval(const std::function<cplx(cplx)>& f, const PlanarDomain& d, cplx z,
                  const QuadratureSpec& q,
                  std::optional<std::function<cplx(cplx)>> dbar_f = std::nullopt);

/// max over samples of |f(z) - cauchy_eval(f, d, z, q)|; near zero iff f
/// behaves holomorphically at this resolution.
double holomorphy_residual(const std::function<cplx(cplx)>& f, const PlanarDomain& d,
                           std::span<const cplx> sample_points, const QuadratureSpec& q);

}  // namespace holonum
