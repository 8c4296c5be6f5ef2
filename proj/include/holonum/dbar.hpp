#pragma once

#include <functional>
#include <span>
#include <vector>

#include "holonum/cauchy.hpp"
#include "holonum/quadrature.hpp"

namespace holonum {

/// Compactly supported right-hand side for the inhomogeneous Cauchy-Riemann
/// equation df/dzbar = alpha. The support mask must be false outside
/// |xi| <= support_radius.
struct DbarProblem {
  GridField alpha;
  double support_radius = 1.0;

  /// Sample fn on a resolution^2 lattice over [-R, R]^2 with
  /// mask = (supported and |xi| <= R).
  static DbarProblem from_function(const std::function<cplx(cplx)>& fn, double support_radius,
                                   int resolution,
                                   const std::function<bool(cplx)>& supported = nullptr);

  double sup_abs() const;
  void validate() const;
};

enum class CutoffSmoothness { C1, C2 };

/// Radial cutoff: phi = 1 on |z - center| <= inner_radius, 0 beyond
/// outer_radius, monotone smoothstep profile in between (cubic for C1,
/// quintic for C2).
struct CutoffSpec {
  cplx center;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  CutoffSmoothness smoothness = CutoffSmoothness::C2;

  double value(cplx z) const;
  /// d phi / d zbar, analytic expression for the radial profile.
  cplx dzbar(cplx z) const;
  void validate() const;
};

/// f(zeta) = -(1/pi) * integral of alpha(xi)/(xi - zeta) dA, evaluated lazily
/// per query point; defined inside and outside the support.
std::vector<cplx> cauchy_transform(const DbarProblem& p, std::span<const cplx> eval_points,
                                   const QuadratureSpec& q);
cplx cauchy_transform_point(const DbarProblem& p, cplx zeta, const QuadratureSpec& q);

/// Transform on alpha's own lattice, exploiting translation invariance:
/// punched-midpoint lattice convolution (zero self-cell kernel), computed by
/// FFT. The output field covers the full lattice (mask all true).
GridField cauchy_transform_grid(const DbarProblem& p);

/// max over eligible lattice nodes of |df/dzbar - alpha| using the
/// central-difference Wirtinger stencil on the f lattice. Eligible nodes are
/// >= 2 cells from the f-lattice edge, carry a full in-mask stencil, and lie
/// >= 2 alpha-cells away from any alpha support-mask transition.
double dbar_residual(const GridField& f_samples, const GridField& alpha);

/// Explicit bound B = sup|alpha| * (1/pi) * integral over |xi| <= 2R of
/// dA/|xi| with |f| <= B on all of C; the radial integral is evaluated
/// numerically.
double boundedness_bound(const DbarProblem& p, const QuadratureSpec& q);

/// hhat = phi*h - f with alpha = dphi/dzbar * h and f its transform over d:
/// holomorphic on d, blowing up at the cutoff center like h does.
class BlowUpExtension {
 public:
  BlowUpExtension(std::function<cplx(cplx)> h, CutoffSpec cutoff, PlanarDomain d,
                  QuadratureSpec q);

  cplx operator()(cplx z) const;
  /// hhat sampled on alpha's lattice via the grid transform, masked by pred.
  GridField field(const std::function<bool(cplx)>& pred) const;
  const DbarProblem& problem() const { return problem_; }
  double bound() const { return bound_; }

 private:
  std::function<cplx(cplx)> h_;
  CutoffSpec cutoff_;
  PlanarDomain domain_;
  QuadratureSpec quad_;
  DbarProblem problem_;
  double bound_;
};

BlowUpExtension blow_up_extension(const std::function<cplx(cplx)>& h, const CutoffSpec& cutoff,
                                  const PlanarDomain& d, const QuadratureSpec& q);

}  // namespace holonum
