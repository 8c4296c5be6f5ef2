#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "holonum/geometry.hpp"

namespace holonum {

/// Boundary values f(e^{i psi_k}) at equispaced angles psi_k = 2 pi k / N.
struct BoundaryData {
  std::vector<cplx> samples;

  static BoundaryData from_function(const std::function<cplx(double)>& f, int count);

  int count() const { return static_cast<int>(samples.size()); }
  double psi(int k) const;
  cplx mean() const;
  void validate() const;  // count >= 8, finite values
};

/// P(r, delta) = (1 - r^2) / (1 - 2 r cos(delta) + r^2); strictly positive,
/// unit mean over delta.
double poisson_kernel(double r, double delta);

/// Periodic-trapezoid Poisson integral of the boundary samples.
cplx poisson_solve(const BoundaryData& f, double r, double theta);

/// u on a polar lattice (radius x angle), radii strictly inside the disc.
struct HarmonicField {
  std::vector<double> radii;
  int angular_count = 0;
  std::vector<cplx> values;  // index = j * angular_count + k

  std::size_t index(int j, int k) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(angular_count) +
           static_cast<std::size_t>(k);
  }
};

HarmonicField solve_on_polar_grid(const BoundaryData& f, std::span<const double> radii,
                                  int angular_count);

/// max |5-point Laplacian| over interior in-mask lattice nodes.
double laplacian_residual(const GridField& u);
/// Polar-stencil Laplacian residual over interior nodes of the field.
double laplacian_residual(const HarmonicField& u);

/// max over the sample angles of |u(r, psi_k) - f_k|; shrinks as r -> 1- for
/// continuous data. Requires 0.9 <= r < 1.
double boundary_continuity_gap(const BoundaryData& f, double r);

/// Pairwise brute-force sup of |g(x)-g(y)| / |x-y|^alpha; a lower bound for
/// the true order-alpha seminorm. Capped at 5e4 points.
double holder_seminorm(std::span<const cplx> points, std::span<const cplx> values, double alpha);

struct CkAlphaReport {
  int k = 0;
  double alpha = 0.0;
  std::vector<double> sup_norms;  // orders 0..k
  double top_seminorm = 0.0;      // order-alpha seminorm of the k-th derivative
};

/// Seminorm report for g sampled on the uniform real grid x_i = x0 + i*dx.
/// Derivative samples of orders 1..k are taken from `derivatives` when given,
/// otherwise computed by repeated central differences (each order trims one
/// point at each end).
CkAlphaReport ck_alpha_report(std::span<const double> values, double x0, double dx, int k,
                              double alpha,
                              const std::vector<std::vector<double>>* derivatives = nullptr);

/// Outward normal derivative at boundary point P of the unit disc, from
/// one-sided quotients (u(P) - u(P - s nu))/s extrapolated to s = 0 over the
/// supplied steps (Neville tableau).
double hopf_normal_derivative(const std::function<double(cplx)>& u, cplx P,
                              std::span<const double> steps);

struct HarnackCheck {
  double lhs = 0.0;  // min over angles of u(r, theta)
  double rhs = 0.0;  // u(0) * (1 - r)/(1 + r)
  bool ok = false;
};

/// Harnack-type lower bound for nonnegative boundary data; the constant
/// realizes the kernel minimum (1-r)/(1+r).
HarnackCheck harnack_lower_bound_check(const BoundaryData& f, double r);

}  // namespace holonum
