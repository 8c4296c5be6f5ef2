#pragma once

#include <functional>
#include <span>
#include <string>

#include "holonum/automorphisms.hpp"
#include "holonum/linalg.hpp"

namespace holonum {

enum class DomainModel { UnitDisc, UnitBall2, UnitBidisc };
enum class MetricKind { Caratheodory, Kobayashi };

int model_dim(DomainModel m);
bool model_contains(DomainModel m, const CVec& p);

struct MetricQuery {
  DomainModel model = DomainModel::UnitDisc;
  MetricKind kind = MetricKind::Kobayashi;
  CVec p;
  CVec xi;

  void validate() const;
};

/// Invariant length of the tangent vector xi at p. Disc and bidisc values at
/// general base points are obtained by pulling p to the origin with the
/// Mobius factor and applying the origin formula; the ball is supported at
/// the origin only. Caratheodory and Kobayashi agree on these models at all
/// supported points.
double metric_length(const MetricQuery& q);

struct CurvePath {
  std::function<CVec(double)> position;
  std::function<CVec(double)> velocity;
  DomainModel model = DomainModel::UnitDisc;
};

/// Composite-trapezoid integral of metric_length along the path.
double curve_length(const CurvePath& path, MetricKind kind, int n_steps);

struct JacobianDiagnostics {
  CMatrix jac;            // entries df_i/dz_j
  double dbar_residual;   // max |df_i/dzbar_j|, vanishes to stencil order for holomorphic f
};

/// Central-difference holomorphic Jacobian of a map between complex vector
/// spaces of dimension 1 or 2.
JacobianDiagnostics complex_jacobian(const std::function<CVec(const CVec&)>& f, const CVec& z,
                                     double step);

/// The 2x2 case, as a plain matrix.
CMatrix jacobian_c(const std::function<CVec(const CVec&)>& f, const CVec& z, double step);

/// Holomorphic map between models with its Jacobian; exact Jacobians supplied
/// for the registered family, finite differences otherwise.
struct HolomorphicMap {
  std::string name;
  DomainModel source = DomainModel::UnitDisc;
  DomainModel target = DomainModel::UnitDisc;
  std::function<CVec(const CVec&)> apply;
  std::function<CMatrix(const CVec&)> jacobian;
  bool biholomorphic = false;
};

HolomorphicMap projection_map(int index);                 // D^2 -> D
HolomorphicMap inclusion_map();                           // D -> D^2, z -> (z, 0)
HolomorphicMap scaling_map(cplx c);                       // D -> D, |c| <= 1
HolomorphicMap bidisc_automorphism_map(const BidiscAutomorphism& a);
HolomorphicMap compose_maps(const HolomorphicMap& outer, const HolomorphicMap& inner);

struct DistanceCheck {
  double lhs = 0.0;  // F(p, xi) upstairs
  double rhs = 0.0;  // F(f(p), Jac f(p) xi) downstairs
  bool ok = false;
  bool equality_expected = false;  // set for registered biholomorphisms
};

DistanceCheck distance_decreasing_check(const HolomorphicMap& f, const MetricQuery& source);

/// metric_length(origin, xi) < 1.
bool indicatrix_membership(DomainModel model, MetricKind kind, const CVec& xi);

/// Certified lower bound sup over candidates of |row(Jac f(0)) xi|, for
/// candidate maps model -> D with f(0) = 0.
double caratheodory_lower_bound(DomainModel model, const CVec& p, const CVec& xi,
                                std::span<const HolomorphicMap> candidates);

}  // namespace holonum
