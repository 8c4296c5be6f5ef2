#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "holonum/types.hpp"

namespace holonum {

enum class Orientation { Counterclockwise, Clockwise };

/// Closed C^1 boundary curve, parametrized over [0,1]. The stored orientation
/// labels the direction the parametrization actually traces; factories keep
/// the two consistent.
class Contour {
 public:
  Contour(std::function<cplx(double)> position, std::function<cplx(double)> velocity,
          Orientation orientation, int node_count = 256);

  static Contour circle(cplx center, double radius,
                        Orientation orientation = Orientation::Counterclockwise,
                        int node_count = 256);

  cplx position(double t) const { return position_(t); }
  cplx velocity(double t) const { return velocity_(t); }
  Orientation orientation() const { return orientation_; }
  int node_count() const { return node_count_; }

  Contour reversed() const;

  /// Positions at the n periodic quadrature nodes t_k = k/n.
  std::vector<cplx> nodes(int n) const;
  double max_node_gap(int n) const;
  /// Distance from z to the polyline through the n quadrature nodes.
  double distance_to(cplx z, int n) const;

 private:
  std::function<cplx(double)> position_;
  std::function<cplx(double)> velocity_;
  Orientation orientation_;
  int node_count_;
};

/// Bounded domain: outer contour (counterclockwise) plus holes (clockwise),
/// with a membership predicate and an axis-aligned bounding box.
class PlanarDomain {
 public:
  PlanarDomain(Contour outer, std::vector<Contour> holes, std::function<bool(cplx)> contains,
               cplx box_lo, cplx box_hi);

  static PlanarDomain disc(cplx center, double radius, int node_count = 256);
  static PlanarDomain annulus(cplx center, double inner_radius, double outer_radius,
                              int node_count = 256);

  bool contains(cplx z) const { return contains_(z); }
  const Contour& outer() const { return outer_; }
  const std::vector<Contour>& holes() const { return holes_; }
  cplx box_lo() const { return box_lo_; }
  cplx box_hi() const { return box_hi_; }

  /// Distance from z to the nearest boundary polyline (n nodes per contour).
  double boundary_distance(cplx z, int n) const;
  /// Largest polyline node gap over all contours.
  double max_boundary_gap(int n) const;

 private:
  Contour outer_;
  std::vector<Contour> holes_;
  std::function<bool(cplx)> contains_;
  cplx box_lo_, box_hi_;
};

/// Complex samples on a rectangular lattice. `origin` is the coordinate of
/// node (0,0); node (ix,iy) sits at origin + (ix*h, iy*h). Storage is
/// row-major with rows indexed by iy.
struct GridField {
  cplx origin{};
  double spacing = 0.0;
  int width = 0;
  int height = 0;
  std::vector<cplx> values;
  std::vector<std::uint8_t> mask;

  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * static_cast<std::size_t>(width) + static_cast<std::size_t>(ix);
  }
  cplx point(int ix, int iy) const {
    return origin + cplx(ix * spacing, iy * spacing);
  }
  bool in_mask(int ix, int iy) const { return mask[index(ix, iy)] != 0; }
  cplx value(int ix, int iy) const { return values[index(ix, iy)]; }

  /// Sample fn at the midpoints of a resolution x resolution cell lattice over
  /// the square box [lo, lo+side]^2; mask from pred. Values outside the mask
  /// are stored as 0.
  static GridField sample(cplx box_lo, double side, int resolution,
                          const std::function<cplx(cplx)>& fn,
                          const std::function<bool(cplx)>& pred);

  /// Geometry-only lattice (all values zero), mask from pred.
  static GridField lattice(cplx box_lo, double side, int resolution,
                           const std::function<bool(cplx)>& pred);

  /// Bilinear interpolation of mask-weighted values; 0 outside the lattice.
  cplx interpolate(cplx z) const;

  bool same_geometry(const GridField& o) const {
    return width == o.width && height == o.height &&
           std::abs(origin - o.origin) <= 1e-12 * (1.0 + std::abs(origin)) &&
           std::abs(spacing - o.spacing) <= 1e-12 * spacing;
  }
};

/// Node counts for the quadrature engines. All counts must be >= 4.
struct QuadratureSpec {
  int contour_nodes = 256;
  int area_resolution = 256;
  int singular_radial_nodes = 32;
  int singular_angular_nodes = 64;

  void validate() const;
};

}  // namespace holonum
