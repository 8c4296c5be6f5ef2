#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "holonum/geometry.hpp"
#include "holonum/quadrature.hpp"

namespace holonum {

/// Pointwise family f_j, j = 1..j_max.
struct FunctionSequence {
  std::function<cplx(int, cplx)> member;
  int j_max = 64;
};

/// Boolean lattice marking where max_{j <= j_max} |f_j| <= k. `region` marks
/// the lattice points that belong to the working set at all; `mask` is a
/// subset of it.
struct BoundednessMask {
  cplx origin{};
  double spacing = 0.0;
  int width = 0;
  int height = 0;
  double k = 0.0;
  std::vector<std::uint8_t> region;
  std::vector<std::uint8_t> mask;

  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(ix);
  }
  cplx point(int ix, int iy) const { return origin + cplx(ix * spacing, iy * spacing); }
  bool same_geometry(const BoundednessMask& o) const;
};

/// mask(z) <=> max_{j <= j_max} |f_j(z)| <= k, computed pointwise over the
/// geometry's in-mask lattice points.
BoundednessMask boundedness_set(const FunctionSequence& seq, const GridField& geometry, double k);

struct CoverResult {
  bool covered = false;
  std::vector<cplx> uncovered_points;  // capped listing
};

CoverResult cover_check(std::span<const BoundednessMask> masks);

struct DenseBall {
  double k = 0.0;
  cplx center{};
  double radius = 0.0;
};

/// Largest lattice-inscribed disc lying inside a single mask; ties broken by
/// smaller k, then lexicographic center (re, then im).
DenseBall dense_ball_search(std::span<const BoundednessMask> masks);

/// Cauchy-formula consistency of the proxy limit f_{j_max} on the ball.
double limit_holomorphy_residual(const FunctionSequence& seq, cplx center, double radius,
                                 const QuadratureSpec& q);

struct SequenceSpec {
  std::string name;
  std::string description;
  std::function<cplx(int, cplx)> member;
};

/// Named test sequences for the CLI and the verification suites.
std::span<const SequenceSpec> sequence_registry();
const SequenceSpec* find_sequence(const std::string& name);

}  // namespace holonum
