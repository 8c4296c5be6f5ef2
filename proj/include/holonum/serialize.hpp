#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "holonum/dirichlet.hpp"
#include "holonum/geometry.hpp"
#include "holonum/osgood.hpp"

namespace holonum {

using json = nlohmann::json;

/// Complex values serialize as [re, im] pairs throughout.
json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

/// {origin, spacing, width, height, values: row-major [re,im] pairs,
///  mask: row-major booleans}
json gridfield_to_json(const GridField& g);
GridField gridfield_from_json(const json& j);

/// Sampled node list: {orientation, nodes: [[re,im], ...]}.
json contour_to_json(const Contour& c, int n_nodes = 0);

/// CSV rows "psi,value" at equispaced ascending angles.
BoundaryData read_boundary_csv(std::istream& in);
void write_boundary_csv(std::ostream& out, const BoundaryData& data);

/// Polar-lattice CSV of a harmonic field: header + "r,theta,value" rows.
void write_polar_csv(std::ostream& out, const HarmonicField& u);

/// Plain PBM (P1) bitmap of a boundedness mask, top row = largest iy.
void write_mask_pbm(std::ostream& out, const BoundednessMask& m);

/// Fixed %.17g formatting used by every text emitter, so identical runs
/// produce identical bytes.
std::string format_double(double v);

}  // namespace holonum
