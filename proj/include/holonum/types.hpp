#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#define HOLONUM_VERSION "0.1.0"

namespace holonum {

using cplx = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Error kinds raised by library operations. Inputs that merely fail a
/// verification (a check that ran and came back false) are reported as data,
/// not as errors.
enum class errc {
  non_finite_integrand,
  degenerate_contour,
  empty_domain,
  non_finite_stencil,
  point_on_boundary,
  lattice_mismatch,
  radius_out_of_range,
  lattice_too_small,
  degenerate_sample_set,
  negative_data,
  non_finite_sample,
  unsupported_base_point,
  point_outside_domain,
  map_leaves_target,
  candidate_not_admissible,
  kind_mismatch,
  singular_matrix,
  not_on_sphere,
  coincident_points,
  degree_overflow,
  geometry_mismatch,
  all_masks_empty,
  singularity_inside_cutoff_transition,
  invalid_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void throw_error(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace holonum
