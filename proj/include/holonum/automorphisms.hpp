#pragma once

#include <array>
#include <variant>

#include "holonum/linalg.hpp"
#include "holonum/rng.hpp"
#include "holonum/types.hpp"

namespace holonum {

/// One-variable Mobius factor (z - a)/(1 - conj(a) z) and its derivative.
cplx mobius_factor(cplx a, cplx z);
cplx mobius_factor_derivative(cplx a, cplx z);

/// psi_{alpha,beta} with optional per-factor rotation phases:
/// z_j -> e^{i theta_j} (z_j - a_j)/(1 - conj(a_j) z_j).
struct BidiscAutomorphism {
  cplx alpha;
  cplx beta;
  double theta1 = 0.0;
  double theta2 = 0.0;

  void validate() const;  // |alpha| < 1, |beta| < 1 strictly
};

std::array<cplx, 2> apply_bidisc_automorphism(const BidiscAutomorphism& a,
                                              std::array<cplx, 2> z);
BidiscAutomorphism inverse(const BidiscAutomorphism& a);

/// Rotation in each variable separately: diag(e^{i theta1}, e^{i theta2}).
struct DiagonalRotation {
  double theta1 = 0.0;
  double theta2 = 0.0;

  CMatrix matrix() const;
};

struct Unitary2 {
  CMatrix m;

  explicit Unitary2(const CMatrix& u);  // checks U U* = I within 1e-12
};

Unitary2 random_unitary(Rng& rng);

using IsotropyElement = std::variant<DiagonalRotation, Unitary2>;

/// ||g1 g2 - g2 g1|| (max absolute entry); zero iff the pair commutes.
/// Both arguments must be of the same kind.
double commutator_defect(const IsotropyElement& g1, const IsotropyElement& g2);

struct IsotropyReport {
  double bidisc_max_defect = 0.0;
  CMatrix witness_u1, witness_u2;
  double ball_defect = 0.0;
  int attempts = 0;
};

/// Samples diagonal-rotation pairs (defect must be 0) and unitary pairs until
/// a non-commuting witness with defect > 0.1 appears.
IsotropyReport isotropy_abelian_report(int sample_count, std::uint64_t seed);

enum class WitnessBranch { Endpoint, Midpoint };

struct PoincareWitness {
  std::array<cplx, 2> witness_point{};  // point of the closed bidisc
  double image_norm = 0.0;
  WitnessBranch branch = WitnessBranch::Endpoint;
};

/// Certificate that the linear map L does not carry the bidisc onto the ball:
/// either an endpoint of the boundary segment {(t,1)} whose image leaves the
/// sphere, or the segment midpoint whose image norm drops strictly below 1.
PoincareWitness poincare_witness(const CMatrix& L);

/// |(p+q)/2| for distinct points of the unit sphere in C^2; strictly < 1.
double strict_convexity_check(std::array<cplx, 2> p, std::array<cplx, 2> q);

}  // namespace holonum
