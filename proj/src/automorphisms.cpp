#include "holonum/automorphisms.hpp"

#include <cmath>

namespace holonum {

cplx mobius_factor(cplx a, cplx z) { return (z - a) / (1.0 - std::conj(a) * z); }

cplx mobius_factor_derivative(cplx a, cplx z) {
  cplx den = 1.0 - std::conj(a) * z;
  return (1.0 - std::norm(a)) / (den * den);
}

void BidiscAutomorphism::validate() const {
  if (!(std::abs(alpha) < 1.0) || !(std::abs(beta) < 1.0))
    throw_error(errc::invalid_argument, "automorphism parameters must lie strictly in the disc");
  if (!std::isfinite(theta1) || !std::isfinite(theta2))
    throw_error(errc::invalid_argument, "rotation phases must be finite");
}

std::array<cplx, 2> apply_bidisc_automorphism(const BidiscAutomorphism& a,
                                              std::array<cplx, 2> z) {
  a.validate();
  if (!(std::abs(z[0]) < 1.0) || !(std::abs(z[1]) < 1.0))
    throw_error(errc::point_outside_domain, "point must lie in the open bidisc");
  return {std::polar(1.0, a.theta1) * mobius_factor(a.alpha, z[0]),
          std::polar(1.0, a.theta2) * mobius_factor(a.beta, z[1])};
}

BidiscAutomorphism inverse(const BidiscAutomorphism& a) {
  a.validate();
  return {-a.alpha * std::polar(1.0, a.theta1), -a.beta * std::polar(1.0, a.theta2), -a.theta1,
          -a.theta2};
}

CMatrix DiagonalRotation::matrix() const {
  CMatrix m(2, 2);
  m.at(0, 0) = std::polar(1.0, theta1);
  m.at(1, 1) = std::polar(1.0, theta2);
  return m;
}

Unitary2::Unitary2(const CMatrix& u) : m(u) {
  if (u.rows != 2 || u.cols != 2) throw_error(errc::invalid_argument, "unitary must be 2x2");
  // U U* = I
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 2; ++k) s += u.at(i, k) * std::conj(u.at(j, k));
      if (std::abs(s - (i == j ? cplx{1.0} : cplx{0.0})) > 1e-12)
        throw_error(errc::invalid_argument, "matrix is not unitary within 1e-12");
    }
}

Unitary2 random_unitary(Rng& rng) {
  // Gram-Schmidt on a random complex matrix
  for (;;) {
    cplx a1 = rng.gaussian(), a2 = rng.gaussian();
    cplx b1 = rng.gaussian(), b2 = rng.gaussian();
    double n1 = std::sqrt(std::norm(a1) + std::norm(a2));
    if (n1 < 1e-8) continue;
    a1 /= n1;
    a2 /= n1;
    cplx proj = b1 * std::conj(a1) + b2 * std::conj(a2);
    b1 -= proj * a1;
    b2 -= proj * a2;
    double n2 = std::sqrt(std::norm(b1) + std::norm(b2));
    if (n2 < 1e-8) continue;
    CMatrix u(2, 2);
    u.at(0, 0) = a1;
    u.at(1, 0) = a2;
    u.at(0, 1) = b1 / n2;
    u.at(1, 1) = b2 / n2;
    return Unitary2(u);
  }
}

double commutator_defect(const IsotropyElement& g1, const IsotropyElement& g2) {
  if (g1.index() != g2.index())
    throw_error(errc::kind_mismatch, "commutator arguments must be of the same kind");
  auto mat = [](const IsotropyElement& g) {
    return std::holds_alternative<DiagonalRotation>(g) ? std::get<DiagonalRotation>(g).matrix()
                                                       : std::get<Unitary2>(g).m;
  };
  CMatrix a = mat(g1), b = mat(g2);
  return (a.multiply(b) - b.multiply(a)).max_abs();
}

IsotropyReport isotropy_abelian_report(int sample_count, std::uint64_t seed) {
  if (sample_count < 2) throw_error(errc::invalid_argument, "need at least 2 samples");
  Rng rng(seed);
  IsotropyReport rep;

  for (int i = 0; i < sample_count; ++i) {
    DiagonalRotation d1{rng.uniform(0.0, 2.0 * 3.14159265358979323846),
                        rng.uniform(0.0, 2.0 * 3.14159265358979323846)};
    DiagonalRotation d2{rng.uniform(0.0, 2.0 * 3.14159265358979323846),
                        rng.uniform(0.0, 2.0 * 3.14159265358979323846)};
    rep.bidisc_max_defect = std::max(rep.bidisc_max_defect, commutator_defect(d1, d2));
  }

  for (rep.attempts = 1;; ++rep.attempts) {
    Unitary2 u1 = random_unitary(rng);
    Unitary2 u2 = random_unitary(rng);
    double defect = commutator_defect(u1, u2);
    if (defect > 0.1) {
      rep.witness_u1 = u1.m;
      rep.witness_u2 = u2.m;
      rep.ball_defect = defect;
      break;
    }
  }
  return rep;
}

PoincareWitness poincare_witness(const CMatrix& L) {
  if (L.rows != 2 || L.cols != 2) throw_error(errc::invalid_argument, "witness needs a 2x2 matrix");
  if (std::abs(L.det2()) <= 1e-10) throw_error(errc::singular_matrix, "matrix is singular");

  auto segment_image = [&L](double t) {
    CVec s = L.apply({cplx(t, 0.0), cplx(1.0, 0.0)});
    return std::array<cplx, 2>{s[0], s[1]};
  };
  auto norm_of = [](const std::array<cplx, 2>& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  };

  PoincareWitness w;
  for (double t : {0.0, 1.0}) {
    auto img = segment_image(t);
    double n = norm_of(img);
    if (std::abs(n - 1.0) > 1e-9) {
      w.witness_point = {cplx(t, 0.0), cplx(1.0, 0.0)};
      w.image_norm = n;
      w.branch = WitnessBranch::Endpoint;
      return w;
    }
  }
  // both endpoints land on the sphere; strict convexity pins the midpoint
  auto img = segment_image(0.5);
  w.witness_point = {cplx(0.5, 0.0), cplx(1.0, 0.0)};
  w.image_norm = norm_of(img);
  w.branch = WitnessBranch::Midpoint;
  return w;
}

double strict_convexity_check(std::array<cplx, 2> p, std::array<cplx, 2> q) {
  auto norm_of = [](const std::array<cplx, 2>& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  };
  if (std::abs(norm_of(p) - 1.0) > 1e-9 || std::abs(norm_of(q) - 1.0) > 1e-9)
    throw_error(errc::not_on_sphere, "points must lie on the unit sphere within 1e-9");
  if (std::abs(p[0] - q[0]) == 0.0 && std::abs(p[1] - q[1]) == 0.0)
    throw_error(errc::coincident_points, "points must be distinct");
  return norm_of({0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1])});
}

}  // namespace holonum
