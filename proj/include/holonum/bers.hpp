#pragma once

#include <functional>
#include <vector>

#include "holonum/types.hpp"

namespace holonum {

inline constexpr int kMaxPolyDegree = 64;

/// Complex-coefficient polynomial, coefficients indexed by degree. Trailing
/// exact zeros are trimmed, so degree() reflects the actual degree (the zero
/// polynomial has degree 0 and coefficient 0).
class Poly {
 public:
  Poly() : c_{cplx{0.0}} {}
  explicit Poly(std::vector<cplx> coefficients);

  static Poly constant(cplx c) { return Poly({c}); }
  static Poly identity() { return Poly({cplx{0.0}, cplx{1.0}}); }
  static Poly monomial(int k, cplx coefficient = 1.0);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  cplx coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : cplx{0.0};
  }
  const std::vector<cplx>& coeffs() const { return c_; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == cplx{0.0}; }

  cplx evaluate(cplx z) const;  // Horner

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(cplx c) const;

  /// max absolute coefficient of the difference.
  double coeff_distance(const Poly& o) const;

 private:
  std::vector<cplx> c_;
  void trim();
};

/// f(h(z)) by Horner over polynomial arithmetic; deg(f)*deg(h) must stay
/// within the cap.
Poly compose(const Poly& f, const Poly& h, int cap = kMaxPolyDegree);

struct DivisionResult {
  cplx value;     // g(c)
  Poly quotient;  // gtilde with g(z) = value + (z - c) * gtilde(z)
};

/// Synthetic division of g by (z - c); exact coefficient identity.
DivisionResult divide_at_point(const Poly& g, cplx c);

/// Values phi(z^k) for k = 0..N of a putative character; images[0] must be 1.
struct CharacterTable {
  std::vector<cplx> images;

  explicit CharacterTable(std::vector<cplx> imgs);
};

struct CharacterPointResult {
  cplx c;             // images[1]
  bool consistent;    // images[k] = c^k for all k, within 1e-10 relative
  double max_defect;
};

/// Every character is a point evaluation; this recovers the point and reports
/// the multiplicativity defect (inconsistency is data, not an error).
CharacterPointResult character_point(const CharacterTable& t);

struct AlgebraHom {
  Poly h;
  int cap = kMaxPolyDegree;
};

AlgebraHom hom_from_map(Poly h, int cap = kMaxPolyDegree);

/// pullback(hom, f) = f o h.
Poly pullback(const AlgebraHom& hom, const Poly& f);

using PolyMap = std::function<Poly(const Poly&)>;

struct MorphismAudit {
  double additive_defect = 0.0;
  double multiplicative_defect = 0.0;
  double unital_defect = 0.0;
  double scalar_defect = 0.0;      // phi(c f) vs c phi(f), separates C-algebra maps from ring maps
  double composition_defect = 0.0; // phi(f) vs f o recovered_h, checked when the laws hold
  Poly recovered_h;
  bool is_homomorphism = false;
};

/// Randomized audit of the homomorphism laws for a black-box map on
/// polynomials of degree <= 4.
MorphismAudit morphism_audit(const PolyMap& phi, int trials, std::uint64_t seed);

}  // namespace holonum
