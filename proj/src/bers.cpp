#include "holonum/bers.hpp"

#include <algorithm>
#include <cmath>

#include "holonum/rng.hpp"

namespace holonum {

Poly::Poly(std::vector<cplx> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) c_.push_back(cplx{0.0});
  if (static_cast<int>(c_.size()) - 1 > kMaxPolyDegree)
    throw_error(errc::degree_overflow, "degree bound is 64");
  for (cplx v : c_)
    if (!is_finite(v)) throw_error(errc::invalid_argument, "non-finite coefficient");
  trim();
}

void Poly::trim() {
  while (c_.size() > 1 && c_.back() == cplx{0.0}) c_.pop_back();
}

Poly Poly::monomial(int k, cplx coefficient) {
  if (k < 0 || k > kMaxPolyDegree) throw_error(errc::degree_overflow, "monomial degree out of range");
  std::vector<cplx> c(static_cast<std::size_t>(k) + 1, cplx{0.0});
  c.back() = coefficient;
  return Poly(std::move(c));
}

cplx Poly::evaluate(cplx z) const {
  cplx acc = c_.back();
  for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<cplx> c(std::max(c_.size(), o.c_.size()), cplx{0.0});
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<cplx> c(std::max(c_.size(), o.c_.size()), cplx{0.0});
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (degree() + o.degree() > kMaxPolyDegree)
    throw_error(errc::degree_overflow, "product exceeds the degree bound");
  std::vector<cplx> c(static_cast<std::size_t>(degree() + o.degree()) + 1, cplx{0.0});
  for (int i = 0; i <= degree(); ++i)
    for (int j = 0; j <= o.degree(); ++j)
      c[static_cast<std::size_t>(i + j)] += coeff(i) * o.coeff(j);
  return Poly(std::move(c));
}

Poly Poly::scaled(cplx s) const {
  std::vector<cplx> c(c_);
  for (cplx& v : c) v *= s;
  return Poly(std::move(c));
}

double Poly::coeff_distance(const Poly& o) const {
  double worst = 0.0;
  int top = std::max(degree(), o.degree());
  for (int k = 0; k <= top; ++k) worst = std::max(worst, std::abs(coeff(k) - o.coeff(k)));
  return worst;
}

Poly compose(const Poly& f, const Poly& h, int cap) {
  if (f.degree() > 0 && h.degree() > 0 && f.degree() * h.degree() > cap)
    throw_error(errc::degree_overflow, "composition exceeds the degree cap");
  Poly acc = Poly::constant(f.coeff(f.degree()));
  for (int k = f.degree() - 1; k >= 0; --k) acc = acc * h + Poly::constant(f.coeff(k));
  return acc;
}

DivisionResult divide_at_point(const Poly& g, cplx c) {
  const int n = g.degree();
  if (n == 0) return {g.coeff(0), Poly()};
  std::vector<cplx> q(static_cast<std::size_t>(n), cplx{0.0});
  cplx carry = g.coeff(n);
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<std::size_t>(k)] = carry;
    carry = g.coeff(k) + c * carry;
  }
  return {carry, Poly(std::move(q))};
}

CharacterTable::CharacterTable(std::vector<cplx> imgs) : images(std::move(imgs)) {
  if (images.empty()) throw_error(errc::invalid_argument, "empty character table");
  if (std::abs(images[0] - cplx{1.0}) > 1e-12)
    throw_error(errc::invalid_argument, "a character is unital: images[0] must be 1");
  for (cplx v : images)
    if (!is_finite(v)) throw_error(errc::invalid_argument, "non-finite table entry");
}

CharacterPointResult character_point(const CharacterTable& t) {
  CharacterPointResult res;
  res.c = t.images.size() > 1 ? t.images[1] : cplx{0.0};
  res.max_defect = 0.0;
  cplx power = 1.0;
  for (std::size_t k = 0; k < t.images.size(); ++k) {
    double scale = std::max(1.0, std::abs(power));
    res.max_defect = std::max(res.max_defect, std::abs(t.images[k] - power) / scale);
    power *= res.c;
  }
  res.consistent = res.max_defect < 1e-10;
  return res;
}

AlgebraHom hom_from_map(Poly h, int cap) {
  if (cap < h.degree()) throw_error(errc::degree_overflow, "cap below the map's degree");
  return {std::move(h), cap};
}

Poly pullback(const AlgebraHom& hom, const Poly& f) { return compose(f, hom.h, hom.cap); }

namespace {

// Coefficient scales keep composed coefficients small enough that the
// homomorphism identities hold to 1e-10 in absolute double arithmetic
// (degree-8 probes raise h to the 8th power).
Poly random_poly(Rng& rng, int max_degree, bool integer_coeffs) {
  int deg = rng.uniform_int(0, max_degree);
  std::vector<cplx> c(static_cast<std::size_t>(deg) + 1);
  for (cplx& v : c)
    v = integer_coeffs
            ? cplx(rng.uniform_int(-2, 2), rng.uniform_int(-2, 2))
            : cplx(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
  return Poly(std::move(c));
}

}  // namespace

MorphismAudit morphism_audit(const PolyMap& phi, int trials, std::uint64_t seed) {
  if (trials < 1) throw_error(errc::invalid_argument, "need at least one trial");
  Rng rng(seed);
  MorphismAudit audit;

  audit.unital_defect = phi(Poly::constant(1.0)).coeff_distance(Poly::constant(1.0));
  audit.recovered_h = phi(Poly::identity());

  std::vector<std::pair<Poly, Poly>> cases;
  for (int t = 0; t < trials; ++t) {
    bool integer = t % 2 == 0;
    Poly f = random_poly(rng, 4, integer);
    Poly g = random_poly(rng, 4, integer);
    cases.emplace_back(f, g);
    audit.additive_defect =
        std::max(audit.additive_defect, phi(f + g).coeff_distance(phi(f) + phi(g)));
    audit.multiplicative_defect =
        std::max(audit.multiplicative_defect, phi(f * g).coeff_distance(phi(f) * phi(g)));
    cplx s = integer ? cplx(0.0, 1.0) : cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    audit.scalar_defect =
        std::max(audit.scalar_defect, phi(f.scaled(s)).coeff_distance(phi(f).scaled(s)));
  }

  bool laws_hold = audit.additive_defect < 1e-10 && audit.multiplicative_defect < 1e-10 &&
                   audit.unital_defect < 1e-10 && audit.scalar_defect < 1e-10;
  if (laws_hold) {
    AlgebraHom hom = hom_from_map(audit.recovered_h);
    for (const auto& [f, g] : cases) {
      audit.composition_defect =
          std::max(audit.composition_defect, phi(f).coeff_distance(pullback(hom, f)));
      audit.composition_defect =
          std::max(audit.composition_defect, phi(g).coeff_distance(pullback(hom, g)));
    }
  }
  audit.is_homomorphism = laws_hold && audit.composition_defect < 1e-10;
  return audit;
}

}  // namespace holonum
