#include "holonum/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "holonum/quadrature.hpp"

namespace holonum {

int model_dim(DomainModel m) { return m == DomainModel::UnitDisc ? 1 : 2; }

bool model_contains(DomainModel m, const CVec& p) {
  if (static_cast<int>(p.size()) != model_dim(m)) return false;
  switch (m) {
    case DomainModel::UnitDisc:
      return std::abs(p[0]) < 1.0;
    case DomainModel::UnitBall2:
      return std::norm(p[0]) + std::norm(p[1]) < 1.0;
    case DomainModel::UnitBidisc:
      return std::abs(p[0]) < 1.0 && std::abs(p[1]) < 1.0;
  }
  return false;
}

void MetricQuery::validate() const {
  int dim = model_dim(model);
  if (static_cast<int>(p.size()) != dim || static_cast<int>(xi.size()) != dim)
    throw_error(errc::invalid_argument, "base point / tangent dimension mismatch with the model");
  for (cplx z : p)
    if (!is_finite(z)) throw_error(errc::invalid_argument, "non-finite base point");
  for (cplx z : xi)
    if (!is_finite(z)) throw_error(errc::invalid_argument, "non-finite tangent vector");
  if (!model_contains(model, p))
    throw_error(errc::point_outside_domain, "base point must lie strictly inside the model");
}

namespace {

// Poincare factor at p: length of xi after pulling p to 0 by the Mobius map.
double disc_factor_length(cplx p, cplx xi) {
  return std::abs(mobius_factor_derivative(p, p) * xi);
}

}  // namespace

double metric_length(const MetricQuery& q) {
  q.validate();
  switch (q.model) {
    case DomainModel::UnitDisc:
      return disc_factor_length(q.p[0], q.xi[0]);
    case DomainModel::UnitBidisc:
      return std::max(disc_factor_length(q.p[0], q.xi[0]), disc_factor_length(q.p[1], q.xi[1]));
    case DomainModel::UnitBall2: {
      if (std::abs(q.p[0]) > 0.0 || std::abs(q.p[1]) > 0.0)
        throw_error(errc::unsupported_base_point,
                    "ball metric is supported at the origin only");
      return std::sqrt(std::norm(q.xi[0]) + std::norm(q.xi[1]));
    }
  }
  throw_error(errc::invalid_argument, "unknown model");
}

double curve_length(const CurvePath& path, MetricKind kind, int n_steps) {
  if (n_steps < 1) throw_error(errc::invalid_argument, "need at least one step");
  auto f = [&](double t) {
    MetricQuery q{path.model, kind, path.position(t), path.velocity(t)};
    return metric_length(q);
  };
  double acc = 0.5 * (f(0.0) + f(1.0));
  for (int i = 1; i < n_steps; ++i) acc += f(static_cast<double>(i) / n_steps);
  return acc / n_steps;
}

JacobianDiagnostics complex_jacobian(const std::function<CVec(const CVec&)>& f, const CVec& z,
                                     double step) {
  if (!(step > 0.0)) throw_error(errc::invalid_argument, "step must be positive");
  const int in_dim = static_cast<int>(z.size());
  const int out_dim = static_cast<int>(f(z).size());
  if (in_dim < 1 || in_dim > 2 || out_dim < 1 || out_dim > 2)
    throw_error(errc::invalid_argument, "jacobian supports dimensions 1 and 2");

  JacobianDiagnostics out;
  out.jac = CMatrix(out_dim, in_dim);
  out.dbar_residual = 0.0;
  const cplx I(0.0, 1.0);
  for (int j = 0; j < in_dim; ++j) {
    auto shifted = [&](cplx dz) {
      CVec w = z;
      w[static_cast<std::size_t>(j)] += dz;
      CVec v = f(w);
      for (cplx c : v)
        if (!is_finite(c)) throw_error(errc::non_finite_stencil, "non-finite value on stencil");
      return v;
    };
    CVec fe = shifted(step), fw = shifted(-step);
    CVec fn = shifted(I * step), fs = shifted(-I * step);
    for (int i = 0; i < out_dim; ++i) {
      cplx fx = (fe[static_cast<std::size_t>(i)] - fw[static_cast<std::size_t>(i)]) / (2.0 * step);
      cplx fy = (fn[static_cast<std::size_t>(i)] - fs[static_cast<std::size_t>(i)]) / (2.0 * step);
      out.jac.at(i, j) = 0.5 * (fx - I * fy);
      out.dbar_residual = std::max(out.dbar_residual, std::abs(0.5 * (fx + I * fy)));
    }
  }
  return out;
}

CMatrix jacobian_c(const std::function<CVec(const CVec&)>& f, const CVec& z, double step) {
  return complex_jacobian(f, z, step).jac;
}

HolomorphicMap projection_map(int index) {
  if (index != 0 && index != 1) throw_error(errc::invalid_argument, "projection index must be 0 or 1");
  HolomorphicMap m;
  m.name = index == 0 ? "pi1" : "pi2";
  m.source = DomainModel::UnitBidisc;
  m.target = DomainModel::UnitDisc;
  m.apply = [index](const CVec& z) { return CVec{z[static_cast<std::size_t>(index)]}; };
  m.jacobian = [index](const CVec&) {
    CMatrix j(1, 2);
    j.at(0, index) = 1.0;
    return j;
  };
  return m;
}

HolomorphicMap inclusion_map() {
  HolomorphicMap m;
  m.name = "iota";
  m.source = DomainModel::UnitDisc;
  m.target = DomainModel::UnitBidisc;
  m.apply = [](const CVec& z) { return CVec{z[0], cplx{0.0}}; };
  m.jacobian = [](const CVec&) {
    CMatrix j(2, 1);
    j.at(0, 0) = 1.0;
    return j;
  };
  return m;
}

HolomorphicMap scaling_map(cplx c) {
  if (!(std::abs(c) <= 1.0)) throw_error(errc::invalid_argument, "scaling must satisfy |c| <= 1");
  HolomorphicMap m;
  m.name = "scale";
  m.source = DomainModel::UnitDisc;
  m.target = DomainModel::UnitDisc;
  m.apply = [c](const CVec& z) { return CVec{c * z[0]}; };
  m.jacobian = [c](const CVec&) {
    CMatrix j(1, 1);
    j.at(0, 0) = c;
    return j;
  };
  m.biholomorphic = std::abs(std::abs(c) - 1.0) < 1e-15;
  return m;
}

HolomorphicMap bidisc_automorphism_map(const BidiscAutomorphism& a) {
  a.validate();
  HolomorphicMap m;
  m.name = "psi";
  m.source = DomainModel::UnitBidisc;
  m.target = DomainModel::UnitBidisc;
  m.apply = [a](const CVec& z) {
    auto w = apply_bidisc_automorphism(a, {z[0], z[1]});
    return CVec{w[0], w[1]};
  };
  m.jacobian = [a](const CVec& z) {
    CMatrix j(2, 2);
    j.at(0, 0) = std::polar(1.0, a.theta1) * mobius_factor_derivative(a.alpha, z[0]);
    j.at(1, 1) = std::polar(1.0, a.theta2) * mobius_factor_derivative(a.beta, z[1]);
    return j;
  };
  m.biholomorphic = true;
  return m;
}

HolomorphicMap compose_maps(const HolomorphicMap& outer, const HolomorphicMap& inner) {
  if (outer.source != inner.target)
    throw_error(errc::invalid_argument, "composition domain/range mismatch");
  HolomorphicMap m;
  m.name = outer.name + "." + inner.name;
  m.source = inner.source;
  m.target = outer.target;
  auto of = outer.apply, inf = inner.apply;
  auto oj = outer.jacobian, inj = inner.jacobian;
  m.apply = [of, inf](const CVec& z) { return of(inf(z)); };
  m.jacobian = [of, inf, oj, inj](const CVec& z) { return oj(inf(z)).multiply(inj(z)); };
  m.biholomorphic = outer.biholomorphic && inner.biholomorphic;
  return m;
}

DistanceCheck distance_decreasing_check(const HolomorphicMap& f, const MetricQuery& source) {
  source.validate();
  if (source.model != f.source)
    throw_error(errc::invalid_argument, "query model does not match the map's source");

  CVec image = f.apply(source.p);
  if (!model_contains(f.target, image))
    throw_error(errc::map_leaves_target, "image of the base point escapes the target model");

  CMatrix jac =
      f.jacobian ? f.jacobian(source.p)
                 : complex_jacobian(f.apply, source.p, default_fd_step(source.p[0])).jac;
  DistanceCheck chk;
  chk.lhs = metric_length(source);
  MetricQuery down{f.target, source.kind, image, jac.apply(source.xi)};
  chk.rhs = metric_length(down);
  chk.ok = chk.lhs >= chk.rhs - 1e-8;
  chk.equality_expected = f.biholomorphic;
  return chk;
}

bool indicatrix_membership(DomainModel model, MetricKind kind, const CVec& xi) {
  CVec origin(static_cast<std::size_t>(model_dim(model)), cplx{0.0});
  return metric_length({model, kind, origin, xi}) < 1.0;
}

double caratheodory_lower_bound(DomainModel model, const CVec& p, const CVec& xi,
                                std::span<const HolomorphicMap> candidates) {
  for (cplx z : p)
    if (std::abs(z) > 0.0)
      throw_error(errc::unsupported_base_point, "lower bound is computed at the origin");
  if (static_cast<int>(p.size()) != model_dim(model) ||
      static_cast<int>(xi.size()) != model_dim(model))
    throw_error(errc::invalid_argument, "dimension mismatch with the model");

  double best = 0.0;
  for (const HolomorphicMap& f : candidates) {
    if (f.source != model || f.target != DomainModel::UnitDisc)
      throw_error(errc::candidate_not_admissible, "candidate must map the model into the disc");
    CVec at0 = f.apply(p);
    if (std::abs(at0[0]) > 1e-8)
      throw_error(errc::candidate_not_admissible, "candidate must send the origin to 0");
    // admissibility spot check on a deterministic sample of the model
    for (int s = 0; s < 32; ++s) {
      double t = 2.0 * kPi * s / 32.0;
      CVec z(static_cast<std::size_t>(model_dim(model)), cplx{0.0});
      z[0] = std::polar(0.7, t);
      if (model_dim(model) == 2) z[1] = std::polar(0.5, 2.0 * t);
      if (std::abs(f.apply(z)[0]) >= 1.0)
        throw_error(errc::candidate_not_admissible, "candidate leaves the unit disc");
    }
    CMatrix jac = f.jacobian ? f.jacobian(p) : complex_jacobian(f.apply, p, 1e-5).jac;
    best = std::max(best, std::abs(jac.apply(xi)[0]));
  }
  return best;
}

}  // namespace holonum
