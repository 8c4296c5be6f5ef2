#include "holonum/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holonum/quadrature.hpp"

namespace holonum {

BoundaryData BoundaryData::from_function(const std::function<cplx(double)>& f, int count) {
  BoundaryData d;
  d.samples.resize(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) d.samples[static_cast<std::size_t>(k)] = f(2.0 * kPi * k / count);
  d.validate();
  return d;
}

double BoundaryData::psi(int k) const { return 2.0 * kPi * k / count(); }

cplx BoundaryData::mean() const {
  cplx acc = 0.0;
  for (cplx v : samples) acc += v;
  return acc / static_cast<double>(count());
}

void BoundaryData::validate() const {
  if (count() < 8) throw_error(errc::invalid_argument, "boundary data needs at least 8 samples");
  for (cplx v : samples)
    if (!is_finite(v)) throw_error(errc::non_finite_sample, "non-finite boundary sample");
}

double poisson_kernel(double r, double delta) {
  if (!(r >= 0.0) || r >= 1.0) throw_error(errc::radius_out_of_range, "kernel needs 0 <= r < 1");
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(delta) + r * r);
}

cplx poisson_solve(const BoundaryData& f, double r, double theta) {
  f.validate();
  if (!(r >= 0.0) || r >= 1.0) throw_error(errc::radius_out_of_range, "solve needs 0 <= r < 1");
  const int n = f.count();
  cplx acc = 0.0;
  for (int k = 0; k < n; ++k)
    acc += f.samples[static_cast<std::size_t>(k)] * poisson_kernel(r, theta - f.psi(k));
  return acc / static_cast<double>(n);
}

HarmonicField solve_on_polar_grid(const BoundaryData& f, std::span<const double> radii,
                                  int angular_count) {
  if (angular_count < 4) throw_error(errc::invalid_argument, "need at least 4 angles");
  HarmonicField u;
  u.radii.assign(radii.begin(), radii.end());
  u.angular_count = angular_count;
  u.values.resize(u.radii.size() * static_cast<std::size_t>(angular_count));
  for (std::size_t j = 0; j < u.radii.size(); ++j) {
    if (!(u.radii[j] >= 0.0) || u.radii[j] >= 1.0)
      throw_error(errc::radius_out_of_range, "polar radius outside [0,1)");
    for (int k = 0; k < angular_count; ++k)
      u.values[u.index(static_cast<int>(j), k)] =
          poisson_solve(f, u.radii[j], 2.0 * kPi * k / angular_count);
  }
  return u;
}

double laplacian_residual(const GridField& u) {
  if (u.width < 5 || u.height < 5) throw_error(errc::lattice_too_small, "lattice below 5x5");
  const double h2 = u.spacing * u.spacing;
  double worst = 0.0;
  for (int iy = 1; iy < u.height - 1; ++iy)
    for (int ix = 1; ix < u.width - 1; ++ix) {
      if (!u.in_mask(ix, iy) || !u.in_mask(ix + 1, iy) || !u.in_mask(ix - 1, iy) ||
          !u.in_mask(ix, iy + 1) || !u.in_mask(ix, iy - 1))
        continue;
      cplx lap = (u.value(ix + 1, iy) + u.value(ix - 1, iy) + u.value(ix, iy + 1) +
                  u.value(ix, iy - 1) - 4.0 * u.value(ix, iy)) /
                 h2;
      worst = std::max(worst, std::abs(lap));
    }
  return worst;
}

double laplacian_residual(const HarmonicField& u) {
  const int nr = static_cast<int>(u.radii.size());
  const int na = u.angular_count;
  if (nr < 5 || na < 5) throw_error(errc::lattice_too_small, "polar lattice below 5x5");
  const double dt = 2.0 * kPi / na;
  double worst = 0.0;
  for (int j = 1; j + 1 < nr; ++j) {
    double r = u.radii[static_cast<std::size_t>(j)];
    double drp = u.radii[static_cast<std::size_t>(j + 1)] - r;
    double drm = r - u.radii[static_cast<std::size_t>(j - 1)];
    if (r <= 0.0) continue;
    for (int k = 0; k < na; ++k) {
      cplx c = u.values[u.index(j, k)];
      cplx rp = u.values[u.index(j + 1, k)];
      cplx rm = u.values[u.index(j - 1, k)];
      cplx tp = u.values[u.index(j, (k + 1) % na)];
      cplx tm = u.values[u.index(j, (k - 1 + na) % na)];
      // nonuniform central second difference in r, periodic in theta
      cplx urr = 2.0 * (drm * rp - (drp + drm) * c + drp * rm) / (drp * drm * (drp + drm));
      cplx ur = (rp - rm) / (drp + drm);
      cplx utt = (tp - 2.0 * c + tm) / (dt * dt);
      worst = std::max(worst, std::abs(urr + ur / r + utt / (r * r)));
    }
  }
  return worst;
}

double boundary_continuity_gap(const BoundaryData& f, double r) {
  if (!(r >= 0.9) || r >= 1.0) throw_error(errc::radius_out_of_range, "gap needs 0.9 <= r < 1");
  double worst = 0.0;
  for (int k = 0; k < f.count(); ++k)
    worst = std::max(worst,
                     std::abs(poisson_solve(f, r, f.psi(k)) - f.samples[static_cast<std::size_t>(k)]));
  return worst;
}

double holder_seminorm(std::span<const cplx> points, std::span<const cplx> values, double alpha) {
  if (points.size() != values.size())
    throw_error(errc::invalid_argument, "points/values size mismatch");
  if (!(alpha > 0.0) || alpha > 1.0)
    throw_error(errc::invalid_argument, "alpha must lie in (0, 1]");
  if (points.size() > 50000)
    throw_error(errc::invalid_argument, "sample set capped at 5e4 points");
  const std::size_t n = points.size();
  double worst = 0.0;
  bool any_distinct = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double dist = std::abs(points[i] - points[j]);
      if (dist == 0.0) continue;
      any_distinct = true;
      worst = std::max(worst, std::abs(values[i] - values[j]) / std::pow(dist, alpha));
    }
  if (!any_distinct)
    throw_error(errc::degenerate_sample_set, "need at least 2 distinct sample points");
  return worst;
}

CkAlphaReport ck_alpha_report(std::span<const double> values, double x0, double dx, int k,
                              double alpha,
                              const std::vector<std::vector<double>>* derivatives) {
  if (values.size() < static_cast<std::size_t>(2 * k + 2))
    throw_error(errc::degenerate_sample_set, "too few samples for the requested order");
  if (!(dx > 0.0)) throw_error(errc::invalid_argument, "dx must be positive");

  // order j samples live on x0 + (j + i) dx when derived by central differences
  std::vector<std::vector<double>> orders;
  orders.emplace_back(values.begin(), values.end());
  std::vector<double> offset(static_cast<std::size_t>(k) + 1, 0.0);
  for (int j = 1; j <= k; ++j) {
    if (derivatives && static_cast<int>(derivatives->size()) >= j &&
        !(*derivatives)[static_cast<std::size_t>(j - 1)].empty()) {
      orders.push_back((*derivatives)[static_cast<std::size_t>(j - 1)]);
      offset[static_cast<std::size_t>(j)] = 0.0;
    } else {
      const std::vector<double>& prev = orders.back();
      std::vector<double> der;
      der.reserve(prev.size() - 2);
      for (std::size_t i = 1; i + 1 < prev.size(); ++i)
        der.push_back((prev[i + 1] - prev[i - 1]) / (2.0 * dx));
      orders.push_back(std::move(der));
      offset[static_cast<std::size_t>(j)] = offset[static_cast<std::size_t>(j - 1)] + dx;
    }
  }

  CkAlphaReport rep;
  rep.k = k;
  rep.alpha = alpha;
  for (int j = 0; j <= k; ++j) {
    double sup = 0.0;
    for (double v : orders[static_cast<std::size_t>(j)]) sup = std::max(sup, std::abs(v));
    rep.sup_norms.push_back(sup);
  }
  const std::vector<double>& top = orders[static_cast<std::size_t>(k)];
  std::vector<cplx> pts(top.size()), vals(top.size());
  for (std::size_t i = 0; i < top.size(); ++i) {
    pts[i] = cplx(x0 + offset[static_cast<std::size_t>(k)] + static_cast<double>(i) * dx, 0.0);
    vals[i] = top[i];
  }
  rep.top_seminorm = holder_seminorm(pts, vals, alpha);
  return rep;
}

double hopf_normal_derivative(const std::function<double(cplx)>& u, cplx P,
                              std::span<const double> steps) {
  if (steps.empty()) throw_error(errc::invalid_argument, "need at least one step");
  double ap = std::abs(P);
  if (ap == 0.0) throw_error(errc::invalid_argument, "P must be a boundary point");
  cplx nu = P / ap;
  double uP = u(P);
  if (!is_finite(uP)) throw_error(errc::non_finite_sample, "u not finite at P");

  std::vector<double> s(steps.begin(), steps.end());
  std::vector<double> d(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s[i] > 0.0)) throw_error(errc::invalid_argument, "steps must be positive");
    double ui = u(P - s[i] * nu);
    if (!is_finite(ui)) throw_error(errc::non_finite_sample, "u not finite on the inward ray");
    d[i] = (uP - ui) / s[i];
  }
  // Neville extrapolation of the quotient polynomial to s = 0
  for (std::size_t level = 1; level < s.size(); ++level)
    for (std::size_t i = 0; i + level < s.size(); ++i)
      d[i] = (s[i + level] * d[i] - s[i] * d[i + 1]) / (s[i + level] - s[i]);
  return d[0];
}

HarnackCheck harnack_lower_bound_check(const BoundaryData& f, double r) {
  f.validate();
  if (!(r > 0.0) || r >= 1.0) throw_error(errc::radius_out_of_range, "check needs 0 < r < 1");
  bool all_zero = true;
  for (cplx v : f.samples) {
    if (v.real() < -1e-12 || std::abs(v.imag()) > 1e-12)
      throw_error(errc::negative_data, "boundary data must be nonnegative real");
    if (std::abs(v) > 0.0) all_zero = false;
  }
  if (all_zero) throw_error(errc::negative_data, "boundary data must not be identically zero");

  HarnackCheck chk;
  chk.lhs = std::numeric_limits<double>::infinity();
  for (int k = 0; k < f.count(); ++k)
    chk.lhs = std::min(chk.lhs, poisson_solve(f, r, f.psi(k)).real());
  chk.rhs = f.mean().real() * (1.0 - r) / (1.0 + r);
  chk.ok = chk.lhs >= chk.rhs - 1e-9;
  return chk;
}

}  // namespace holonum
