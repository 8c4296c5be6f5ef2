#include "holonum/dbar.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>

namespace holonum {

DbarProblem DbarProblem::from_function(const std::function<cplx(cplx)>& fn, double support_radius,
                                       int resolution,
                                       const std::function<bool(cplx)>& supported) {
  if (!(support_radius > 0.0))
    throw_error(errc::invalid_argument, "support radius must be positive");
  double R = support_radius;
  auto pred = [R, supported](cplx z) {
    if (std::abs(z) > R) return false;
    return supported ? supported(z) : true;
  };
  DbarProblem p;
  p.alpha = GridField::sample(cplx(-R, -R), 2.0 * R, resolution, fn, pred);
  p.support_radius = R;
  p.validate();
  return p;
}

void DbarProblem::validate() const {
  if (!(support_radius > 0.0))
    throw_error(errc::invalid_argument, "support radius must be positive");
  for (int iy = 0; iy < alpha.height; ++iy)
    for (int ix = 0; ix < alpha.width; ++ix) {
      if (!alpha.in_mask(ix, iy)) continue;
      if (std::abs(alpha.point(ix, iy)) > support_radius + alpha.spacing)
        throw_error(errc::invalid_argument, "support mask extends beyond the support radius");
      if (!is_finite(alpha.value(ix, iy)))
        throw_error(errc::non_finite_sample, "alpha not finite on its support");
    }
}

double DbarProblem::sup_abs() const {
  double m = 0.0;
  for (int iy = 0; iy < alpha.height; ++iy)
    for (int ix = 0; ix < alpha.width; ++ix)
      if (alpha.in_mask(ix, iy)) m = std::max(m, std::abs(alpha.value(ix, iy)));
  return m;
}

void CutoffSpec::validate() const {
  if (!is_finite(center)) throw_error(errc::invalid_argument, "cutoff center must be finite");
  if (!(inner_radius > 0.0) || !(outer_radius > inner_radius))
    throw_error(errc::invalid_argument, "cutoff radii must satisfy 0 < inner < outer");
}

double CutoffSpec::value(cplx z) const {
  double rho = std::abs(z - center);
  if (rho <= inner_radius) return 1.0;
  if (rho >= outer_radius) return 0.0;
  double u = (outer_radius - rho) / (outer_radius - inner_radius);
  return smoothness == CutoffSmoothness::C2 ? smoothstep5(u) : u * u * (3.0 - 2.0 * u);
}

cplx CutoffSpec::dzbar(cplx z) const {
  double rho = std::abs(z - center);
  if (rho <= inner_radius || rho >= outer_radius) return 0.0;
  double w = outer_radius - inner_radius;
  double u = (outer_radius - rho) / w;
  double su = smoothness == CutoffSmoothness::C2
                  ? 30.0 * u * u * (1.0 - u) * (1.0 - u)  // smoothstep5'
                  : 6.0 * u * (1.0 - u);
  double eta_prime = -su / w;  // d phi / d rho
  return eta_prime * (z - center) / (2.0 * rho);
}

cplx cauchy_transform_point(const DbarProblem& p, cplx zeta, const QuadratureSpec& q) {
  q.validate();
  if (!is_finite(zeta)) throw_error(errc::invalid_argument, "evaluation point must be finite");
  const GridField& a = p.alpha;
  const double h = a.spacing;
  const double r0 = 8.0 * h;

  cplx far = 0.0;
  for (int iy = 0; iy < a.height; ++iy)
    for (int ix = 0; ix < a.width; ++ix) {
      if (!a.in_mask(ix, iy)) continue;
      cplx xi = a.point(ix, iy);
      double r = std::abs(xi - zeta);
      double w = 1.0 - smoothstep5(r / r0);
      if (w >= 1.0) continue;
      far += a.value(ix, iy) * (1.0 - w) / (xi - zeta);
    }
  far *= h * h;

  cplx near = 0.0;
  const int nr = q.singular_radial_nodes;
  const int na = q.singular_angular_nodes;
  for (int j = 0; j < nr; ++j) {
    double r = (j + 0.5) * r0 / nr;
    double w = 1.0 - smoothstep5(r / r0);
    cplx ring = 0.0;
    for (int m = 0; m < na; ++m) {
      double theta = 2.0 * kPi * m / na;
      ring += a.interpolate(zeta + std::polar(r, theta)) * std::polar(1.0, -theta);
    }
    near += w * ring;
  }
  near *= (r0 / nr) * (2.0 * kPi / na);

  return -(far + near) / kPi;
}

std::vector<cplx> cauchy_transform(const DbarProblem& p, std::span<const cplx> eval_points,
                                   const QuadratureSpec& q) {
  std::vector<cplx> out;
  out.reserve(eval_points.size());
  for (cplx zeta : eval_points) out.push_back(cauchy_transform_point(p, zeta, q));
  return out;
}

GridField cauchy_transform_grid(const DbarProblem& p) {
  const GridField& a = p.alpha;
  const int W = a.width, H = a.height;
  const int P = 2 * W, Q = 2 * H;
  const double h = a.spacing;
  const std::size_t n = static_cast<std::size_t>(P) * static_cast<std::size_t>(Q);

  std::vector<cplx> src(n, cplx{0.0}), ker(n, cplx{0.0});
  for (int iy = 0; iy < H; ++iy)
    for (int ix = 0; ix < W; ++ix)
      src[static_cast<std::size_t>(iy) * P + ix] = a.in_mask(ix, iy) ? a.value(ix, iy) : cplx{0.0};

  // f[x] = sum_y alpha[y] * G[x - y], G[d] = (h^2/pi)/d for d != 0, G[0] = 0.
  for (int dy = -(H - 1); dy <= H - 1; ++dy)
    for (int dx = -(W - 1); dx <= W - 1; ++dx) {
      if (dx == 0 && dy == 0) continue;
      cplx d = cplx(dx * h, dy * h);
      int wx = (dx % P + P) % P;
      int wy = (dy % Q + Q) % Q;
      ker[static_cast<std::size_t>(wy) * P + wx] = (h * h / kPi) / d;
    }

  // the FFTW planner is not thread-safe; execution is
  static std::mutex planner_mutex;
  auto fft2 = [&](std::vector<cplx>& buf, int sign) {
    fftw_plan plan;
    {
      std::lock_guard<std::mutex> lock(planner_mutex);
      plan = fftw_plan_dft_2d(Q, P, reinterpret_cast<fftw_complex*>(buf.data()),
                              reinterpret_cast<fftw_complex*>(buf.data()), sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_destroy_plan(plan);
  };

  fft2(src, FFTW_FORWARD);
  fft2(ker, FFTW_FORWARD);
  for (std::size_t i = 0; i < n; ++i) src[i] *= ker[i];
  fft2(src, FFTW_BACKWARD);

  GridField f;
  f.origin = a.origin;
  f.spacing = a.spacing;
  f.width = W;
  f.height = H;
  f.values.resize(static_cast<std::size_t>(W) * H);
  f.mask.assign(static_cast<std::size_t>(W) * H, 1);
  const double scale = 1.0 / static_cast<double>(n);
  for (int iy = 0; iy < H; ++iy)
    for (int ix = 0; ix < W; ++ix)
      f.values[f.index(ix, iy)] = src[static_cast<std::size_t>(iy) * P + ix] * scale;
  return f;
}

namespace {

// Mark alpha cells within `margin` cells of a support-mask transition
// (out-of-range neighbors count as unsupported).
std::vector<std::uint8_t> transition_zone(const GridField& a, int margin) {
  const int W = a.width, H = a.height;
  std::vector<std::uint8_t> trans(static_cast<std::size_t>(W) * H, 0);
  auto masked = [&](int ix, int iy) {
    if (ix < 0 || iy < 0 || ix >= W || iy >= H) return false;
    return a.in_mask(ix, iy);
  };
  for (int iy = 0; iy < H; ++iy)
    for (int ix = 0; ix < W; ++ix) {
      bool c = masked(ix, iy);
      if (masked(ix + 1, iy) != c || masked(ix - 1, iy) != c || masked(ix, iy + 1) != c ||
          masked(ix, iy - 1) != c)
        trans[a.index(ix, iy)] = 1;
    }
  std::vector<std::uint8_t> zone(trans.size(), 0);
  for (int iy = 0; iy < H; ++iy)
    for (int ix = 0; ix < W; ++ix) {
      if (!trans[a.index(ix, iy)]) continue;
      for (int dy = -margin; dy <= margin; ++dy)
        for (int dx = -margin; dx <= margin; ++dx) {
          int jx = ix + dx, jy = iy + dy;
          if (jx >= 0 && jy >= 0 && jx < W && jy < H) zone[a.index(jx, jy)] = 1;
        }
    }
  return zone;
}

}  // namespace

double dbar_residual(const GridField& f, const GridField& alpha) {
  if (f.width < 5 || f.height < 5) throw_error(errc::lattice_too_small, "f lattice below 5x5");
  if (f.spacing > alpha.spacing * (1.0 + 1e-9))
    throw_error(errc::lattice_mismatch, "f lattice must refine alpha's lattice");

  const bool aligned = f.same_geometry(alpha);
  const auto zone = transition_zone(alpha, 2);
  const double h = f.spacing;
  const cplx I(0.0, 1.0);
  double worst = 0.0;

  for (int iy = 2; iy < f.height - 2; ++iy)
    for (int ix = 2; ix < f.width - 2; ++ix) {
      if (!f.in_mask(ix, iy) || !f.in_mask(ix + 1, iy) || !f.in_mask(ix - 1, iy) ||
          !f.in_mask(ix, iy + 1) || !f.in_mask(ix, iy - 1))
        continue;
      cplx z = f.point(ix, iy);
      // margin to alpha's support boundary
      int ax = static_cast<int>(std::lround((z.real() - alpha.origin.real()) / alpha.spacing));
      int ay = static_cast<int>(std::lround((z.imag() - alpha.origin.imag()) / alpha.spacing));
      if (ax >= 0 && ay >= 0 && ax < alpha.width && ay < alpha.height &&
          zone[alpha.index(ax, ay)])
        continue;
      cplx fx = (f.value(ix + 1, iy) - f.value(ix - 1, iy)) / (2.0 * h);
      cplx fy = (f.value(ix, iy + 1) - f.value(ix, iy - 1)) / (2.0 * h);
      cplx dzbar = 0.5 * (fx + I * fy);
      cplx av = aligned ? (alpha.in_mask(ix, iy) ? alpha.value(ix, iy) : cplx{0.0})
                        : alpha.interpolate(z);
      worst = std::max(worst, std::abs(dzbar - av));
    }
  return worst;
}

double boundedness_bound(const DbarProblem& p, const QuadratureSpec& q) {
  q.validate();
  double sup = p.sup_abs();
  if (sup == 0.0) return 0.0;
  // radial integral of (1/r) * 2 pi r dr over [0, 2R]; the integrand is
  // constant after the cancellation, summed numerically all the same
  const double R2 = 2.0 * p.support_radius;
  const int nr = std::max(q.singular_radial_nodes, 64);
  double acc = 0.0;
  for (int j = 0; j < nr; ++j) acc += 2.0 * kPi * (R2 / nr);
  return sup * acc / kPi;
}

BlowUpExtension::BlowUpExtension(std::function<cplx(cplx)> h, CutoffSpec cutoff, PlanarDomain d,
                                 QuadratureSpec q)
    : h_(std::move(h)), cutoff_(cutoff), domain_(std::move(d)), quad_(q) {
  quad_.validate();
  cutoff_.validate();
  auto alpha_fn = [this](cplx z) -> cplx {
    cplx hv = h_(z);
    if (!is_finite(hv))
      throw_error(errc::singularity_inside_cutoff_transition,
                  "h is not finite where dphi/dzbar != 0");
    return cutoff_.dzbar(z) * hv;
  };
  auto in_transition = [this](cplx z) {
    double rho = std::abs(z - cutoff_.center);
    return domain_.contains(z) && rho > cutoff_.inner_radius && rho < cutoff_.outer_radius;
  };
  double R = std::abs(cutoff_.center) + cutoff_.outer_radius;
  // alpha lattice over the domain box; support is the transition annulus in d
  double side = domain_.box_hi().real() - domain_.box_lo().real();
  problem_.alpha =
      GridField::sample(domain_.box_lo(), side, quad_.area_resolution, alpha_fn, in_transition);
  problem_.support_radius = R;
  problem_.validate();
  bound_ = boundedness_bound(problem_, quad_);
}

cplx BlowUpExtension::operator()(cplx z) const {
  double phi = cutoff_.value(z);
  cplx f = cauchy_transform_point(problem_, z, quad_);
  if (phi == 0.0) return -f;
  return phi * h_(z) - f;
}

GridField BlowUpExtension::field(const std::function<bool(cplx)>& pred) const {
  GridField f = cauchy_transform_grid(problem_);
  GridField out = f;
  for (int iy = 0; iy < out.height; ++iy)
    for (int ix = 0; ix < out.width; ++ix) {
      cplx z = out.point(ix, iy);
      bool keep = pred ? pred(z) : true;
      out.mask[out.index(ix, iy)] = keep ? 1 : 0;
      if (!keep) {
        out.values[out.index(ix, iy)] = 0.0;
        continue;
      }
      double phi = cutoff_.value(z);
      cplx ph = phi == 0.0 ? cplx{0.0} : phi * h_(z);
      out.values[out.index(ix, iy)] = ph - f.value(ix, iy);
    }
  return out;
}

BlowUpExtension blow_up_extension(const std::function<cplx(cplx)>& h, const CutoffSpec& cutoff,
                                  const PlanarDomain& d, const QuadratureSpec& q) {
  return BlowUpExtension(h, cutoff, d, q);
}

}  // namespace holonum
