// Command-line front end: every subcommand emits a JSON envelope
// {tool_version, resolved_config, checks: [{name, ok, value, tolerance}]}
// plus its payload. Exit codes: 0 success, 1 a check ran and failed,
// 2 usage error, 3 numeric error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holonum/automorphisms.hpp"
#include "holonum/bers.hpp"
#include "holonum/cauchy.hpp"
#include "holonum/dbar.hpp"
#include "holonum/dirichlet.hpp"
#include "holonum/metrics.hpp"
#include "holonum/osgood.hpp"
#include "holonum/quadrature.hpp"
#include "holonum/selftest.hpp"
#include "holonum/serialize.hpp"

namespace hn = holonum;
using hn::cplx;
using hn::json;

namespace {

struct Check {
  std::string name;
  bool ok;
  double value;
  json tolerance;  // number, or null for informational entries
};

json checks_to_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const Check& c : checks)
    arr.push_back(json{{"name", c.name}, {"ok", c.ok}, {"value", c.value}, {"tolerance", c.tolerance}});
  return arr;
}

bool all_ok(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (!c.ok) return false;
  return true;
}

void emit(const std::string& out_path, const json& config, const std::vector<Check>& checks,
          json payload) {
  payload["tool_version"] = HOLONUM_VERSION;
  payload["resolved_config"] = config;
  payload["checks"] = checks_to_json(checks);
  std::string text = payload.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw hn::error(hn::errc::invalid_argument, "cannot open output file " + out_path);
    f << text;
  }
}

cplx parse_complex(const std::string& s) {
  std::size_t comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("cannot parse complex value '" + s + "'");
  }
}

// dim-1: "re,im" or "re". dim-2: "re,im+re,im", or "a,b" for two real
// components.
hn::CVec parse_cvec(const std::string& s, int dim) {
  hn::CVec out;
  if (s.find('+') != std::string::npos) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '+')) out.push_back(parse_complex(part));
  } else if (dim == 1) {
    out.push_back(parse_complex(s));
  } else {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        out.push_back(cplx(std::stod(part), 0.0));
      } catch (const std::exception&) {
        throw CLI::ValidationError("cannot parse vector '" + s + "'");
      }
    }
  }
  if (static_cast<int>(out.size()) != dim)
    throw CLI::ValidationError("expected a dimension-" + std::to_string(dim) + " vector");
  return out;
}

std::function<cplx(cplx)> named_function(const std::string& name) {
  if (name == "one") return [](cplx) { return cplx{1.0}; };
  if (name == "identity") return [](cplx z) { return z; };
  if (name == "conj") return [](cplx z) { return std::conj(z); };
  if (name == "exp") return [](cplx z) { return std::exp(z); };
  if (name == "square") return [](cplx z) { return z * z; };
  if (name == "recip") return [](cplx z) { return 1.0 / z; };
  if (name == "zzbar") return [](cplx z) { return z * std::conj(z); };
  if (name == "re") return [](cplx z) { return cplx(z.real(), 0.0); };
  throw CLI::ValidationError("unknown function '" + name +
                             "' (one, identity, conj, exp, square, recip, zzbar, re)");
}

json complex_payload(cplx z) { return hn::complex_to_json(z); }

// ---------------------------------------------------------------- cauchy ----

struct CauchyArgs {
  std::string fn = "exp";
  std::string z = "0.3,0.1";
  std::string domain = "disc";
  std::string center = "0,0";
  double radius = 1.0;
  double inner = 0.5;
  double outer = 2.0;
  int nodes = 256;
  int resolution = 256;
  std::string out = "-";
};

hn::PlanarDomain make_domain(const CauchyArgs& a) {
  cplx c = parse_complex(a.center);
  if (a.domain == "disc") return hn::PlanarDomain::disc(c, a.radius);
  if (a.domain == "annulus") return hn::PlanarDomain::annulus(c, a.inner, a.outer);
  throw CLI::ValidationError("domain must be disc or annulus");
}

int run_cauchy_eval(const CauchyArgs& a) {
  hn::QuadratureSpec q;
  q.contour_nodes = a.nodes;
  q.area_resolution = a.resolution;
  hn::PlanarDomain d = make_domain(a);
  cplx z = parse_complex(a.z);
  cplx value = hn::cauchy_eval(named_function(a.fn), d, z, q);

  json config{{"subcommand", "cauchy eval"}, {"fn", a.fn},       {"z", a.z},
              {"domain", a.domain},          {"center", a.center}, {"radius", a.radius},
              {"inner", a.inner},            {"outer", a.outer},   {"nodes", a.nodes},
              {"out", a.out}};
  emit(a.out, config, {}, json{{"value", complex_payload(value)}});
  return 0;
}

int run_pompeiu_eval(const CauchyArgs& a) {
  hn::QuadratureSpec q;
  q.contour_nodes = a.nodes;
  q.area_resolution = a.resolution;
  hn::PlanarDomain d = make_domain(a);
  cplx z = parse_complex(a.z);
  cplx value = hn::pompeiu_eval(named_function(a.fn), d, z, q);

  json config{{"subcommand", "pompeiu eval"}, {"fn", a.fn},         {"z", a.z},
              {"domain", a.domain},           {"center", a.center},  {"radius", a.radius},
              {"inner", a.inner},             {"outer", a.outer},    {"nodes", a.nodes},
              {"resolution", a.resolution},   {"out", a.out}};
  emit(a.out, config, {}, json{{"value", complex_payload(value)}});
  return 0;
}

// ------------------------------------------------------------------ dbar ----

struct DbarArgs {
  std::string alpha = "disc_indicator";
  std::string alpha_file;
  double support_radius = 1.0;
  int resolution = 256;
  double tolerance = 5e-2;
  std::string out = "-";
};

int run_dbar_solve(const DbarArgs& a) {
  double R = a.support_radius;
  hn::QuadratureSpec q;
  q.area_resolution = a.resolution;

  hn::DbarProblem p;
  if (!a.alpha_file.empty()) {
    std::ifstream in(a.alpha_file);
    if (!in) throw hn::error(hn::errc::invalid_argument, "cannot open " + a.alpha_file);
    p.alpha = hn::gridfield_from_json(json::parse(in, nullptr, true));
    p.support_radius = R;
    p.validate();
  } else {
    std::function<cplx(cplx)> fn;
    if (a.alpha == "disc_indicator") {
      fn = [](cplx) { return cplx{1.0}; };
    } else if (a.alpha == "radial_bump") {
      fn = [R](cplx z) { return cplx(1.0 - hn::smoothstep5(std::abs(z) / (0.8 * R)), 0.0); };
    } else if (a.alpha == "gaussian") {
      fn = [R](cplx z) { return cplx(std::exp(-4.0 * std::norm(z) / (R * R)), 0.0); };
    } else {
      throw CLI::ValidationError("unknown alpha '" + a.alpha +
                                 "' (disc_indicator, radial_bump, gaussian)");
    }
    p = hn::DbarProblem::from_function(fn, R, a.resolution);
  }
  hn::GridField f = hn::cauchy_transform_grid(p);
  double residual = hn::dbar_residual(f, p.alpha);
  double bound = hn::boundedness_bound(p, q);
  double max_abs = 0.0;
  for (const cplx& v : f.values) max_abs = std::max(max_abs, std::abs(v));

  std::vector<Check> checks{{"dbar_residual", residual < a.tolerance, residual, a.tolerance},
                            {"solution_within_bound", max_abs <= bound, max_abs, bound}};
  json config{{"subcommand", "dbar solve"},     {"alpha", a.alpha},
              {"alpha_file", a.alpha_file},     {"support_radius", a.support_radius},
              {"resolution", a.resolution},     {"tolerance", a.tolerance},
              {"out", a.out}};
  emit(a.out, config, checks,
       json{{"field", hn::gridfield_to_json(f)},
            {"report",
             json{{"dbar_residual", residual}, {"boundedness_bound", bound}, {"max_abs", max_abs}}}});
  return all_ok(checks) ? 0 : 1;
}

// ------------------------------------------------------------- dirichlet ----

struct DirichletArgs {
  std::string data;
  int radial_nodes = 24;
  int angular_count = 64;
  double tolerance = 1e-3;
  std::string out_csv;
  std::string out = "-";
};

int run_dirichlet_solve(const DirichletArgs& a) {
  std::ifstream in(a.data);
  if (!in) throw hn::error(hn::errc::invalid_argument, "cannot open boundary CSV " + a.data);
  hn::BoundaryData f = hn::read_boundary_csv(in);

  std::vector<double> radii(static_cast<std::size_t>(a.radial_nodes));
  for (int j = 0; j < a.radial_nodes; ++j) radii[static_cast<std::size_t>(j)] = 0.9 * (j + 0.5) / a.radial_nodes;
  hn::HarmonicField u = hn::solve_on_polar_grid(f, radii, a.angular_count);

  double sup = 0.0;
  for (const cplx& v : f.samples) sup = std::max(sup, std::abs(v));

  // harmonicity is certified on a Cartesian lattice over r <= 0.9
  hn::GridField cart = hn::GridField::sample(
      cplx(-0.9, -0.9), 1.8, 128,
      [&f](cplx z) {
        double r = std::abs(z);
        return hn::poisson_solve(f, r, r == 0.0 ? 0.0 : std::arg(z));
      },
      [](cplx z) { return std::abs(z) <= 0.9; });
  double residual = hn::laplacian_residual(cart);
  double gap_r = std::max(0.9, 1.0 - 10.0 / f.count());
  double gap = hn::boundary_continuity_gap(f, gap_r);

  std::vector<Check> checks;
  checks.push_back({"laplacian_residual", residual <= a.tolerance * (1.0 + sup), residual,
                    a.tolerance * (1.0 + sup)});
  checks.push_back({"continuity_gap", true, gap, json()});

  bool nonnegative = true;
  for (const cplx& v : f.samples)
    if (v.real() < -1e-12) nonnegative = false;
  json harnack = json::array();
  if (nonnegative) {
    for (const char* label : {"0.3", "0.6", "0.9"}) {
      double r = std::stod(label);
      hn::HarnackCheck chk = hn::harnack_lower_bound_check(f, r);
      checks.push_back({std::string("harnack_r") + label, chk.ok, chk.lhs - chk.rhs, 0.0});
      harnack.push_back(json{{"r", r}, {"lhs", chk.lhs}, {"rhs", chk.rhs}, {"ok", chk.ok}});
    }
  }

  if (!a.out_csv.empty()) {
    std::ofstream csv(a.out_csv, std::ios::binary);
    if (!csv) throw hn::error(hn::errc::invalid_argument, "cannot open output CSV " + a.out_csv);
    hn::write_polar_csv(csv, u);
  }

  json config{{"subcommand", "dirichlet solve"}, {"data", a.data},
              {"radial_nodes", a.radial_nodes},  {"angular_count", a.angular_count},
              {"tolerance", a.tolerance},        {"out_csv", a.out_csv},
              {"out", a.out}};
  emit(a.out, config, checks,
       json{{"report", json{{"laplacian_residual", residual},
                            {"continuity_gap", gap},
                            {"continuity_gap_radius", gap_r},
                            {"harnack", harnack}}}});
  return all_ok(checks) ? 0 : 1;
}

// ---------------------------------------------------------------- metric ----

struct MetricArgs {
  std::string model = "bidisc";
  std::string kind = "kobayashi";
  std::string p = "0,0";
  std::string xi = "0,0";
  std::string out = "-";
};

hn::DomainModel parse_model(const std::string& s) {
  if (s == "disc") return hn::DomainModel::UnitDisc;
  if (s == "ball") return hn::DomainModel::UnitBall2;
  if (s == "bidisc") return hn::DomainModel::UnitBidisc;
  throw CLI::ValidationError("model must be disc, ball, or bidisc");
}

hn::MetricKind parse_kind(const std::string& s) {
  if (s == "caratheodory") return hn::MetricKind::Caratheodory;
  if (s == "kobayashi") return hn::MetricKind::Kobayashi;
  throw CLI::ValidationError("kind must be caratheodory or kobayashi");
}

int run_metric_eval(const MetricArgs& a) {
  hn::DomainModel model = parse_model(a.model);
  int dim = hn::model_dim(model);
  hn::MetricQuery query{model, parse_kind(a.kind), parse_cvec(a.p, dim), parse_cvec(a.xi, dim)};
  double value = hn::metric_length(query);

  json config{{"subcommand", "metric eval"}, {"model", a.model}, {"kind", a.kind},
              {"p", a.p},                    {"xi", a.xi},       {"out", a.out}};
  emit(a.out, config, {}, json{{"value", value}});
  return 0;
}

// ------------------------------------------------------------ indicatrix ----

struct IndicatrixArgs {
  std::string model = "ball";
  std::string kind = "kobayashi";
  int count = 1000;
  std::uint64_t seed = 0;
  std::string out;
  std::string report = "-";
};

int run_indicatrix_sample(const IndicatrixArgs& a) {
  hn::DomainModel model = parse_model(a.model);
  hn::MetricKind kind = parse_kind(a.kind);
  int dim = hn::model_dim(model);
  hn::Rng rng(a.seed);

  std::ostringstream csv;
  csv << "xi1_re,xi1_im,xi2_re,xi2_im,value,member\n";
  long members = 0;
  for (int i = 0; i < a.count; ++i) {
    hn::CVec xi(static_cast<std::size_t>(dim));
    for (cplx& c : xi) c = rng.complex_in_box(1.2);
    hn::CVec origin(static_cast<std::size_t>(dim), cplx{0.0});
    double value = hn::metric_length({model, kind, origin, xi});
    bool member = value < 1.0;
    members += member ? 1 : 0;
    cplx x0 = xi[0], x1 = dim == 2 ? xi[1] : cplx{0.0};
    csv << hn::format_double(x0.real()) << ',' << hn::format_double(x0.imag()) << ','
        << hn::format_double(x1.real()) << ',' << hn::format_double(x1.imag()) << ','
        << hn::format_double(value) << ',' << (member ? 1 : 0) << '\n';
  }

  if (a.out.empty()) throw CLI::ValidationError("--out CSV path is required");
  std::ofstream f(a.out, std::ios::binary);
  if (!f) throw hn::error(hn::errc::invalid_argument, "cannot open output CSV " + a.out);
  f << csv.str();

  json config{{"subcommand", "indicatrix sample"}, {"model", a.model}, {"kind", a.kind},
              {"count", a.count},                  {"seed", a.seed},   {"out", a.out},
              {"report", a.report}};
  emit(a.report, config, {}, json{{"sampled", a.count}, {"members", members}});
  return 0;
}

// -------------------------------------------------------------- poincare ----

struct PoincareArgs {
  std::vector<double> matrix;
  std::string out = "-";
};

int run_poincare_witness(const PoincareArgs& a) {
  if (a.matrix.size() != 8)
    throw CLI::ValidationError("--matrix needs 8 reals: re,im per entry, row-major");
  hn::CMatrix L(2, 2);
  for (int i = 0; i < 4; ++i)
    L.a[static_cast<std::size_t>(i)] = cplx(a.matrix[static_cast<std::size_t>(2 * i)],
                                            a.matrix[static_cast<std::size_t>(2 * i + 1)]);
  hn::PoincareWitness w = hn::poincare_witness(L);

  bool valid = w.branch == hn::WitnessBranch::Endpoint ? std::abs(w.image_norm - 1.0) > 1e-9
                                                       : w.image_norm < 1.0 - 1e-9;
  std::vector<Check> checks{{"witness_valid", valid, w.image_norm, json()}};
  json config{{"subcommand", "poincare witness"}, {"matrix", a.matrix}, {"out", a.out}};
  emit(a.out, config, checks,
       json{{"witness",
             json{{"branch", w.branch == hn::WitnessBranch::Endpoint ? "endpoint" : "midpoint"},
                  {"point", json::array({hn::complex_to_json(w.witness_point[0]),
                                         hn::complex_to_json(w.witness_point[1])})},
                  {"image_norm", w.image_norm}}}});
  return all_ok(checks) ? 0 : 1;
}

// ------------------------------------------------------------------ bers ----

struct BersArgs {
  std::string h = "0,0;1,0";
  int trials = 64;
  std::uint64_t seed = 0;
  std::string out = "-";
};

int run_bers_verify(const BersArgs& a) {
  std::vector<cplx> coeffs;
  std::stringstream ss(a.h);
  std::string part;
  while (std::getline(ss, part, ';')) coeffs.push_back(parse_complex(part));
  hn::AlgebraHom hom = hn::hom_from_map(hn::Poly(coeffs));
  hn::MorphismAudit audit =
      hn::morphism_audit([&hom](const hn::Poly& f) { return hn::pullback(hom, f); }, a.trials, a.seed);

  json recovered = json::array();
  for (const cplx& c : audit.recovered_h.coeffs()) recovered.push_back(hn::complex_to_json(c));
  std::vector<Check> checks{
      {"additive_defect", audit.additive_defect < 1e-10, audit.additive_defect, 1e-10},
      {"multiplicative_defect", audit.multiplicative_defect < 1e-10, audit.multiplicative_defect, 1e-10},
      {"unital_defect", audit.unital_defect < 1e-10, audit.unital_defect, 1e-10},
      {"scalar_defect", audit.scalar_defect < 1e-10, audit.scalar_defect, 1e-10},
      {"composition_defect", audit.composition_defect < 1e-10, audit.composition_defect, 1e-10},
      {"map_recovered", audit.recovered_h.coeff_distance(hom.h) == 0.0,
       audit.recovered_h.coeff_distance(hom.h), 0.0}};
  json config{{"subcommand", "bers verify"}, {"coeffs", a.h}, {"trials", a.trials},
              {"seed", a.seed},              {"out", a.out}};
  emit(a.out, config, checks,
       json{{"audit", json{{"additive_defect", audit.additive_defect},
                           {"multiplicative_defect", audit.multiplicative_defect},
                           {"unital_defect", audit.unital_defect},
                           {"scalar_defect", audit.scalar_defect},
                           {"composition_defect", audit.composition_defect},
                           {"is_homomorphism", audit.is_homomorphism},
                           {"recovered_h", recovered}}}});
  return all_ok(checks) ? 0 : 1;
}

// ---------------------------------------------------------------- osgood ----

struct OsgoodArgs {
  std::string sequence = "power";
  int jmax = 64;
  int resolution = 64;
  int kmax = 8;
  std::string box_lo = "-1,-1";
  double box_side = 2.0;
  std::string region = "disc";
  std::string out_prefix;
  std::string out = "-";
};

int run_osgood_analyze(const OsgoodArgs& a) {
  const hn::SequenceSpec* spec = hn::find_sequence(a.sequence);
  if (!spec) {
    std::string names;
    for (const hn::SequenceSpec& s : hn::sequence_registry()) names += " " + s.name;
    throw CLI::ValidationError("unknown sequence '" + a.sequence + "' (available:" + names + ")");
  }
  cplx lo = parse_complex(a.box_lo);
  cplx center = lo + cplx(a.box_side / 2.0, a.box_side / 2.0);
  std::function<bool(cplx)> pred;
  if (a.region == "disc") {
    double radius = a.box_side / 2.0;
    pred = [center, radius](cplx z) { return std::abs(z - center) <= radius; };
  } else if (a.region == "square") {
    pred = [](cplx) { return true; };
  } else {
    throw CLI::ValidationError("region must be disc or square");
  }

  hn::FunctionSequence seq{spec->member, a.jmax};
  hn::GridField geom = hn::GridField::lattice(lo, a.box_side, a.resolution, pred);
  std::vector<hn::BoundednessMask> masks;
  for (int k = 1; k <= a.kmax; ++k)
    masks.push_back(hn::boundedness_set(seq, geom, static_cast<double>(k)));

  if (!a.out_prefix.empty()) {
    for (const hn::BoundednessMask& m : masks) {
      std::ofstream pbm(a.out_prefix + "_k" + std::to_string(static_cast<int>(m.k)) + ".pbm",
                        std::ios::binary);
      if (!pbm) throw hn::error(hn::errc::invalid_argument, "cannot write mask bitmap");
      hn::write_mask_pbm(pbm, m);
    }
  }

  hn::CoverResult cover = hn::cover_check(masks);
  json report{{"covered", cover.covered},
              {"uncovered_count", cover.uncovered_points.size()}};
  std::vector<Check> checks{{"covered", true, cover.covered ? 1.0 : 0.0, json()}};

  if (cover.covered) {
    hn::DenseBall ball = hn::dense_ball_search(masks);
    hn::QuadratureSpec q;
    double residual = hn::limit_holomorphy_residual(seq, ball.center, ball.radius, q);
    report["ball"] = json{{"k", ball.k},
                          {"center", hn::complex_to_json(ball.center)},
                          {"radius", ball.radius}};
    report["holomorphy_residual"] = residual;
    checks.push_back({"ball_radius_at_least_one_cell", ball.radius >= geom.spacing, ball.radius,
                      geom.spacing});
  }

  json config{{"subcommand", "osgood analyze"}, {"sequence", a.sequence},
              {"jmax", a.jmax},                 {"resolution", a.resolution},
              {"kmax", a.kmax},                 {"box_lo", a.box_lo},
              {"box_side", a.box_side},         {"region", a.region},
              {"out_prefix", a.out_prefix},     {"out", a.out}};
  emit(a.out, config, checks, json{{"report", report}});
  return all_ok(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational complex analysis toolkit"};
  app.set_help_flag("--help", "print usage");  // long-form flags only
  app.require_subcommand(1);

  CauchyArgs cauchy_args;
  DbarArgs dbar_args;
  DirichletArgs dirichlet_args;
  MetricArgs metric_args;
  IndicatrixArgs indicatrix_args;
  PoincareArgs poincare_args;
  BersArgs bers_args;
  OsgoodArgs osgood_args;
  std::string selftest_out = "-";

  auto add_domain_flags = [](CLI::App* cmd, CauchyArgs& a) {
    cmd->add_option("--fn", a.fn, "boundary function name");
    cmd->add_option("--z", a.z, "evaluation point re,im");
    cmd->add_option("--domain", a.domain, "disc or annulus");
    cmd->add_option("--center", a.center, "domain center re,im");
    cmd->add_option("--radius", a.radius, "disc radius");
    cmd->add_option("--inner", a.inner, "annulus inner radius");
    cmd->add_option("--outer", a.outer, "annulus outer radius");
    cmd->add_option("--nodes", a.nodes, "contour quadrature nodes");
    cmd->add_option("--out", a.out, "output path or - for stdout");
  };

  CLI::App* cauchy = app.add_subcommand("cauchy", "Cauchy integral formula");
  CLI::App* cauchy_eval = cauchy->add_subcommand("eval", "evaluate the boundary integral");
  add_domain_flags(cauchy_eval, cauchy_args);
  cauchy->require_subcommand(1);

  CLI::App* pompeiu = app.add_subcommand("pompeiu", "Cauchy-Pompeiu formula");
  CLI::App* pompeiu_eval = pompeiu->add_subcommand("eval", "evaluate boundary + area terms");
  add_domain_flags(pompeiu_eval, cauchy_args);
  pompeiu_eval->add_option("--resolution", cauchy_args.resolution, "area lattice resolution");
  pompeiu->require_subcommand(1);

  CLI::App* dbar = app.add_subcommand("dbar", "inhomogeneous Cauchy-Riemann solver");
  CLI::App* dbar_solve = dbar->add_subcommand("solve", "solve df/dzbar = alpha");
  dbar_solve->add_option("--alpha", dbar_args.alpha, "right-hand side name");
  dbar_solve->add_option("--alpha-file", dbar_args.alpha_file,
                         "grid-field JSON with the sampled right-hand side");
  dbar_solve->add_option("--support-radius", dbar_args.support_radius, "support radius R");
  dbar_solve->add_option("--resolution", dbar_args.resolution, "lattice resolution");
  dbar_solve->add_option("--tolerance", dbar_args.tolerance, "residual tolerance");
  dbar_solve->add_option("--out", dbar_args.out, "output path or - for stdout");
  dbar->require_subcommand(1);

  CLI::App* dirichlet = app.add_subcommand("dirichlet", "Poisson-integral Dirichlet solver");
  CLI::App* dirichlet_solve = dirichlet->add_subcommand("solve", "solve from boundary CSV");
  dirichlet_solve->add_option("--data", dirichlet_args.data, "boundary CSV (psi,value rows)")
      ->required();
  dirichlet_solve->add_option("--radial-nodes", dirichlet_args.radial_nodes, "polar radii count");
  dirichlet_solve->add_option("--angular-count", dirichlet_args.angular_count, "polar angles count");
  dirichlet_solve->add_option("--tolerance", dirichlet_args.tolerance, "residual tolerance scale");
  dirichlet_solve->add_option("--out-csv", dirichlet_args.out_csv, "polar lattice CSV path");
  dirichlet_solve->add_option("--out", dirichlet_args.out, "report path or - for stdout");
  dirichlet->require_subcommand(1);

  CLI::App* metric = app.add_subcommand("metric", "invariant metrics");
  CLI::App* metric_eval = metric->add_subcommand("eval", "evaluate a metric length");
  metric_eval->add_option("--model", metric_args.model, "disc, ball, or bidisc");
  metric_eval->add_option("--kind", metric_args.kind, "caratheodory or kobayashi");
  metric_eval->add_option("--p", metric_args.p, "base point");
  metric_eval->add_option("--xi", metric_args.xi, "tangent vector");
  metric_eval->add_option("--out", metric_args.out, "output path or - for stdout");
  metric->require_subcommand(1);

  CLI::App* indicatrix = app.add_subcommand("indicatrix", "metric unit balls");
  CLI::App* indicatrix_sample = indicatrix->add_subcommand("sample", "sample tangent vectors");
  indicatrix_sample->add_option("--model", indicatrix_args.model, "ball or bidisc");
  indicatrix_sample->add_option("--kind", indicatrix_args.kind, "caratheodory or kobayashi");
  indicatrix_sample->add_option("--count", indicatrix_args.count, "sample count");
  indicatrix_sample->add_option("--seed", indicatrix_args.seed, "random seed")->required();
  indicatrix_sample->add_option("--out", indicatrix_args.out, "CSV output path")->required();
  indicatrix_sample->add_option("--report", indicatrix_args.report, "report path or - for stdout");
  indicatrix->require_subcommand(1);

  CLI::App* poincare = app.add_subcommand("poincare", "ball vs bidisc separation");
  CLI::App* poincare_witness_cmd = poincare->add_subcommand("witness", "linear-map witness");
  poincare_witness_cmd
      ->add_option("--matrix", poincare_args.matrix, "8 reals: re,im per entry, row-major")
      ->required()
      ->expected(8)
      ->delimiter(',');
  poincare_witness_cmd->add_option("--out", poincare_args.out, "output path or - for stdout");
  poincare->require_subcommand(1);

  CLI::App* bers = app.add_subcommand("bers", "polynomial algebra homomorphisms");
  CLI::App* bers_verify = bers->add_subcommand("verify", "audit the pullback by h");
  bers_verify->add_option("--coeffs", bers_args.h, "h coefficients 're,im;re,im;...' by degree");
  bers_verify->add_option("--trials", bers_args.trials, "random trials");
  bers_verify->add_option("--seed", bers_args.seed, "random seed")->required();
  bers_verify->add_option("--out", bers_args.out, "output path or - for stdout");
  bers->require_subcommand(1);

  CLI::App* osgood = app.add_subcommand("osgood", "pointwise-limit boundedness analysis");
  CLI::App* osgood_analyze = osgood->add_subcommand("analyze", "masks, cover, dense ball");
  osgood_analyze->add_option("--sequence", osgood_args.sequence, "registered sequence name");
  osgood_analyze->add_option("--jmax", osgood_args.jmax, "index truncation");
  osgood_analyze->add_option("--resolution", osgood_args.resolution, "lattice resolution");
  osgood_analyze->add_option("--kmax", osgood_args.kmax, "largest threshold k");
  osgood_analyze->add_option("--box-lo", osgood_args.box_lo, "lattice box corner re,im");
  osgood_analyze->add_option("--box-side", osgood_args.box_side, "lattice box side");
  osgood_analyze->add_option("--region", osgood_args.region, "disc or square");
  osgood_analyze->add_option("--out-prefix", osgood_args.out_prefix, "PBM mask path prefix");
  osgood_analyze->add_option("--out", osgood_args.out, "report path or - for stdout");
  osgood->require_subcommand(1);

  CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite");
  selftest->add_option("--out", selftest_out, "output path or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (cauchy_eval->parsed()) return run_cauchy_eval(cauchy_args);
    if (pompeiu_eval->parsed()) return run_pompeiu_eval(cauchy_args);
    if (dbar_solve->parsed()) return run_dbar_solve(dbar_args);
    if (dirichlet_solve->parsed()) return run_dirichlet_solve(dirichlet_args);
    if (metric_eval->parsed()) return run_metric_eval(metric_args);
    if (indicatrix_sample->parsed()) return run_indicatrix_sample(indicatrix_args);
    if (poincare_witness_cmd->parsed()) return run_poincare_witness(poincare_args);
    if (bers_verify->parsed()) return run_bers_verify(bers_args);
    if (osgood_analyze->parsed()) return run_osgood_analyze(osgood_args);
    if (selftest->parsed()) {
      std::ostringstream report;
      int failures = holonum::run_selftest(report);
      if (selftest_out.empty() || selftest_out == "-") {
        std::cout << report.str();
      } else {
        std::ofstream f(selftest_out, std::ios::binary);
        f << report.str();
      }
      return failures == 0 ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << app.help() << "\n";
    return 2;
  } catch (const hn::error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
