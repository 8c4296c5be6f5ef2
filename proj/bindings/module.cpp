#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

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

namespace py = pybind11;
using namespace holonum;

namespace {

DomainModel model_from_string(const std::string& s) {
  if (s == "disc") return DomainModel::UnitDisc;
  if (s == "ball") return DomainModel::UnitBall2;
  if (s == "bidisc") return DomainModel::UnitBidisc;
  throw error(errc::invalid_argument, "model must be disc, ball, or bidisc");
}

MetricKind kind_from_string(const std::string& s) {
  if (s == "caratheodory") return MetricKind::Caratheodory;
  if (s == "kobayashi") return MetricKind::Kobayashi;
  throw error(errc::invalid_argument, "kind must be caratheodory or kobayashi");
}

CMatrix matrix_from_rows(const std::vector<std::vector<cplx>>& rows) {
  CMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols)
      throw error(errc::invalid_argument, "ragged matrix rows");
    for (int j = 0; j < m.cols; ++j)
      m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

std::vector<std::vector<cplx>> matrix_to_rows(const CMatrix& m) {
  std::vector<std::vector<cplx>> rows(static_cast<std::size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) rows[static_cast<std::size_t>(i)].push_back(m.at(i, j));
  return rows;
}

}  // namespace

PYBIND11_MODULE(holonum, m) {
  m.doc() = "computational complex analysis toolkit";
  m.attr("__version__") = HOLONUM_VERSION;

  py::register_exception<error>(m, "NumericError");

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init([](int contour_nodes, int area_resolution, int singular_radial_nodes,
                       int singular_angular_nodes) {
             QuadratureSpec q{contour_nodes, area_resolution, singular_radial_nodes,
                              singular_angular_nodes};
             q.validate();
             return q;
           }),
           py::arg("contour_nodes") = 256, py::arg("area_resolution") = 256,
           py::arg("singular_radial_nodes") = 32, py::arg("singular_angular_nodes") = 64)
      .def_readwrite("contour_nodes", &QuadratureSpec::contour_nodes)
      .def_readwrite("area_resolution", &QuadratureSpec::area_resolution)
      .def_readwrite("singular_radial_nodes", &QuadratureSpec::singular_radial_nodes)
      .def_readwrite("singular_angular_nodes", &QuadratureSpec::singular_angular_nodes);

  py::class_<Contour>(m, "Contour")
      .def_static(
          "circle",
          [](cplx center, double radius, bool counterclockwise, int node_count) {
            return Contour::circle(center, radius,
                                   counterclockwise ? Orientation::Counterclockwise
                                                    : Orientation::Clockwise,
                                   node_count);
          },
          py::arg("center"), py::arg("radius"), py::arg("counterclockwise") = true,
          py::arg("node_count") = 256)
      .def("reversed", &Contour::reversed)
      .def("position", &Contour::position)
      .def("velocity", &Contour::velocity)
      .def("nodes", &Contour::nodes);

  py::class_<PlanarDomain>(m, "PlanarDomain")
      .def_static("disc", &PlanarDomain::disc, py::arg("center"), py::arg("radius"),
                  py::arg("node_count") = 256)
      .def_static("annulus", &PlanarDomain::annulus, py::arg("center"), py::arg("inner_radius"),
                  py::arg("outer_radius"), py::arg("node_count") = 256)
      .def("contains", &PlanarDomain::contains);

  py::class_<GridField>(m, "GridField")
      .def_static("sample", &GridField::sample, py::arg("box_lo"), py::arg("side"),
                  py::arg("resolution"), py::arg("fn"), py::arg("pred"))
      .def_static("lattice", &GridField::lattice, py::arg("box_lo"), py::arg("side"),
                  py::arg("resolution"), py::arg("pred"))
      .def_readonly("spacing", &GridField::spacing)
      .def_readonly("width", &GridField::width)
      .def_readonly("height", &GridField::height)
      .def_readonly("origin", &GridField::origin)
      .def("point", &GridField::point)
      .def("value", &GridField::value)
      .def("in_mask", &GridField::in_mask)
      .def("interpolate", &GridField::interpolate)
      .def("to_json", [](const GridField& g) { return gridfield_to_json(g).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return gridfield_from_json(json::parse(text));
      });

  // quadrature engines
  m.def(
      "contour_integral",
      [](const std::function<cplx(cplx)>& g, const Contour& c, const QuadratureSpec& q) {
        return contour_integral(g, c, q);
      },
      py::arg("g"), py::arg("contour"), py::arg("quadrature") = QuadratureSpec{});
  m.def(
      "area_integral",
      [](const std::function<cplx(cplx)>& g, const PlanarDomain& d, const QuadratureSpec& q) {
        return area_integral(g, d, q);
      },
      py::arg("g"), py::arg("domain"), py::arg("quadrature") = QuadratureSpec{});
  m.def(
      "singular_area_integral",
      [](const std::function<cplx(cplx)>& g, cplx pole, const PlanarDomain& d,
         const QuadratureSpec& q) { return singular_area_integral(g, pole, d, q); },
      py::arg("g"), py::arg("pole"), py::arg("domain"), py::arg("quadrature") = QuadratureSpec{});
  m.def(
      "wirtinger",
      [](const std::function<cplx(cplx)>& f, cplx z, double step) {
        WirtingerDerivatives d = wirtinger(f, z, step <= 0.0 ? default_fd_step(z) : step);
        return py::make_tuple(d.dz, d.dzbar);
      },
      py::arg("f"), py::arg("z"), py::arg("step") = 0.0);

  // Cauchy / Pompeiu
  m.def(
      "cauchy_eval",
      [](const std::function<cplx(cplx)>& f, const PlanarDomain& d, cplx z,
         const QuadratureSpec& q) { return cauchy_eval(f, d, z, q); },
      py::arg("f"), py::arg("domain"), py::arg("z"), py::arg("quadrature") = QuadratureSpec{});
  m.def(
      "pompeiu_eval",
      [](const std::function<cplx(cplx)>& f, const PlanarDomain& d, cplx z,
         const QuadratureSpec& q, std::optional<std::function<cplx(cplx)>> dbar_f) {
        return pompeiu_eval(f, d, z, q, std::move(dbar_f));
      },
      py::arg("f"), py::arg("domain"), py::arg("z"), py::arg("quadrature") = QuadratureSpec{},
      py::arg("dbar_f") = std::nullopt);
  m.def(
      "holomorphy_residual",
      [](const std::function<cplx(cplx)>& f, const PlanarDomain& d, const std::vector<cplx>& pts,
         const QuadratureSpec& q) { return holomorphy_residual(f, d, pts, q); },
      py::arg("f"), py::arg("domain"), py::arg("sample_points"),
      py::arg("quadrature") = QuadratureSpec{});

  // dbar solver
  py::class_<DbarProblem>(m, "DbarProblem")
      .def_static("from_function", &DbarProblem::from_function, py::arg("fn"),
                  py::arg("support_radius"), py::arg("resolution"),
                  py::arg("supported") = nullptr)
      .def_readonly("alpha", &DbarProblem::alpha)
      .def_readonly("support_radius", &DbarProblem::support_radius)
      .def("sup_abs", &DbarProblem::sup_abs);

  m.def(
      "cauchy_transform",
      [](const DbarProblem& p, const std::vector<cplx>& pts, const QuadratureSpec& q) {
        return cauchy_transform(p, pts, q);
      },
      py::arg("problem"), py::arg("eval_points"), py::arg("quadrature") = QuadratureSpec{});
  m.def("cauchy_transform_grid", &cauchy_transform_grid, py::arg("problem"));
  m.def("dbar_residual", &dbar_residual, py::arg("f_samples"), py::arg("alpha"));
  m.def(
      "boundedness_bound",
      [](const DbarProblem& p, const QuadratureSpec& q) { return boundedness_bound(p, q); },
      py::arg("problem"), py::arg("quadrature") = QuadratureSpec{});

  py::class_<CutoffSpec>(m, "CutoffSpec")
      .def(py::init([](cplx center, double inner_radius, double outer_radius,
                       const std::string& smoothness) {
             CutoffSpec c{center, inner_radius, outer_radius,
                          smoothness == "C1" ? CutoffSmoothness::C1 : CutoffSmoothness::C2};
             c.validate();
             return c;
           }),
           py::arg("center"), py::arg("inner_radius"), py::arg("outer_radius"),
           py::arg("smoothness") = "C2")
      .def("value", &CutoffSpec::value)
      .def("dzbar", &CutoffSpec::dzbar);

  py::class_<BlowUpExtension>(m, "BlowUpExtension")
      .def("__call__", &BlowUpExtension::operator())
      .def("field", &BlowUpExtension::field, py::arg("pred"))
      .def("bound", &BlowUpExtension::bound);
  m.def(
      "blow_up_extension",
      [](const std::function<cplx(cplx)>& h, const CutoffSpec& cutoff, const PlanarDomain& d,
         const QuadratureSpec& q) { return blow_up_extension(h, cutoff, d, q); },
      py::arg("h"), py::arg("cutoff"), py::arg("domain"), py::arg("quadrature") = QuadratureSpec{});

  // Dirichlet instruments
  py::class_<BoundaryData>(m, "BoundaryData")
      .def(py::init([](std::vector<cplx> samples) {
             BoundaryData d{std::move(samples)};
             d.validate();
             return d;
           }),
           py::arg("samples"))
      .def_static("from_function", &BoundaryData::from_function, py::arg("f"), py::arg("count"))
      .def_readonly("samples", &BoundaryData::samples)
      .def("mean", &BoundaryData::mean);

  m.def("poisson_kernel", &poisson_kernel, py::arg("r"), py::arg("delta"));
  m.def("poisson_solve", &poisson_solve, py::arg("data"), py::arg("r"), py::arg("theta"));
  m.def("laplacian_residual",
        py::overload_cast<const GridField&>(&laplacian_residual), py::arg("field"));
  m.def("boundary_continuity_gap", &boundary_continuity_gap, py::arg("data"), py::arg("r"));
  m.def(
      "holder_seminorm",
      [](const std::vector<cplx>& pts, const std::vector<cplx>& vals, double alpha) {
        return holder_seminorm(pts, vals, alpha);
      },
      py::arg("points"), py::arg("values"), py::arg("alpha"));
  m.def(
      "hopf_normal_derivative",
      [](const std::function<double(cplx)>& u, cplx P, const std::vector<double>& steps) {
        return hopf_normal_derivative(u, P, steps);
      },
      py::arg("u"), py::arg("P"), py::arg("steps") = std::vector<double>{1e-2, 5e-3, 2.5e-3});
  m.def(
      "harnack_lower_bound_check",
      [](const BoundaryData& f, double r) {
        HarnackCheck c = harnack_lower_bound_check(f, r);
        return py::make_tuple(c.lhs, c.rhs, c.ok);
      },
      py::arg("data"), py::arg("r"));

  // invariant metrics
  m.def(
      "metric_length",
      [](const std::string& model, const std::string& kind, const CVec& p, const CVec& xi) {
        return metric_length({model_from_string(model), kind_from_string(kind), p, xi});
      },
      py::arg("model"), py::arg("kind"), py::arg("p"), py::arg("xi"));
  m.def(
      "curve_length",
      [](const std::function<CVec(double)>& position, const std::function<CVec(double)>& velocity,
         const std::string& model, const std::string& kind, int n_steps) {
        return curve_length({position, velocity, model_from_string(model)},
                            kind_from_string(kind), n_steps);
      },
      py::arg("position"), py::arg("velocity"), py::arg("model"), py::arg("kind"),
      py::arg("n_steps") = 10000);
  m.def(
      "indicatrix_membership",
      [](const std::string& model, const std::string& kind, const CVec& xi) {
        return indicatrix_membership(model_from_string(model), kind_from_string(kind), xi);
      },
      py::arg("model"), py::arg("kind"), py::arg("xi"));
  m.def(
      "jacobian_c",
      [](const std::function<CVec(const CVec&)>& f, const CVec& z, double step) {
        return matrix_to_rows(jacobian_c(f, z, step <= 0.0 ? default_fd_step(z[0]) : step));
      },
      py::arg("f"), py::arg("z"), py::arg("step") = 0.0);

  py::class_<HolomorphicMap>(m, "HolomorphicMap")
      .def_readonly("name", &HolomorphicMap::name)
      .def("__call__", [](const HolomorphicMap& f, const CVec& z) { return f.apply(z); });
  m.def("projection_map", &projection_map, py::arg("index"));
  m.def("inclusion_map", &inclusion_map);
  m.def("scaling_map", &scaling_map, py::arg("c"));
  m.def("bidisc_automorphism_map", [](cplx alpha, cplx beta, double theta1, double theta2) {
    return bidisc_automorphism_map({alpha, beta, theta1, theta2});
  }, py::arg("alpha"), py::arg("beta"), py::arg("theta1") = 0.0, py::arg("theta2") = 0.0);
  m.def("compose_maps", &compose_maps, py::arg("outer"), py::arg("inner"));
  m.def(
      "distance_decreasing_check",
      [](const HolomorphicMap& f, const std::string& model, const std::string& kind, const CVec& p,
         const CVec& xi) {
        DistanceCheck c = distance_decreasing_check(
            f, {model_from_string(model), kind_from_string(kind), p, xi});
        return py::make_tuple(c.lhs, c.rhs, c.ok);
      },
      py::arg("map"), py::arg("model"), py::arg("kind"), py::arg("p"), py::arg("xi"));
  m.def(
      "caratheodory_lower_bound",
      [](const std::string& model, const CVec& p, const CVec& xi,
         const std::vector<HolomorphicMap>& candidates) {
        return caratheodory_lower_bound(model_from_string(model), p, xi, candidates);
      },
      py::arg("model"), py::arg("p"), py::arg("xi"), py::arg("candidates"));

  // automorphisms and the Poincare witness
  m.def(
      "apply_bidisc_automorphism",
      [](cplx alpha, cplx beta, double theta1, double theta2, cplx z1, cplx z2) {
        auto w = apply_bidisc_automorphism({alpha, beta, theta1, theta2}, {z1, z2});
        return py::make_tuple(w[0], w[1]);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("theta1"), py::arg("theta2"), py::arg("z1"),
      py::arg("z2"));
  m.def(
      "commutator_defect_rotations",
      [](double a1, double a2, double b1, double b2) {
        return commutator_defect(DiagonalRotation{a1, a2}, DiagonalRotation{b1, b2});
      },
      py::arg("theta1"), py::arg("theta2"), py::arg("phi1"), py::arg("phi2"));
  m.def(
      "commutator_defect_unitaries",
      [](const std::vector<std::vector<cplx>>& u1, const std::vector<std::vector<cplx>>& u2) {
        return commutator_defect(Unitary2(matrix_from_rows(u1)), Unitary2(matrix_from_rows(u2)));
      },
      py::arg("u1"), py::arg("u2"));
  m.def(
      "isotropy_abelian_report",
      [](int sample_count, std::uint64_t seed) {
        IsotropyReport r = isotropy_abelian_report(sample_count, seed);
        return py::dict(py::arg("bidisc_max_defect") = r.bidisc_max_defect,
                        py::arg("ball_defect") = r.ball_defect,
                        py::arg("attempts") = r.attempts,
                        py::arg("u1") = matrix_to_rows(r.witness_u1),
                        py::arg("u2") = matrix_to_rows(r.witness_u2));
      },
      py::arg("sample_count"), py::arg("seed"));
  m.def(
      "poincare_witness",
      [](const std::vector<std::vector<cplx>>& rows) {
        PoincareWitness w = poincare_witness(matrix_from_rows(rows));
        return py::dict(
            py::arg("branch") = (w.branch == WitnessBranch::Endpoint ? "endpoint" : "midpoint"),
            py::arg("point") = py::make_tuple(w.witness_point[0], w.witness_point[1]),
            py::arg("image_norm") = w.image_norm);
      },
      py::arg("matrix"));
  m.def(
      "strict_convexity_check",
      [](cplx p1, cplx p2, cplx q1, cplx q2) {
        return strict_convexity_check({p1, p2}, {q1, q2});
      },
      py::arg("p1"), py::arg("p2"), py::arg("q1"), py::arg("q2"));

  // polynomial algebra
  py::class_<Poly>(m, "Poly")
      .def(py::init([](std::vector<cplx> coeffs) { return Poly(std::move(coeffs)); }),
           py::arg("coefficients"))
      .def_static("identity", &Poly::identity)
      .def_static("monomial", &Poly::monomial, py::arg("k"), py::arg("coefficient") = cplx{1.0})
      .def_property_readonly("coefficients", [](const Poly& p) { return p.coeffs(); })
      .def("degree", &Poly::degree)
      .def("evaluate", &Poly::evaluate)
      .def("__add__", &Poly::operator+)
      .def("__sub__", &Poly::operator-)
      .def("__mul__", &Poly::operator*)
      .def("coeff_distance", &Poly::coeff_distance);

  m.def("compose", &compose, py::arg("f"), py::arg("h"), py::arg("cap") = kMaxPolyDegree);
  m.def(
      "divide_at_point",
      [](const Poly& g, cplx c) {
        DivisionResult r = divide_at_point(g, c);
        return py::make_tuple(r.value, r.quotient);
      },
      py::arg("g"), py::arg("c"));
  m.def(
      "character_point",
      [](const std::vector<cplx>& images) {
        CharacterPointResult r = character_point(CharacterTable(images));
        return py::make_tuple(r.c, r.consistent, r.max_defect);
      },
      py::arg("images"));
  m.def(
      "pullback",
      [](const Poly& h, const Poly& f, int cap) { return pullback(hom_from_map(h, cap), f); },
      py::arg("h"), py::arg("f"), py::arg("cap") = kMaxPolyDegree);
  m.def(
      "morphism_audit",
      [](const PolyMap& phi, int trials, std::uint64_t seed) {
        MorphismAudit a = morphism_audit(phi, trials, seed);
        return py::dict(py::arg("additive_defect") = a.additive_defect,
                        py::arg("multiplicative_defect") = a.multiplicative_defect,
                        py::arg("unital_defect") = a.unital_defect,
                        py::arg("scalar_defect") = a.scalar_defect,
                        py::arg("composition_defect") = a.composition_defect,
                        py::arg("recovered_h") = a.recovered_h,
                        py::arg("is_homomorphism") = a.is_homomorphism);
      },
      py::arg("phi"), py::arg("trials"), py::arg("seed"));

  // boundedness machinery
  py::class_<BoundednessMask>(m, "BoundednessMask")
      .def_readonly("k", &BoundednessMask::k)
      .def_readonly("width", &BoundednessMask::width)
      .def_readonly("height", &BoundednessMask::height)
      .def_readonly("spacing", &BoundednessMask::spacing)
      .def("point", &BoundednessMask::point)
      .def("in_mask", [](const BoundednessMask& m, int ix, int iy) {
        return m.mask[m.index(ix, iy)] != 0;
      });
  m.def(
      "boundedness_set",
      [](const std::function<cplx(int, cplx)>& member, int j_max, const GridField& geometry,
         double k) { return boundedness_set({member, j_max}, geometry, k); },
      py::arg("member"), py::arg("j_max"), py::arg("geometry"), py::arg("k"));
  m.def(
      "cover_check",
      [](const std::vector<BoundednessMask>& masks) {
        CoverResult r = cover_check(masks);
        return py::make_tuple(r.covered, r.uncovered_points);
      },
      py::arg("masks"));
  m.def(
      "dense_ball_search",
      [](const std::vector<BoundednessMask>& masks) {
        DenseBall b = dense_ball_search(masks);
        return py::make_tuple(b.k, b.center, b.radius);
      },
      py::arg("masks"));
  m.def(
      "limit_holomorphy_residual",
      [](const std::function<cplx(int, cplx)>& member, int j_max, cplx center, double radius,
         const QuadratureSpec& q) {
        return limit_holomorphy_residual({member, j_max}, center, radius, q);
      },
      py::arg("member"), py::arg("j_max"), py::arg("center"), py::arg("radius"),
      py::arg("quadrature") = QuadratureSpec{});

  m.def("selftest", []() {
    std::ostringstream report;
    int failures = run_selftest(report);
    return py::make_tuple(failures, report.str());
  });
}
