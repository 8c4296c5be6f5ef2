#include "holonum/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "holonum/quadrature.hpp"

namespace holonum {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw_error(errc::invalid_argument, "complex value must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json gridfield_to_json(const GridField& g) {
  json values = json::array();
  json mask = json::array();
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    values.push_back(complex_to_json(g.values[i]));
    mask.push_back(g.mask[i] != 0);
  }
  return json{{"origin", complex_to_json(g.origin)},
              {"spacing", g.spacing},
              {"width", g.width},
              {"height", g.height},
              {"values", std::move(values)},
              {"mask", std::move(mask)}};
}

GridField gridfield_from_json(const json& j) {
  GridField g;
  g.origin = complex_from_json(j.at("origin"));
  g.spacing = j.at("spacing").get<double>();
  g.width = j.at("width").get<int>();
  g.height = j.at("height").get<int>();
  if (g.width < 1 || g.height < 1 || !(g.spacing > 0.0))
    throw_error(errc::invalid_argument, "bad grid geometry");
  const json& values = j.at("values");
  const json& mask = j.at("mask");
  std::size_t n = static_cast<std::size_t>(g.width) * static_cast<std::size_t>(g.height);
  if (values.size() != n || mask.size() != n)
    throw_error(errc::invalid_argument, "grid payload size mismatch");
  g.values.reserve(n);
  g.mask.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.values.push_back(complex_from_json(values[i]));
    g.mask.push_back(mask[i].get<bool>() ? 1 : 0);
  }
  return g;
}

json contour_to_json(const Contour& c, int n_nodes) {
  int n = n_nodes > 0 ? n_nodes : c.node_count();
  json nodes = json::array();
  for (cplx z : c.nodes(n)) nodes.push_back(complex_to_json(z));
  return json{{"orientation", c.orientation() == Orientation::Counterclockwise
                                  ? "counterclockwise"
                                  : "clockwise"},
              {"nodes", std::move(nodes)}};
}

BoundaryData read_boundary_csv(std::istream& in) {
  std::vector<double> psis;
  std::vector<cplx> values;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw_error(errc::invalid_argument, "boundary CSV rows must be 'psi,value'");
    try {
      double psi = std::stod(line.substr(0, comma));
      double val = std::stod(line.substr(comma + 1));
      psis.push_back(psi);
      values.push_back(cplx(val, 0.0));
    } catch (const std::exception&) {
      if (first) {  // header row
        first = false;
        continue;
      }
      throw_error(errc::invalid_argument, "unparsable boundary CSV row: " + line);
    }
    first = false;
  }
  BoundaryData data;
  data.samples = std::move(values);
  data.validate();
  const int n = data.count();
  for (int k = 0; k < n; ++k)
    if (std::abs(psis[static_cast<std::size_t>(k)] - 2.0 * kPi * k / n) > 1e-9)
      throw_error(errc::invalid_argument,
                  "boundary CSV angles must be equispaced ascending from 0");
  return data;
}

void write_boundary_csv(std::ostream& out, const BoundaryData& data) {
  out << "psi,value\n";
  for (int k = 0; k < data.count(); ++k)
    out << format_double(data.psi(k)) << ','
        << format_double(data.samples[static_cast<std::size_t>(k)].real()) << '\n';
}

void write_polar_csv(std::ostream& out, const HarmonicField& u) {
  out << "r,theta,value\n";
  for (std::size_t j = 0; j < u.radii.size(); ++j)
    for (int k = 0; k < u.angular_count; ++k)
      out << format_double(u.radii[j]) << ','
          << format_double(2.0 * kPi * k / u.angular_count) << ','
          << format_double(u.values[u.index(static_cast<int>(j), k)].real()) << '\n';
}

void write_mask_pbm(std::ostream& out, const BoundednessMask& m) {
  out << "P1\n" << m.width << ' ' << m.height << '\n';
  for (int iy = m.height - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < m.width; ++ix) {
      out << (m.mask[m.index(ix, iy)] ? '1' : '0');
      out << (ix + 1 == m.width ? '\n' : ' ');
    }
  }
}

}  // namespace holonum
