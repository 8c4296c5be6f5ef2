#pragma once

#include <array>
#include <vector>

#include "holonum/types.hpp"

namespace holonum {

using CVec = std::vector<cplx>;  // point or tangent vector, dimension 1 or 2

/// Small dense complex matrix, at most 2x2. Row-major storage.
struct CMatrix {
  int rows = 0;
  int cols = 0;
  std::array<cplx, 4> a{};

  CMatrix() = default;
  CMatrix(int r, int c) : rows(r), cols(c) {}

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  cplx& at(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
  cplx at(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }

  CVec apply(const CVec& v) const {
    if (static_cast<int>(v.size()) != cols)
      throw_error(errc::invalid_argument, "matrix/vector dimension mismatch");
    CVec out(static_cast<std::size_t>(rows), cplx{0.0});
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return out;
  }

  CMatrix multiply(const CMatrix& o) const {
    if (cols != o.rows) throw_error(errc::invalid_argument, "matrix dimension mismatch");
    CMatrix out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < o.cols; ++j) {
        cplx s = 0.0;
        for (int k = 0; k < cols; ++k) s += at(i, k) * o.at(k, j);
        out.at(i, j) = s;
      }
    return out;
  }

  cplx det2() const {
    if (rows != 2 || cols != 2) throw_error(errc::invalid_argument, "det2 needs a 2x2 matrix");
    return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  }

  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m = std::max(m, std::abs(at(i, j)));
    return m;
  }
};

inline CMatrix operator-(const CMatrix& x, const CMatrix& y) {
  CMatrix out(x.rows, x.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(i, j) = x.at(i, j) - y.at(i, j);
  return out;
}

inline double norm2(const CVec& v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace holonum
