#include "nls2d/real_line.hpp"

#include <stdexcept>
#include <string>

namespace nls2d {

RVector CompactifiedLine::physical_x() const {
  RVector x(total_points());
  x.head(inner.size()) = inner.points;
  for (int j = 0; j < outer.size(); ++j) x[outer_offset() + j] = 1.0 / outer.points[j];
  // the interface points are shared, keep them bit-identical
  x[outer_offset()] = x0;
  x[outer_offset() + outer.n] = -x0;
  return x;
}

CompactifiedLine build_line(Real x0, int n_inner, int n_outer) {
  if (!(x0 > 0)) throw std::invalid_argument("build_line: x0 must be positive");
  if (n_inner < 2) throw std::invalid_argument("build_line: N_I must be >= 2");
  if (n_outer < 3) throw std::invalid_argument("build_line: N_II must be >= 3");
  if (n_outer % 2 == 0)
    throw std::invalid_argument("build_line: N_II must be odd (got " + std::to_string(n_outer) +
                                "), otherwise s = 0 is a collocation point");
  CompactifiedLine line;
  line.x0 = x0;
  line.inner = spectral::ChebyshevGrid<Real>(n_inner, x0);
  line.outer = spectral::ChebyshevGrid<Real>(n_outer, 1.0 / x0);
  line.dx = spectral::cheb_diff_matrix(line.inner);
  line.dxx = line.dx * line.dx;
  line.ds = spectral::cheb_diff_matrix(line.outer);
  line.dss = line.ds * line.ds;
  return line;
}

std::array<int, 4> tau_rows(const CompactifiedLine& line) {
  const int off = line.outer_offset();
  return {0, off, line.n_inner(), off + line.n_outer()};
}

LinearOperator1D assemble_second_derivative(const CompactifiedLine& line) {
  const int n = line.total_points();
  const int ni = line.inner.size();
  const int no = line.outer.size();
  const int off = line.outer_offset();
  LinearOperator1D op;
  op.matrix = RMatrix::Zero(n, n);
  op.matrix.topLeftCorner(ni, ni) = line.dxx;
  const RVector& s = line.outer.points;
  const RVector s3 = s.array().cube();
  const RVector s4 = s.array().square().square();
  op.matrix.block(off, off, no, no) = s4.asDiagonal() * line.dss;
  op.matrix.block(off, off, no, no) += (2.0 * s3).asDiagonal() * line.ds;
  op.tau_rows = tau_rows(line);
  return op;
}

RMatrix matching_matrix(const CompactifiedLine& line) {
  const int n = line.total_points();
  const int ni = line.inner.size();
  const int no = line.outer.size();
  const int off = line.outer_offset();
  const Real inv_x0_sq = 1.0 / (line.x0 * line.x0);
  RMatrix b = RMatrix::Zero(4, n);
  // +x0: inner row 0, outer row 0
  b(0, 0) = 1.0;
  b(0, off) = -1.0;
  b.block(1, 0, 1, ni) = line.dx.row(0);
  b.block(1, off, 1, no) = inv_x0_sq * line.ds.row(0);
  // -x0: inner row N_I, outer row N_II
  b(2, ni - 1) = 1.0;
  b(2, off + no - 1) = -1.0;
  b.block(3, 0, 1, ni) = line.dx.row(ni - 1);
  b.block(3, off, 1, no) = inv_x0_sq * line.ds.row(no - 1);
  return b;
}

LinearOperator1D apply_tau_conditions(const LinearOperator1D& op, const CompactifiedLine& line) {
  LinearOperator1D out = op;
  const RMatrix b = matching_matrix(line);
  for (int r = 0; r < 4; ++r) {
    out.matrix.row(out.tau_rows[r]) = b.row(r);
    out.tau_rhs[r] = 0.0;
  }
  out.tau_applied = true;
  return out;
}

LinearOperator1D with_mode_shift(const LinearOperator1D& op, Real shift) {
  LinearOperator1D out = op;
  const Real delta = shift - op.mode_shift;
  for (int i = 0; i < out.matrix.rows(); ++i) {
    bool is_tau = false;
    for (int r : out.tau_rows) is_tau = is_tau || (r == i);
    if (!(is_tau && out.tau_applied)) out.matrix(i, i) += delta;
  }
  out.mode_shift = shift;
  return out;
}

}  // namespace nls2d
