#ifndef NLS2D_REAL_LINE_HPP_
#define NLS2D_REAL_LINE_HPP_

// Two-domain covering of the real line:
//   domain I : x in x0*[-1, 1]                 (Chebyshev in x)
//   domain II: s = 1/x in [-1, 1]/x0           (Chebyshev in s)
// Global vectors stack domain I (N_I + 1 entries) on top of domain II
// (N_II + 1 entries). Domain II values are functions of s; x = infinity sits at
// s = 0, which is never a collocation point because N_II is odd.

#include <array>

#include "nls2d/spectral/chebyshev.hpp"
#include "nls2d/types.hpp"

namespace nls2d {

struct CompactifiedLine {
  Real x0 = 1;
  spectral::ChebyshevGrid<Real> inner;  // x
  spectral::ChebyshevGrid<Real> outer;  // s
  RMatrix dx, dxx;                      // domain I derivative matrices
  RMatrix ds, dss;                      // domain II derivative matrices (in s)

  int n_inner() const { return inner.n; }
  int n_outer() const { return outer.n; }
  int total_points() const { return inner.n + outer.n + 2; }
  int outer_offset() const { return inner.n + 1; }

  /// Physical abscissae: inner points, then 1/s for the outer points.
  RVector physical_x() const;
  bool is_inner(int row) const { return row <= inner.n; }
};

/// Builds the line. Throws std::invalid_argument for x0 <= 0, N_I < 2 or an
/// even N_II (an even N_II would put s = 0 on the grid).
CompactifiedLine build_line(Real x0, int n_inner, int n_outer);

/// Row indices replaced by the C^1 matching conditions, in the order
/// value(+x0), derivative(+x0), value(-x0), derivative(-x0).
std::array<int, 4> tau_rows(const CompactifiedLine& line);

struct LinearOperator1D {
  RMatrix matrix;
  std::array<int, 4> tau_rows{};
  std::array<Real, 4> tau_rhs{};  // homogeneous matching, always 0
  Real mode_shift = 0;            // -kappa k^2, added on non-tau diagonal entries
  bool tau_applied = false;
};

/// Raw block operator: d_xx on domain I, s^4 d_ss + 2 s^3 d_s on domain II.
LinearOperator1D assemble_second_derivative(const CompactifiedLine& line);

/// The 4 x total_points matrix of matching conditions
///   u^I(+-x0) - u^II(+-1/x0) = 0,   u^I_x(+-x0) + u^II_s(+-1/x0)/x0^2 = 0.
RMatrix matching_matrix(const CompactifiedLine& line);

/// Replaces the tau rows by the matching conditions. Idempotent.
LinearOperator1D apply_tau_conditions(const LinearOperator1D& op, const CompactifiedLine& line);

/// Adds shift to the diagonal of the non-tau rows.
LinearOperator1D with_mode_shift(const LinearOperator1D& op, Real shift);

/// max |B u| over the four matching conditions; u may be complex.
template <typename Derived>
Real tau_residual(const CompactifiedLine& line, const Eigen::MatrixBase<Derived>& u) {
  const RMatrix b = matching_matrix(line);
  return (b * u).cwiseAbs().maxCoeff();
}

}  // namespace nls2d

#endif  // NLS2D_REAL_LINE_HPP_
