#ifndef NLS2D_STATE_HPP_
#define NLS2D_STATE_HPP_

#include "nls2d/real_line.hpp"
#include "nls2d/spectral/fourier.hpp"
#include "nls2d/types.hpp"

namespace nls2d {

/// Tensor grid: compactified line in x, periodic Fourier grid in y.
struct Grid2D {
  CompactifiedLine line;
  spectral::FourierGrid<Real> y;

  int rows() const { return line.total_points(); }
  int cols() const { return y.m; }
};

/// Solution samples, rows along x (domain I then domain II), columns along y.
struct State2D {
  CMatrix values;
  Real time = 0;
  int kappa = 1;  // +1 elliptic, -1 hyperbolic

  bool all_finite() const { return values.allFinite(); }
};

}  // namespace nls2d

#endif  // NLS2D_STATE_HPP_
