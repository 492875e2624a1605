#ifndef NLS2D_CONVERGENCE_HPP_
#define NLS2D_CONVERGENCE_HPP_

#include <vector>

#include "nls2d/types.hpp"

namespace nls2d {

struct ConvergenceTable {
  std::vector<int> n_t;
  std::vector<Real> error;   // max |u - u_Per| at t_end
  std::vector<Real> energy;  // E[u] at t_end (vanishes for the exact solution)
  Real slope = 0;            // log-log fit over the points with error > fit_threshold
  int fitted_points = 0;
};

/// Evolves Peregrine data (y-independent) for every entry of n_t_list and
/// compares with the exact solution at t_end.
ConvergenceTable convergence_study(const std::vector<int>& n_t_list, int n_inner = 80, int n_outer = 75,
                                   Real x0 = 1, Real t_end = 1, Real fit_threshold = 1e-6);

}  // namespace nls2d

#endif  // NLS2D_CONVERGENCE_HPP_
