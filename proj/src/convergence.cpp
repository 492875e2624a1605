#include "nls2d/convergence.hpp"

#include <cmath>
#include <limits>

#include "nls2d/propagator.hpp"
#include "nls2d/solutions.hpp"

namespace nls2d {

ConvergenceTable convergence_study(const std::vector<int>& n_t_list, int n_inner, int n_outer, Real x0, Real t_end,
                                   Real fit_threshold) {
  const Grid2D grid{build_line(x0, n_inner, n_outer), spectral::FourierGrid<Real>(2, 1.0)};
  const State2D initial = sample_initial(InitialData{}, grid, 1);
  const SplittingScheme scheme = SplittingScheme::yoshida4();
  const Monitor monitor(grid);

  ConvergenceTable table;
  for (int n : n_t_list) {
    LinearStepPlan plan(grid, 1);
    EvolveOptions opts;
    opts.t_end = t_end;
    opts.n_steps = n;
    opts.cadence = n;
    opts.stop.enabled = false;
    const EvolveResult r = evolve(initial, opts, plan, scheme, monitor);
    table.n_t.push_back(n);
    table.error.push_back(peregrine_error(r.state, grid));
    table.energy.push_back(r.diagnostics.energy.back());
  }

  std::vector<Real> xs, ys;
  for (std::size_t i = 0; i < table.n_t.size(); ++i) {
    if (table.error[i] > fit_threshold) {
      xs.push_back(table.n_t[i]);
      ys.push_back(table.error[i]);
    }
  }
  table.fitted_points = static_cast<int>(xs.size());
  table.slope = xs.size() >= 2 ? loglog_slope(xs, ys) : std::numeric_limits<Real>::quiet_NaN();
  return table;
}

}  // namespace nls2d
