#ifndef NLS2D_SOLUTIONS_HPP_
#define NLS2D_SOLUTIONS_HPP_

#include <string>
#include <string_view>

#include "nls2d/state.hpp"
#include "nls2d/types.hpp"

namespace nls2d {

/// Peregrine breather of the focusing 1D cubic NLS, i u_t + u_xx + 2|u|^2 u = 0.
Complex peregrine(Real x, Real t);

/// Same solution as a function of s = 1/x; finite at s = 0 where it equals e^{2it}.
Complex peregrine_s(Real s, Real t);

enum class InitialKind { peregrine, gaussian_perturbed, modulated };

std::string_view to_string(InitialKind kind);
InitialKind parse_initial_kind(std::string_view name);

struct InitialData {
  InitialKind kind = InitialKind::peregrine;
  Real t0 = 0;
  Complex c{0, 0};  // Gaussian amplitude
  Real x_c = 0;     // Gaussian centre in x
  Real sigma = 1;   // modulation level

  /// Throws std::invalid_argument when the parameters do not fit the kind.
  void validate() const;
};

/// Value of the initial data at a physical point (x finite).
Complex initial_value(const InitialData& data, Real x, Real y);

/// Samples the data on the tensor grid; the Peregrine part is evaluated at the
/// reference time t0 and the state time is set to t0.
State2D sample_initial(const InitialData& data, const Grid2D& grid, int kappa);

/// Exact y-independent Peregrine field at time t on the grid.
CMatrix peregrine_field(const Grid2D& grid, Real t);

}  // namespace nls2d

#endif  // NLS2D_SOLUTIONS_HPP_
