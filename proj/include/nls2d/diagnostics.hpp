#ifndef NLS2D_DIAGNOSTICS_HPP_
#define NLS2D_DIAGNOSTICS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nls2d/state.hpp"
#include "nls2d/types.hpp"

namespace nls2d {

// How the energy integrand treats the far field x -> +-infinity.
//  standard          : |u_x|^2 + kappa|u_y|^2 - |u|^2 (|u|^2 - lambda^2)
//  far_field_subtract: the same functional renormalised by the far-field
//                      profile v(y) = u(s = 0, y), which keeps it finite when
//                      |v| depends on y (modulated data).
enum class EnergyMode { standard, far_field_subtract };

std::string_view to_string(EnergyMode mode);
/// Throws std::invalid_argument for an unknown name.
EnergyMode parse_energy_mode(std::string_view name);

struct EnergyResult {
  Real value = 0;
  bool divergence_warning = false;  // domain-II density grows toward s -> 0
};

EnergyResult energy(const State2D& state, const Grid2D& grid, Real lambda = 1.0,
                    EnergyMode mode = EnergyMode::standard);

Real linf_norm(const State2D& state);

/// max over y-columns of the four matching residuals.
Real tau_residual(const State2D& state, const Grid2D& grid);

/// max |u - exact Peregrine(t = state.time)| over the grid.
Real peregrine_error(const State2D& state, const Grid2D& grid);

struct ResolutionReport {
  Real inner_tail = 0;    // domain I Chebyshev tail, averaged over y
  Real outer_tail = 0;    // domain II Chebyshev tail, averaged over y
  Real fourier_tail = 0;  // Fourier tail, averaged over x
  Real linf = 0;

  bool resolved(Real relative = 1e-10) const {
    const Real limit = relative * linf;
    return inner_tail < limit && outer_tail < limit && fourier_tail < limit;
  }
};

/// Tails are the max modulus over the highest 10% of coefficients.
ResolutionReport resolution_report(const State2D& state, const Grid2D& grid);

/// Chebyshev coefficients of one column, split into (domain I, domain II).
std::pair<CVector, CVector> column_coefficients(const CVector& column, const CompactifiedLine& line);

/// Local maxima of |u| along the x = 0 row (domain I midpoint, N_I even),
/// refined by a parabola through the three neighbouring samples.
std::vector<Real> y_maxima_at_x0(const State2D& state, const Grid2D& grid);

enum class StopReason { none, energy_drift, non_finite, linf_cap };
std::string_view to_string(StopReason reason);

struct RunDiagnostics {
  std::vector<Real> times;
  std::vector<Real> linf;
  std::vector<Real> energy;
  std::vector<Real> energy_drift;
  std::vector<Real> tau_residual;
  StopReason stop_reason = StopReason::none;
  Real stop_time = 0;        // time at which the stop criterion fired
  Real last_valid_time = 0;  // time of the state handed back
  int divergence_warnings = 0;

  std::size_t size() const { return times.size(); }
};

struct Sample {
  Real linf = 0;
  Real energy = 0;
  Real tau_residual = 0;
  bool divergence_warning = false;
};

/// Evaluates the per-record quantities for a state.
class Monitor {
 public:
  Monitor(const Grid2D& grid, Real lambda = 1.0, EnergyMode mode = EnergyMode::standard)
      : grid_(&grid), lambda_(lambda), mode_(mode) {}

  Sample operator()(const State2D& state) const;
  EnergyMode mode() const { return mode_; }
  Real lambda() const { return lambda_; }

 private:
  const Grid2D* grid_;
  Real lambda_;
  EnergyMode mode_;
};

/// Relative drift normalised by max(|E0|, 1) (E0 vanishes for pure Peregrine data).
inline Real relative_drift(Real e, Real e0) { return std::abs(e - e0) / std::max(std::abs(e0), Real(1)); }

/// Least-squares slope of log(err) against log(n).
Real loglog_slope(const std::vector<Real>& n, const std::vector<Real>& err);

}  // namespace nls2d

#endif  // NLS2D_DIAGNOSTICS_HPP_
