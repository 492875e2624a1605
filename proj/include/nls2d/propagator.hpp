#ifndef NLS2D_PROPAGATOR_HPP_
#define NLS2D_PROPAGATOR_HPP_

// Split-step integration of
//   i u_t + u_xx + kappa u_yy + 2|u|^2 u = 0
// on the compactified line times a periodic y interval.
//
// Linear flow: per Fourier mode k the x-operator L_k = i (A - kappa k^2),
// with A the compactified second derivative and its four tau rows replaced by
// the C^1 matching conditions, is advanced by the 2-stage Gauss scheme. Its
// stage sum K1 + K2 solves L+ L- (K1 + K2) = 2 L_k u with
//   L+- = 1 - (1/4)(1 +- i/sqrt(3)) h L_k,
// so each substep is two LU solves. Nonlinear flow: u <- u exp(2i|u|^2 h).
// The two flows are composed with the symmetric 4th-order triple jump.

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include <Eigen/LU>

#include "nls2d/diagnostics.hpp"
#include "nls2d/state.hpp"
#include "nls2d/types.hpp"

namespace nls2d {

/// Hammer-Hollingsworth (2-stage Gauss) coefficients.
struct IRK4Tableau {
  std::array<std::array<Real, 2>, 2> a;
  std::array<Real, 2> b;
  std::array<Real, 2> c;

  static IRK4Tableau gauss2();
};

/// Weights of the composition
///   lin(l0 h) nl(n0 h) lin(l1 h) nl(n1 h) ... lin(l_last h).
struct SplittingScheme {
  std::vector<Real> linear_weights;
  std::vector<Real> nonlinear_weights;
  int order = 0;

  /// Linear-first triple jump, w1 = 1/(2 - 2^{1/3}), w0 = -2^{1/3} w1.
  static SplittingScheme yoshida4();
};

/// 1 - beta h L with beta = (1 +- i/sqrt(3))/4; sign selects +/-.
CMatrix gauss_factor(const CMatrix& op, Real h, int sign);

/// Cached LU factorisations of L+ and L- for every |k| and substep size.
class LinearStepPlan {
 public:
  LinearStepPlan(const Grid2D& grid, int kappa);

  /// Factorises for substep h if not cached already.
  void prepare(Real h_sub);
  /// Prepares every linear substep that a step of size h with scheme needs.
  void prepare(Real h, const SplittingScheme& scheme);
  bool contains(Real h_sub) const { return factors_.count(h_sub) != 0; }
  std::size_t cached_sizes() const { return factors_.size(); }

  /// L_k with tau rows replaced by the matching conditions.
  CMatrix mode_operator(Real k) const;

  const Grid2D& grid() const { return *grid_; }
  int kappa() const { return kappa_; }

 private:
  friend void linear_substep(State2D& state, Real h_sub, const LinearStepPlan& plan);

  struct ModeFactors {
    Eigen::PartialPivLU<CMatrix> plus;
    Eigen::PartialPivLU<CMatrix> minus;
  };

  const Grid2D* grid_;
  int kappa_;
  CMatrix rhs_op_;      // 2i A, tau rows zeroed
  RVector row_mask_;    // 1 on collocation rows, 0 on tau rows
  RMatrix matching_;    // 4 x n
  std::array<int, 4> tau_rows_{};
  std::map<Real, std::vector<ModeFactors>> factors_;  // indexed by |k| index 0..m/2
};

/// Advances the linear flow by h_sub in place.
void linear_substep(State2D& state, Real h_sub, const LinearStepPlan& plan);

/// u <- u exp(2i|u|^2 h_sub) pointwise.
void nonlinear_substep(State2D& state, Real h_sub);

/// One composed step of size h. `with_nonlinear = false` drops the
/// nonlinear substeps (linear-only test hook).
void yoshida_step(State2D& state, Real h, const LinearStepPlan& plan, const SplittingScheme& scheme,
                  bool with_nonlinear = true);

struct StopPolicy {
  Real max_energy_drift = 1e-3;
  Real max_linf = 1e3;
  bool enabled = true;
};

struct EvolveOptions {
  Real t_end = 1;
  int n_steps = 1;
  int cadence = 1;  // steps between diagnostic records
  StopPolicy stop;
  /// Called after every completed step with the new state.
  std::function<void(const State2D&)> on_step;
};

struct EvolveResult {
  State2D state;
  RunDiagnostics diagnostics;
};

/// Uniform stepping from initial.time to t_end. On a stop event the last
/// recorded valid state is returned.
EvolveResult evolve(const State2D& initial, const EvolveOptions& options, LinearStepPlan& plan,
                    const SplittingScheme& scheme, const Monitor& monitor);

}  // namespace nls2d

#endif  // NLS2D_PROPAGATOR_HPP_
