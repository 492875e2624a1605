#include "nls2d/propagator.hpp"

#include <cmath>
#include <utility>

#include "nls2d/spectral/fourier.hpp"

namespace nls2d {

IRK4Tableau IRK4Tableau::gauss2() {
  const Real r = std::sqrt(3.0) / 6.0;
  IRK4Tableau t;
  t.a = {{{0.25, 0.25 - r}, {0.25 + r, 0.25}}};
  t.b = {0.5, 0.5};
  t.c = {0.5 - r, 0.5 + r};
  return t;
}

SplittingScheme SplittingScheme::yoshida4() {
  const Real cbrt2 = std::cbrt(2.0);
  const Real w1 = 1.0 / (2.0 - cbrt2);
  const Real w0 = -cbrt2 * w1;
  SplittingScheme s;
  s.linear_weights = {0.5 * w1, 0.5 * (w0 + w1), 0.5 * (w0 + w1), 0.5 * w1};
  s.nonlinear_weights = {w1, w0, w1};
  s.order = 4;
  return s;
}

CMatrix gauss_factor(const CMatrix& op, Real h, int sign) {
  const Complex beta = 0.25 * Complex(1.0, sign * (1.0 / std::sqrt(3.0)));
  return CMatrix::Identity(op.rows(), op.cols()) - (beta * h) * op;
}

LinearStepPlan::LinearStepPlan(const Grid2D& grid, int kappa) : grid_(&grid), kappa_(kappa) {
  if (kappa != 1 && kappa != -1) throw std::invalid_argument("LinearStepPlan: kappa must be +1 or -1");
  const LinearOperator1D op = assemble_second_derivative(grid.line);
  tau_rows_ = op.tau_rows;
  matching_ = matching_matrix(grid.line);
  const int n = grid.rows();
  row_mask_ = RVector::Ones(n);
  for (int r : tau_rows_) row_mask_[r] = 0.0;
  rhs_op_ = (2.0 * kI) * op.matrix.cast<Complex>();
  for (int r : tau_rows_) rhs_op_.row(r).setZero();
}

CMatrix LinearStepPlan::mode_operator(Real k) const {
  const LinearOperator1D raw = assemble_second_derivative(grid_->line);
  const LinearOperator1D shifted = with_mode_shift(raw, -kappa_ * k * k);
  CMatrix lk = kI * shifted.matrix.cast<Complex>();
  for (int r = 0; r < 4; ++r) lk.row(tau_rows_[r]) = matching_.row(r).cast<Complex>();
  return lk;
}

void LinearStepPlan::prepare(Real h_sub) {
  if (contains(h_sub)) return;
  const int half = grid_->y.m / 2;
  std::vector<ModeFactors> modes;
  modes.reserve(half + 1);
  for (int q = 0; q <= half; ++q) {
    const CMatrix lk = mode_operator(grid_->y.wavenumbers[q]);
    CMatrix plus = gauss_factor(lk, h_sub, +1);
    CMatrix minus = gauss_factor(lk, h_sub, -1);
    for (int r = 0; r < 4; ++r) {
      plus.row(tau_rows_[r]) = matching_.row(r).cast<Complex>();
      minus.row(tau_rows_[r]) = matching_.row(r).cast<Complex>();
    }
    ModeFactors f{Eigen::PartialPivLU<CMatrix>(plus), Eigen::PartialPivLU<CMatrix>(minus)};
    const Real rc = std::min(f.plus.rcond(), f.minus.rcond());
    if (!(rc > 0) || !std::isfinite(rc))
      throw std::runtime_error("LinearStepPlan: singular Gauss factor for mode " + std::to_string(q));
    modes.push_back(std::move(f));
  }
  factors_.emplace(h_sub, std::move(modes));
}

void LinearStepPlan::prepare(Real h, const SplittingScheme& scheme) {
  for (Real w : scheme.linear_weights) prepare(w * h);
}

void linear_substep(State2D& state, Real h_sub, const LinearStepPlan& plan) {
  const auto it = plan.factors_.find(h_sub);
  if (it == plan.factors_.end()) throw std::logic_error("linear_substep: plan not prepared for this substep");
  const std::vector<LinearStepPlan::ModeFactors>& modes = it->second;
  const Grid2D& grid = plan.grid();
  const int m = grid.cols();
  const int half = m / 2;

  CMatrix& u = state.values;
  spectral::RowTransform transform(m);
  transform.forward(u);

  // right-hand side 2 L_k u with homogeneous tau rows
  CMatrix rhs = plan.rhs_op_ * u;
  const CVector masked_shift = plan.row_mask_.cast<Complex>() * (-2.0 * kI * Real(plan.kappa_));
  for (int q = 0; q < m; ++q) {
    const Real k = grid.y.wavenumbers[q];
    rhs.col(q) += (k * k) * masked_shift.cwiseProduct(u.col(q));
  }

  const Real half_h = 0.5 * h_sub;
  CMatrix block;
  for (int q = 0; q <= half; ++q) {
    const bool paired = q != 0 && q != half;
    const int width = paired ? 2 : 1;
    block.resize(u.rows(), width);
    block.col(0) = rhs.col(q);
    if (paired) block.col(1) = rhs.col(m - q);
    CMatrix w = modes[q].plus.solve(block);
    for (int r : plan.tau_rows_) w.row(r).setZero();
    const CMatrix v = modes[q].minus.solve(w);
    u.col(q) += half_h * v.col(0);
    if (paired) u.col(m - q) += half_h * v.col(1);
  }

  transform.inverse(u);
  state.time += h_sub;
}

void nonlinear_substep(State2D& state, Real h_sub) {
  state.values = state.values.unaryExpr([h_sub](const Complex& z) {
    return z * std::exp(Complex(0.0, 2.0 * std::norm(z) * h_sub));
  });
}

void yoshida_step(State2D& state, Real h, const LinearStepPlan& plan, const SplittingScheme& scheme,
                  bool with_nonlinear) {
  const Real t0 = state.time;
  const std::size_t nl = scheme.nonlinear_weights.size();
  for (std::size_t i = 0; i < scheme.linear_weights.size(); ++i) {
    linear_substep(state, scheme.linear_weights[i] * h, plan);
    if (with_nonlinear && i < nl) nonlinear_substep(state, scheme.nonlinear_weights[i] * h);
  }
  state.time = t0 + h;
}

namespace {

void record(RunDiagnostics& diag, Real t, const Sample& s, Real e0) {
  diag.times.push_back(t);
  diag.linf.push_back(s.linf);
  diag.energy.push_back(s.energy);
  diag.energy_drift.push_back(relative_drift(s.energy, e0));
  diag.tau_residual.push_back(s.tau_residual);
  if (s.divergence_warning) ++diag.divergence_warnings;
}

}  // namespace

EvolveResult evolve(const State2D& initial, const EvolveOptions& options, LinearStepPlan& plan,
                    const SplittingScheme& scheme, const Monitor& monitor) {
  EvolveResult result{initial, {}};
  RunDiagnostics& diag = result.diagnostics;
  const Real t0 = initial.time;
  const Sample first = monitor(initial);
  const Real e0 = first.energy;
  record(diag, t0, first, e0);
  diag.last_valid_time = t0;
  if (options.n_steps <= 0) return result;
  if (!(options.t_end > t0)) throw std::invalid_argument("evolve: t_end must exceed the initial time");
  const int cadence = std::max(1, options.cadence);

  const Real h = (options.t_end - t0) / options.n_steps;
  plan.prepare(h, scheme);

  State2D state = initial;
  State2D last_valid = initial;
  for (int n = 1; n <= options.n_steps; ++n) {
    yoshida_step(state, h, plan, scheme);
    state.time = t0 + n * h;
    if (n == options.n_steps) state.time = options.t_end;
    if (n % cadence != 0 && n != options.n_steps) {
      if (options.on_step) options.on_step(state);
      continue;
    }

    if (!state.all_finite()) {
      diag.stop_reason = StopReason::non_finite;
    } else {
      const Sample s = monitor(state);
      const bool finite = std::isfinite(s.energy) && std::isfinite(s.linf);
      if (finite) record(diag, state.time, s, e0);
      if (options.stop.enabled) {
        if (!finite)
          diag.stop_reason = StopReason::non_finite;
        else if (relative_drift(s.energy, e0) > options.stop.max_energy_drift)
          diag.stop_reason = StopReason::energy_drift;
        else if (s.linf > options.stop.max_linf)
          diag.stop_reason = StopReason::linf_cap;
      }
    }
    if (diag.stop_reason != StopReason::none) {
      diag.stop_time = state.time;
      result.state = std::move(last_valid);
      return result;
    }
    diag.last_valid_time = state.time;
    last_valid = state;
    if (options.on_step) options.on_step(state);
  }
  result.state = std::move(state);
  return result;
}

}  // namespace nls2d
