#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "nls2d/convergence.hpp"
#include "nls2d/propagator.hpp"
#include "nls2d/solutions.hpp"
#include "oracles.hpp"

using namespace nls2d;

namespace {

Grid2D small_grid(int m = 4, Real ly = 1.0) { return Grid2D{build_line(1.0, 12, 13), spectral::FourierGrid<Real>(m, ly)}; }

// Eigenpairs of d_xx restricted to the C^1 subspace: A u = nu u on the
// collocation rows with B u = 0. Reduced through a null-space basis of B.
struct ConstrainedEigen {
  CVector values;
  CMatrix vectors;
};

ConstrainedEigen constrained_eigen(const CompactifiedLine& line) {
  const RMatrix a = assemble_second_derivative(line).matrix;
  const RMatrix b = matching_matrix(line);
  const int n = line.total_points();
  const RMatrix q = Eigen::FullPivLU<RMatrix>(b).kernel();
  std::vector<int> colloc;
  const auto tr = tau_rows(line);
  for (int r = 0; r < n; ++r)
    if (std::find(tr.begin(), tr.end(), r) == tr.end()) colloc.push_back(r);
  RMatrix c = RMatrix::Zero(n - 4, n);
  for (int i = 0; i < n - 4; ++i) c(i, colloc[i]) = 1;
  const RMatrix lhs = c * a * q, mass = c * q;
  Eigen::ComplexEigenSolver<CMatrix> es((mass.partialPivLu().solve(lhs)).cast<Complex>());
  return {es.eigenvalues(), q.cast<Complex>() * es.eigenvectors()};
}

}  // namespace

TEST_CASE("Gauss tableau and composition weights") {
  const IRK4Tableau t = IRK4Tableau::gauss2();
  CHECK(t.b[0] + t.b[1] == doctest::Approx(1.0));
  for (int i = 0; i < 2; ++i) CHECK(t.a[i][0] + t.a[i][1] == doctest::Approx(t.c[i]));
  CHECK(t.c[0] == doctest::Approx(0.5 - std::sqrt(3.0) / 6));

  const SplittingScheme s = SplittingScheme::yoshida4();
  CHECK(s.order == 4);
  CHECK(s.linear_weights.size() == 4);
  CHECK(s.nonlinear_weights.size() == 3);
  Real lsum = 0, nsum = 0;
  for (Real w : s.linear_weights) lsum += w;
  for (Real w : s.nonlinear_weights) nsum += w;
  CHECK(lsum == doctest::Approx(1.0));
  CHECK(nsum == doctest::Approx(1.0));
  const Real w1 = 1 / (2 - std::cbrt(2.0));
  CHECK(s.nonlinear_weights[0] == doctest::Approx(w1));
  CHECK(s.nonlinear_weights[1] == doctest::Approx(-std::cbrt(2.0) * w1));
  // third-order condition of the triple jump
  Real cubes = 0;
  for (Real w : s.nonlinear_weights) cubes += w * w * w;
  CHECK(std::abs(cubes) < 1e-14);
}

TEST_CASE("factorisation identity L+ L- = 1 - hL/2 + h^2 L^2/12") {
  const Grid2D grid = small_grid();
  LinearStepPlan plan(grid, 1);
  std::mt19937 rng(11);
  std::normal_distribution<Real> nd;
  for (Real k : {0.0, 1.0, 2.0})
    for (Real h : {1e-3, 0.05, 0.7}) {
      const CMatrix l = plan.mode_operator(k);
      const CMatrix lhs = gauss_factor(l, h, +1) * gauss_factor(l, h, -1);
      const CMatrix id = CMatrix::Identity(l.rows(), l.cols());
      const CMatrix rhs = id - (h / 2) * l + (h * h / 12) * l * l;
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10 * std::max<Real>(1, rhs.cwiseAbs().maxCoeff()));
      CVector v(l.rows());
      for (auto& e : v) e = Complex(nd(rng), nd(rng));
      CHECK((lhs * v - rhs * v).norm() <= 1e-10 * std::max<Real>(1, (rhs * v).norm()));
    }
}

TEST_CASE("linear substep equals the Pade(2,2) map on y modes") {
  const Grid2D grid = small_grid(8, 2.0);
  LinearStepPlan plan(grid, 1);
  std::mt19937 rng(5);
  std::normal_distribution<Real> nd;
  for (int kappa : {1, -1}) {
    LinearStepPlan p(grid, kappa);
    for (Real h : {0.01, 0.3}) {
      // x-constant data: every y mode is an eigenfunction with L = -i kappa k^2
      CVector amp(grid.cols());
      for (auto& a : amp) a = Complex(nd(rng), nd(rng));
      State2D s{CMatrix(grid.rows(), grid.cols()), 0, kappa};
      for (int i = 0; i < grid.rows(); ++i)
        for (int j = 0; j < grid.cols(); ++j) {
          Complex v = 0;
          for (int q = 0; q < grid.cols(); ++q) v += amp[q] * std::exp(Complex(0, grid.y.wavenumbers[q] * grid.y.points[j]));
          s.values(i, j) = v;
        }
      CMatrix expected = CMatrix::Zero(grid.rows(), grid.cols());
      for (int q = 0; q < grid.cols(); ++q) {
        const Real k = grid.y.wavenumbers[q];
        const Complex r = oracle::gauss_stability(Complex(0, -kappa * k * k * h));
        for (int i = 0; i < grid.rows(); ++i)
          for (int j = 0; j < grid.cols(); ++j)
            expected(i, j) += r * amp[q] * std::exp(Complex(0, k * grid.y.points[j]));
      }
      p.prepare(h);
      linear_substep(s, h, p);
      CHECK((s.values - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("linear substep equals the Pade(2,2) map on constrained eigenvectors") {
  const Grid2D grid = small_grid(4, 1.0);
  const ConstrainedEigen eig = constrained_eigen(grid.line);
  LinearStepPlan plan(grid, 1);
  const Real h = 0.02;
  plan.prepare(h);
  int checked = 0;
  for (int e = 0; e < eig.values.size(); ++e) {
    const Complex nu = eig.values[e];
    if (std::abs(nu) > 50) continue;  // keep |h mu| moderate
    for (int q = 0; q < grid.cols(); ++q) {
      const Real k = grid.y.wavenumbers[q];
      if (q == grid.cols() / 2) continue;  // Nyquist column carries cos only
      State2D s{CMatrix(grid.rows(), grid.cols()), 0, 1};
      for (int j = 0; j < grid.cols(); ++j)
        s.values.col(j) = eig.vectors.col(e) * std::exp(Complex(0, k * grid.y.points[j]));
      const Complex mu = Complex(0, 1) * (nu - k * k);
      const CMatrix expected = oracle::gauss_stability(h * mu) * s.values;
      linear_substep(s, h, plan);
      CHECK((s.values - expected).cwiseAbs().maxCoeff() < 1e-12);
      ++checked;
    }
  }
  CHECK(checked > 8);
}

TEST_CASE("nonlinear substep: modulus conservation and phase flow") {
  std::mt19937 rng(2);
  std::normal_distribution<Real> nd;
  State2D s{CMatrix(5, 4), 0, 1};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j) s.values(i, j) = Complex(nd(rng), nd(rng));
  const CMatrix before = s.values;
  const Real h = 0.05;
  nonlinear_substep(s, h);
  CHECK((s.values.cwiseAbs() - before.cwiseAbs()).cwiseAbs().maxCoeff() < 1e-14);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(s.values(i, j) - oracle::rk4_phase_flow(before(i, j), h)) < 1e-11);

  State2D one{CMatrix::Ones(3, 2), 0, 1};
  nonlinear_substep(one, 0.3);
  CHECK(std::abs(one.values(1, 1) - std::exp(Complex(0, 0.6))) < 1e-15);
}

TEST_CASE("plane wave background is exact") {
  const Grid2D grid = small_grid();
  LinearStepPlan plan(grid, 1);
  const SplittingScheme scheme = SplittingScheme::yoshida4();
  State2D s{CMatrix::Ones(grid.rows(), grid.cols()), 0, 1};
  plan.prepare(0.05, scheme);
  for (int n = 0; n < 10; ++n) yoshida_step(s, 0.05, plan, scheme);
  CHECK(s.time == doctest::Approx(0.5));
  CHECK((s.values.array() - std::exp(Complex(0, 1.0))).abs().maxCoeff() < 1e-13);
}

TEST_CASE("linear-only composition equals the linear substeps in sequence") {
  const Grid2D grid = small_grid(4, 1.0);
  LinearStepPlan plan(grid, 1);
  const SplittingScheme scheme = SplittingScheme::yoshida4();
  InitialData d;
  d.kind = InitialKind::gaussian_perturbed;
  d.c = Complex(0.1, 0.02);
  State2D a = sample_initial(d, grid, 1);
  State2D b = a;
  const Real h = 0.04;
  plan.prepare(h, scheme);
  CHECK(plan.cached_sizes() == 2);
  yoshida_step(a, h, plan, scheme, false);
  for (Real w : scheme.linear_weights) linear_substep(b, w * h, plan);
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("the composed step is symmetric: step(-h) undoes step(h)") {
  const Grid2D grid = small_grid(4, 1.0);
  LinearStepPlan plan(grid, 1);
  const SplittingScheme scheme = SplittingScheme::yoshida4();
  const State2D start = sample_initial(InitialData{}, grid, 1);
  plan.prepare(0.01, scheme);
  plan.prepare(-0.01, scheme);
  State2D s = start;
  yoshida_step(s, 0.01, plan, scheme);
  yoshida_step(s, -0.01, plan, scheme);
  CHECK((s.values - start.values).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("substeps need a prepared plan") {
  const Grid2D grid = small_grid();
  LinearStepPlan plan(grid, -1);
  CHECK(plan.cached_sizes() == 0);
  State2D s = sample_initial(InitialData{}, grid, -1);
  CHECK_THROWS_AS(linear_substep(s, 0.01, plan), std::logic_error);
  plan.prepare(0.01);
  plan.prepare(0.01);
  CHECK(plan.cached_sizes() == 1);
  CHECK(plan.contains(0.01));
  linear_substep(s, 0.01, plan);
  CHECK(s.all_finite());
  CHECK_THROWS_AS(LinearStepPlan(grid, 0), std::invalid_argument);
}

TEST_CASE("evolve: zero steps, Peregrine accuracy, tau residual") {
  const Grid2D grid{build_line(1.0, 80, 75), spectral::FourierGrid<Real>(2, 1.0)};
  const State2D init = sample_initial(InitialData{}, grid, 1);
  const SplittingScheme scheme = SplittingScheme::yoshida4();
  const Monitor monitor(grid);
  LinearStepPlan plan(grid, 1);

  EvolveOptions none;
  none.n_steps = 0;
  const EvolveResult r0 = evolve(init, none, plan, scheme, monitor);
  CHECK((r0.state.values - init.values).cwiseAbs().maxCoeff() == 0.0);

  EvolveOptions opts;
  opts.t_end = 0.5;
  opts.n_steps = 500;
  opts.cadence = 50;
  const EvolveResult r = evolve(init, opts, plan, scheme, monitor);
  CHECK(r.diagnostics.stop_reason == StopReason::none);
  CHECK(r.state.time == doctest::Approx(0.5));
  CHECK(r.diagnostics.size() == 11);
  CHECK(peregrine_error(r.state, grid) < 1e-7);
  for (Real t : r.diagnostics.tau_residual) CHECK(t < 1e-6);
}

TEST_CASE("evolve stops on the L-infinity cap and returns the last valid state") {
  const Grid2D grid{build_line(1.0, 40, 41), spectral::FourierGrid<Real>(2, 1.0)};
  InitialData d;
  d.t0 = -0.5;
  const State2D init = sample_initial(d, grid, 1);
  LinearStepPlan plan(grid, 1);
  EvolveOptions opts;
  opts.t_end = 0.5;
  opts.n_steps = 200;
  opts.stop.max_linf = 2.5;
  const EvolveResult r = evolve(init, opts, plan, SplittingScheme::yoshida4(), Monitor(grid));
  CHECK(r.diagnostics.stop_reason == StopReason::linf_cap);
  CHECK(r.diagnostics.last_valid_time < r.diagnostics.stop_time);
  CHECK(r.state.time == doctest::Approx(r.diagnostics.last_valid_time));
  CHECK(linf_norm(r.state) <= 2.5);
  // |u_Per(0, t)| crosses 2.5 between t = -0.2 and t = -0.15
  CHECK(r.diagnostics.stop_time > -0.2);
  CHECK(r.diagnostics.stop_time < -0.1);
}

TEST_CASE("evolve stops on energy drift") {
  const Grid2D grid{build_line(1.0, 16, 15), spectral::FourierGrid<Real>(4, 1.0)};
  InitialData d;
  d.kind = InitialKind::gaussian_perturbed;
  d.c = 0.5;
  const State2D init = sample_initial(d, grid, 1);
  LinearStepPlan plan(grid, 1);
  EvolveOptions opts;
  opts.t_end = 1;
  opts.n_steps = 10;
  opts.stop.max_energy_drift = 1e-14;
  const EvolveResult r = evolve(init, opts, plan, SplittingScheme::yoshida4(), Monitor(grid));
  CHECK(r.diagnostics.stop_reason == StopReason::energy_drift);
  CHECK(r.state.all_finite());
}

TEST_CASE("short convergence study has fourth-order slope") {
  const ConvergenceTable t = convergence_study({60, 120, 240}, 80, 75, 1.0, 0.5, 1e-9);
  CHECK(t.fitted_points == 3);
  CHECK(t.slope > -4.5);
  CHECK(t.slope < -3.5);
  CHECK(t.error[0] / t.error[1] > 10);
}
