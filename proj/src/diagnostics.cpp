#include "nls2d/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nls2d/solutions.hpp"
#include "nls2d/spectral/chebyshev.hpp"
#include "nls2d/spectral/fourier.hpp"

namespace nls2d {

std::string_view to_string(EnergyMode mode) {
  return mode == EnergyMode::standard ? "standard" : "far_field_subtract";
}

EnergyMode parse_energy_mode(std::string_view name) {
  if (name == "standard") return EnergyMode::standard;
  if (name == "far_field_subtract") return EnergyMode::far_field_subtract;
  throw std::invalid_argument("unknown energy mode '" + std::string(name) + "'");
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::none:
      return "none";
    case StopReason::energy_drift:
      return "energy_drift";
    case StopReason::non_finite:
      return "non_finite";
    case StopReason::linf_cap:
      return "linf_cap";
  }
  return "unknown";
}

namespace {

// d/dy of every row of a field
CMatrix y_derivative(const CMatrix& field, const spectral::FourierGrid<Real>& y) {
  CMatrix out = field;
  spectral::RowTransform transform(y.m);
  transform.forward(out);
  for (int q = 0; q < y.m; ++q) {
    const Complex factor = (q == y.m / 2) ? Complex(0) : Complex(0, y.wavenumbers[q]);
    out.col(q) *= factor;
  }
  transform.inverse(out);
  return out;
}

}  // namespace

EnergyResult energy(const State2D& state, const Grid2D& grid, Real lambda, EnergyMode mode) {
  const CompactifiedLine& line = grid.line;
  const int ni = line.inner.size();
  const int no = line.outer.size();
  const int m = grid.cols();
  const Real lambda2 = lambda * lambda;
  const Real kappa = state.kappa;

  const CMatrix& u = state.values;
  const CMatrix uy = y_derivative(u, grid.y);
  const CMatrix ux = line.dx * u.topRows(ni);
  const CMatrix us = line.ds * u.bottomRows(no);

  // far-field profile v(y) = u(s = 0, y)
  RVector v2 = RVector::Constant(m, lambda2);
  RVector vy2 = RVector::Zero(m);
  if (mode == EnergyMode::far_field_subtract) {
    CVector v(m);
    for (int j = 0; j < m; ++j) v[j] = spectral::cheb_interpolate(line.outer, u.col(j).tail(no).eval(), 0.0);
    const CVector vy = spectral::fourier_derivative(v, 1, grid.y);
    v2 = v.cwiseAbs2();
    vy2 = vy.cwiseAbs2();
  }

  auto potential = [&](int i, int j) {
    const Real a2 = std::norm(u(i, j));
    const Real uy2 = std::norm(uy(i, j));
    if (mode == EnergyMode::standard) return kappa * uy2 - a2 * (a2 - lambda2);
    return kappa * (uy2 - vy2[j]) - a2 * a2 + v2[j] * v2[j] + lambda2 * (a2 - v2[j]);
  };

  const RVector wi = spectral::clenshaw_curtis_weights(line.inner);
  const RVector wo = spectral::clenshaw_curtis_weights(line.outer);
  const RVector& s = line.outer.points;
  RMatrix dens_outer(no, m);
  Real total = 0;
  for (int j = 0; j < m; ++j) {
    Real col = 0;
    for (int i = 0; i < ni; ++i) col += wi[i] * (std::norm(ux(i, j)) + potential(i, j));
    for (int i = 0; i < no; ++i) {
      const Real s2 = s[i] * s[i];
      const Real d = s2 * std::norm(us(i, j)) + potential(line.outer_offset() + i, j) / s2;
      dens_outer(i, j) = d;
      col += wo[i] * d;
    }
    total += col;
  }

  EnergyResult result;
  result.value = total * grid.y.spacing();

  // the two points closest to s = 0 against the rest of domain II
  const RVector row_max = dens_outer.cwiseAbs().rowwise().maxCoeff();
  const int mid = no / 2;  // no is even, rows mid-1 and mid straddle s = 0
  const Real near = std::max(row_max[mid - 1], row_max[mid]);
  Real far = 0;
  for (int i = 0; i < no; ++i)
    if (i < mid - 2 || i > mid + 1) far = std::max(far, row_max[i]);
  result.divergence_warning = near > 10.0 * far && near > 1e-8;
  return result;
}

Real linf_norm(const State2D& state) {
  if (state.values.size() == 0) return 0;
  return state.values.cwiseAbs().maxCoeff();
}

Real tau_residual(const State2D& state, const Grid2D& grid) {
  const RMatrix b = matching_matrix(grid.line);
  return (b * state.values).cwiseAbs().maxCoeff();
}

Real peregrine_error(const State2D& state, const Grid2D& grid) {
  return (state.values - peregrine_field(grid, state.time)).cwiseAbs().maxCoeff();
}

std::pair<CVector, CVector> column_coefficients(const CVector& column, const CompactifiedLine& line) {
  const int ni = line.inner.size();
  const int no = line.outer.size();
  return {spectral::cheb_coefficients(column.head(ni)), spectral::cheb_coefficients(column.tail(no))};
}

namespace {

Real tail_max(const CVector& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  const int count = std::max(1, n / 10);
  return coeffs.tail(count).cwiseAbs().maxCoeff();
}

}  // namespace

ResolutionReport resolution_report(const State2D& state, const Grid2D& grid) {
  ResolutionReport rep;
  const int m = grid.cols();
  for (int j = 0; j < m; ++j) {
    const auto [ci, co] = column_coefficients(state.values.col(j), grid.line);
    rep.inner_tail += tail_max(ci);
    rep.outer_tail += tail_max(co);
  }
  rep.inner_tail /= m;
  rep.outer_tail /= m;

  CMatrix spec = state.values;
  spectral::RowTransform transform(m);
  transform.forward(spec);
  spec /= Real(m);
  const int count = std::max(1, m / 10);
  const int kmin = m / 2 - count / 2;
  for (int i = 0; i < spec.rows(); ++i) {
    Real tail = 0;
    for (int q = 0; q < m; ++q)
      if (std::abs(grid.y.index_of(q)) >= kmin) tail = std::max(tail, std::abs(spec(i, q)));
    rep.fourier_tail += tail;
  }
  rep.fourier_tail /= Real(spec.rows());
  rep.linf = linf_norm(state);
  return rep;
}

std::vector<Real> y_maxima_at_x0(const State2D& state, const Grid2D& grid) {
  if (grid.line.n_inner() % 2 != 0) throw std::invalid_argument("y_maxima_at_x0: N_I must be even");
  const int row = grid.line.n_inner() / 2;
  const int m = grid.cols();
  const RVector a = state.values.row(row).cwiseAbs().transpose();
  std::vector<Real> maxima;
  for (int j = 0; j < m; ++j) {
    const Real left = a[(j + m - 1) % m];
    const Real mid = a[j];
    const Real right = a[(j + 1) % m];
    if (!(mid > left && mid >= right)) continue;
    const Real curv = left - 2.0 * mid + right;
    const Real shift = curv != 0 ? 0.5 * (left - right) / curv : 0.0;
    maxima.push_back(grid.y.points[j] + shift * grid.y.spacing());
  }
  return maxima;
}

Sample Monitor::operator()(const State2D& state) const {
  Sample s;
  s.linf = linf_norm(state);
  const EnergyResult e = energy(state, *grid_, lambda_, mode_);
  s.energy = e.value;
  s.divergence_warning = e.divergence_warning;
  s.tau_residual = tau_residual(state, *grid_);
  return s;
}

Real loglog_slope(const std::vector<Real>& n, const std::vector<Real>& err) {
  if (n.size() != err.size() || n.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 points");
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  const Real k = static_cast<Real>(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    const Real x = std::log(n[i]);
    const Real y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace nls2d
