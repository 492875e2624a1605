#include "nls2d/solutions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nls2d {

Complex peregrine(Real x, Real t) {
  const Real denom = 1.0 + 4.0 * x * x + 16.0 * t * t;
  const Complex num(4.0, 16.0 * t);
  return (1.0 - num / denom) * std::exp(Complex(0.0, 2.0 * t));
}

Complex peregrine_s(Real s, Real t) {
  // 4(1+4it)/(1+4x^2+16t^2) with x = 1/s, multiplied through by s^2
  const Real s2 = s * s;
  const Real denom = s2 * (1.0 + 16.0 * t * t) + 4.0;
  const Complex num = Complex(4.0, 16.0 * t) * s2;
  return (1.0 - num / denom) * std::exp(Complex(0.0, 2.0 * t));
}

std::string_view to_string(InitialKind kind) {
  switch (kind) {
    case InitialKind::peregrine:
      return "peregrine";
    case InitialKind::gaussian_perturbed:
      return "gaussian_perturbed";
    case InitialKind::modulated:
      return "modulated";
  }
  return "unknown";
}

InitialKind parse_initial_kind(std::string_view name) {
  if (name == "peregrine") return InitialKind::peregrine;
  if (name == "gaussian_perturbed") return InitialKind::gaussian_perturbed;
  if (name == "modulated") return InitialKind::modulated;
  throw std::invalid_argument("unknown initial data kind '" + std::string(name) + "'");
}

void InitialData::validate() const {
  if (!std::isfinite(t0)) throw std::invalid_argument("initial data: t0 must be finite");
  if (kind == InitialKind::gaussian_perturbed &&
      !(std::isfinite(c.real()) && std::isfinite(c.imag()) && std::isfinite(x_c)))
    throw std::invalid_argument("initial data: gaussian_perturbed needs finite c and x_c");
  if (kind == InitialKind::modulated && !(sigma > 0))
    throw std::invalid_argument("initial data: modulated needs sigma > 0");
}

namespace {

// exp(arg), flushed to zero below the smallest normal double
Real gaussian_factor(Real arg) {
  static const Real cutoff = std::log(std::numeric_limits<Real>::min());
  return arg < cutoff ? 0.0 : std::exp(arg);
}

}  // namespace

Complex initial_value(const InitialData& data, Real x, Real y) {
  const Complex base = peregrine(x, data.t0);
  switch (data.kind) {
    case InitialKind::peregrine:
      return base;
    case InitialKind::gaussian_perturbed: {
      const Real dx = x - data.x_c;
      return base + data.c * gaussian_factor(-dx * dx - y * y);
    }
    case InitialKind::modulated:
      return (data.sigma - gaussian_factor(-y * y)) * base;
  }
  return base;
}

State2D sample_initial(const InitialData& data, const Grid2D& grid, int kappa) {
  data.validate();
  const RVector x = grid.line.physical_x();
  State2D state;
  state.values.resize(grid.rows(), grid.cols());
  for (int j = 0; j < grid.cols(); ++j)
    for (int i = 0; i < grid.rows(); ++i) state.values(i, j) = initial_value(data, x[i], grid.y.points[j]);
  state.time = data.t0;
  state.kappa = kappa;
  return state;
}

CMatrix peregrine_field(const Grid2D& grid, Real t) {
  const RVector x = grid.line.physical_x();
  CVector column(grid.rows());
  for (int i = 0; i < grid.rows(); ++i) column[i] = peregrine(x[i], t);
  return column.replicate(1, grid.cols());
}

}  // namespace nls2d
