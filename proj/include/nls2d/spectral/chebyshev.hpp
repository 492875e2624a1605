#ifndef NLS2D_SPECTRAL_CHEBYSHEV_HPP_
#define NLS2D_SPECTRAL_CHEBYSHEV_HPP_

// Chebyshev collocation on a scaled interval scale*[-1, 1].
//
// Points are in cos ordering: points[j] = scale*cos(j*pi/n), so index 0 is the
// right endpoint and index n the left one. Every matrix and transform in the
// project uses this ordering.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <type_traits>

#include <unsupported/Eigen/FFT>

#include "nls2d/types.hpp"

namespace nls2d::spectral {

namespace detail {
template <typename T>
struct real_of {
  using type = T;
};
template <typename T>
struct real_of<std::complex<T>> {
  using type = T;
};
}  // namespace detail

template <typename T>
using real_of_t = typename detail::real_of<T>::type;

template <typename Scalar = Real>
struct ChebyshevGrid {
  int n = 0;
  Scalar scale = 1;
  Vector<Scalar> points;

  ChebyshevGrid() = default;
  ChebyshevGrid(int degree, Scalar half_width) : n(degree), scale(half_width) {
    if (degree < 1) throw std::invalid_argument("ChebyshevGrid: degree must be >= 1");
    if (!(half_width > 0)) throw std::invalid_argument("ChebyshevGrid: scale must be positive");
    points.resize(n + 1);
    // sin form keeps the grid exactly antisymmetric about the midpoint
    for (int j = 0; j <= n; ++j) {
      const Scalar arg = std::numbers::pi_v<Scalar> * Scalar(n - 2 * j) / Scalar(2 * n);
      points[j] = scale * std::sin(arg);
    }
    points[0] = scale;
    points[n] = -scale;
  }

  int size() const { return n + 1; }
};

/// Differentiation matrix on the scaled grid. The diagonal is the negative
/// off-diagonal row sum, so constants are annihilated to rounding.
template <typename Scalar>
Matrix<Scalar> cheb_diff_matrix(const ChebyshevGrid<Scalar>& grid) {
  const int n = grid.n;
  if (n < 1) throw std::invalid_argument("cheb_diff_matrix: degree must be >= 1");
  const int np = n + 1;
  // work on the unit interval, rescale at the end
  Vector<Scalar> x = grid.points / grid.scale;
  Matrix<Scalar> d = Matrix<Scalar>::Zero(np, np);
  auto c = [n](int j) { return Scalar((j == 0 || j == n) ? 2 : 1) * ((j % 2 == 0) ? 1 : -1); };
  for (int i = 0; i < np; ++i) {
    Scalar row_sum = 0;
    for (int j = 0; j < np; ++j) {
      if (i == j) continue;
      d(i, j) = (c(i) / c(j)) / (x[i] - x[j]);
      row_sum += d(i, j);
    }
    d(i, i) = -row_sum;
  }
  return d / grid.scale;
}

/// Chebyshev coefficients by an O(n^2) cosine sum. Reference route for the
/// FFT-based transform.
template <typename Derived>
Vector<typename Derived::Scalar> cheb_coefficients_direct(const Eigen::MatrixBase<Derived>& values) {
  using S = typename Derived::Scalar;
  using R = real_of_t<S>;
  const int n = static_cast<int>(values.size()) - 1;
  if (n < 1) throw std::invalid_argument("cheb_coefficients: need at least 2 values");
  Vector<S> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) {
    S sum = S(0);
    for (int j = 0; j <= n; ++j) {
      R w = (j == 0 || j == n) ? R(0.5) : R(1);
      // reduce the argument exactly before taking the cosine
      const long long m = (static_cast<long long>(j) * k) % (2LL * n);
      sum += w * values[j] * std::cos(std::numbers::pi_v<R> * R(m) / R(n));
    }
    R scale = R(2) / R(n);
    if (k == 0 || k == n) scale *= R(0.5);
    coeffs[k] = scale * sum;
  }
  return coeffs;
}

/// Chebyshev coefficients via a fast cosine transform (FFT of the even
/// extension). f(x) = sum_k c_k T_k(x / scale).
template <typename Derived>
Vector<typename Derived::Scalar> cheb_coefficients(const Eigen::MatrixBase<Derived>& values) {
  using S = typename Derived::Scalar;
  using R = real_of_t<S>;
  const int n = static_cast<int>(values.size()) - 1;
  if (n < 1) throw std::invalid_argument("cheb_coefficients: need at least 2 values");
  std::vector<std::complex<R>> ext(2 * n);
  for (int j = 0; j <= n; ++j) ext[j] = std::complex<R>(values[j]);
  for (int j = 1; j < n; ++j) ext[2 * n - j] = ext[j];
  std::vector<std::complex<R>> spec;
  Eigen::FFT<R> fft;
  fft.fwd(spec, ext);
  Vector<S> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) {
    R scale = R(1) / R(n);
    if (k == 0 || k == n) scale *= R(0.5);
    if constexpr (std::is_same_v<S, R>) {
      coeffs[k] = scale * spec[k].real();
    } else {
      coeffs[k] = scale * spec[k];
    }
  }
  return coeffs;
}

/// Inverse of cheb_coefficients: values at the collocation points.
template <typename Derived>
Vector<typename Derived::Scalar> cheb_values(const Eigen::MatrixBase<Derived>& coeffs) {
  using S = typename Derived::Scalar;
  using R = real_of_t<S>;
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) throw std::invalid_argument("cheb_values: need at least 2 coefficients");
  // v_j = sum_k c_k cos(jk pi/n) is again a cosine transform of the even extension
  std::vector<std::complex<R>> ext(2 * n);
  ext[0] = std::complex<R>(coeffs[0]);
  ext[n] = std::complex<R>(coeffs[n]);
  for (int k = 1; k < n; ++k) {
    ext[k] = std::complex<R>(coeffs[k]) * R(0.5);
    ext[2 * n - k] = ext[k];
  }
  std::vector<std::complex<R>> spec;
  Eigen::FFT<R> fft;
  fft.fwd(spec, ext);
  Vector<S> values(n + 1);
  for (int j = 0; j <= n; ++j) {
    if constexpr (std::is_same_v<S, R>) {
      values[j] = spec[j].real();
    } else {
      values[j] = spec[j];
    }
  }
  return values;
}

/// Clenshaw-Curtis weights for the scaled grid; exact for degree <= n.
template <typename Scalar>
Vector<Scalar> clenshaw_curtis_weights(const ChebyshevGrid<Scalar>& grid) {
  const int n = grid.n;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Vector<Scalar> w = Vector<Scalar>::Zero(n + 1);
  for (int j = 0; j <= n; ++j) {
    const Scalar theta = pi * Scalar(j) / Scalar(n);
    Scalar sum = 0;
    for (int k = 0; k <= n / 2; ++k) {
      Scalar bk = (k == 0 || 2 * k == n) ? Scalar(1) : Scalar(2);
      sum += bk / Scalar(1 - 4 * k * k) * std::cos(Scalar(2 * k) * theta);
    }
    Scalar cj = (j == 0 || j == n) ? Scalar(1) : Scalar(2);
    w[j] = cj / Scalar(n) * sum;
  }
  return w * grid.scale;
}

/// Barycentric evaluation of the interpolant through (points, values) at x.
template <typename Scalar, typename Derived>
typename Derived::Scalar cheb_interpolate(const ChebyshevGrid<Scalar>& grid,
                                          const Eigen::MatrixBase<Derived>& values, Scalar x) {
  using S = typename Derived::Scalar;
  const int n = grid.n;
  S num = S(0);
  Scalar den = 0;
  for (int j = 0; j <= n; ++j) {
    const Scalar diff = x - grid.points[j];
    if (diff == Scalar(0)) return values[j];
    Scalar w = (j % 2 == 0) ? Scalar(1) : Scalar(-1);
    if (j == 0 || j == n) w *= Scalar(0.5);
    num += (w / diff) * values[j];
    den += w / diff;
  }
  return num / den;
}

}  // namespace nls2d::spectral

#endif  // NLS2D_SPECTRAL_CHEBYSHEV_HPP_
