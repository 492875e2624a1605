#ifndef NLS2D_SPECTRAL_FOURIER_HPP_
#define NLS2D_SPECTRAL_FOURIER_HPP_

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "nls2d/types.hpp"

namespace nls2d::spectral {

/// Uniform periodic grid on y in L_y*[-pi, pi). Wavenumbers are stored in
/// FFT order: index q carries mode q for q <= m/2 and q - m above that, so the
/// Nyquist mode is +m/2.
template <typename Scalar = Real>
struct FourierGrid {
  int m = 0;
  Scalar length_scale = 1;  // L_y
  Scalar half_period = std::numbers::pi_v<Scalar>;
  Vector<Scalar> points;
  Vector<Scalar> wavenumbers;

  FourierGrid() = default;
  FourierGrid(int modes, Scalar ly) : m(modes), length_scale(ly) {
    if (modes < 2 || modes % 2 != 0) throw std::invalid_argument("FourierGrid: mode count must be even and >= 2");
    if (!(ly > 0)) throw std::invalid_argument("FourierGrid: L_y must be positive");
    half_period = ly * std::numbers::pi_v<Scalar>;
    points.resize(m);
    wavenumbers.resize(m);
    const Scalar dy = spacing();
    for (int j = 0; j < m; ++j) points[j] = -half_period + Scalar(j) * dy;
    for (int q = 0; q < m; ++q) wavenumbers[q] = Scalar(index_of(q)) / ly;
  }

  int size() const { return m; }
  Scalar spacing() const { return Scalar(2) * half_period / Scalar(m); }
  Scalar period() const { return Scalar(2) * half_period; }

  /// Integer mode index for FFT slot q.
  int index_of(int q) const { return q <= m / 2 ? q : q - m; }
};

/// Spectral derivative of periodic samples. Order 1 drops the Nyquist mode
/// (its derivative is not representable); order 2 keeps it.
template <typename Scalar, typename Derived>
Vector<std::complex<Scalar>> fourier_derivative(const Eigen::MatrixBase<Derived>& values, int order,
                                                const FourierGrid<Scalar>& grid) {
  const int m = static_cast<int>(values.size());
  if (m % 2 != 0) throw std::invalid_argument("fourier_derivative: odd sample count");
  if (m != grid.m) throw std::invalid_argument("fourier_derivative: size mismatch");
  if (order != 1 && order != 2) throw std::invalid_argument("fourier_derivative: order must be 1 or 2");
  std::vector<std::complex<Scalar>> in(m), spec, out;
  for (int j = 0; j < m; ++j) in[j] = std::complex<Scalar>(values[j]);
  Eigen::FFT<Scalar> fft;
  fft.fwd(spec, in);
  for (int q = 0; q < m; ++q) {
    const Scalar k = grid.wavenumbers[q];
    if (order == 1) {
      spec[q] *= (q == m / 2) ? std::complex<Scalar>(0) : std::complex<Scalar>(0, k);
    } else {
      spec[q] *= -k * k;
    }
  }
  fft.inv(out, spec);
  Vector<std::complex<Scalar>> result(m);
  for (int j = 0; j < m; ++j) result[j] = out[j];
  return result;
}

/// Row-wise FFT along y for a field stored as (x rows) x (y columns).
class RowTransform {
 public:
  explicit RowTransform(int m) : m_(m), in_(m), out_(m) {}

  void forward(CMatrix& field) {
    for (Eigen::Index r = 0; r < field.rows(); ++r) {
      for (int j = 0; j < m_; ++j) in_[j] = field(r, j);
      fft_.fwd(out_, in_);
      for (int j = 0; j < m_; ++j) field(r, j) = out_[j];
    }
  }

  void inverse(CMatrix& field) {
    for (Eigen::Index r = 0; r < field.rows(); ++r) {
      for (int j = 0; j < m_; ++j) in_[j] = field(r, j);
      fft_.inv(out_, in_);
      for (int j = 0; j < m_; ++j) field(r, j) = out_[j];
    }
  }

 private:
  int m_;
  Eigen::FFT<Real> fft_;
  std::vector<Complex> in_, out_;
};

}  // namespace nls2d::spectral

#endif  // NLS2D_SPECTRAL_FOURIER_HPP_
