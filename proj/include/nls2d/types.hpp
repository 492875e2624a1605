#ifndef NLS2D_TYPES_HPP_
#define NLS2D_TYPES_HPP_

#include <complex>

#include <Eigen/Core>

namespace nls2d {

template <typename T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using Real = double;
using Complex = std::complex<Real>;

using RVector = Vector<Real>;
using CVector = Vector<Complex>;
using RMatrix = Matrix<Real>;
using CMatrix = Matrix<Complex>;

inline constexpr Complex kI{0.0, 1.0};

}  // namespace nls2d

#endif  // NLS2D_TYPES_HPP_
