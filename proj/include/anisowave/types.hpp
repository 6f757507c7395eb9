#pragma once

#include <complex>
#include <limits>

#include <Eigen/Dense>

namespace anisowave {

using Complex = std::complex<double>;
using ComplexMatrix3 = Eigen::Matrix3cd;
using Vector3c = Eigen::Vector3cd;
using Vector3r = Eigen::Vector3d;

// Unit roundoff of IEEE double.
inline constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2.0;

}  // namespace anisowave
