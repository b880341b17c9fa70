#pragma once

#include <cmath>

#include <Eigen/Dense>

namespace golden {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
};

inline const double kSqrt5 = std::sqrt(5.0);

// Roots of x^2 = x + 1. sigma + sigbar = 1, sigma * sigbar = -1.
inline const double kGoldenRatio = 0.5 * (1.0 + kSqrt5);
inline const double kGoldenRatioConj = 0.5 * (1.0 - kSqrt5);

}  // namespace golden
