#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <vector>

namespace centerlab {

using Real = double;

using VecX  = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using MatX  = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using CVecX = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

inline constexpr Real kEps = std::numeric_limits<Real>::epsilon();

inline bool all_finite(const VecX& v) { return v.allFinite(); }

/// Axis-aligned box used for blow-up detection, equilibrium grids and sampling.
struct Box {
  VecX lo;
  VecX hi;

  static Box cube(int dim, Real half_width) {
    Box b;
    b.lo = VecX::Constant(dim, -half_width);
    b.hi = VecX::Constant(dim, half_width);
    return b;
  }

  bool contains(const VecX& x) const {
    return (x.array() >= lo.array()).all() && (x.array() <= hi.array()).all();
  }

  int dim() const { return static_cast<int>(lo.size()); }
};

}  // namespace centerlab
