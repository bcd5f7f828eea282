#pragma once

#include <functional>
#include <string>
#include <utility>

#include "centerlab/errors.hpp"
#include "centerlab/types.hpp"

namespace centerlab {

/// An evaluable vector field x -> X(x) on an n-dimensional chart.
/// `jac` is the exact Jacobian when the field came from the catalog or the
/// expression compiler; fields without one fall back to central finite
/// differences (see fd_jacobian).
struct VectorField {
  int dim = 0;
  std::function<VecX(const VecX&)> eval;
  std::function<MatX(const VecX&)> jac;  // optional
  std::string name;

  bool has_exact_jacobian() const { return static_cast<bool>(jac); }
};

/// A scalar field with optional exact gradient and Hessian.
struct ScalarField {
  int dim = 0;
  std::function<Real(const VecX&)> eval;
  std::function<VecX(const VecX&)> grad;  // optional
  std::function<MatX(const VecX&)> hess;  // optional
  std::string name;

  bool has_exact_gradient() const { return static_cast<bool>(grad); }
  bool has_exact_hessian() const { return static_cast<bool>(hess); }
};

/// Energy function on R^{2n} with the canonical symplectic structure.
/// Chart coordinates are ordered (x_1..x_n, y_1..y_n).
struct HamiltonianSystem {
  int half_dim = 0;
  ScalarField energy;

  int dim() const { return 2 * half_dim; }
};

/// Central-difference step per coordinate: cbrt(eps) * max(1, |x_i|).
Real fd_step(Real xi);

void check_point(const VectorField& f, const VecX& x, const char* what);

/// X(x), validated: finite input of the right dimension.
VecX evaluate(const VectorField& f, const VecX& x);

/// H(x), validated.
Real evaluate(const ScalarField& f, const VecX& x);

/// Exact Jacobian if the field has one, otherwise central finite differences.
MatX jacobian(const VectorField& f, const VecX& x);

/// Finite-difference Jacobian, always (even when an exact one exists).
MatX fd_jacobian(const VectorField& f, const VecX& x);

/// Exact gradient if present, otherwise central finite differences.
VecX gradient(const ScalarField& f, const VecX& x);

VecX fd_gradient(const ScalarField& f, const VecX& x);

/// Hessian of a scalar field: exact if present, else finite differences of
/// the gradient.
MatX hessian(const ScalarField& f, const VecX& x);

/// Commutator [X, Y] = DY·X - DX·Y. Exact when both operands carry exact
/// Jacobians. The result has no Jacobian of its own (second derivatives are
/// not tracked here; the expression compiler can provide exact brackets).
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

/// The canonical symplectic matrix J on R^{2n}, ordered so that in the plane
/// X_H = (-dH/dy, dH/dx).
MatX symplectic_matrix(int half_dim);

/// X_H = J grad H. Carries an exact Jacobian J·Hess(H) whenever the energy
/// has a Hessian (exact or FD-of-gradient).
VectorField hamiltonian_field(const HamiltonianSystem& sys);

/// {H, K} = sum_i (dH/dx_i dK/dy_i - dH/dy_i dK/dx_i), i.e. the derivative
/// of K along the flow of X_H. With this sign convention {x, y} = 1 and
/// [X_H, X_K] = X_{H,K}.
ScalarField poisson_bracket(const ScalarField& H, const ScalarField& K);

/// Scalar multiple c·X (or more generally a reparametrized field g(x)·X(x)
/// via the functional overload); keeps exact Jacobians when possible.
VectorField scale(const VectorField& X, Real c);

/// X + Y, with exact Jacobian when both operands have one.
VectorField add(const VectorField& X, const VectorField& Y);

}  // namespace centerlab
