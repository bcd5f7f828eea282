#include "centerlab/fields.hpp"

#include <cmath>

namespace centerlab {

Real fd_step(Real xi) {
  static const Real base = std::cbrt(kEps);
  return base * std::max(Real(1), std::abs(xi));
}

void check_point(const VectorField& f, const VecX& x, const char* what) {
  if (static_cast<int>(x.size()) != f.dim)
    throw DimensionMismatchError(f.dim, static_cast<int>(x.size()), what);
  if (!all_finite(x)) throw EvalError(std::string("non-finite point passed to ") + what);
}

static void check_point(const ScalarField& f, const VecX& x, const char* what) {
  if (static_cast<int>(x.size()) != f.dim)
    throw DimensionMismatchError(f.dim, static_cast<int>(x.size()), what);
  if (!all_finite(x)) throw EvalError(std::string("non-finite point passed to ") + what);
}

VecX evaluate(const VectorField& f, const VecX& x) {
  check_point(f, x, "evaluate");
  VecX v = f.eval(x);
  if (static_cast<int>(v.size()) != f.dim)
    throw DimensionMismatchError(f.dim, static_cast<int>(v.size()),
                                 "evaluate output of field '" + f.name + "'");
  return v;
}

Real evaluate(const ScalarField& f, const VecX& x) {
  check_point(f, x, "evaluate");
  return f.eval(x);
}

MatX fd_jacobian(const VectorField& f, const VecX& x) {
  check_point(f, x, "fd_jacobian");
  const int n = f.dim;
  MatX J(n, n);
  VecX xp = x, xm = x;
  for (int j = 0; j < n; ++j) {
    const Real h = fd_step(x[j]);
    xp[j] = x[j] + h;
    xm[j] = x[j] - h;
    J.col(j) = (f.eval(xp) - f.eval(xm)) / (xp[j] - xm[j]);
    xp[j] = x[j];
    xm[j] = x[j];
  }
  return J;
}

MatX jacobian(const VectorField& f, const VecX& x) {
  check_point(f, x, "jacobian");
  if (f.jac) return f.jac(x);
  return fd_jacobian(f, x);
}

VecX fd_gradient(const ScalarField& f, const VecX& x) {
  check_point(f, x, "fd_gradient");
  const int n = f.dim;
  VecX g(n);
  VecX xp = x, xm = x;
  for (int j = 0; j < n; ++j) {
    const Real h = fd_step(x[j]);
    xp[j] = x[j] + h;
    xm[j] = x[j] - h;
    g[j] = (f.eval(xp) - f.eval(xm)) / (xp[j] - xm[j]);
    xp[j] = x[j];
    xm[j] = x[j];
  }
  return g;
}

VecX gradient(const ScalarField& f, const VecX& x) {
  check_point(f, x, "gradient");
  if (f.grad) return f.grad(x);
  return fd_gradient(f, x);
}

MatX hessian(const ScalarField& f, const VecX& x) {
  check_point(f, x, "hessian");
  if (f.hess) return f.hess(x);
  const int n = f.dim;
  MatX H(n, n);
  VecX xp = x, xm = x;
  for (int j = 0; j < n; ++j) {
    const Real h = fd_step(x[j]);
    xp[j] = x[j] + h;
    xm[j] = x[j] - h;
    H.col(j) = (gradient(f, xp) - gradient(f, xm)) / (xp[j] - xm[j]);
    xp[j] = x[j];
    xm[j] = x[j];
  }
  return (H + H.transpose()) / 2;  // symmetrize FD noise
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
  if (X.dim != Y.dim)
    throw DimensionMismatchError(X.dim, Y.dim, "lie_bracket operands");
  VectorField b;
  b.dim = X.dim;
  b.name = "[" + X.name + "," + Y.name + "]";
  b.eval = [X, Y](const VecX& x) -> VecX {
    return jacobian(Y, x) * X.eval(x) - jacobian(X, x) * Y.eval(x);
  };
  return b;
}

MatX symplectic_matrix(int half_dim) {
  const int n = half_dim;
  MatX J = MatX::Zero(2 * n, 2 * n);
  J.topRightCorner(n, n) = -MatX::Identity(n, n);
  J.bottomLeftCorner(n, n) = MatX::Identity(n, n);
  return J;
}

VectorField hamiltonian_field(const HamiltonianSystem& sys) {
  if (sys.dim() % 2 != 0 || sys.energy.dim != sys.dim())
    throw DimensionMismatchError(sys.dim(), sys.energy.dim,
                                 "hamiltonian_field energy dimension");
  const MatX J = symplectic_matrix(sys.half_dim);
  VectorField f;
  f.dim = sys.dim();
  f.name = "X_" + (sys.energy.name.empty() ? std::string("H") : sys.energy.name);
  ScalarField H = sys.energy;
  f.eval = [H, J](const VecX& z) -> VecX { return J * gradient(H, z); };
  f.jac = [H, J](const VecX& z) -> MatX { return J * hessian(H, z); };
  return f;
}

ScalarField poisson_bracket(const ScalarField& H, const ScalarField& K) {
  if (H.dim != K.dim)
    throw DimensionMismatchError(H.dim, K.dim, "poisson_bracket operands");
  if (H.dim % 2 != 0)
    throw DimensionMismatchError(H.dim + 1, H.dim,
                                 "poisson_bracket needs an even dimension");
  const int n = H.dim / 2;
  ScalarField pb;
  pb.dim = H.dim;
  pb.name = "{" + H.name + "," + K.name + "}";
  pb.eval = [H, K, n](const VecX& z) -> Real {
    const VecX gh = gradient(H, z);
    const VecX gk = gradient(K, z);
    Real s = 0;
    for (int i = 0; i < n; ++i) s += gh[i] * gk[n + i] - gh[n + i] * gk[i];
    return s;
  };
  return pb;
}

VectorField scale(const VectorField& X, Real c) {
  VectorField f;
  f.dim = X.dim;
  f.name = std::to_string(c) + "*" + X.name;
  f.eval = [X, c](const VecX& x) -> VecX { return c * X.eval(x); };
  if (X.jac) f.jac = [X, c](const VecX& x) -> MatX { return c * X.jac(x); };
  return f;
}

VectorField add(const VectorField& X, const VectorField& Y) {
  if (X.dim != Y.dim) throw DimensionMismatchError(X.dim, Y.dim, "add operands");
  VectorField f;
  f.dim = X.dim;
  f.name = X.name + "+" + Y.name;
  f.eval = [X, Y](const VecX& x) -> VecX { return X.eval(x) + Y.eval(x); };
  if (X.jac && Y.jac) {
    f.jac = [X, Y](const VecX& x) -> MatX { return X.jac(x) + Y.jac(x); };
  }
  return f;
}

}  // namespace centerlab
