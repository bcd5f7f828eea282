#include "centerlab/catalog.hpp"

#include <cmath>

namespace centerlab {

namespace {

void want(const std::string& name, const std::vector<Real>& p,
          std::size_t lo, std::size_t hi, const char* desc) {
  if (p.size() < lo || p.size() > hi) throw CatalogArityError(name, desc, p.size());
}

VectorField make_constant(int n) {
  VectorField f;
  f.dim = n;
  f.name = "constant";
  f.eval = [n](const VecX&) -> VecX {
    VecX v = VecX::Zero(n);
    v[0] = 1;
    return v;
  };
  f.jac = [n](const VecX&) -> MatX { return MatX::Zero(n, n); };
  return f;
}

VectorField make_rotation() {
  VectorField f;
  f.dim = 2;
  f.name = "rotation";
  f.eval = [](const VecX& z) -> VecX {
    VecX v(2);
    v << -z[1], z[0];
    return v;
  };
  f.jac = [](const VecX&) -> MatX {
    MatX J(2, 2);
    J << 0, -1, 1, 0;
    return J;
  };
  return f;
}

VectorField make_euler() {
  VectorField f;
  f.dim = 2;
  f.name = "euler";
  f.eval = [](const VecX& z) -> VecX { return z; };
  f.jac = [](const VecX&) -> MatX { return MatX::Identity(2, 2); };
  return f;
}

VectorField make_nonlinear_limit_cycle() {
  VectorField f;
  f.dim = 2;
  f.name = "nonlinear-limit-cycle";
  f.eval = [](const VecX& z) -> VecX {
    const Real x = z[0], y = z[1];
    const Real g = 1 - x * x - y * y;
    VecX v(2);
    v << y + x * g, -x + y * g;
    return v;
  };
  f.jac = [](const VecX& z) -> MatX {
    const Real x = z[0], y = z[1];
    MatX J(2, 2);
    J << 1 - 3 * x * x - y * y, 1 - 2 * x * y,
        -1 - 2 * x * y, 1 - x * x - 3 * y * y;
    return J;
  };
  return f;
}

VectorField make_linear_commuter(Real a, Real b) {
  VectorField f;
  f.dim = 2;
  f.name = "linear-commuter";
  f.eval = [a, b](const VecX& z) -> VecX {
    VecX v(2);
    v << a * z[0] + b * z[1], -b * z[0] + a * z[1];
    return v;
  };
  f.jac = [a, b](const VecX&) -> MatX {
    MatX J(2, 2);
    J << a, b, -b, a;
    return J;
  };
  return f;
}

HamiltonianSystem make_center_hamiltonian() {
  HamiltonianSystem sys;
  sys.half_dim = 1;
  sys.energy.dim = 2;
  sys.energy.name = "center-hamiltonian";
  sys.energy.eval = [](const VecX& z) -> Real { return 0.5 * z.squaredNorm(); };
  sys.energy.grad = [](const VecX& z) -> VecX { return z; };
  sys.energy.hess = [](const VecX&) -> MatX { return MatX::Identity(2, 2); };
  return sys;
}

HamiltonianSystem make_quartic_hamiltonian() {
  HamiltonianSystem sys;
  sys.half_dim = 1;
  sys.energy.dim = 2;
  sys.energy.name = "quartic-hamiltonian";
  sys.energy.eval = [](const VecX& z) -> Real {
    const Real r2 = z.squaredNorm();
    return 0.5 * r2 * r2;
  };
  sys.energy.grad = [](const VecX& z) -> VecX { return 2 * z.squaredNorm() * z; };
  sys.energy.hess = [](const VecX& z) -> MatX {
    return 2 * z.squaredNorm() * MatX::Identity(2, 2) + 4 * z * z.transpose();
  };
  return sys;
}

HamiltonianSystem make_coordinate_hamiltonian(int axis) {
  HamiltonianSystem sys;
  sys.half_dim = 1;
  sys.energy.dim = 2;
  sys.energy.name = axis == 0 ? "coordinate-hamiltonian-x" : "coordinate-hamiltonian-y";
  sys.energy.eval = [axis](const VecX& z) -> Real { return z[axis]; };
  sys.energy.grad = [axis](const VecX&) -> VecX {
    VecX g = VecX::Zero(2);
    g[axis] = 1;
    return g;
  };
  sys.energy.hess = [](const VecX&) -> MatX { return MatX::Zero(2, 2); };
  return sys;
}

VectorField make_lorenz(Real sigma, Real r, Real b) {
  VectorField f;
  f.dim = 3;
  f.name = "lorenz";
  f.eval = [sigma, r, b](const VecX& u) -> VecX {
    const Real x = u[0], y = u[1], z = u[2];
    VecX v(3);
    v << sigma * (y - x), x * (r - z) - y, x * y - b * z;
    return v;
  };
  f.jac = [sigma, r, b](const VecX& u) -> MatX {
    const Real x = u[0], y = u[1], z = u[2];
    MatX J(3, 3);
    J << -sigma, sigma, 0,
        r - z, -1, -x,
        y, x, -b;
    return J;
  };
  return f;
}

}  // namespace

CatalogEntry catalog(const std::string& name, const std::vector<Real>& p) {
  if (name == "constant") {
    want(name, p, 0, 1, "0 or 1 (dimension)");
    const int n = p.empty() ? 2 : static_cast<int>(p[0]);
    if (n < 1) throw CatalogArityError(name, "a positive dimension", p.size());
    return make_constant(n);
  }
  if (name == "rotation") {
    want(name, p, 0, 0, "0");
    return make_rotation();
  }
  if (name == "euler") {
    want(name, p, 0, 0, "0");
    return make_euler();
  }
  if (name == "nonlinear-limit-cycle") {
    want(name, p, 0, 0, "0");
    return make_nonlinear_limit_cycle();
  }
  if (name == "linear-commuter") {
    want(name, p, 2, 2, "2 (a, b)");
    return make_linear_commuter(p[0], p[1]);
  }
  if (name == "center-hamiltonian") {
    want(name, p, 0, 0, "0");
    return make_center_hamiltonian();
  }
  if (name == "quartic-hamiltonian") {
    want(name, p, 0, 0, "0");
    return make_quartic_hamiltonian();
  }
  if (name == "coordinate-hamiltonian-x") {
    want(name, p, 0, 0, "0");
    return make_coordinate_hamiltonian(0);
  }
  if (name == "coordinate-hamiltonian-y") {
    want(name, p, 0, 0, "0");
    return make_coordinate_hamiltonian(1);
  }
  if (name == "lorenz") {
    want(name, p, 0, 3, "0 or 3 (sigma, r, b)");
    if (p.empty()) return make_lorenz(10.0, 28.0, 8.0 / 3.0);
    if (p.size() != 3) throw CatalogArityError(name, "0 or 3 (sigma, r, b)", p.size());
    return make_lorenz(p[0], p[1], p[2]);
  }
  throw UnknownCatalogNameError(name);
}

VectorField catalog_field(const std::string& name, const std::vector<Real>& p) {
  CatalogEntry e = catalog(name, p);
  if (std::holds_alternative<VectorField>(e)) return std::get<VectorField>(e);
  return hamiltonian_field(std::get<HamiltonianSystem>(e));
}

HamiltonianSystem catalog_system(const std::string& name,
                                 const std::vector<Real>& p) {
  CatalogEntry e = catalog(name, p);
  if (!std::holds_alternative<HamiltonianSystem>(e))
    throw Error("catalog entry '" + name + "' is not a Hamiltonian system");
  return std::get<HamiltonianSystem>(e);
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "constant",
      "rotation",
      "euler",
      "nonlinear-limit-cycle",
      "linear-commuter",
      "center-hamiltonian",
      "quartic-hamiltonian",
      "coordinate-hamiltonian-x",
      "coordinate-hamiltonian-y",
      "lorenz",
  };
  return names;
}

}  // namespace centerlab
