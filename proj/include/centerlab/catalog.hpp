#pragma once

#include <string>
#include <variant>
#include <vector>

#include "centerlab/fields.hpp"

namespace centerlab {

using CatalogEntry = std::variant<VectorField, HamiltonianSystem>;

/// Closed-form built-in systems with exact Jacobians / gradients / Hessians.
///
/// Names: constant [n], rotation, euler, nonlinear-limit-cycle,
/// linear-commuter(a, b), center-hamiltonian, quartic-hamiltonian,
/// coordinate-hamiltonian-x, coordinate-hamiltonian-y,
/// lorenz(sigma, r, b) (no params = classical 10, 28, 8/3).
CatalogEntry catalog(const std::string& name, const std::vector<Real>& params = {});

/// As catalog(), but Hamiltonian entries are converted to their induced
/// vector field X_H.
VectorField catalog_field(const std::string& name,
                          const std::vector<Real>& params = {});

/// The Hamiltonian entries only; throws for plain vector fields.
HamiltonianSystem catalog_system(const std::string& name,
                                 const std::vector<Real>& params = {});

struct UnknownCatalogNameError : Error {
  explicit UnknownCatalogNameError(const std::string& name)
      : Error("unknown catalog name '" + name + "'") {}
};

struct CatalogArityError : Error {
  CatalogArityError(const std::string& name, const std::string& expected,
                    std::size_t got)
      : Error("catalog '" + name + "' expects " + expected +
              " parameter(s), got " + std::to_string(got)) {}
};

const std::vector<std::string>& catalog_names();

}  // namespace centerlab
