#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "centerlab/fields.hpp"

namespace centerlab {
namespace expr {

enum class UnaryOp { Neg, Sin, Cos, Exp, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree. Pow keeps a non-negative integer exponent so
/// every expression is exactly differentiable.
struct Expr {
  struct Const {
    Real value;
  };
  struct Var {
    int index;
  };
  struct Unary {
    UnaryOp op;
    ExprPtr arg;
  };
  struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
  };
  struct Pow {
    ExprPtr base;
    int exponent;  // >= 0
  };

  std::variant<Const, Var, Unary, Binary, Pow> node;
};

// Folding constructors (0*e -> 0, 1*e -> e, e+0 -> e, const subtrees folded).
ExprPtr constant(Real v);
ExprPtr variable(int index);
ExprPtr unary(UnaryOp op, ExprPtr a);
ExprPtr binary(BinaryOp op, ExprPtr a, ExprPtr b);
ExprPtr pow(ExprPtr base, int exponent);

Real eval(const Expr& e, const VecX& x);

/// Exact symbolic partial derivative with constant folding.
ExprPtr differentiate(const ExprPtr& e, int var);

std::string pretty_print(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

/// Parse a single expression over the named variables.
ExprPtr parse_expression(const std::string& text,
                         const std::vector<std::string>& vars);

/// Parse either "(e1, e2, ...)" or a bare single expression.
std::vector<ExprPtr> parse_component_list(const std::string& text,
                                          const std::vector<std::string>& vars);

}  // namespace expr

/// A field defined by expression strings over named chart variables.
struct FieldSource {
  std::vector<std::string> vars;        // ordered variable names
  std::vector<std::string> components;  // each may be a tuple "(a, b)" or a
                                        // single expression

  int dim() const { return static_cast<int>(vars.size()); }
};

/// All component expressions of the source, tuples expanded in order.
std::vector<expr::ExprPtr> parse(const FieldSource& src);

/// Vector field whose eval walks the ASTs and whose Jacobian entries are the
/// symbolic partial derivatives. Component count must equal the dimension.
VectorField compile_vector(const FieldSource& src);

/// Scalar field (exactly one component after tuple expansion) with symbolic
/// gradient and Hessian.
ScalarField compile_scalar(const FieldSource& src);

}  // namespace centerlab
