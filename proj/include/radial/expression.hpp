#pragma once

#include "radial/common.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace radial::expr {

enum class Op { number, variable, negate, add, subtract, multiply, divide, power, call };

enum class Fn { exp, ln, sqrt, sgn, abs, sin, cos };

/// Immutable expression tree over the single variable r.
struct Node {
  Op op;
  Real value = 0;  // number
  Fn fn{};         // call
  std::shared_ptr<const Node> lhs, rhs;
};

using NodePtr = std::shared_ptr<const Node>;

/// Recursive-descent parse. Precedence: ^ (right-assoc) > unary - > * / > + -.
/// Throws parse_error with a byte offset on malformed input, unknown
/// identifiers, or wrong function arity.
NodePtr parse(std::string_view source);

Real eval(const Node& node, Real r);

/// Fully parenthesized form that re-parses to an equivalent tree.
std::string to_string(const Node& node);

}  // namespace radial::expr
