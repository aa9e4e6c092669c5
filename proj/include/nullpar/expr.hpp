#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "nullpar/jet.hpp"

namespace nullpar::expr {

enum class Op { constant, variable, add, sub, mul, div, pow, neg, sin, cos, exp };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable expression node. Subtrees are shared freely between fields.
///
/// `value` is used by constants (always >= 0; a negative literal is a `neg`
/// node), `index` by variables (1-based) and by `pow` (the integer exponent).
struct Node {
  Op op = Op::constant;
  double value = 0.0;
  int index = 0;
  NodePtr lhs;
  NodePtr rhs;
};

bool equal(const Node& a, const Node& b);

NodePtr make_constant(double v);
NodePtr make_variable(int index);
NodePtr make_binary(Op op, NodePtr lhs, NodePtr rhs);
NodePtr make_unary(Op op, NodePtr arg);
NodePtr make_pow(NodePtr base, int exponent);

/// A coordinate function over x1..xn, given by an expression tree.
class ScalarField {
 public:
  ScalarField() : ScalarField(make_constant(0.0), 1) {}
  ScalarField(NodePtr root, int nvars);

  static ScalarField constant(double v, int nvars) { return {make_constant(v), nvars}; }
  static ScalarField variable(int index, int nvars) { return {make_variable(index), nvars}; }

  const Node& root() const noexcept { return *root_; }
  const NodePtr& root_ptr() const noexcept { return root_; }
  int nvars() const noexcept { return nvars_; }

  /// Same tree over a different number of variables. Indices must still fit.
  ScalarField with_nvars(int nvars) const { return {root_, nvars}; }

  /// Canonical text; parse(to_string()) reproduces this tree exactly.
  std::string to_string() const;

  /// Value at x (length nvars). Independent of the jet path.
  double evaluate(std::span<const double> x) const;

  /// True when the tree is the literal constant `v`.
  bool is_constant(double v) const noexcept;

  friend bool operator==(const ScalarField& a, const ScalarField& b) {
    return a.nvars_ == b.nvars_ && equal(*a.root_, *b.root_);
  }

  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);

 private:
  NodePtr root_;
  int nvars_;
};

/// Parses `text` per the expression grammar; variables are x1..x<nvars>.
/// Throws ParseError (with byte offset) or Error{Errc::index_range}.
ScalarField parse(std::string_view text, int nvars);

/// Canonical printing of a subtree.
std::string print(const Node& node);

/// Value, gradient and Hessian of f at x. Throws Error{Errc::evaluation}
/// naming the offending subexpression on division by zero or a non-finite
/// intermediate.
Jet2 eval_jet2(const ScalarField& f, std::span<const double> x);

/// Largest variable index referenced (0 if none).
int max_index(const Node& node);

/// True if any variable with index in [first, last] (1-based) occurs.
bool mentions_any(const Node& node, int first, int last);

}  // namespace nullpar::expr
