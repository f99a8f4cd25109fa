#pragma once

#include "sarp/diffcore/matrix.hpp"
#include "sarp/diffcore/tape.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sarp {

/// Differentiable expression of (z, a), evaluated batch-wise. Every node
/// yields an n x width matrix; vector-valued expressions expand into one
/// constraint per column.
struct Expr {
  enum class Op { feature, action, constant, affine, abs };

  struct Term {
    double weight = 1.0;
    std::shared_ptr<const Expr> expr;
  };

  Op op = Op::constant;
  std::vector<int> indices;  ///< feature / action columns
  double value = 0.0;        ///< constant value or affine bias
  std::vector<Term> terms;   ///< affine terms
  std::shared_ptr<const Expr> child;  ///< abs operand

  /// Output width for the given operand widths; throws ConfigError on
  /// out-of-range indices or mismatched affine widths.
  int width(int feature_width, int action_width) const;
  Tape::Node record(Tape& tape, Tape::Node z, Tape::Node a) const;
  /// Independent straight-line evaluation (no tape).
  Matrix evaluate(const Matrix& z, const Matrix& a) const;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr feature_expr(std::vector<int> indices);
ExprPtr action_expr(std::vector<int> indices);
ExprPtr const_expr(double value);
ExprPtr affine_expr(std::vector<Expr::Term> terms, double bias = 0.0);
ExprPtr abs_expr(ExprPtr child);

/// Indices offsets[o] + stride * i for i < count, step-major.
std::vector<int> grid_indices(const std::vector<int>& offsets, int count, int stride);

enum class ConstraintKind { inequality, equality };
enum class BoundSide { upper, lower };

/// Declared constraint: expr <= bound (upper), expr >= bound (lower), or
/// expr == bound (equality). g is normalised to g <= 0 / g == 0.
struct Constraint {
  std::string name;
  ConstraintKind kind = ConstraintKind::inequality;
  BoundSide side = BoundSide::upper;
  ExprPtr expr;
  double bound = 0.0;
  std::string unit;
  bool rectified = false;  ///< set by relu_transform

  int width(int feature_width, int action_width) const { return expr->width(feature_width, action_width); }
  /// g, or max(0, g + margin) once rectified.
  Tape::Node record(Tape& tape, Tape::Node z, Tape::Node a, double margin = 0.0) const;
  Matrix evaluate(const Matrix& z, const Matrix& a) const;
};

/// Inequalities become max(0, g); equalities pass through unchanged.
Constraint relu_transform(Constraint c);

/// The C transformed residuals g_c. Widths are fixed at construction.
struct ConstraintSet {
  std::vector<Constraint> constraints;
  int feature_width = 0;
  int action_width = 0;

  /// Rectifies every constraint and checks all indices. Throws ConfigError.
  ConstraintSet(std::vector<Constraint> declared, int feature_width, int action_width);
  ConstraintSet() = default;

  /// Total number of scalar constraints after vector expansion.
  int count() const;
  /// Expanded names, "name" for scalar constraints and "name[k]" otherwise.
  std::vector<std::string> names() const;
  /// n x C residual node (inequality residuals shifted by `margin` first).
  Tape::Node record(Tape& tape, Tape::Node z, Tape::Node a, double margin = 0.0) const;
  /// n x C residuals without a tape.
  Matrix residuals(const Matrix& z, const Matrix& a, double margin = 0.0) const;
  /// Per column: true for equality constraints (checked as |g| <= eps).
  std::vector<bool> equality_mask() const;
};

ExprPtr parse_expr(const nlohmann::json& j, const std::string& where = "expr");
nlohmann::json expr_to_json(const Expr& e);
Constraint parse_constraint(const nlohmann::json& j, const std::string& where = "constraint");
nlohmann::json constraint_to_json(const Constraint& c);
ConstraintSet parse_constraint_set(const nlohmann::json& j, int feature_width, int action_width);

}  // namespace sarp
