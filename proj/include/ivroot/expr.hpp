#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ivroot/interval.hpp"

namespace ivroot {

class ExprError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public ExprError {
public:
    ParseError(const std::string& what, std::size_t position)
        : ExprError(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Evaluation over an interval that touches a forbidden region
// (sqrt of negatives, ln of non-positives, a tangent pole).
class DomainError : public ExprError {
public:
    using ExprError::ExprError;
};

class NonDifferentiable : public ExprError {
public:
    using ExprError::ExprError;
};

enum class UnaryOp { Neg, Sin, Cos, Tan, Exp, Ln, Sqrt, Abs };
enum class BinaryOp { Add, Sub, Mul, Div };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable AST node of a univariate real function.  Subtrees are shared
// freely (e.g. between an expression and its derivative); nothing mutates
// a node after construction, so concurrent evaluation is unrestricted.
class Expr {
public:
    enum class Kind { Constant, Variable, Unary, Binary, Pow };

    static ExprPtr constant(double v);
    static ExprPtr variable();
    static ExprPtr unary(UnaryOp op, ExprPtr child);
    static ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
    static ExprPtr pow(ExprPtr base, int exponent); // |exponent| <= 64

    Kind kind() const { return kind_; }
    double value() const { return value_; }        // Constant
    UnaryOp unary_op() const { return unary_op_; } // Unary
    BinaryOp binary_op() const { return binary_op_; }
    int exponent() const { return exponent_; }     // Pow
    const Expr& child() const { return *lhs_; }    // Unary / Pow base
    const Expr& lhs() const { return *lhs_; }
    const Expr& rhs() const { return *rhs_; }
    ExprPtr child_ptr() const { return lhs_; }
    ExprPtr lhs_ptr() const { return lhs_; }
    ExprPtr rhs_ptr() const { return rhs_; }

private:
    Expr() = default;

    Kind kind_ = Kind::Constant;
    double value_ = 0.0;
    UnaryOp unary_op_ = UnaryOp::Neg;
    BinaryOp binary_op_ = BinaryOp::Add;
    int exponent_ = 0;
    ExprPtr lhs_;
    ExprPtr rhs_;
};

// Grammar (whitespace-insensitive):
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | atom ('^' intlit)?
//   atom    := number | 'x' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
//   func    := sin|cos|tan|exp|ln|sqrt|abs
// Precedence: ^  >  unary minus  >  * /  >  + -   ("-x^2" is -(x^2)).
// Exponents are integer literals with |n| <= 64.
ExprPtr parse(std::string_view text);

// Minimal-parenthesis rendering; parse(render(e)) rebuilds the same AST.
std::string render(const Expr& e);

// Natural interval extension: every real operation replaced by its
// outward-rounded interval counterpart, so the result contains the exact
// range of e over x.
Interval eval_interval(const Expr& e, const Interval& x);

// Thin-input extension F([t,t]): a few-ULP-wide rigorous enclosure of e(t).
Interval eval_point(const Expr& e, double t);

// Plain binary64 evaluation (round to nearest, IEEE special values flow
// through).  Non-rigorous; used by oracles and the point iteration.
double eval_scalar(const Expr& e, double t);

// Sound near-tight range of one elementary operation over an interval.
Interval interval_elementary(UnaryOp op, const Interval& x);
Interval interval_pow(const Interval& x, int exponent);

// Symbolic derivative with exactness-preserving simplification
// (0*u -> 0, u+0 -> u, 1*u -> u, constants folded only when the fold is
// exact in binary64).  Rejects abs with NonDifferentiable.
ExprPtr derive(const Expr& e);

} // namespace ivroot
