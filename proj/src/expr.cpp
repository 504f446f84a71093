#include "ivroot/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "ivroot/rounding.hpp"

namespace ivroot {

// ---------------------------------------------------------------------------
// AST construction

ExprPtr Expr::constant(double v) {
    if (!std::isfinite(v)) throw ExprError("constant must be a finite binary64");
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Constant;
    e->value_ = v;
    return e;
}

ExprPtr Expr::variable() {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Variable;
    return e;
}

ExprPtr Expr::unary(UnaryOp op, ExprPtr child) {
    if (!child) throw ExprError("unary node requires a child");
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Unary;
    e->unary_op_ = op;
    e->lhs_ = std::move(child);
    return e;
}

ExprPtr Expr::binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    if (!lhs || !rhs) throw ExprError("binary node requires two children");
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Binary;
    e->binary_op_ = op;
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    return e;
}

ExprPtr Expr::pow(ExprPtr base, int exponent) {
    if (!base) throw ExprError("pow node requires a base");
    if (exponent < -64 || exponent > 64)
        throw ExprError("pow exponent out of range (|n| <= 64)");
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Pow;
    e->exponent_ = exponent;
    e->lhs_ = std::move(base);
    return e;
}

// ---------------------------------------------------------------------------
// Elementary interval kernels

namespace {

using detail::libm_down;
using detail::libm_up;

Interval finalize(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw OverflowError("interval endpoint overflowed binary64");
    return Interval(lo, hi);
}

// Beyond this magnitude the pi-multiple bookkeeping for sin/cos/tan is not
// attempted; sin/cos fall back to [-1,1], tan refuses.
constexpr double kTrigArgLimit = 1e15;

// True when some integer k with k mod 4 == residue may place k*(pi/2)
// inside x.  Conservative in the inclusive direction.
bool quarter_pi_multiple_maybe_in(const Interval& x, int residue) {
    long long k_lo = static_cast<long long>(std::floor(x.lo() / detail::kHalfPiLo)) - 2;
    long long k_hi = static_cast<long long>(std::ceil(x.hi() / detail::kHalfPiLo)) + 2;
    const Interval half_pi(detail::kHalfPiLo, detail::kHalfPiHi);
    for (long long k = k_lo; k <= k_hi; ++k) {
        if (((k % 4) + 4) % 4 != residue) continue;
        Interval ck = Interval::thin(static_cast<double>(k)) * half_pi;
        if (ck.lo() <= x.hi() && x.lo() <= ck.hi()) return true;
    }
    return false;
}

double sin_img_down(double v) { return v == 0.0 ? 0.0 : libm_down(std::sin(v)); }
double sin_img_up(double v) { return v == 0.0 ? 0.0 : libm_up(std::sin(v)); }
double cos_img_down(double v) { return v == 0.0 ? 1.0 : libm_down(std::cos(v)); }
double cos_img_up(double v) { return v == 0.0 ? 1.0 : libm_up(std::cos(v)); }

Interval sin_range(const Interval& x) {
    if (magnitude(x) > kTrigArgLimit || width(x) >= detail::kTwoPiLo)
        return Interval(-1.0, 1.0);
    double lo = std::min(sin_img_down(x.lo()), sin_img_down(x.hi()));
    double hi = std::max(sin_img_up(x.lo()), sin_img_up(x.hi()));
    if (quarter_pi_multiple_maybe_in(x, 1)) hi = 1.0;  // pi/2 + 2k*pi
    if (quarter_pi_multiple_maybe_in(x, 3)) lo = -1.0; // 3*pi/2 + 2k*pi
    return Interval(std::max(lo, -1.0), std::min(hi, 1.0));
}

Interval cos_range(const Interval& x) {
    if (magnitude(x) > kTrigArgLimit || width(x) >= detail::kTwoPiLo)
        return Interval(-1.0, 1.0);
    double lo = std::min(cos_img_down(x.lo()), cos_img_down(x.hi()));
    double hi = std::max(cos_img_up(x.lo()), cos_img_up(x.hi()));
    if (quarter_pi_multiple_maybe_in(x, 0)) hi = 1.0;  // 2k*pi
    if (quarter_pi_multiple_maybe_in(x, 2)) lo = -1.0; // pi + 2k*pi
    return Interval(std::max(lo, -1.0), std::min(hi, 1.0));
}

Interval tan_range(const Interval& x) {
    if (magnitude(x) > kTrigArgLimit || width(x) >= detail::kPiLo)
        throw DomainError("tan over an interval that may contain a pole");
    if (quarter_pi_multiple_maybe_in(x, 1) || quarter_pi_multiple_maybe_in(x, 3))
        throw DomainError("tan over an interval that may contain a pole");
    // Monotone increasing on any pole-free stretch.
    double lo = x.lo() == 0.0 ? 0.0 : libm_down(std::tan(x.lo()));
    double hi = x.hi() == 0.0 ? 0.0 : libm_up(std::tan(x.hi()));
    return finalize(lo, hi);
}

Interval exp_range(const Interval& x) {
    double lo = x.lo() == 0.0 ? 1.0 : std::max(0.0, libm_down(std::exp(x.lo())));
    double hi = x.hi() == 0.0 ? 1.0 : libm_up(std::exp(x.hi()));
    return finalize(lo, hi);
}

Interval ln_range(const Interval& x) {
    if (x.lo() <= 0.0) throw DomainError("ln over an interval touching (-inf, 0]");
    double lo = x.lo() == 1.0 ? 0.0 : libm_down(std::log(x.lo()));
    double hi = x.hi() == 1.0 ? 0.0 : libm_up(std::log(x.hi()));
    return finalize(lo, hi);
}

Interval sqrt_range(const Interval& x) {
    if (x.lo() < 0.0) throw DomainError("sqrt over an interval touching negatives");
    return Interval(detail::sqrt_down(x.lo()), detail::sqrt_up(x.hi()));
}

Interval abs_range(const Interval& x) {
    double hi = magnitude(x);
    double lo = contains(x, 0.0) ? 0.0 : std::min(std::fabs(x.lo()), std::fabs(x.hi()));
    return Interval(lo, hi);
}

// Enclosure of v^n (n >= 1) by interval binary exponentiation.
Interval pow_thin(double v, int n) {
    Interval acc(1.0, 1.0);
    Interval base = Interval::thin(v);
    unsigned e = static_cast<unsigned>(n);
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

} // namespace

Interval interval_pow(const Interval& x, int exponent) {
    if (exponent < -64 || exponent > 64)
        throw ExprError("pow exponent out of range (|n| <= 64)");
    if (exponent == 0) return Interval(1.0, 1.0);
    if (exponent < 0) {
        if (contains(x, 0.0))
            throw ZeroInDenominator("negative power of an interval containing zero");
        return Interval(1.0, 1.0) / interval_pow(x, -exponent);
    }
    if (exponent == 1) return x;
    if (exponent % 2 == 0) {
        if (contains(x, 0.0)) return Interval(0.0, pow_thin(magnitude(x), exponent).hi());
        if (x.lo() > 0.0)
            return finalize(pow_thin(x.lo(), exponent).lo(), pow_thin(x.hi(), exponent).hi());
        return finalize(pow_thin(x.hi(), exponent).lo(), pow_thin(x.lo(), exponent).hi());
    }
    return finalize(pow_thin(x.lo(), exponent).lo(), pow_thin(x.hi(), exponent).hi());
}

Interval interval_elementary(UnaryOp op, const Interval& x) {
    switch (op) {
    case UnaryOp::Neg: return -x;
    case UnaryOp::Sin: return sin_range(x);
    case UnaryOp::Cos: return cos_range(x);
    case UnaryOp::Tan: return tan_range(x);
    case UnaryOp::Exp: return exp_range(x);
    case UnaryOp::Ln: return ln_range(x);
    case UnaryOp::Sqrt: return sqrt_range(x);
    case UnaryOp::Abs: return abs_range(x);
    }
    throw ExprError("unknown unary operation");
}

// ---------------------------------------------------------------------------
// Evaluation

Interval eval_interval(const Expr& e, const Interval& x) {
    switch (e.kind()) {
    case Expr::Kind::Constant: return Interval::thin(e.value());
    case Expr::Kind::Variable: return x;
    case Expr::Kind::Unary: return interval_elementary(e.unary_op(), eval_interval(e.child(), x));
    case Expr::Kind::Pow: return interval_pow(eval_interval(e.child(), x), e.exponent());
    case Expr::Kind::Binary: {
        Interval l = eval_interval(e.lhs(), x);
        Interval r = eval_interval(e.rhs(), x);
        switch (e.binary_op()) {
        case BinaryOp::Add: return l + r;
        case BinaryOp::Sub: return l - r;
        case BinaryOp::Mul: return l * r;
        case BinaryOp::Div: return l / r;
        }
        break;
    }
    }
    throw ExprError("malformed expression node");
}

Interval eval_point(const Expr& e, double t) {
    return eval_interval(e, Interval::thin(t));
}

double eval_scalar(const Expr& e, double t) {
    switch (e.kind()) {
    case Expr::Kind::Constant: return e.value();
    case Expr::Kind::Variable: return t;
    case Expr::Kind::Unary: {
        double v = eval_scalar(e.child(), t);
        switch (e.unary_op()) {
        case UnaryOp::Neg: return -v;
        case UnaryOp::Sin: return std::sin(v);
        case UnaryOp::Cos: return std::cos(v);
        case UnaryOp::Tan: return std::tan(v);
        case UnaryOp::Exp: return std::exp(v);
        case UnaryOp::Ln: return std::log(v);
        case UnaryOp::Sqrt: return std::sqrt(v);
        case UnaryOp::Abs: return std::fabs(v);
        }
        break;
    }
    case Expr::Kind::Pow: return std::pow(eval_scalar(e.child(), t), e.exponent());
    case Expr::Kind::Binary: {
        double l = eval_scalar(e.lhs(), t);
        double r = eval_scalar(e.rhs(), t);
        switch (e.binary_op()) {
        case BinaryOp::Add: return l + r;
        case BinaryOp::Sub: return l - r;
        case BinaryOp::Mul: return l * r;
        case BinaryOp::Div: return l / r;
        }
        break;
    }
    }
    throw ExprError("malformed expression node");
}

// ---------------------------------------------------------------------------
// Symbolic differentiation

namespace {

bool is_const(const Expr& e, double v) {
    return e.kind() == Expr::Kind::Constant && e.value() == v;
}

bool both_const(const Expr& a, const Expr& b) {
    return a.kind() == Expr::Kind::Constant && b.kind() == Expr::Kind::Constant;
}

ExprPtr make_neg(ExprPtr u) {
    if (u->kind() == Expr::Kind::Constant) return Expr::constant(-u->value());
    if (u->kind() == Expr::Kind::Unary && u->unary_op() == UnaryOp::Neg) return u->child_ptr();
    return Expr::unary(UnaryOp::Neg, std::move(u));
}

ExprPtr make_add(ExprPtr a, ExprPtr b) {
    if (is_const(*a, 0.0)) return b;
    if (is_const(*b, 0.0)) return a;
    if (both_const(*a, *b)) {
        // Fold only when the binary64 sum is exact, so the natural extension
        // of the derivative keeps rigorous containment.
        double lo = detail::add_down(a->value(), b->value());
        double hi = detail::add_up(a->value(), b->value());
        if (lo == hi && std::isfinite(lo)) return Expr::constant(lo);
    }
    return Expr::binary(BinaryOp::Add, std::move(a), std::move(b));
}

ExprPtr make_sub(ExprPtr a, ExprPtr b) {
    if (is_const(*b, 0.0)) return a;
    if (is_const(*a, 0.0)) return make_neg(std::move(b));
    if (both_const(*a, *b)) {
        double lo = detail::sub_down(a->value(), b->value());
        double hi = detail::sub_up(a->value(), b->value());
        if (lo == hi && std::isfinite(lo)) return Expr::constant(lo);
    }
    return Expr::binary(BinaryOp::Sub, std::move(a), std::move(b));
}

ExprPtr make_mul(ExprPtr a, ExprPtr b) {
    if (is_const(*a, 0.0) || is_const(*b, 0.0)) return Expr::constant(0.0);
    if (is_const(*a, 1.0)) return b;
    if (is_const(*b, 1.0)) return a;
    if (both_const(*a, *b)) {
        double lo = detail::mul_down(a->value(), b->value());
        double hi = detail::mul_up(a->value(), b->value());
        if (lo == hi && std::isfinite(lo)) return Expr::constant(lo);
    }
    return Expr::binary(BinaryOp::Mul, std::move(a), std::move(b));
}

ExprPtr make_div(ExprPtr a, ExprPtr b) {
    if (is_const(*a, 0.0)) return Expr::constant(0.0);
    if (both_const(*a, *b) && b->value() != 0.0) {
        double lo = detail::div_down(a->value(), b->value());
        double hi = detail::div_up(a->value(), b->value());
        if (lo == hi && std::isfinite(lo)) return Expr::constant(lo);
    }
    return Expr::binary(BinaryOp::Div, std::move(a), std::move(b));
}

ExprPtr make_pow(ExprPtr u, int n) {
    if (n == 0) return Expr::constant(1.0);
    if (n == 1) return u;
    // Exponents pushed past the node limit by differentiation are factored.
    if (n > 64) return make_mul(Expr::pow(u, 64), make_pow(u, n - 64));
    if (n < -64) return make_div(Expr::constant(1.0), make_pow(std::move(u), -n));
    if (u->kind() == Expr::Kind::Constant) {
        try {
            Interval p = interval_pow(Interval::thin(u->value()), n);
            if (p.lo() == p.hi()) return Expr::constant(p.lo());
        } catch (const IntervalError&) {
            // fall through to an explicit node
        }
    }
    return Expr::pow(std::move(u), n);
}

} // namespace

ExprPtr derive(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::Constant: return Expr::constant(0.0);
    case Expr::Kind::Variable: return Expr::constant(1.0);
    case Expr::Kind::Unary: {
        ExprPtr u = e.child_ptr();
        ExprPtr du = derive(e.child());
        switch (e.unary_op()) {
        case UnaryOp::Neg: return make_neg(std::move(du));
        case UnaryOp::Sin: return make_mul(Expr::unary(UnaryOp::Cos, u), std::move(du));
        case UnaryOp::Cos:
            return make_neg(make_mul(Expr::unary(UnaryOp::Sin, u), std::move(du)));
        case UnaryOp::Tan: // 1 + tan(u)^2
            return make_mul(
                make_add(Expr::constant(1.0), make_pow(Expr::unary(UnaryOp::Tan, u), 2)),
                std::move(du));
        case UnaryOp::Exp: return make_mul(Expr::unary(UnaryOp::Exp, u), std::move(du));
        case UnaryOp::Ln: return make_div(std::move(du), u);
        case UnaryOp::Sqrt:
            return make_div(std::move(du),
                            make_mul(Expr::constant(2.0), Expr::unary(UnaryOp::Sqrt, u)));
        case UnaryOp::Abs: throw NonDifferentiable("abs is not differentiable");
        }
        break;
    }
    case Expr::Kind::Pow: { // d(u^n) = n * u^(n-1) * u'
        ExprPtr u = e.child_ptr();
        ExprPtr du = derive(e.child());
        ExprPtr coeff = make_mul(Expr::constant(static_cast<double>(e.exponent())),
                                 make_pow(u, e.exponent() - 1));
        return make_mul(std::move(coeff), std::move(du));
    }
    case Expr::Kind::Binary: {
        ExprPtr a = e.lhs_ptr();
        ExprPtr b = e.rhs_ptr();
        ExprPtr da = derive(e.lhs());
        ExprPtr db = derive(e.rhs());
        switch (e.binary_op()) {
        case BinaryOp::Add: return make_add(std::move(da), std::move(db));
        case BinaryOp::Sub: return make_sub(std::move(da), std::move(db));
        case BinaryOp::Mul:
            return make_add(make_mul(std::move(da), b), make_mul(a, std::move(db)));
        case BinaryOp::Div:
            return make_div(make_sub(make_mul(std::move(da), b), make_mul(a, std::move(db))),
                            make_pow(e.rhs_ptr(), 2));
        }
        break;
    }
    }
    throw ExprError("malformed expression node");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr run() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("empty expression", 0);
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            if (eat('+')) e = Expr::binary(BinaryOp::Add, e, parse_term());
            else if (eat('-')) e = Expr::binary(BinaryOp::Sub, e, parse_term());
            else return e;
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        for (;;) {
            if (eat('*')) e = Expr::binary(BinaryOp::Mul, e, parse_factor());
            else if (eat('/')) e = Expr::binary(BinaryOp::Div, e, parse_factor());
            else return e;
        }
    }

    ExprPtr parse_factor() {
        if (eat('-')) return Expr::unary(UnaryOp::Neg, parse_factor());
        ExprPtr base = parse_atom();
        if (eat('^')) return Expr::pow(std::move(base), parse_int_literal());
        return base;
    }

    int parse_int_literal() {
        skip_ws();
        std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected integer exponent", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000) throw ParseError("exponent out of range (|n| <= 64)", start);
            ++pos_;
        }
        if (pos_ < text_.size() && text_[pos_] == '.')
            throw ParseError("non-integer exponent literal", start);
        if (negative) v = -v;
        if (v < -64 || v > 64) throw ParseError("exponent out of range (|n| <= 64)", start);
        return static_cast<int>(v);
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::islower(static_cast<unsigned char>(c))) return parse_identifier();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    ExprPtr parse_number() {
        std::size_t start = pos_;
        std::size_t p = pos_;
        bool saw_digit = false;
        while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
            ++p;
            saw_digit = true;
        }
        if (p < text_.size() && text_[p] == '.') {
            ++p;
            while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                ++p;
                saw_digit = true;
            }
        }
        if (!saw_digit) throw ParseError("malformed number literal", start);
        if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
            if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
                p = q;
                while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
            }
        }
        std::string token(text_.substr(start, p - start));
        char* end = nullptr;
        double v = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size())
            throw ParseError("malformed number literal", start);
        if (!std::isfinite(v)) throw ParseError("number literal out of range", start);
        pos_ = p;
        return Expr::constant(v);
    }

    ExprPtr parse_identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string_view word = text_.substr(start, pos_ - start);
        if (word == "x") return Expr::variable();
        if (word == "pi") return Expr::constant(std::numbers::pi);
        if (word == "e") return Expr::constant(std::numbers::e);

        static constexpr std::array<std::pair<std::string_view, UnaryOp>, 7> kFuncs{{
            {"sin", UnaryOp::Sin}, {"cos", UnaryOp::Cos}, {"tan", UnaryOp::Tan},
            {"exp", UnaryOp::Exp}, {"ln", UnaryOp::Ln}, {"sqrt", UnaryOp::Sqrt},
            {"abs", UnaryOp::Abs},
        }};
        for (const auto& [name, op] : kFuncs) {
            if (word == name) {
                if (!eat('(')) throw ParseError("expected '(' after function name", pos_);
                ExprPtr arg = parse_expr();
                if (!eat(')')) throw ParseError("expected ')'", pos_);
                return Expr::unary(op, std::move(arg));
            }
        }
        throw ParseError("unknown identifier '" + std::string(word) + "'", start);
    }
};

} // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Rendering

namespace {

// 1: + -   2: * /   3: unary minus (and negative literals)   4: ^   6: atoms
int precedence(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::Constant: return e.value() < 0.0 ? 3 : 6;
    case Expr::Kind::Variable: return 6;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Unary: return e.unary_op() == UnaryOp::Neg ? 3 : 6;
    case Expr::Kind::Binary:
        return (e.binary_op() == BinaryOp::Add || e.binary_op() == BinaryOp::Sub) ? 1 : 2;
    }
    return 6;
}

std::string number_text(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

std::string render_node(const Expr& e);

std::string wrap(const Expr& e, bool parens) {
    std::string s = render_node(e);
    return parens ? "(" + s + ")" : s;
}

std::string render_node(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::Constant: return number_text(e.value());
    case Expr::Kind::Variable: return "x";
    case Expr::Kind::Unary: {
        if (e.unary_op() == UnaryOp::Neg) return "-" + wrap(e.child(), precedence(e.child()) < 3);
        const char* name = "";
        switch (e.unary_op()) {
        case UnaryOp::Sin: name = "sin"; break;
        case UnaryOp::Cos: name = "cos"; break;
        case UnaryOp::Tan: name = "tan"; break;
        case UnaryOp::Exp: name = "exp"; break;
        case UnaryOp::Ln: name = "ln"; break;
        case UnaryOp::Sqrt: name = "sqrt"; break;
        case UnaryOp::Abs: name = "abs"; break;
        case UnaryOp::Neg: break;
        }
        return std::string(name) + "(" + render_node(e.child()) + ")";
    }
    case Expr::Kind::Pow:
        return wrap(e.child(), precedence(e.child()) < 6) + "^" + std::to_string(e.exponent());
    case Expr::Kind::Binary: {
        int prec = precedence(e);
        // Right operands at equal precedence keep their parentheses so the
        // printed form re-parses to the identical tree.
        std::string lhs = wrap(e.lhs(), precedence(e.lhs()) < prec);
        std::string rhs = wrap(e.rhs(), precedence(e.rhs()) <= prec);
        switch (e.binary_op()) {
        case BinaryOp::Add: return lhs + " + " + rhs;
        case BinaryOp::Sub: return lhs + " - " + rhs;
        case BinaryOp::Mul: return lhs + "*" + rhs;
        case BinaryOp::Div: return lhs + "/" + rhs;
        }
        break;
    }
    }
    throw ExprError("malformed expression node");
}

} // namespace

std::string render(const Expr& e) { return render_node(e); }

} // namespace ivroot
