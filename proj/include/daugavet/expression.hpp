#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>

#include "daugavet/scalar.hpp"

namespace dgv {

/// Tiny total arithmetic grammar for kernel files:
///   expr := number | s | t | pi | expr+expr | expr-expr | expr*expr
///         | (expr) | sin(expr) | cos(expr) | -expr
/// Unary minus binds tighter than *, which binds tighter than +/-.
/// No division and no exp keeps every expression defined on all of [0,1]^2.
class Expression {
public:
    enum class Op { num, var_s, var_t, pi, add, sub, mul, neg, sin, cos };

    struct Node {
        Op op;
        std::string lexeme;  // numeric literals keep their spelling for printing
        Rational value;      // exact value of a numeric literal
        std::shared_ptr<const Node> a, b;
    };

    static Expression parse(std::string_view text);

    [[nodiscard]] std::string print() const;

    /// Evaluate at (s, t). Exact mode rejects pi/sin/cos, which have no
    /// rational values; decimal literals are exact in both modes.
    template <RealScalar S>
    [[nodiscard]] S eval(const S& s, const S& t) const {
        return eval_node<S>(*root_, s, t);
    }

    template <RealScalar S>
    [[nodiscard]] S eval(const S& s) const {
        return eval(s, S{});
    }

    friend bool operator==(const Expression& x, const Expression& y) {
        return node_eq(x.root_.get(), y.root_.get());
    }

    [[nodiscard]] const std::shared_ptr<const Node>& root() const { return root_; }

    explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

private:
    template <RealScalar S>
    static S eval_node(const Node& n, const S& s, const S& t) {
        constexpr bool exact = scalar_traits<S>::is_exact;
        switch (n.op) {
            case Op::num:
                if constexpr (exact)
                    return n.value;
                else
                    return n.value.to_double();
            case Op::var_s: return s;
            case Op::var_t: return t;
            case Op::pi:
                if constexpr (exact)
                    throw InputError("pi has no exact rational value; use float mode");
                else
                    return std::numbers::pi;
            case Op::add: return eval_node<S>(*n.a, s, t) + eval_node<S>(*n.b, s, t);
            case Op::sub: return eval_node<S>(*n.a, s, t) - eval_node<S>(*n.b, s, t);
            case Op::mul: return eval_node<S>(*n.a, s, t) * eval_node<S>(*n.b, s, t);
            case Op::neg: return -eval_node<S>(*n.a, s, t);
            case Op::sin:
                if constexpr (exact)
                    throw InputError("sin has no exact rational values; use float mode");
                else
                    return std::sin(eval_node<S>(*n.a, s, t));
            case Op::cos:
                if constexpr (exact)
                    throw InputError("cos has no exact rational values; use float mode");
                else
                    return std::cos(eval_node<S>(*n.a, s, t));
        }
        throw InputError("corrupt expression node");
    }

    static bool node_eq(const Node* x, const Node* y);

    std::shared_ptr<const Node> root_;
};

}  // namespace dgv
