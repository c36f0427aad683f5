#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "cfkit/errors.hpp"
#include "cfkit/rational.hpp"
#include "cfkit/scalar.hpp"

namespace cfkit {

enum class ExprKind { Literal, Var, Add, Sub, Mul, Div, Pow, Neg };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprKind kind;
    Rational value;    // Literal
    std::string name;  // Var
    Expr lhs;          // binaries and Neg
    Expr rhs;          // binaries
};

Expr make_literal(Rational value);
Expr make_var(std::string name);
Expr make_binary(ExprKind kind, Expr lhs, Expr rhs);
Expr make_neg(Expr operand);

// Grammar (precedence low to high: + -, * /, unary -, ^ right-associative):
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := ("-" factor) | power
//   power  := atom ("^" factor)?
//   atom   := NUMBER | IDENT | "(" expr ")"
// NUMBER is lexed with maximal munch, so "1/2" is one rational literal
// while "1 / 2" and "m/2" are divisions.
Expr parse_expr(const std::string& text);

// Precedence-aware rendering; parse(render(parse(s))) equals parse(s).
std::string render_expr(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

// Identifiers appearing in e.
std::set<std::string> free_vars(const Expr& e);

template <class T>
T eval_expr(const Expr& e, const std::map<std::string, T>& bindings,
            const ScalarContext<T>& ctx) {
    switch (e->kind) {
        case ExprKind::Literal: return ctx.from_rational(e->value);
        case ExprKind::Var: {
            auto it = bindings.find(e->name);
            if (it == bindings.end()) {
                throw ConfigError("unbound identifier '" + e->name + "'");
            }
            return it->second;
        }
        case ExprKind::Add:
            return eval_expr(e->lhs, bindings, ctx) + eval_expr(e->rhs, bindings, ctx);
        case ExprKind::Sub:
            return eval_expr(e->lhs, bindings, ctx) - eval_expr(e->rhs, bindings, ctx);
        case ExprKind::Mul:
            return eval_expr(e->lhs, bindings, ctx) * eval_expr(e->rhs, bindings, ctx);
        case ExprKind::Div: {
            T denom = eval_expr(e->rhs, bindings, ctx);
            if (is_zero(denom)) throw DomainError("division by zero");
            return eval_expr(e->lhs, bindings, ctx) / denom;
        }
        case ExprKind::Pow: {
            T base = eval_expr(e->lhs, bindings, ctx);
            T expo = eval_expr(e->rhs, bindings, ctx);
            auto k = as_integer(expo);
            if (!k) throw DomainError("exponent is not an integer");
            return pow_int(base, *k);
        }
        case ExprKind::Neg: return -eval_expr(e->lhs, bindings, ctx);
    }
    throw ConfigError("corrupt expression node");
}

}  // namespace cfkit
