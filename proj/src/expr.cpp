#include "cfkit/expr.hpp"

#include <cctype>
#include <vector>

namespace cfkit {

Expr make_literal(Rational value) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Literal;
    n->value = std::move(value);
    return n;
}

Expr make_var(std::string name) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Var;
    n->name = std::move(name);
    return n;
}

Expr make_binary(ExprKind kind, Expr lhs, Expr rhs) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

Expr make_neg(Expr operand) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Neg;
    n->lhs = std::move(operand);
    return n;
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    Rational value;    // Number
    std::string text;  // Ident
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

// Maximal munch: a digit run followed directly by "/digits" or ".digits"
// is a single rational literal; with intervening space it is an operator.
std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (is_digit(c)) {
            while (i < n && is_digit(text[i])) ++i;
            if (i + 1 < n && (text[i] == '/' || text[i] == '.') && is_digit(text[i + 1])) {
                ++i;
                while (i < n && is_digit(text[i])) ++i;
            }
            std::string tok = text.substr(start, i - start);
            Rational v;
            try {
                v = parse_rational(tok);
            } catch (const Error& e) {
                throw ParseError(std::string("bad numeric literal '") + tok + "': " + e.what(),
                                 start, {});
            }
            out.push_back({Tok::Number, start, v, tok});
            continue;
        }
        if (is_letter(c)) {
            while (i < n && (is_letter(text[i]) || is_digit(text[i]))) ++i;
            out.push_back({Tok::Ident, start, Rational(0), text.substr(start, i - start)});
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw ParseError(std::string("unknown character '") + c + "'", start, {});
        }
        out.push_back({k, start, Rational(0), {}});
        ++i;
    }
    out.push_back({Tok::End, n, Rational(0), {}});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Expr parse() {
        Expr e = parse_sum();
        if (peek().kind != Tok::End) {
            throw ParseError("syntax error", peek().offset, {"end of input"});
        }
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }

    Expr parse_sum() {
        Expr e = parse_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            ExprKind op = advance().kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub;
            e = make_binary(op, e, parse_term());
        }
        return e;
    }

    Expr parse_term() {
        Expr e = parse_factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            ExprKind op = advance().kind == Tok::Star ? ExprKind::Mul : ExprKind::Div;
            e = make_binary(op, e, parse_factor());
        }
        return e;
    }

    Expr parse_factor() {
        if (peek().kind == Tok::Minus) {
            advance();
            return make_neg(parse_factor());
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_atom();
        if (peek().kind == Tok::Caret) {
            advance();
            return make_binary(ExprKind::Pow, base, parse_factor());
        }
        return base;
    }

    Expr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                advance();
                return make_literal(t.value);
            }
            case Tok::Ident: {
                advance();
                return make_var(t.text);
            }
            case Tok::LParen: {
                advance();
                Expr e = parse_sum();
                if (peek().kind != Tok::RParen) {
                    throw ParseError("syntax error", peek().offset, {"')'"});
                }
                advance();
                return e;
            }
            default: throw ParseError("syntax error", t.offset, {"expression"});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

int prec_of(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul:
        case ExprKind::Div: return 2;
        case ExprKind::Neg: return 3;
        case ExprKind::Pow: return 4;
        case ExprKind::Literal:
        case ExprKind::Var: return 5;
    }
    return 5;
}

std::string render_child(const Expr& child, int min_prec) {
    std::string s = render_expr(child);
    if (prec_of(child) < min_prec) return "(" + s + ")";
    return s;
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string render_expr(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Literal: return to_string(e->value);
        case ExprKind::Var: return e->name;
        case ExprKind::Add: return render_child(e->lhs, 1) + "+" + render_child(e->rhs, 2);
        case ExprKind::Sub: return render_child(e->lhs, 1) + "-" + render_child(e->rhs, 2);
        case ExprKind::Mul: return render_child(e->lhs, 2) + "*" + render_child(e->rhs, 3);
        case ExprKind::Div: {
            std::string lhs = render_child(e->lhs, 2);
            std::string rhs = render_child(e->rhs, 3);
            // A digit meeting the '/' from the right would be munched into a
            // rational literal on re-parse; parentheses keep it a division.
            if (!lhs.empty() && is_digit(lhs.back()) && !rhs.empty() && is_digit(rhs.front())) {
                rhs = "(" + rhs + ")";
            }
            return lhs + "/" + rhs;
        }
        case ExprKind::Pow: return render_child(e->lhs, 5) + "^" + render_child(e->rhs, 3);
        case ExprKind::Neg: return "-" + render_child(e->lhs, 3);
    }
    return {};
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Literal: return a->value == b->value;
        case ExprKind::Var: return a->name == b->name;
        case ExprKind::Neg: return expr_equal(a->lhs, b->lhs);
        default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

namespace {

void collect_vars(const Expr& e, std::set<std::string>& out) {
    if (!e) return;
    if (e->kind == ExprKind::Var) {
        out.insert(e->name);
        return;
    }
    collect_vars(e->lhs, out);
    collect_vars(e->rhs, out);
}

}  // namespace

std::set<std::string> free_vars(const Expr& e) {
    std::set<std::string> out;
    collect_vars(e, out);
    return out;
}

}  // namespace cfkit
