#pragma once

#include "skewsym/skew_product.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace skewsym {

struct ParseError : error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Expression AST over {z, w, +, -, *, ^, rational literals, i}. The
/// parser produces a flattened normal form whose printed text re-parses
/// to the identical tree.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    struct Lit {
        ComplexRational value; // pure real or pure imaginary atom
    };
    struct Var {
        char name; // 'z' or 'w'
    };
    struct Pow {
        ExprPtr base;
        int exponent;
    };
    struct Mul {
        std::vector<ExprPtr> factors;
    };
    struct Add {
        std::vector<std::pair<int, ExprPtr>> terms; // sign in {+1,-1}
    };
    std::variant<Lit, Var, Pow, Mul, Add> node;
};

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->node.index() != b->node.index()) return false;
    if (auto* la = std::get_if<Expr::Lit>(&a->node))
        return la->value == std::get<Expr::Lit>(b->node).value;
    if (auto* va = std::get_if<Expr::Var>(&a->node))
        return va->name == std::get<Expr::Var>(b->node).name;
    if (auto* pa = std::get_if<Expr::Pow>(&a->node)) {
        auto& pb = std::get<Expr::Pow>(b->node);
        return pa->exponent == pb.exponent && expr_equal(pa->base, pb.base);
    }
    if (auto* ma = std::get_if<Expr::Mul>(&a->node)) {
        auto& mb = std::get<Expr::Mul>(b->node);
        if (ma->factors.size() != mb.factors.size()) return false;
        for (std::size_t i = 0; i < ma->factors.size(); ++i)
            if (!expr_equal(ma->factors[i], mb.factors[i])) return false;
        return true;
    }
    auto& aa = std::get<Expr::Add>(a->node);
    auto& ab = std::get<Expr::Add>(b->node);
    if (aa.terms.size() != ab.terms.size()) return false;
    for (std::size_t i = 0; i < aa.terms.size(); ++i)
        if (aa.terms[i].first != ab.terms[i].first ||
            !expr_equal(aa.terms[i].second, ab.terms[i].second))
            return false;
    return true;
}

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string text) : s_(std::move(text)) {}

    ExprPtr parse_expression() {
        auto e = parse_add();
        return e;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    std::size_t pos() const { return pos_; }
    void expect(char c, const char* what) {
        if (peek() != c) throw ParseError(std::string("expected ") + what, pos_);
        ++pos_;
    }

private:
    static ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    ExprPtr parse_add() {
        std::vector<std::pair<int, ExprPtr>> terms;
        int sign = 1;
        if (peek() == '-') { sign = -1; ++pos_; }
        else if (peek() == '+') ++pos_;
        terms.push_back({sign, parse_mul()});
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                terms.push_back({c == '+' ? 1 : -1, parse_mul()});
            } else break;
        }
        if (terms.size() == 1 && terms[0].first == 1) return terms[0].second;
        return make(Expr{Expr::Add{std::move(terms)}});
    }

    bool starts_factor(char c) const {
        return c == '(' || c == 'z' || c == 'w' || c == 'i' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    ExprPtr parse_mul() {
        std::vector<ExprPtr> factors{parse_pow()};
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                factors.push_back(parse_pow());
            } else if (starts_factor(c)) {
                factors.push_back(parse_pow()); // implicit multiplication
            } else break;
        }
        if (factors.size() == 1) return factors[0];
        return make(Expr{Expr::Mul{std::move(factors)}});
    }

    ExprPtr parse_pow() {
        ExprPtr base = parse_atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '(') )
                throw ParseError("non-integer exponent", at);
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected integer exponent", at);
            long long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > 4096) throw ParseError("exponent too large", at);
                ++pos_;
            }
            if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/'))
                throw ParseError("non-integer exponent", at);
            return make(Expr{Expr::Pow{base, int(e)}});
        }
        return base;
    }

    ExprPtr parse_atom() {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            ExprPtr inner = parse_add();
            expect(')', "')'");
            return inner;
        }
        if (c == 'z' || c == 'w') {
            ++pos_;
            return make(Expr{Expr::Var{c}});
        }
        if (c == 'i') {
            ++pos_;
            return make(Expr{Expr::Lit{ComplexRational::i()}});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational num = read_integer();
            Rational den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError("expected denominator", pos_);
                den = read_integer();
                if (den == 0) throw ParseError("zero denominator", at);
            }
            Rational v = num / den;
            if (pos_ < s_.size() && s_[pos_] == 'i') {
                ++pos_;
                return make(Expr{Expr::Lit{ComplexRational(Rational(0), v)}});
            }
            return make(Expr{Expr::Lit{ComplexRational(v)}});
        }
        throw ParseError("unexpected character", at);
    }

    Rational read_integer() {
        Rational v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline std::string print_expr(const ExprPtr& e) {
    if (auto* l = std::get_if<Expr::Lit>(&e->node)) {
        if (l->value.im == 0) {
            std::ostringstream o;
            o << l->value.re;
            return o.str();
        }
        if (l->value.im == 1) return "i";
        std::ostringstream o;
        o << l->value.im;
        return o.str() + "i";
    }
    if (auto* v = std::get_if<Expr::Var>(&e->node)) return std::string(1, v->name);
    if (auto* p = std::get_if<Expr::Pow>(&e->node)) {
        bool atom = std::holds_alternative<Expr::Var>(p->base->node) ||
                    std::holds_alternative<Expr::Lit>(p->base->node);
        std::string b = print_expr(p->base);
        if (!atom) b = "(" + b + ")";
        return b + "^" + std::to_string(p->exponent);
    }
    if (auto* m = std::get_if<Expr::Mul>(&e->node)) {
        std::string out;
        for (std::size_t i = 0; i < m->factors.size(); ++i) {
            const ExprPtr& f = m->factors[i];
            bool needs = std::holds_alternative<Expr::Add>(f->node);
            std::string fs = print_expr(f);
            if (needs) fs = "(" + fs + ")";
            if (i) out += "*";
            out += fs;
        }
        return out;
    }
    auto& a = std::get<Expr::Add>(e->node);
    std::string out;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        auto& [sign, t] = a.terms[i];
        if (i == 0) out += (sign < 0) ? "-" : "";
        else out += (sign < 0) ? " - " : " + ";
        out += print_expr(t);
    }
    return out;
}

/// Lowers an AST to the exact sparse-polynomial algebra.
inline SkewPoly lower_expr(const ExprPtr& e) {
    if (auto* l = std::get_if<Expr::Lit>(&e->node)) return SkewPoly(l->value);
    if (auto* v = std::get_if<Expr::Var>(&e->node))
        return SkewPoly::monomial(v->name == 'z' ? 1 : 0, v->name == 'w' ? 1 : 0,
                                  ComplexRational(1));
    if (auto* p = std::get_if<Expr::Pow>(&e->node)) return lower_expr(p->base).pow(p->exponent);
    if (auto* m = std::get_if<Expr::Mul>(&e->node)) {
        SkewPoly acc(ComplexRational(1));
        for (const ExprPtr& f : m->factors) acc = acc * lower_expr(f);
        return acc;
    }
    auto& a = std::get<Expr::Add>(e->node);
    SkewPoly acc;
    for (auto& [sign, t] : a.terms) {
        SkewPoly s = lower_expr(t);
        acc = (sign > 0) ? acc + s : acc - s;
    }
    return acc;
}

/// Parsed map "(P, Q)", with the AST retained for faithful echoing.
struct MapExpression {
    std::string source;
    ExprPtr first;
    ExprPtr second;

    std::string str() const { return "(" + print_expr(first) + ", " + print_expr(second) + ")"; }
};

inline MapExpression parse_map_expression(const std::string& text) {
    detail::ExprParser p(text);
    MapExpression m;
    m.source = text;
    p.expect('(', "'('");
    m.first = p.parse_expression();
    p.expect(',', "','");
    m.second = p.parse_expression();
    p.expect(')', "')'");
    if (!p.at_end()) throw ParseError("trailing input", p.pos());
    return m;
}

inline SkewProduct to_skew_product(const MapExpression& m) {
    SkewPoly first = lower_expr(m.first);
    if (first.w_degree() > 0) throw error("first component must depend only on z");
    Poly1 p;
    for (auto& [k, c] : first.terms()) p.set(k.first, c);
    SkewPoly q = lower_expr(m.second);
    return validate(p, q);
}

inline SkewProduct parse_map(const std::string& text) {
    return to_skew_product(parse_map_expression(text));
}

} // namespace skewsym
