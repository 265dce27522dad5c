#include "mero/maps/family.hpp"

#include <cctype>

#include "mero/errors.hpp"

namespace mero::maps {

using exact::BigInt;
using exact::BigRational;
using exact::GaussianRational;
using exact::HomoPoly;
using exact::Monomial;

// ---------------------------------------------------------------------------
// expression grammar
// ---------------------------------------------------------------------------

struct Expr::Node {
    enum class Op { Literal, N, Add, Sub, Mul, Div, Neg, Pow, PowN };
    Op op = Op::Literal;
    BigRational literal;
    long exponent = 0;  // for Pow
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error("family expression: " + msg + " at position " + std::to_string(pos_) +
                    " in \"" + s_ + "\"");
    }

    NodePtr expr() {
        NodePtr acc = term();
        while (true) {
            if (accept('+'))
                acc = make(Node::Op::Add, acc, term());
            else if (accept('-'))
                acc = make(Node::Op::Sub, acc, term());
            else
                return acc;
        }
    }

    NodePtr term() {
        NodePtr acc = factor();
        while (true) {
            if (accept('*'))
                acc = make(Node::Op::Mul, acc, factor());
            else if (accept('/'))
                acc = make(Node::Op::Div, acc, factor());
            else
                return acc;
        }
    }

    NodePtr factor() {
        if (accept('-')) return make(Node::Op::Neg, factor());
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (!accept('^')) return base;
        skip_ws();
        if (accept('n')) return make(Node::Op::PowN, base);
        bool neg = accept('-');
        long e = long(integer());
        auto n = make(Node::Op::Pow, base);
        const_cast<Node*>(n.get())->exponent = neg ? -e : e;
        return n;
    }

    NodePtr atom() {
        skip_ws();
        if (accept('(')) {
            NodePtr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (accept('n')) return make(Node::Op::N);
        auto node = std::make_shared<Node>();
        node->op = Node::Op::Literal;
        node->literal = BigRational(BigInt(integer_string()));
        return node;
    }

    std::string integer_string() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return s_.substr(start, pos_ - start);
    }
    unsigned long integer() { return std::stoul(integer_string()); }

    const std::string& s_;
    std::size_t pos_ = 0;
};

BigRational eval_node(const Node& node, long n) {
    using Op = Node::Op;
    switch (node.op) {
        case Op::Literal:
            return node.literal;
        case Op::N:
            return BigRational(n);
        case Op::Add:
            return eval_node(*node.lhs, n) + eval_node(*node.rhs, n);
        case Op::Sub:
            return eval_node(*node.lhs, n) - eval_node(*node.rhs, n);
        case Op::Mul:
            return eval_node(*node.lhs, n) * eval_node(*node.rhs, n);
        case Op::Div: {
            BigRational den = eval_node(*node.rhs, n);
            if (den.is_zero())
                throw ExpressionDomainError("division by zero at n = " + std::to_string(n));
            return eval_node(*node.lhs, n) / den;
        }
        case Op::Neg:
            return -eval_node(*node.lhs, n);
        case Op::Pow: {
            BigRational base = eval_node(*node.lhs, n);
            long e = node.exponent;
            if (e < 0) {
                if (base.is_zero())
                    throw ExpressionDomainError("0 raised to a negative power at n = " +
                                                std::to_string(n));
                base = 1 / base;
                e = -e;
            }
            BigRational acc(1);
            for (long i = 0; i < e; ++i) acc *= base;
            return acc;
        }
        case Op::PowN: {
            BigRational base = eval_node(*node.lhs, n);
            if (n < 0) throw ExpressionDomainError("b^n with negative n");
            BigRational acc(1);
            for (long i = 0; i < n; ++i) acc *= base;
            return acc;
        }
    }
    throw Error("internal: unknown expression node");
}

}  // namespace

Expr Expr::parse(const std::string& text) {
    Expr e;
    e.root_ = ExprParser(text).parse();
    e.text_ = text;
    return e;
}

BigRational Expr::eval(long n) const {
    if (!root_) throw Error("evaluating an empty expression");
    return eval_node(*root_, n);
}

// ---------------------------------------------------------------------------
// family polynomials
// ---------------------------------------------------------------------------

HomoPoly ExprPoly::instantiate(long n) const {
    HomoPoly::TermMap out;
    for (const auto& [mono, expr] : terms) {
        GaussianRational c(expr.eval(n));
        if (c.is_zero()) continue;
        auto [it, fresh] = out.emplace(mono, c);
        if (!fresh) it->second += c;
    }
    return HomoPoly(nvars, degree, std::move(out));
}

ExprPoly parse_family_poly(const std::string& text) {
    ExprPoly poly;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw Error("family polynomial: " + msg + " at position " + std::to_string(pos) + " in \"" +
                    text + "\"");
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size() || text[pos] != '(') fail("expected '(' starting a coefficient");
        // find the balanced closing paren
        int depth = 0;
        std::size_t start = pos;
        for (; pos < text.size(); ++pos) {
            if (text[pos] == '(') ++depth;
            if (text[pos] == ')' && --depth == 0) break;
        }
        if (depth != 0) fail("unbalanced parentheses");
        Expr coeff = Expr::parse(text.substr(start + 1, pos - start - 1));
        ++pos;  // past ')'

        Monomial mono;
        while (true) {
            skip_ws();
            if (pos >= text.size() || text[pos] != '*') break;
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != 'z') fail("expected a variable");
            ++pos;
            std::size_t ds = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            unsigned idx = unsigned(std::stoul(text.substr(ds, pos - ds)));
            if (idx != mono.size()) fail("variables must appear in order z0, z1, ...");
            if (pos >= text.size() || text[pos] != '^') fail("expected '^'");
            ++pos;
            ds = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (ds == pos) fail("expected an exponent");
            mono.push_back(unsigned(std::stoul(text.substr(ds, pos - ds))));
        }
        unsigned d = 0;
        for (unsigned e : mono) d += e;
        if (first) {
            poly.nvars = unsigned(mono.size());
            poly.degree = d;
            first = false;
        } else if (mono.size() != poly.nvars) {
            fail("all terms must list the same variables");
        } else if (d != poly.degree) {
            fail("terms of different total degree");
        }
        poly.terms.emplace_back(std::move(mono), std::move(coeff));

        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '+') fail("expected '+' between terms");
        ++pos;
    }
    return poly;
}

// ---------------------------------------------------------------------------
// families
// ---------------------------------------------------------------------------

MapFamily MapFamily::coefficients(SourceKind kind, unsigned source_dim,
                                  std::vector<ExprPoly> components) {
    MapFamily fam;
    fam.kind_ = Kind::Coefficients;
    fam.source_kind_ = kind;
    fam.source_dim_ = source_dim;
    fam.components_ = std::move(components);
    for (const auto& c : fam.components_)
        if (c.nvars != source_dim + 1)
            throw VariableCountMismatch("family component in " + std::to_string(c.nvars) +
                                        " variables, source needs " +
                                        std::to_string(source_dim + 1));
    return fam;
}

MapFamily MapFamily::iterates(RationalMap base, std::size_t bit_budget) {
    if (base.source_kind() != SourceKind::Projective || base.source_dim() != base.target_dim())
        throw DimensionMismatch("an iterate family needs a projective self-map");
    MapFamily fam;
    fam.kind_ = Kind::Iterates;
    fam.source_kind_ = SourceKind::Projective;
    fam.source_dim_ = base.source_dim();
    fam.base_ = std::make_shared<RationalMap>(std::move(base));
    fam.bit_budget_ = bit_budget;
    return fam;
}

RationalMap MapFamily::instantiate(long n) const {
    if (n < 1) throw Error("families are indexed by n >= 1");
    if (kind_ == Kind::Iterates) return iterate(*base_, unsigned(n), bit_budget_).map;
    std::vector<HomoPoly> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) comps.push_back(c.instantiate(n));
    return RationalMap::normalized(source_kind_, source_dim_, std::move(comps));
}

}  // namespace mero::maps
