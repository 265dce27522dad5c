#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mero/maps/rational_map.hpp"

namespace mero::maps {

/// Closed coefficient grammar for map families: integers, n, + - * /,
/// integer powers, and b^n.  Values are exact rationals.
class Expr {
public:
    static Expr parse(const std::string& text);
    /// Exact value at index n; throws ExpressionDomainError on division by
    /// zero at this n.
    exact::BigRational eval(long n) const;
    const std::string& text() const { return text_; }

    struct Node;  // AST node, an implementation detail

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

/// Homogeneous polynomial whose coefficients are expressions in n.
struct ExprPoly {
    unsigned nvars = 0;
    unsigned degree = 0;
    std::vector<std::pair<exact::Monomial, Expr>> terms;

    exact::HomoPoly instantiate(long n) const;
};

/// Text form `(expr)*z0^e0*z1^e1*... + ...`, all variables listed per term.
ExprPoly parse_family_poly(const std::string& text);

/// One-parameter family {f_n}; instantiation at any integer n >= 1 yields a
/// valid RationalMap in normal form.
class MapFamily {
public:
    enum class Kind { Coefficients, Iterates };

    static MapFamily coefficients(SourceKind kind, unsigned source_dim,
                                  std::vector<ExprPoly> components);
    /// The family {base^n} of iterates of a projective self-map.
    static MapFamily iterates(RationalMap base, std::size_t bit_budget = 1'000'000);

    Kind kind() const { return kind_; }
    RationalMap instantiate(long n) const;

private:
    Kind kind_ = Kind::Coefficients;
    SourceKind source_kind_ = SourceKind::Affine;
    unsigned source_dim_ = 0;
    std::vector<ExprPoly> components_;
    std::shared_ptr<const RationalMap> base_;
    std::size_t bit_budget_ = 1'000'000;
};

}  // namespace mero::maps
