#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "mero/exact/rational.hpp"

namespace mero::exact {

/// Exponent vector of a power product; length always equals the ambient
/// variable count of the polynomial that owns it.
using Monomial = std::vector<unsigned>;

/// Lexicographic order with z0 > z1 > ...; higher exponent on an earlier
/// variable wins.  Used so that map iteration starts at the leading term.
struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a > b;  // vector's lexicographic compare does the right thing
    }
};

/// Multivariate homogeneous polynomial over Q(i).
///
/// Invariants: every stored monomial has exponent-sum exactly degree(),
/// no stored coefficient is zero, and all monomials have nvars() entries.
/// The zero polynomial is an empty term map with a declared degree.
class HomoPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational, LexGreater>;

    HomoPoly() = default;
    /// Zero polynomial of the given shape.
    HomoPoly(unsigned nvars, unsigned degree) : nvars_(nvars), degree_(degree) {}
    /// Validates homogeneity and drops zero coefficients.
    HomoPoly(unsigned nvars, unsigned degree, TermMap terms);

    /// The power product z0^e0 * z1^e1 * ... with a coefficient.
    static HomoPoly monomial(unsigned nvars, Monomial exps, GaussianRational coeff);
    /// Degree-0 unit in `nvars` variables.
    static HomoPoly one(unsigned nvars) { return constant(nvars, GaussianRational(1)); }
    static HomoPoly constant(unsigned nvars, GaussianRational c);
    /// The variable z_i as a degree-1 polynomial.
    static HomoPoly variable(unsigned nvars, unsigned i);

    unsigned nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_binomial() const { return terms_.size() == 2; }

    /// Leading term in lex order; polynomial must be nonzero.
    const std::pair<const Monomial, GaussianRational>& leading() const;

    /// Highest power of variable `var` present (0 for constants and zero).
    unsigned degree_in(unsigned var) const;
    /// Coefficient of var^k as a polynomial with var's exponent zeroed out.
    HomoPoly coeff_of(unsigned var, unsigned k) const;

    friend HomoPoly operator+(const HomoPoly& p, const HomoPoly& q);
    friend HomoPoly operator-(const HomoPoly& p, const HomoPoly& q);
    friend HomoPoly operator*(const HomoPoly& p, const HomoPoly& q);
    HomoPoly operator-() const;
    HomoPoly scaled(const GaussianRational& c) const;
    /// Multiply by the power product `exps`.
    HomoPoly shifted(const Monomial& exps) const;

    friend bool operator==(const HomoPoly& p, const HomoPoly& q) {
        return p.nvars_ == q.nvars_ && p.degree_ == q.degree_ && p.terms_ == q.terms_;
    }

    GaussianRational eval_exact(const std::vector<GaussianRational>& x) const;
    std::complex<double> eval_float(const std::vector<std::complex<double>>& x) const;

    /// d/d(z_var), exact; the result is homogeneous of degree-1 lower.
    HomoPoly partial(unsigned var) const;

    /// Substitute z_i -> images[i]; all images must share one degree.
    HomoPoly substitute(const std::vector<HomoPoly>& images) const;

    /// Exact quotient p/d, or nullopt when d does not divide p.
    static std::optional<HomoPoly> divide_exact(const HomoPoly& p, const HomoPoly& d);

    /// Normalized so the lex-leading coefficient is 1.
    HomoPoly monic() const;

    /// Total coefficient bit size, the unit of the iteration bit budget.
    std::size_t bit_size() const;

private:
    unsigned nvars_ = 0;
    unsigned degree_ = 0;
    TermMap terms_;
};

/// Greatest common divisor, normalized so the lex-leading coefficient is 1.
/// Recursive content/primitive-part reduction to a subresultant PRS in the
/// first effective variable.  Throws BothZero when both inputs vanish.
HomoPoly gcd(const HomoPoly& p, const HomoPoly& q);

/// gcd of a whole tuple (ignores zero entries; throws BothZero if all zero).
HomoPoly gcd(const std::vector<HomoPoly>& polys);

}  // namespace mero::exact
