#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "mero/exact/rational.hpp"

namespace mero::exact {

/// Dense univariate polynomial over Q(i), coefficients ascending.
/// The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(GaussianRational c) { return UniPoly({std::move(c)}); }
    static UniPoly x() { return UniPoly({GaussianRational(0), GaussianRational(1)}); }
    /// (z - a)
    static UniPoly linear_root(const GaussianRational& a) {
        return UniPoly({-a, GaussianRational(1)});
    }

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    const GaussianRational& operator[](std::size_t k) const { return c_[k]; }
    const GaussianRational& leading() const { return c_.back(); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    UniPoly scaled(const GaussianRational& s) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; the divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& num, const UniPoly& den);
    static std::optional<UniPoly> divide_exact(const UniPoly& num, const UniPoly& den);

    UniPoly derivative() const;
    UniPoly monic() const;

    GaussianRational eval(const GaussianRational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    std::vector<std::complex<double>> float_coeffs() const;

    /// First `count` Taylor coefficients of this polynomial at `a`.
    std::vector<GaussianRational> taylor_at(const GaussianRational& a, unsigned count) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GaussianRational> c_;
};

/// Monic gcd by the Euclidean algorithm (valid since Q(i) is a field).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Polynomial in y whose y^j coefficient is a polynomial in x.
using BiPoly = std::vector<UniPoly>;

int bipoly_degree(const BiPoly& p);

/// Resultant in y of two such polynomials: the Sylvester determinant,
/// evaluated exactly by fraction-free (Bareiss) elimination over Q(i)[x].
UniPoly resultant_y(const BiPoly& p, const BiPoly& q);

}  // namespace mero::exact
