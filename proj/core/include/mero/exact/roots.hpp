#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "mero/exact/rational.hpp"
#include "mero/exact/unipoly.hpp"

namespace mero::exact {

/// All complex roots of a polynomial with float coefficients (ascending,
/// leading coefficient nonzero), computed as companion-matrix eigenvalues.
std::vector<std::complex<double>> poly_roots(const std::vector<std::complex<double>>& coeffs);

/// Nearest rational with denominator at most max_den, accepted only when it
/// reproduces x to within tol; continued-fraction convergents.
std::optional<BigRational> rationalize(double x, std::uint64_t max_den = 1'000'000,
                                       double tol = 1e-9);

std::optional<GaussianRational> rationalize(std::complex<double> z,
                                            std::uint64_t max_den = 1'000'000,
                                            double tol = 1e-9);

/// Exactly verified Gaussian-rational roots of z^k = w.  Candidates come
/// from the numeric k-th roots and survive only if candidate^k == w holds
/// exactly, so the result is complete up to the rationalization bound.
std::vector<GaussianRational> kth_roots_exact(const GaussianRational& w, unsigned k);

/// Gaussian-rational roots of an exact univariate polynomial, each verified
/// by exact evaluation; multiplicities are counted via exact deflation.
/// Returns (root, multiplicity) pairs plus the undeflated remainder factor.
struct ExactRoots {
    std::vector<std::pair<GaussianRational, unsigned>> roots;
    UniPoly remainder;  // factor whose roots resisted exact rationalization
};
ExactRoots exact_rational_roots(const UniPoly& p);

}  // namespace mero::exact
