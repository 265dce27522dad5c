#include "mero/exact/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "mero/errors.hpp"

namespace mero::exact {

std::vector<std::complex<double>> poly_roots(const std::vector<std::complex<double>>& coeffs) {
    int d = int(coeffs.size()) - 1;
    while (d >= 0 && std::abs(coeffs[std::size_t(d)]) == 0.0) --d;
    if (d <= 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    const std::complex<double> lead = coeffs[std::size_t(d)];
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -coeffs[std::size_t(i)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    // deterministic order for reproducible reports
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

std::optional<BigRational> rationalize(double x, std::uint64_t max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    // continued-fraction convergents p/q of x
    double v = x;
    BigInt p0 = 1, q0 = 0;  // convergent at step -1
    BigInt p1, q1;          // current convergent
    {
        double a0 = std::floor(v);
        p1 = BigInt(static_cast<long long>(a0));
        q1 = 1;
        v -= a0;
    }
    for (int iter = 0; iter < 64; ++iter) {
        BigRational cand(p1, q1);
        double err = std::abs(cand.convert_to<double>() - x);
        if (err <= tol * std::max(1.0, std::abs(x))) return cand;
        if (v == 0.0) break;
        v = 1.0 / v;
        if (!std::isfinite(v) || v > 1e18) break;
        double a = std::floor(v);
        BigInt ai(static_cast<long long>(a));
        BigInt p2 = ai * p1 + p0;
        BigInt q2 = ai * q1 + q0;
        if (q2 > BigInt(max_den)) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        v -= a;
    }
    BigRational cand(p1, q1);
    if (std::abs(cand.convert_to<double>() - x) <= tol * std::max(1.0, std::abs(x))) return cand;
    return std::nullopt;
}

std::optional<GaussianRational> rationalize(std::complex<double> z, std::uint64_t max_den,
                                            double tol) {
    auto re = rationalize(z.real(), max_den, tol);
    auto im = rationalize(z.imag(), max_den, tol);
    if (!re || !im) return std::nullopt;
    return GaussianRational(*re, *im);
}

std::vector<GaussianRational> kth_roots_exact(const GaussianRational& w, unsigned k) {
    if (k == 0) throw Error("kth_roots_exact: k must be positive");
    if (k == 1) return {w};
    if (w.is_zero()) return {GaussianRational(0)};
    std::vector<GaussianRational> out;
    const std::complex<double> wf = w.to_complex();
    const double r = std::pow(std::abs(wf), 1.0 / double(k));
    const double base_arg = std::arg(wf) / double(k);
    for (unsigned j = 0; j < k; ++j) {
        const double arg = base_arg + 2.0 * M_PI * double(j) / double(k);
        auto cand = rationalize(std::polar(r, arg));
        if (!cand) continue;
        if (cand->pow(k) == w &&
            std::find(out.begin(), out.end(), *cand) == out.end())
            out.push_back(*cand);
    }
    return out;
}

namespace {
void add_or_bump(ExactRoots& r, const GaussianRational& root) {
    for (auto& [z, m] : r.roots)
        if (z == root) {
            ++m;
            return;
        }
    r.roots.emplace_back(root, 1);
}
}  // namespace

ExactRoots exact_rational_roots(const UniPoly& p) {
    ExactRoots result;
    if (p.is_zero()) {
        result.remainder = p;
        return result;
    }
    UniPoly cur = p.monic();
    // exact roots at zero first
    unsigned zero_mult = 0;
    while (!cur.is_zero() && cur.degree() >= 1 && cur[0].is_zero()) {
        std::vector<GaussianRational> shifted(cur.coeffs().begin() + 1, cur.coeffs().end());
        cur = UniPoly(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult) result.roots.emplace_back(GaussianRational(0), zero_mult);

    while (cur.degree() >= 1) {
        bool found = false;
        if (cur.degree() == 1) {
            // monic z + c: root is -c exactly
            GaussianRational root = -(cur[0] / cur[1]);
            add_or_bump(result, root);
            cur = UniPoly::constant(GaussianRational(1));
            found = true;
        } else {
            for (const auto& z : poly_roots(cur.float_coeffs())) {
                auto cand = rationalize(z);
                if (!cand) continue;
                if (!cur.eval(*cand).is_zero()) continue;
                auto quot = UniPoly::divide_exact(cur, UniPoly::linear_root(*cand));
                if (!quot) continue;
                add_or_bump(result, *cand);
                cur = std::move(*quot);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    result.remainder = cur;
    return result;
}

}  // namespace mero::exact
