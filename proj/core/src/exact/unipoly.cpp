#include "mero/exact/unipoly.hpp"

#include <algorithm>

#include "mero/errors.hpp"

namespace mero::exact {

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly UniPoly::operator-() const {
    std::vector<GaussianRational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const GaussianRational& s) const {
    std::vector<GaussianRational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw Error("UniPoly division by zero");
    if (num.degree() < den.degree()) return {UniPoly(), num};
    std::vector<GaussianRational> q(num.c_.size() - den.c_.size() + 1);
    std::vector<GaussianRational> r = num.c_;
    const GaussianRational& lead = den.leading();
    for (int k = int(q.size()) - 1; k >= 0; --k) {
        GaussianRational f = r[k + den.degree()] / lead;
        q[k] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < den.c_.size(); ++j) r[k + j] -= f * den.c_[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

std::optional<UniPoly> UniPoly::divide_exact(const UniPoly& num, const UniPoly& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<GaussianRational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * GaussianRational(long(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(GaussianRational(1) / leading());
}

GaussianRational UniPoly::eval(const GaussianRational& x) const {
    GaussianRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> UniPoly::eval(const std::complex<double>& x) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

std::vector<std::complex<double>> UniPoly::float_coeffs() const {
    std::vector<std::complex<double>> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].to_complex();
    return out;
}

std::vector<GaussianRational> UniPoly::taylor_at(const GaussianRational& a, unsigned count) const {
    // repeated synthetic division by (z - a); remainders are the Taylor coeffs
    std::vector<GaussianRational> out;
    out.reserve(count);
    UniPoly cur = *this;
    UniPoly lin = UniPoly::linear_root(a);
    for (unsigned k = 0; k < count; ++k) {
        if (cur.is_zero()) {
            out.emplace_back(0);
            continue;
        }
        auto [q, r] = divrem(cur, lin);
        out.push_back(r.is_zero() ? GaussianRational(0) : r[0]);
        cur = std::move(q);
    }
    return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly u = a, v = b;
    while (!v.is_zero()) {
        auto [q, r] = UniPoly::divrem(u, v);
        u = std::move(v);
        v = r.monic();  // keeps coefficient growth flat over the field
    }
    return u.monic();
}

int bipoly_degree(const BiPoly& p) {
    for (int j = int(p.size()) - 1; j >= 0; --j)
        if (!p[std::size_t(j)].is_zero()) return j;
    return -1;
}

UniPoly resultant_y(const BiPoly& p, const BiPoly& q) {
    const int dp = bipoly_degree(p);
    const int dq = bipoly_degree(q);
    if (dp < 0 || dq < 0) return UniPoly();
    if (dp == 0 && dq == 0) return UniPoly::constant(GaussianRational(1));
    const int n = dp + dq;

    // Sylvester matrix: dq rows of p's coefficients, dp rows of q's.
    const auto dim = std::size_t(n);
    std::vector<std::vector<UniPoly>> m(dim, std::vector<UniPoly>(dim));
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) m[std::size_t(r)][std::size_t(r + k)] = p[std::size_t(dp - k)];
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k)
            m[std::size_t(dq + r)][std::size_t(r + k)] = q[std::size_t(dq - k)];

    // Bareiss fraction-free elimination; divisions are exact.
    UniPoly prev = UniPoly::constant(GaussianRational(1));
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[std::size_t(k)][std::size_t(k)].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[std::size_t(i)][std::size_t(k)].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return UniPoly();  // singular: resultant vanishes
            std::swap(m[std::size_t(k)], m[std::size_t(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                UniPoly num = m[std::size_t(i)][std::size_t(j)] * m[std::size_t(k)][std::size_t(k)] -
                              m[std::size_t(i)][std::size_t(k)] * m[std::size_t(k)][std::size_t(j)];
                auto div = UniPoly::divide_exact(num, prev);
                if (!div) throw Error("internal: inexact Bareiss division");
                m[std::size_t(i)][std::size_t(j)] = std::move(*div);
            }
            m[std::size_t(i)][std::size_t(k)] = UniPoly();
        }
        prev = m[std::size_t(k)][std::size_t(k)];
    }
    UniPoly det = m[std::size_t(n - 1)][std::size_t(n - 1)];
    return sign < 0 ? -det : det;
}

}  // namespace mero::exact
