#include "mero/exact/homopoly.hpp"

#include <algorithm>
#include <numeric>

#include "mero/errors.hpp"

namespace mero::exact {

namespace {

unsigned exponent_sum(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

}  // namespace

HomoPoly::HomoPoly(unsigned nvars, unsigned degree, TermMap terms)
    : nvars_(nvars), degree_(degree) {
    for (auto& [mono, coeff] : terms) {
        if (mono.size() != nvars_)
            throw VariableCountMismatch("monomial arity " + std::to_string(mono.size()) +
                                        " in a polynomial with " + std::to_string(nvars_) +
                                        " variables");
        if (exponent_sum(mono) != degree_)
            throw DegreeMismatch("monomial of degree " + std::to_string(exponent_sum(mono)) +
                                 " in a homogeneous polynomial of degree " +
                                 std::to_string(degree_));
        if (!coeff.is_zero()) terms_.emplace(mono, std::move(coeff));
    }
}

HomoPoly HomoPoly::monomial(unsigned nvars, Monomial exps, GaussianRational coeff) {
    TermMap t;
    unsigned deg = exponent_sum(exps);
    t.emplace(std::move(exps), std::move(coeff));
    return HomoPoly(nvars, deg, std::move(t));
}

HomoPoly HomoPoly::constant(unsigned nvars, GaussianRational c) {
    return monomial(nvars, Monomial(nvars, 0), std::move(c));
}

HomoPoly HomoPoly::variable(unsigned nvars, unsigned i) {
    Monomial m(nvars, 0);
    m.at(i) = 1;
    return monomial(nvars, std::move(m), GaussianRational(1));
}

const std::pair<const Monomial, GaussianRational>& HomoPoly::leading() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return *terms_.begin();
}

unsigned HomoPoly::degree_in(unsigned var) const {
    unsigned d = 0;
    for (const auto& [mono, coeff] : terms_) d = std::max(d, mono[var]);
    return d;
}

HomoPoly HomoPoly::coeff_of(unsigned var, unsigned k) const {
    if (degree_ + 0u < k) return HomoPoly(nvars_, 0);
    HomoPoly out(nvars_, degree_ - k);
    for (const auto& [mono, coeff] : terms_) {
        if (mono[var] != k) continue;
        Monomial m = mono;
        m[var] = 0;
        out.terms_.emplace(std::move(m), coeff);
    }
    return out;
}

HomoPoly operator+(const HomoPoly& p, const HomoPoly& q) {
    if (p.nvars_ != q.nvars_)
        throw VariableCountMismatch(std::to_string(p.nvars_) + " vs " + std::to_string(q.nvars_));
    if (p.degree_ != q.degree_)
        throw DegreeMismatch("adding degree " + std::to_string(p.degree_) + " to degree " +
                             std::to_string(q.degree_));
    HomoPoly out = p;
    for (const auto& [mono, coeff] : q.terms_) {
        auto [it, fresh] = out.terms_.emplace(mono, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

HomoPoly operator-(const HomoPoly& p, const HomoPoly& q) { return p + (-q); }

HomoPoly HomoPoly::operator-() const {
    HomoPoly out(nvars_, degree_);
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
}

HomoPoly operator*(const HomoPoly& p, const HomoPoly& q) {
    if (p.nvars_ != q.nvars_)
        throw VariableCountMismatch(std::to_string(p.nvars_) + " vs " + std::to_string(q.nvars_));
    HomoPoly out(p.nvars_, p.degree_ + q.degree_);
    for (const auto& [ma, ca] : p.terms_) {
        for (const auto& [mb, cb] : q.terms_) {
            Monomial m(p.nvars_);
            for (unsigned i = 0; i < p.nvars_; ++i) m[i] = ma[i] + mb[i];
            GaussianRational c = ca * cb;
            auto [it, fresh] = out.terms_.emplace(std::move(m), std::move(c));
            if (!fresh) {
                it->second += ca * cb;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

HomoPoly HomoPoly::scaled(const GaussianRational& c) const {
    HomoPoly out(nvars_, degree_);
    if (c.is_zero()) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
    return out;
}

HomoPoly HomoPoly::shifted(const Monomial& exps) const {
    HomoPoly out(nvars_, degree_ + exponent_sum(exps));
    for (const auto& [mono, coeff] : terms_) {
        Monomial m = mono;
        for (unsigned i = 0; i < nvars_; ++i) m[i] += exps[i];
        out.terms_.emplace(std::move(m), coeff);
    }
    return out;
}

GaussianRational HomoPoly::eval_exact(const std::vector<GaussianRational>& x) const {
    if (x.size() != nvars_)
        throw VariableCountMismatch("evaluating " + std::to_string(nvars_) + "-variable polynomial at " +
                                    std::to_string(x.size()) + " coordinates");
    // cache powers per variable up to the degree actually used
    std::vector<std::vector<GaussianRational>> powers(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
        unsigned d = degree_in(i);
        powers[i].reserve(d + 1);
        powers[i].push_back(GaussianRational(1));
        for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * x[i]);
    }
    GaussianRational acc(0);
    for (const auto& [mono, coeff] : terms_) {
        GaussianRational t = coeff;
        for (unsigned i = 0; i < nvars_; ++i)
            if (mono[i]) t *= powers[i][mono[i]];
        acc += t;
    }
    return acc;
}

std::complex<double> HomoPoly::eval_float(const std::vector<std::complex<double>>& x) const {
    if (x.size() != nvars_)
        throw VariableCountMismatch("evaluating " + std::to_string(nvars_) + "-variable polynomial at " +
                                    std::to_string(x.size()) + " coordinates");
    std::vector<std::vector<std::complex<double>>> powers(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
        unsigned d = degree_in(i);
        powers[i].reserve(d + 1);
        powers[i].push_back({1.0, 0.0});
        for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * x[i]);
    }
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [mono, coeff] : terms_) {
        std::complex<double> t = coeff.to_complex();
        for (unsigned i = 0; i < nvars_; ++i)
            if (mono[i]) t *= powers[i][mono[i]];
        acc += t;
    }
    return acc;
}

HomoPoly HomoPoly::partial(unsigned var) const {
    HomoPoly out(nvars_, degree_ ? degree_ - 1 : 0);
    for (const auto& [mono, coeff] : terms_) {
        if (mono[var] == 0) continue;
        Monomial m = mono;
        m[var] -= 1;
        out.terms_.emplace(std::move(m), coeff * GaussianRational(long(mono[var])));
    }
    return out;
}

HomoPoly HomoPoly::substitute(const std::vector<HomoPoly>& images) const {
    if (images.size() != nvars_)
        throw VariableCountMismatch("substituting " + std::to_string(images.size()) +
                                    " images into " + std::to_string(nvars_) + " variables");
    const unsigned out_vars = images.empty() ? 0 : images.front().nvars();
    const unsigned image_deg = images.empty() ? 0 : images.front().degree();
    for (const auto& g : images)
        if (g.nvars() != out_vars || g.degree() != image_deg)
            throw DegreeMismatch("substitution images must share variables and degree");

    std::vector<std::vector<HomoPoly>> powers(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
        unsigned d = degree_in(i);
        powers[i].reserve(d + 1);
        powers[i].push_back(HomoPoly::one(out_vars));
        for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
    }
    HomoPoly acc(out_vars, degree_ * image_deg);
    for (const auto& [mono, coeff] : terms_) {
        HomoPoly t = HomoPoly::constant(out_vars, coeff);
        for (unsigned i = 0; i < nvars_; ++i)
            if (mono[i]) t = t * powers[i][mono[i]];
        acc = acc + t;  // exponent sums all equal degree_, so degrees agree
    }
    return acc;
}

std::optional<HomoPoly> HomoPoly::divide_exact(const HomoPoly& p, const HomoPoly& d) {
    if (d.is_zero()) return std::nullopt;
    if (p.is_zero())
        return HomoPoly(p.nvars_, p.degree_ >= d.degree_ ? p.degree_ - d.degree_ : 0);
    if (p.degree_ < d.degree_) return std::nullopt;
    HomoPoly q(p.nvars_, p.degree_ - d.degree_);
    HomoPoly r = p;
    const auto& [dm, dc] = d.leading();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        Monomial m(p.nvars_);
        for (unsigned i = 0; i < p.nvars_; ++i) {
            if (rm[i] < dm[i]) return std::nullopt;
            m[i] = rm[i] - dm[i];
        }
        HomoPoly t = HomoPoly::monomial(p.nvars_, std::move(m), rc / dc);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

HomoPoly HomoPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(GaussianRational(1) / leading().second);
}

std::size_t HomoPoly::bit_size() const {
    std::size_t total = 0;
    for (const auto& [mono, coeff] : terms_) total += coeff.bit_size();
    return total;
}

// --------------------------------------------------------------------------
// gcd: content/primitive-part recursion + subresultant PRS in the first
// effective variable.  Coefficient arithmetic stays in the polynomial ring;
// the PRS divisions are exact by the subresultant theory.
// --------------------------------------------------------------------------

namespace {

int first_effective_var(const HomoPoly& p, const HomoPoly& q) {
    unsigned n = p.nvars();
    for (unsigned v = 0; v < n; ++v)
        if (p.degree_in(v) > 0 || q.degree_in(v) > 0) return int(v);
    return -1;
}

HomoPoly must_divide(const HomoPoly& num, const HomoPoly& den, const char* where) {
    auto q = HomoPoly::divide_exact(num, den);
    if (!q) throw Error(std::string("internal: inexact division in ") + where);
    return *q;
}

HomoPoly gcd_impl(const HomoPoly& p, const HomoPoly& q);

/// gcd of the var-coefficients of p (zero entries skipped).
HomoPoly content_in(const HomoPoly& p, unsigned var) {
    std::optional<HomoPoly> acc;
    for (unsigned k = 0; k <= p.degree_in(var); ++k) {
        HomoPoly c = p.coeff_of(var, k);
        if (c.is_zero()) continue;
        acc = acc ? gcd_impl(*acc, c) : c.monic();
        if (!acc->is_zero() && acc->degree() == 0) break;  // unit content
    }
    return acc ? *acc : HomoPoly::one(p.nvars());
}

HomoPoly pow_poly(const HomoPoly& p, unsigned k);

/// Pseudo-remainder of a by b in variable var: lc(b)^(delta+1) * a mod b,
/// with delta = deg_in(a) - deg_in(b) >= 0.  Cancellation may skip degrees,
/// so the missing lc(b) factors are restored at the end to keep the exact
/// subresultant normalization.
HomoPoly pseudo_rem(HomoPoly a, const HomoPoly& b, unsigned var) {
    const unsigned db = b.degree_in(var);
    const unsigned delta = a.degree_in(var) - db;
    const HomoPoly lcb = b.coeff_of(var, db);
    unsigned steps = 0;
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const unsigned da = a.degree_in(var);
        const HomoPoly lca = a.coeff_of(var, da);
        Monomial shift(a.nvars(), 0);
        shift[var] = da - db;
        a = a * lcb - (lca * b).shifted(shift);
        ++steps;
    }
    if (steps < delta + 1) a = a * pow_poly(lcb, delta + 1 - steps);
    return a;
}

HomoPoly pow_poly(const HomoPoly& p, unsigned k) {
    HomoPoly acc = HomoPoly::one(p.nvars());
    for (unsigned i = 0; i < k; ++i) acc = acc * p;
    return acc;
}

HomoPoly gcd_impl(const HomoPoly& p, const HomoPoly& q) {
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();

    int var_or_none = first_effective_var(p, q);
    if (var_or_none < 0) return HomoPoly::one(p.nvars());  // both constants
    const unsigned var = unsigned(var_or_none);

    // Polynomials not involving the main variable divide only the content.
    if (p.degree_in(var) == 0) return gcd_impl(p, content_in(q, var));
    if (q.degree_in(var) == 0) return gcd_impl(content_in(p, var), q);

    HomoPoly cp = content_in(p, var);
    HomoPoly cq = content_in(q, var);
    HomoPoly a = must_divide(p, cp, "primitive part");
    HomoPoly b = must_divide(q, cq, "primitive part");
    HomoPoly cont = gcd_impl(cp, cq);

    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);

    HomoPoly g = HomoPoly::one(p.nvars());
    HomoPoly h = HomoPoly::one(p.nvars());
    HomoPoly part;  // primitive gcd part
    while (true) {
        const unsigned delta = a.degree_in(var) - b.degree_in(var);
        HomoPoly r = pseudo_rem(a, b, var);
        if (r.is_zero()) {
            part = must_divide(b, content_in(b, var), "primitive part of PRS tail");
            break;
        }
        if (r.degree_in(var) == 0) {
            part = HomoPoly::one(p.nvars());
            break;
        }
        a = b;
        b = must_divide(r, g * pow_poly(h, delta), "subresultant step");
        g = a.coeff_of(var, a.degree_in(var));
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = must_divide(pow_poly(g, delta), pow_poly(h, delta - 1), "psi update");
        }
    }
    return (cont * part).monic();
}

}  // namespace

HomoPoly gcd(const HomoPoly& p, const HomoPoly& q) {
    if (p.nvars() != q.nvars())
        throw VariableCountMismatch(std::to_string(p.nvars()) + " vs " + std::to_string(q.nvars()));
    if (p.is_zero() && q.is_zero()) throw BothZero("gcd of two zero polynomials");
    return gcd_impl(p, q);
}

HomoPoly gcd(const std::vector<HomoPoly>& polys) {
    std::optional<HomoPoly> acc;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        acc = acc ? gcd(*acc, p) : p.monic();
        if (!acc->is_zero() && acc->degree() == 0) break;
    }
    if (!acc) throw BothZero("gcd of an all-zero tuple");
    return *acc;
}

}  // namespace mero::exact
