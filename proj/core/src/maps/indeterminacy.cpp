#include "mero/maps/indeterminacy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "mero/errors.hpp"
#include "mero/exact/roots.hpp"
#include "mero/exact/unipoly.hpp"

namespace mero::maps {

using exact::BiPoly;
using exact::GaussianRational;
using exact::HomoPoly;
using exact::Monomial;
using exact::UniPoly;

namespace {

// ---------------------------------------------------------------------------
// exact path: stratum-by-stratum analysis for monomial/binomial components
// ---------------------------------------------------------------------------

struct TorusEquation {
    // t^e = w on the torus of a stratum; e has one entry per free parameter
    std::vector<long> e;
    GaussianRational w;
};

/// Restriction of a monomial/binomial component to the open stratum where
/// exactly the coordinates in `support` are nonzero.
struct StratumRestriction {
    enum class Kind { Zero, NonvanishingMonomial, Equation } kind;
    TorusEquation eq;  // for Kind::Equation
};

bool monomial_supported(const Monomial& m, const std::vector<unsigned>& support) {
    for (unsigned v = 0; v < m.size(); ++v) {
        bool in = std::find(support.begin(), support.end(), v) != support.end();
        if (m[v] > 0 && !in) return false;
    }
    return true;
}

StratumRestriction restrict_component(const HomoPoly& p, const std::vector<unsigned>& support,
                                      const std::vector<unsigned>& params) {
    std::vector<std::pair<Monomial, GaussianRational>> kept;
    for (const auto& [mono, coeff] : p.terms())
        if (monomial_supported(mono, support)) kept.emplace_back(mono, coeff);
    if (kept.empty()) return {StratumRestriction::Kind::Zero, {}};
    if (kept.size() == 1) return {StratumRestriction::Kind::NonvanishingMonomial, {}};
    // two monomials survive: c_a t^A + c_b t^B = 0  =>  t^(A-B) = -c_b/c_a
    const auto& [ma, ca] = kept[0];
    const auto& [mb, cb] = kept[1];
    TorusEquation eq;
    eq.e.reserve(params.size());
    for (unsigned v : params) eq.e.push_back(long(ma[v]) - long(mb[v]));
    eq.w = -(cb / ca);
    return {StratumRestriction::Kind::Equation, std::move(eq)};
}

/// Combine t^d1 = v1 and t^k2 = w2 into t^gcd = v via Bezout coefficients.
std::pair<long, GaussianRational> combine_1d(long d1, const GaussianRational& v1, long k2,
                                             const GaussianRational& w2) {
    long old_r = d1, r = k2;
    long old_x = 1, x = 0;
    long old_y = 0, y = 1;
    while (r != 0) {
        long q = old_r / r;
        std::tie(old_r, r) = std::pair<long, long>(r, old_r - q * r);
        std::tie(old_x, x) = std::pair<long, long>(x, old_x - q * x);
        std::tie(old_y, y) = std::pair<long, long>(y, old_y - q * y);
    }
    auto ipow = [](const GaussianRational& b, long e) {
        if (e >= 0) return b.pow(static_cast<unsigned long>(e));
        return (GaussianRational(1) / b).pow(static_cast<unsigned long>(-e));
    };
    return {old_r, ipow(v1, old_x) * ipow(w2, old_y)};
}

struct ExactUnsupported {};  // stratum needs the numeric path

/// All Gaussian-rational solutions of {t^{k_m} = w_m}; throws
/// ExactUnsupported when irrational solutions may exist.
std::vector<GaussianRational> solve_torus_1d(std::vector<std::pair<long, GaussianRational>> eqs) {
    // normalize exponents to be positive
    for (auto& [k, w] : eqs) {
        if (k == 0) throw Error("internal: torus equation with zero exponent");
        if (k < 0) {
            k = -k;
            w = GaussianRational(1) / w;
        }
    }
    long d = eqs[0].first;
    GaussianRational v = eqs[0].second;
    for (std::size_t i = 1; i < eqs.size(); ++i)
        std::tie(d, v) = combine_1d(d, v, eqs[i].first, eqs[i].second);
    auto roots = exact::kth_roots_exact(v, static_cast<unsigned>(d));
    if (long(roots.size()) < d) throw ExactUnsupported{};  // irrational roots possible
    std::vector<GaussianRational> out;
    for (const auto& t : roots) {
        bool ok = !t.is_zero();
        for (const auto& [k, w] : eqs)
            if (t.pow(static_cast<unsigned long>(k)) != w) ok = false;
        if (ok) out.push_back(t);
    }
    return out;
}

/// Solutions of {t^{e_m} = w_m} on the 2-torus, by integer row reduction of
/// the exponent lattice.  Throws RootFindingFailed when the solution set is
/// positive-dimensional and ExactUnsupported when exactness is lost.
std::vector<std::array<GaussianRational, 2>> solve_torus_2d(std::vector<TorusEquation> eqs) {
    auto ipow = [](const GaussianRational& b, long e) {
        if (e >= 0) return b.pow(static_cast<unsigned long>(e));
        return (GaussianRational(1) / b).pow(static_cast<unsigned long>(-e));
    };
    // eliminate the first column by gcd row operations
    std::vector<TorusEquation> rest;
    std::optional<TorusEquation> pivot;
    for (auto& eq : eqs) {
        if (eq.e[0] == 0) {
            rest.push_back(std::move(eq));
            continue;
        }
        if (!pivot) {
            pivot = std::move(eq);
            continue;
        }
        // reduce (pivot, eq) until the second first-column entry vanishes
        TorusEquation cur = std::move(eq);
        while (cur.e[0] != 0) {
            long q = pivot->e[0] / cur.e[0];
            TorusEquation next;
            next.e = {pivot->e[0] - q * cur.e[0], pivot->e[1] - q * cur.e[1]};
            next.w = pivot->w / ipow(cur.w, q);
            *pivot = std::move(cur);
            cur = std::move(next);
        }
        rest.push_back(std::move(cur));
    }
    // second column among the rows with zero first column
    std::vector<std::pair<long, GaussianRational>> col2;
    for (const auto& eq : rest) {
        if (eq.e[1] == 0) {
            if (!(eq.w.is_one())) return {};  // inconsistent: empty stratum
            continue;                         // trivial 1 = 1
        }
        col2.emplace_back(eq.e[1], eq.w);
    }
    if (!pivot && col2.empty())
        throw RootFindingFailed("positive-dimensional indeterminacy on a torus stratum");
    if (!pivot || col2.empty())
        throw RootFindingFailed("one-dimensional indeterminacy on a torus stratum");

    std::vector<std::array<GaussianRational, 2>> out;
    for (const auto& t2 : solve_torus_1d(col2)) {
        // t1^a = v / t2^b with pivot (a, b | v)
        GaussianRational rhs = pivot->w / ipow(t2, pivot->e[1]);
        long a = pivot->e[0];
        if (a < 0) {
            a = -a;
            rhs = GaussianRational(1) / rhs;
        }
        auto roots = exact::kth_roots_exact(rhs, static_cast<unsigned>(a));
        if (long(roots.size()) < a) throw ExactUnsupported{};
        for (const auto& t1 : roots)
            if (!t1.is_zero()) out.push_back({t1, t2});
    }
    return out;
}

std::optional<std::vector<ProjectivePoint>> exact_locus(const RationalMap& f) {
    for (const auto& c : f.components())
        if (!c.is_zero() && !c.is_monomial() && !c.is_binomial()) return std::nullopt;

    std::vector<ProjectivePoint> points;
    auto emit = [&](const std::vector<GaussianRational>& hom) {
        points.push_back(ProjectivePoint::from_exact(hom));
    };

    try {
        // single-coordinate strata: the three coordinate points
        for (unsigned i = 0; i < 3; ++i) {
            std::vector<GaussianRational> e(3, GaussianRational(0));
            e[i] = GaussianRational(1);
            bool all_zero = true;
            for (const auto& c : f.components())
                if (!c.eval_exact(e).is_zero()) all_zero = false;
            if (all_zero) emit(e);
        }
        // larger strata: restrictions are zero / monomial / torus equation
        const std::vector<std::vector<unsigned>> strata = {{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
        for (const auto& support : strata) {
            std::vector<unsigned> params(support.begin() + 1, support.end());
            bool empty = false, any_constraint = false;
            std::vector<TorusEquation> eqs;
            for (const auto& c : f.components()) {
                if (c.is_zero()) continue;
                auto res = restrict_component(c, support, params);
                if (res.kind == StratumRestriction::Kind::NonvanishingMonomial) {
                    empty = true;
                    break;
                }
                if (res.kind == StratumRestriction::Kind::Equation) {
                    any_constraint = true;
                    eqs.push_back(std::move(res.eq));
                }
            }
            if (empty) continue;
            if (!any_constraint)
                throw RootFindingFailed("every component vanishes on a whole stratum");
            if (support.size() == 2) {
                std::vector<std::pair<long, GaussianRational>> flat;
                for (const auto& eq : eqs) flat.emplace_back(eq.e[0], eq.w);
                for (const auto& t : solve_torus_1d(std::move(flat))) {
                    std::vector<GaussianRational> hom(3, GaussianRational(0));
                    hom[support[0]] = GaussianRational(1);
                    hom[support[1]] = t;
                    emit(hom);
                }
            } else {
                for (const auto& [t1, t2] : solve_torus_2d(std::move(eqs))) {
                    std::vector<GaussianRational> hom{GaussianRational(1), t1, t2};
                    emit(hom);
                }
            }
        }
    } catch (const ExactUnsupported&) {
        return std::nullopt;  // fall back to the numeric path
    }
    return points;
}

// ---------------------------------------------------------------------------
// numeric path: exact Sylvester resultants, float roots, residual filter
// ---------------------------------------------------------------------------

/// Set z_chart = 1; the result is a polynomial in y over Q(i)[x], where
/// (x, y) are the remaining two variables in index order.
BiPoly restrict_to_chart(const HomoPoly& p, unsigned chart) {
    unsigned xv = chart == 0 ? 1 : 0;
    unsigned yv = chart == 2 ? 1 : 2;
    unsigned ydeg = p.degree_in(yv);
    unsigned xdeg = p.degree_in(xv);
    std::vector<std::vector<GaussianRational>> grid(
        ydeg + 1, std::vector<GaussianRational>(xdeg + 1, GaussianRational(0)));
    for (const auto& [mono, coeff] : p.terms()) grid[mono[yv]][mono[xv]] += coeff;
    BiPoly out;
    out.reserve(ydeg + 1);
    for (auto& row : grid) out.emplace_back(std::move(row));
    return out;
}

double residual(const RationalMap& f, std::size_t j, const std::vector<Complex>& hom_canonical) {
    double coeff_max = 0.0;
    for (const auto& [mono, coeff] : f.components()[j].terms())
        coeff_max = std::max(coeff_max, std::abs(coeff.to_complex()));
    if (coeff_max == 0.0) return 0.0;  // the zero component vanishes everywhere
    return std::abs(f.components()[j].eval_float(hom_canonical)) / coeff_max;
}

/// Gauss-Newton polish of a candidate common zero in chart coordinates;
/// multiple resultant roots only come out of the eigensolver with ~1e-8
/// accuracy, the polish pushes genuine zeros down to machine precision.
void polish(const RationalMap& f, unsigned chart, Complex& x, Complex& y) {
    const unsigned xv = chart == 0 ? 1 : 0;
    const unsigned yv = chart == 2 ? 1 : 2;
    for (int step = 0; step < 5; ++step) {
        std::vector<Complex> hom = lift_chart(chart, {x, y});
        Complex a11{0, 0}, a12{0, 0}, a22{0, 0}, b1{0, 0}, b2{0, 0};
        for (unsigned j = 0; j < f.components().size(); ++j) {
            const Complex v = f.components()[j].eval_float(hom);
            const Complex jx = f.partial(j, xv).eval_float(hom);
            const Complex jy = f.partial(j, yv).eval_float(hom);
            a11 += std::conj(jx) * jx;
            a12 += std::conj(jx) * jy;
            a22 += std::conj(jy) * jy;
            b1 += std::conj(jx) * v;
            b2 += std::conj(jy) * v;
        }
        const Complex det = a11 * a22 - a12 * std::conj(a12);
        if (std::abs(det) < 1e-300) return;
        const Complex dx = (b1 * a22 - a12 * b2) / det;
        const Complex dy = (a11 * b2 - std::conj(a12) * b1) / det;
        x -= dx;
        y -= dy;
        if (std::abs(dx) + std::abs(dy) < 1e-14 * (1.0 + std::abs(x) + std::abs(y))) break;
    }
}

std::vector<ProjectivePoint> numeric_locus(const RationalMap& f, const IndetOptions& opts) {
    std::vector<ProjectivePoint> accepted;
    bool any_resultant = false;

    for (unsigned chart = 0; chart < 3; ++chart) {
        std::vector<BiPoly> polys;
        bool chart_empty = false;
        for (const auto& c : f.components()) {
            if (c.is_zero()) continue;
            BiPoly r = restrict_to_chart(c, chart);
            int dy = exact::bipoly_degree(r);
            if (dy == 0 && r[0].degree() == 0) {
                chart_empty = true;  // nonzero constant: no zeros in this chart
                break;
            }
            polys.push_back(std::move(r));
        }
        if (chart_empty || polys.size() < 2) continue;

        // first component pair with a nonvanishing resultant in y
        UniPoly res;
        for (std::size_t i = 0; i < polys.size() && res.is_zero(); ++i)
            for (std::size_t j = i + 1; j < polys.size() && res.is_zero(); ++j)
                res = exact::resultant_y(polys[i], polys[j]);
        if (res.is_zero()) continue;
        any_resultant = true;
        if (res.degree() == 0) continue;  // no common zeros over this chart

        // square-free part: multiple roots would degrade the eigensolver
        UniPoly common = exact::gcd(res, res.derivative());
        if (common.degree() > 0) {
            auto reduced = UniPoly::divide_exact(res, common);
            if (reduced) res = std::move(*reduced);
        }

        for (auto x : exact::poly_roots(res.float_coeffs())) {
            // y-candidates from every component with positive y-degree
            std::vector<Complex> ys;
            for (const auto& p : polys) {
                if (exact::bipoly_degree(p) < 1) continue;
                std::vector<Complex> ycoeffs(p.size());
                for (std::size_t k = 0; k < p.size(); ++k) ycoeffs[k] = p[k].eval(x);
                for (const auto& y : exact::poly_roots(ycoeffs)) ys.push_back(y);
            }
            for (auto y : ys) {
                polish(f, chart, x, y);
                std::vector<Complex> hom = lift_chart(chart, {x, y});
                double scale = 0.0;
                for (const auto& c : hom) scale = std::max(scale, std::abs(c));
                for (auto& c : hom) c /= scale;
                double worst = 0.0;
                for (std::size_t j = 0; j < f.components().size(); ++j)
                    worst = std::max(worst, residual(f, j, hom));
                if (worst >= opts.residual_tol) continue;
                ProjectivePoint cand(hom);
                bool dup = false;
                for (const auto& p : accepted)
                    if (fs_distance(p, cand) < opts.dedup_tol) dup = true;
                if (!dup) accepted.push_back(std::move(cand));
            }
        }
    }
    if (!any_resultant)
        throw RootFindingFailed(
            "resultant identically zero after chart exhaustion; the input is not reduced");
    return accepted;
}

}  // namespace

IndetSet indeterminacy_locus(const RationalMap& f, const IndetOptions& opts) {
    if (f.source_dim() != 2)
        throw NotASurfaceSource("indeterminacy locus needs a two-dimensional source");

    if (opts.path != IndetPath::Numeric) {
        auto points = exact_locus(f);
        if (points) return {std::move(*points), 0.0};
        if (opts.path == IndetPath::Exact)
            throw RootFindingFailed("the exact path cannot certify this map's locus");
    }
    return {numeric_locus(f, opts), opts.residual_tol};
}

}  // namespace mero::maps
