#include "mero/maps/rational_map.hpp"

#include <cmath>
#include <sstream>

#include "mero/errors.hpp"
#include "mero/exact/poly_text.hpp"

namespace mero::maps {

using exact::GaussianRational;
using exact::HomoPoly;

RationalMap RationalMap::normalized(SourceKind kind, unsigned source_dim,
                                    std::vector<HomoPoly> components) {
    if (components.size() < 2) throw DimensionMismatch("a map needs at least two components");
    const unsigned nvars = source_dim + 1;
    bool all_zero = true;
    unsigned degree = 0;
    bool degree_set = false;
    for (const auto& c : components) {
        if (c.nvars() != nvars)
            throw VariableCountMismatch("component in " + std::to_string(c.nvars()) +
                                        " variables, source needs " + std::to_string(nvars));
        if (c.is_zero()) continue;
        if (!degree_set) {
            degree = c.degree();
            degree_set = true;
        } else if (c.degree() != degree) {
            throw DegreeMismatch("components of degree " + std::to_string(degree) + " and " +
                                 std::to_string(c.degree()));
        }
        all_zero = false;
    }
    if (all_zero) throw AllZero("all map components vanish identically");

    HomoPoly g = exact::gcd(components);
    if (g.degree() > 0) {
        for (auto& c : components) {
            auto q = HomoPoly::divide_exact(c, g);
            if (!q) throw Error("internal: component not divisible by the tuple gcd");
            c = std::move(*q);
        }
    }

    RationalMap f;
    f.source_kind_ = kind;
    f.source_dim_ = source_dim;
    f.components_ = std::move(components);
    // zero components must still carry the common degree
    unsigned final_degree = 0;
    for (const auto& c : f.components_)
        if (!c.is_zero()) final_degree = c.degree();
    for (auto& c : f.components_)
        if (c.is_zero()) c = HomoPoly(nvars, final_degree);
    f.partials_.reserve(f.components_.size() * nvars);
    for (const auto& c : f.components_)
        for (unsigned v = 0; v < nvars; ++v) f.partials_.push_back(c.partial(v));
    return f;
}

RationalMap RationalMap::identity(unsigned dim) {
    std::vector<HomoPoly> comps;
    for (unsigned i = 0; i <= dim; ++i) comps.push_back(HomoPoly::variable(dim + 1, i));
    return normalized(SourceKind::Projective, dim, std::move(comps));
}

RationalMap RationalMap::cremona() {
    auto z = [](unsigned i) { return HomoPoly::variable(3, i); };
    return normalized(SourceKind::Projective, 2, {z(1) * z(2), z(0) * z(2), z(0) * z(1)});
}

std::size_t RationalMap::bit_size() const {
    std::size_t total = 0;
    for (const auto& c : components_) total += c.bit_size();
    return total;
}

bool operator==(const RationalMap& a, const RationalMap& b) {
    if (a.source_kind_ != b.source_kind_ || a.source_dim_ != b.source_dim_ ||
        a.components_.size() != b.components_.size())
        return false;
    // scale both tuples so the first nonzero coefficient (component order,
    // then lex) becomes 1, then compare structurally
    auto canonical = [](const RationalMap& f) {
        std::vector<HomoPoly> out = f.components_;
        for (const auto& c : out) {
            if (c.is_zero()) continue;
            GaussianRational pivot = c.leading().second;
            for (auto& d : out) d = d.scaled(GaussianRational(1) / pivot);
            break;
        }
        return out;
    };
    return canonical(a) == canonical(b);
}

bool RationalMap::is_identity() const {
    if (source_kind_ != SourceKind::Projective || source_dim_ != target_dim()) return false;
    return *this == identity(source_dim_);
}

std::vector<Complex> RationalMap::eval_raw(const std::vector<Complex>& hom) const {
    std::vector<Complex> out(components_.size());
    for (std::size_t j = 0; j < components_.size(); ++j) out[j] = components_[j].eval_float(hom);
    return out;
}

ProjectivePoint RationalMap::eval(const std::vector<Complex>& hom) const {
    return ProjectivePoint(eval_raw(hom));
}

std::vector<Complex> lift_chart(unsigned chart, const std::vector<Complex>& affine) {
    std::vector<Complex> hom;
    hom.reserve(affine.size() + 1);
    for (std::size_t i = 0, a = 0; i <= affine.size(); ++i)
        hom.push_back(i == chart ? Complex{1.0, 0.0} : affine[a++]);
    return hom;
}

ProjectivePoint RationalMap::eval_chart(unsigned chart, const std::vector<Complex>& affine) const {
    return eval(lift_chart(chart, affine));
}

std::vector<Complex> RationalMap::eval_chart_raw(unsigned chart,
                                                 const std::vector<Complex>& affine) const {
    return eval_raw(lift_chart(chart, affine));
}

std::vector<GaussianRational> RationalMap::eval_exact(
    const std::vector<GaussianRational>& hom) const {
    std::vector<GaussianRational> out(components_.size());
    for (std::size_t j = 0; j < components_.size(); ++j) out[j] = components_[j].eval_exact(hom);
    return out;
}

std::string RationalMap::describe() const {
    std::ostringstream os;
    os << (source_kind_ == SourceKind::Projective ? "CP^" : "affine C^")
       << (source_kind_ == SourceKind::Projective ? source_dim_ : source_dim_) << " -> CP^"
       << target_dim() << ", degree " << degree() << ": [";
    for (std::size_t j = 0; j < components_.size(); ++j) {
        if (j) os << " : ";
        os << exact::print_poly(components_[j]);
    }
    os << "]";
    return os.str();
}

ComposeInfo compose_info(const RationalMap& g, const RationalMap& f) {
    if (g.source_kind() != SourceKind::Projective || f.target_dim() != g.source_dim())
        throw DimensionMismatch("compose: f maps to CP^" + std::to_string(f.target_dim()) +
                                " but g is defined on CP^" + std::to_string(g.source_dim()));
    std::vector<HomoPoly> comps;
    comps.reserve(g.components().size());
    for (const auto& c : g.components()) comps.push_back(c.substitute(f.components()));
    const unsigned raw_degree = g.degree() * f.degree();
    RationalMap composed =
        RationalMap::normalized(f.source_kind(), f.source_dim(), std::move(comps));
    return {composed, raw_degree - composed.degree()};
}

RationalMap compose(const RationalMap& g, const RationalMap& f) {
    return compose_info(g, f).map;
}

IterateInfo iterate(const RationalMap& f, unsigned k, std::size_t bit_budget) {
    if (f.source_kind() != SourceKind::Projective || f.source_dim() != f.target_dim())
        throw DimensionMismatch("iterate needs a projective self-map");
    if (k == 0) throw Error("iterate: k must be at least 1");
    IterateInfo info{f, {f.degree()}};
    for (unsigned j = 2; j <= k; ++j) {
        info.map = compose(f, info.map);
        info.degree_trace.push_back(info.map.degree());
        if (info.map.bit_size() > bit_budget)
            throw CoefficientOverflowBudgetExceeded(
                "iterate " + std::to_string(j) + " uses " + std::to_string(info.map.bit_size()) +
                " coefficient bits (budget " + std::to_string(bit_budget) + ")");
    }
    return info;
}

RationalMap line_through(const std::vector<GaussianRational>& a,
                         const std::vector<GaussianRational>& b) {
    if (a.size() != 3 || b.size() != 3) throw DimensionMismatch("line_through expects CP^2 points");
    std::vector<HomoPoly> comps;
    for (unsigned j = 0; j < 3; ++j) {
        HomoPoly s = HomoPoly::variable(2, 0).scaled(a[j]);
        HomoPoly t = HomoPoly::variable(2, 1).scaled(b[j]);
        comps.push_back(s + t);
    }
    // distinct projective points => components not all zero
    return RationalMap::normalized(SourceKind::Projective, 1, std::move(comps));
}

RationalMap restrict_to_line(const RationalMap& f, const RationalMap& line) {
    if (line.source_dim() != 1 || line.target_dim() != f.source_dim())
        throw DimensionMismatch("line must be CP^1 -> source of f");
    try {
        return compose(f, line);
    } catch (const AllZero&) {
        throw LineInsideIndeterminacy("the line lies inside the zero set of every component");
    }
}

std::vector<ProjectivePoint> point_image(const RationalMap& f, const ProjectivePoint& a,
                                         unsigned directions, double radius, unsigned chart) {
    auto chart_pos = a.chart_coords(chart);
    if (!chart_pos) throw Error("point_image: the base point is not in the requested chart");
    const std::vector<Complex>& base = *chart_pos;
    const unsigned n = unsigned(base.size());

    // is `a` (numerically) an indeterminacy point?
    std::vector<Complex> at = f.eval_chart_raw(chart, base);
    double mag = 0.0, scale = 0.0;
    for (const auto& c : at) mag = std::max(mag, std::abs(c));
    for (const auto& c : base) scale = std::max(scale, std::abs(c));
    const double floor_mag = 1e-9 * std::pow(std::max(1.0, scale), double(f.degree()));
    if (mag > floor_mag) return {ProjectivePoint(std::move(at))};

    // sample rays u_k on the unit sphere of C^n: a deterministic hash feeds
    // Box-Muller, so the directions are uniform and reproducible
    auto splitmix = [](std::uint64_t& state) {
        state += 0x9E3779B97f4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    };
    std::vector<ProjectivePoint> out;
    out.reserve(directions);
    for (unsigned k = 0; k < directions; ++k) {
        std::vector<Complex> u(n);
        if (n == 1) {
            const double th = 2.0 * M_PI * double(k) / double(directions);
            u[0] = std::polar(1.0, th);
        } else {
            std::uint64_t state = 0x5bd1e995u + k;
            double norm2 = 0.0;
            for (unsigned i = 0; i < n; ++i) {
                const double u1 = (double(splitmix(state) >> 11) + 0.5) * 0x1.0p-53;
                const double u2 = (double(splitmix(state) >> 11) + 0.5) * 0x1.0p-53;
                const double r = std::sqrt(-2.0 * std::log(u1));
                u[i] = {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
                norm2 += std::norm(u[i]);
            }
            const double inv = 1.0 / std::sqrt(norm2);
            for (auto& c : u) c *= inv;
        }
        std::vector<Complex> z = base;
        for (unsigned i = 0; i < n; ++i) z[i] += radius * u[i];
        std::vector<Complex> value = f.eval_chart_raw(chart, z);
        double m = 0.0;
        for (const auto& c : value) m = std::max(m, std::abs(c));
        if (m == 0.0) continue;  // ray landed on another indeterminacy point
        out.emplace_back(std::move(value));
    }
    return out;
}

}  // namespace mero::maps
