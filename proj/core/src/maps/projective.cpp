#include "mero/maps/projective.hpp"

#include <cmath>

#include "mero/errors.hpp"

namespace mero::maps {

namespace {

void canonicalize(std::vector<Complex>& v) {
    if (v.empty()) throw Error("projective point needs at least one coordinate");
    std::size_t best = 0;
    double best_mod = std::abs(v[0]);
    for (std::size_t i = 1; i < v.size(); ++i) {
        double m = std::abs(v[i]);
        if (m > best_mod) {
            best_mod = m;
            best = i;
        }
    }
    if (best_mod == 0.0) throw Error("projective point with all coordinates zero");
    const Complex pivot = v[best];
    for (auto& c : v) c /= pivot;
    v[best] = {1.0, 0.0};  // exact after division, guard against rounding
}

}  // namespace

ProjectivePoint::ProjectivePoint(std::vector<Complex> coords) : coords_(std::move(coords)) {
    canonicalize(coords_);
}

ProjectivePoint::ProjectivePoint(std::vector<Complex> coords,
                                 std::vector<exact::GaussianRational> exact)
    : coords_(std::move(coords)) {
    canonicalize(coords_);
    // canonical exact form: first nonzero coordinate scaled to 1
    std::size_t first = exact.size();
    for (std::size_t i = 0; i < exact.size(); ++i)
        if (!exact[i].is_zero()) {
            first = i;
            break;
        }
    if (first == exact.size()) throw Error("exact projective point with all coordinates zero");
    const exact::GaussianRational pivot = exact[first];
    for (auto& c : exact) c = c / pivot;
    exact_ = std::move(exact);
}

ProjectivePoint ProjectivePoint::from_exact(const std::vector<exact::GaussianRational>& coords) {
    std::vector<Complex> floats(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) floats[i] = coords[i].to_complex();
    return ProjectivePoint(std::move(floats), coords);
}

std::optional<std::vector<Complex>> ProjectivePoint::chart_coords(unsigned chart,
                                                                  double tol) const {
    if (chart >= coords_.size()) throw Error("chart index out of range");
    const Complex pivot = coords_[chart];
    if (std::abs(pivot) <= tol) return std::nullopt;
    std::vector<Complex> out;
    out.reserve(coords_.size() - 1);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (i != chart) out.push_back(coords_[i] / pivot);
    return out;
}

bool normalize_unit(std::vector<Complex>& coords) {
    double n2 = 0.0;
    for (const auto& c : coords) n2 += std::norm(c);
    if (n2 == 0.0) return false;
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : coords) c *= inv;
    return true;
}

double fs_distance_unit(const Complex* p, const Complex* q, std::size_t ncoords) {
    // |p ^ q| on unit representatives; the wedge form stays exact near zero
    // where 1 - |<p,q>|^2 would cancel catastrophically
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < ncoords; ++i)
        for (std::size_t j = i + 1; j < ncoords; ++j) s += std::norm(p[i] * q[j] - p[j] * q[i]);
    return s >= 1.0 ? 1.0 : std::sqrt(s);
}

double fs_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.coords().size() != q.coords().size())
        throw Error("fs_distance between points of different projective spaces");
    std::vector<Complex> a = p.coords();
    std::vector<Complex> b = q.coords();
    normalize_unit(a);
    normalize_unit(b);
    return fs_distance_unit(a.data(), b.data(), a.size());
}

}  // namespace mero::maps
