#include "mero/geom/region.hpp"

#include <cmath>
#include <sstream>

#include "mero/errors.hpp"

namespace mero::geom {

CompactRegion CompactRegion::polydisc(std::vector<Complex> center, std::vector<double> radii,
                                      unsigned chart) {
    if (center.empty() || center.size() != radii.size())
        throw UnsupportedDimension("polydisc needs matching center and radii");
    CompactRegion r;
    r.kind_ = Kind::Polydisc;
    r.chart_ = chart;
    r.center_ = std::move(center);
    r.radii_ = std::move(radii);
    return r;
}

CompactRegion CompactRegion::ball(std::vector<Complex> center, double radius, unsigned chart) {
    if (center.empty()) throw UnsupportedDimension("ball needs a center");
    CompactRegion r;
    r.kind_ = Kind::Ball;
    r.chart_ = chart;
    r.center_ = std::move(center);
    r.ball_radius_ = radius;
    r.radii_.assign(r.center_.size(), radius);
    return r;
}

CompactRegion CompactRegion::hartogs(unsigned dim, double r, unsigned chart) {
    if (dim < 2) throw UnsupportedDimension("a Hartogs figure needs dimension >= 2");
    if (!(r > 0.0 && r < 1.0)) throw Error("Hartogs parameter must lie in (0,1)");
    CompactRegion out;
    out.kind_ = Kind::Hartogs;
    out.chart_ = chart;
    out.center_.assign(dim, Complex{0.0, 0.0});
    out.radii_.assign(dim, 1.0);
    out.hartogs_r_ = r;
    return out;
}

CompactRegion CompactRegion::with_exclusions(std::vector<ExclusionBall> balls) const {
    CompactRegion r = *this;
    for (auto& b : balls) {
        if (b.center.size() != dim()) throw UnsupportedDimension("exclusion dimension mismatch");
        r.exclusions_.push_back(std::move(b));
    }
    return r;
}

CompactRegion CompactRegion::shrunk(double factor) const {
    CompactRegion r = *this;
    for (auto& rad : r.radii_) rad *= factor;
    r.ball_radius_ *= factor;
    if (kind_ == Kind::Hartogs) throw Error("shrinking a Hartogs figure is not supported");
    return r;
}

bool CompactRegion::contains_base(const std::vector<Complex>& z) const {
    if (z.size() != dim()) return false;
    switch (kind_) {
        case Kind::Polydisc:
            for (std::size_t i = 0; i < z.size(); ++i)
                if (std::abs(z[i] - center_[i]) > radii_[i]) return false;
            return true;
        case Kind::Ball: {
            double n2 = 0.0;
            for (std::size_t i = 0; i < z.size(); ++i) n2 += std::norm(z[i] - center_[i]);
            return n2 <= ball_radius_ * ball_radius_;
        }
        case Kind::Hartogs: {
            double head = 0.0;  // polydisc norm of z'
            for (std::size_t i = 0; i + 1 < z.size(); ++i) head = std::max(head, std::abs(z[i]));
            const double last = std::abs(z.back());
            if (head < hartogs_r_ && last < 1.0) return true;
            return head < 1.0 && last > 1.0 - hartogs_r_ && last < 1.0;
        }
    }
    return false;
}

bool CompactRegion::contains(const std::vector<Complex>& z) const {
    if (!contains_base(z)) return false;
    for (const auto& b : exclusions_) {
        double n2 = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) n2 += std::norm(z[i] - b.center[i]);
        if (n2 < b.radius * b.radius) return false;
    }
    return true;
}

void CompactRegion::bounding(std::vector<Complex>& center, std::vector<double>& radii) const {
    center = center_;
    radii = radii_;
}

double CompactRegion::base_volume() const {
    const double pi = M_PI;
    switch (kind_) {
        case Kind::Polydisc: {
            double v = 1.0;
            for (double r : radii_) v *= pi * r * r;
            return v;
        }
        case Kind::Ball: {
            // unit-ball volume of R^{2q}: pi^q / q!
            const unsigned q = dim();
            double v = 1.0;
            for (unsigned i = 1; i <= q; ++i) v *= pi / double(i);
            return v * std::pow(ball_radius_, 2.0 * q);
        }
        case Kind::Hartogs: {
            if (dim() != 2) throw UnsupportedDimension("Hartogs volume implemented for n = 2");
            const double r = hartogs_r_;
            const double slab = pi * r * r * pi;                      // |z1|<r, |z2|<1
            const double collar = pi * pi * (1.0 - (1 - r) * (1 - r));  // |z1|<1, 1-r<|z2|<1
            const double overlap = pi * r * r * pi * (1.0 - (1 - r) * (1 - r));
            return slab + collar - overlap;
        }
    }
    return 0.0;
}

std::string CompactRegion::key() const {
    std::ostringstream os;
    os << "kind=" << int(kind_) << ";chart=" << chart_ << ";c=";
    for (const auto& c : center_) os << c.real() << "," << c.imag() << ";";
    os << "r=";
    for (double r : radii_) os << r << ";";
    os << "b=" << ball_radius_ << ";h=" << hartogs_r_ << ";x=";
    for (const auto& b : exclusions_) {
        for (const auto& c : b.center) os << c.real() << "," << c.imag() << ",";
        os << b.radius << ";";
    }
    return os.str();
}

}  // namespace mero::geom
