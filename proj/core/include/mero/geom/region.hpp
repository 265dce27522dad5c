#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mero/maps/projective.hpp"

namespace mero::geom {

using maps::Complex;

struct ExclusionBall {
    std::vector<Complex> center;
    double radius = 0.0;
};

/// Compact subset of a source chart: a closed polydisc or ball, or the
/// Hartogs figure H^n(r) (thin slab plus boundary collar of the unit
/// polydisc), minus finitely many open balls around indeterminacy points.
class CompactRegion {
public:
    enum class Kind { Polydisc, Ball, Hartogs };

    static CompactRegion polydisc(std::vector<Complex> center, std::vector<double> radii,
                                  unsigned chart = 0);
    static CompactRegion ball(std::vector<Complex> center, double radius, unsigned chart = 0);
    /// H^n(r) in dimension n: {|z'| < r, |z_n| < 1} u {|z'| < 1, 1-r < |z_n| < 1},
    /// polydisc norms.
    static CompactRegion hartogs(unsigned dim, double r, unsigned chart = 0);

    Kind kind() const { return kind_; }
    unsigned chart() const { return chart_; }
    unsigned dim() const { return unsigned(center_.size()); }
    double hartogs_r() const { return hartogs_r_; }

    CompactRegion with_exclusions(std::vector<ExclusionBall> balls) const;
    const std::vector<ExclusionBall>& exclusions() const { return exclusions_; }
    /// Shrunken copy (radii scaled towards the center); used for the
    /// relatively-compact sub-regions of the Rouche checks.
    CompactRegion shrunk(double factor) const;

    bool contains(const std::vector<Complex>& z) const;
    /// Membership before exclusions are carved out.
    bool contains_base(const std::vector<Complex>& z) const;

    /// Smallest axis-aligned polydisc covering the region (sampling domain).
    void bounding(std::vector<Complex>& center, std::vector<double>& radii) const;
    /// Exact volume of the base region (no exclusions), Lebesgue on C^q.
    double base_volume() const;

    /// Stable identity used to reject mixed-region cloud comparisons.
    std::string key() const;

private:
    Kind kind_ = Kind::Polydisc;
    unsigned chart_ = 0;
    std::vector<Complex> center_;
    std::vector<double> radii_;
    double ball_radius_ = 0.0;
    double hartogs_r_ = 0.0;
    std::vector<ExclusionBall> exclusions_;
};

}  // namespace mero::geom
