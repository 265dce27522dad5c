#pragma once

#include <cstdint>
#include <vector>

#include "mero/geom/region.hpp"

namespace mero::geom {

/// Deterministic quasi-uniform sampling of a region: a Halton sequence with
/// a seed-derived Cranley-Patterson rotation, two dimensions per complex
/// coordinate, area-uniform on each disc factor.  Proposal index i is a pure
/// function of (seed, i), so any block decomposition reproduces the same
/// stream.
class RegionSampler {
public:
    RegionSampler(CompactRegion region, std::uint64_t seed);

    const CompactRegion& region() const { return region_; }
    unsigned dim() const { return region_.dim(); }

    /// Proposal i inside the bounding polydisc.
    std::vector<Complex> propose(std::uint64_t index) const;

    /// First `count` accepted samples (flattened, dim() entries per point),
    /// scanning proposals from `first_proposal`.  Throws RegionEmpty when
    /// the acceptance rate collapses.
    std::vector<Complex> collect(std::size_t count, std::uint64_t first_proposal = 0) const;

private:
    CompactRegion region_;
    std::uint64_t seed_;
    std::vector<Complex> bound_center_;
    std::vector<double> bound_radii_;
    std::vector<double> rotation_;  // one offset per Halton dimension
};

/// Radical-inverse (Halton) value of `index` in the given prime base.
double radical_inverse(std::uint64_t index, unsigned base);

}  // namespace mero::geom
