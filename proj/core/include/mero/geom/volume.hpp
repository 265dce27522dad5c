#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mero/geom/region.hpp"
#include "mero/maps/rational_map.hpp"

namespace mero::geom {

using maps::RationalMap;

struct VolumeTerm {
    std::string name;
    double value = 0.0;
    double stderr_value = 0.0;
};

/// Graph-volume estimate under the convention vol_2q = (1/q!) Int w^q, so
/// volumes agree with Riemannian ones; the raw (no 1/q!) integral is kept
/// alongside.  The Fubini-Study form is normalized to give CP^1 total area
/// pi.  Breakdown terms follow the binomial expansion of
/// (w_src omega_source + w_tgt f*omega_FS)^q, each non-negative.
struct VolumeEstimate {
    double value = 0.0;
    double raw_value = 0.0;
    double stderr_value = 0.0;
    std::uint64_t samples = 0;
    std::vector<VolumeTerm> breakdown;
    double capped_mass = 0.0;  // density clipped by the ceiling, reported separately
    double region_volume = 0.0;
};

struct VolumeOptions {
    std::uint64_t seed = 12345;
    double source_weight = 1.0;
    double target_weight = 1.0;
    double density_ceiling = 1e8;
    unsigned workers = 0;
};

/// Monte-Carlo estimate of (1/q!) Int_K (w1 omega + w2 f* omega_FS)^q for
/// q = dim K in {1, 2}.  Samples near the indeterminacy locus contribute
/// through the same density (the singularity is integrable) but the
/// integrand is capped at the density ceiling, with the clipped mass
/// reported separately.
VolumeEstimate volume(const RationalMap& f, const CompactRegion& region, std::uint64_t samples,
                      const VolumeOptions& opts = {});

/// Entries of the pulled-back FS form at a chart point: t[0]=t_{1 bar 1},
/// t[1]=t_{2 bar 2} (when q=2), plus the mixed |t_{1 bar 2}|^2 needed for
/// the determinant.
struct PullbackDensity {
    double t11 = 0.0;
    double t22 = 0.0;
    double mixed_norm = 0.0;  // |t_{1 bar 2}|^2
    bool singular = false;    // all components vanished at the point
    double trace(unsigned q) const { return q == 1 ? t11 : t11 + t22; }
    double det() const { return t11 * t22 - mixed_norm; }
};

PullbackDensity pullback_density(const RationalMap& f, unsigned chart,
                                 const std::vector<Complex>& affine);

/// Fiberwise mass of the (2,2bar) coefficient: for each grid value of z1,
/// the integral of t_{2 bar 2}(z1, .) over the disc |z2| <= fiber_radius.
std::vector<std::pair<Complex, double>> marginal_mass(const RationalMap& f,
                                                      const std::vector<Complex>& z1_grid,
                                                      std::uint64_t fiber_samples,
                                                      double fiber_radius = 1.0,
                                                      std::uint64_t seed = 12345,
                                                      unsigned workers = 0);

}  // namespace mero::geom
