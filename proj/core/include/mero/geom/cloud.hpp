#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mero/geom/region.hpp"
#include "mero/geom/sampler.hpp"
#include "mero/maps/rational_map.hpp"

namespace mero::geom {

using maps::ProjectivePoint;
using maps::RationalMap;

struct CloudOptions {
    std::size_t samples = 10000;
    std::uint64_t seed = 12345;
    /// Source samples closer than this to a detected indeterminacy point
    /// are replaced by the next valid points of the sequence.
    double indet_clearance = 1e-4;
    /// Extra chart points to stay clear of; when empty and the source is a
    /// surface, the numeric indeterminacy locus is used.
    std::vector<std::vector<Complex>> avoid;
    bool auto_avoid = true;
    /// Multiplier on the target (chordal) part of the product metric; the
    /// convergence notions must not depend on it.
    double fs_scale = 1.0;
    unsigned workers = 0;
};

/// Finite sample of a graph closure over a region: source points z paired
/// with the (product-)target values f(z).  The target of each factor map is
/// stored as a unit l2 representative so chordal distances are one complex
/// dot product away.  The product metric is the sum of the Euclidean source
/// distance and the chordal distance per target factor.
class GraphCloud {
public:
    /// Sample the graph of one map, or of a tuple of maps into a product of
    /// projective spaces (all factors share the source samples).
    static GraphCloud sample(const std::vector<RationalMap>& factors, const CompactRegion& region,
                             const CloudOptions& opts);
    static GraphCloud sample(const RationalMap& f, const CompactRegion& region,
                             const CloudOptions& opts) {
        return sample(std::vector<RationalMap>{f}, region, opts);
    }

    std::size_t size() const { return size_; }
    unsigned source_dim() const { return q_; }
    const std::vector<unsigned>& factor_sizes() const { return factor_sizes_; }
    const std::string& region_key() const { return region_key_; }
    std::uint64_t seed() const { return seed_; }

    std::vector<Complex> source_point(std::size_t i) const;
    ProjectivePoint target_point(std::size_t i, std::size_t factor = 0) const;
    const Complex* source_ptr(std::size_t i) const { return source_.data() + i * q_; }
    const Complex* target_ptr(std::size_t i) const { return target_.data() + i * target_stride_; }

    /// Product-metric distance between point i and point j of `other`.
    double distance(std::size_t i, const GraphCloud& other, std::size_t j) const;

    /// Concatenation (layouts must agree); the accumulation set of a tail
    /// of clouds approximates the limit set.
    static GraphCloud merge(const std::vector<const GraphCloud*>& clouds);

    bool layout_matches(const GraphCloud& other) const;

private:
    unsigned q_ = 0;
    std::vector<unsigned> factor_sizes_;
    unsigned target_stride_ = 0;
    std::size_t size_ = 0;
    std::vector<Complex> source_;
    std::vector<Complex> target_;
    std::string region_key_;
    std::uint64_t seed_ = 0;
    double fs_scale_ = 1.0;
};

enum class HausdorffAlgo { Grid, BruteForce };

/// Symmetric Hausdorff distance between two clouds under the product
/// metric.  The grid algorithm prunes with the source-distance lower bound
/// and returns exactly the brute-force value.
double hausdorff(const GraphCloud& a, const GraphCloud& b, HausdorffAlgo algo = HausdorffAlgo::Grid,
                 unsigned workers = 0);

/// min_j d(a_i, b_j) for every i; the slow full scan behind diagnostics
/// like exceptional-point extraction.
std::vector<double> min_distances(const GraphCloud& a, const GraphCloud& b, unsigned workers = 0);

}  // namespace mero::geom
