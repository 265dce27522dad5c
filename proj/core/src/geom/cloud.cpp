#include "mero/geom/cloud.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "mero/errors.hpp"
#include "mero/maps/indeterminacy.hpp"
#include "mero/util/parallel.hpp"

namespace mero::geom {

namespace {

std::vector<std::vector<Complex>> detect_avoid_points(const std::vector<RationalMap>& factors,
                                                      unsigned chart) {
    std::vector<std::vector<Complex>> out;
    for (const auto& f : factors) {
        if (f.source_dim() != 2) continue;  // curves have no indeterminacy after reduction
        maps::IndetSet locus = maps::indeterminacy_locus(f);
        for (const auto& p : locus.points) {
            auto affine = p.chart_coords(chart, 1e-9);
            if (affine) out.push_back(std::move(*affine));
        }
    }
    return out;
}

}  // namespace

GraphCloud GraphCloud::sample(const std::vector<RationalMap>& factors,
                              const CompactRegion& region, const CloudOptions& opts) {
    if (factors.empty()) throw Error("GraphCloud: at least one factor map required");
    const unsigned q = region.dim();
    for (const auto& f : factors)
        if (f.source_dim() != q)
            throw DimensionMismatch("map source dimension does not match the region");

    std::vector<std::vector<Complex>> avoid = opts.avoid;
    if (avoid.empty() && opts.auto_avoid && opts.indet_clearance > 0.0)
        avoid = detect_avoid_points(factors, region.chart());

    GraphCloud cloud;
    cloud.q_ = q;
    for (const auto& f : factors) cloud.factor_sizes_.push_back(f.target_dim() + 1);
    cloud.target_stride_ = 0;
    for (unsigned s : cloud.factor_sizes_) cloud.target_stride_ += s;
    cloud.region_key_ = region.key();
    cloud.seed_ = opts.seed;
    cloud.fs_scale_ = opts.fs_scale;
    cloud.source_.reserve(opts.samples * q);
    cloud.target_.reserve(opts.samples * cloud.target_stride_);

    const double clear2 = opts.indet_clearance * opts.indet_clearance;
    RegionSampler sampler(region, opts.seed);
    std::uint64_t index = 0;
    std::uint64_t misses = 0;
    while (cloud.size_ < opts.samples) {
        if (++misses > 200000)
            throw RegionEmpty("cloud sampling starved; region minus clearances is empty");
        std::vector<Complex> z = sampler.propose(index++);
        if (!sampler.region().contains(z)) continue;
        bool clear = true;
        for (const auto& a : avoid) {
            double n2 = 0.0;
            for (unsigned i = 0; i < q; ++i) n2 += std::norm(z[i] - a[i]);
            if (n2 < clear2) {
                clear = false;
                break;
            }
        }
        if (!clear) continue;

        // evaluate every factor; a numerically vanishing value means the
        // proposal hit an (undetected) indeterminacy point, skip it
        std::vector<Complex> row;
        row.reserve(cloud.target_stride_);
        bool ok = true;
        for (const auto& f : factors) {
            std::vector<Complex> raw = f.eval_chart_raw(region.chart(), z);
            if (!maps::normalize_unit(raw)) {
                ok = false;
                break;
            }
            row.insert(row.end(), raw.begin(), raw.end());
        }
        if (!ok) continue;
        cloud.source_.insert(cloud.source_.end(), z.begin(), z.end());
        cloud.target_.insert(cloud.target_.end(), row.begin(), row.end());
        ++cloud.size_;
        misses = 0;
    }
    return cloud;
}

std::vector<Complex> GraphCloud::source_point(std::size_t i) const {
    return {source_.begin() + i * q_, source_.begin() + (i + 1) * q_};
}

ProjectivePoint GraphCloud::target_point(std::size_t i, std::size_t factor) const {
    std::size_t off = i * target_stride_;
    for (std::size_t f = 0; f < factor; ++f) off += factor_sizes_[f];
    return ProjectivePoint(std::vector<Complex>(target_.begin() + off,
                                                target_.begin() + off + factor_sizes_[factor]));
}

double GraphCloud::distance(std::size_t i, const GraphCloud& other, std::size_t j) const {
    const Complex* sa = source_ptr(i);
    const Complex* sb = other.source_ptr(j);
    double s2 = 0.0;
    for (unsigned d = 0; d < q_; ++d) s2 += std::norm(sa[d] - sb[d]);
    double dist = std::sqrt(s2);
    const Complex* ta = target_ptr(i);
    const Complex* tb = other.target_ptr(j);
    std::size_t off = 0;
    for (unsigned s : factor_sizes_) {
        dist += fs_scale_ * maps::fs_distance_unit(ta + off, tb + off, s);
        off += s;
    }
    return dist;
}

bool GraphCloud::layout_matches(const GraphCloud& other) const {
    return q_ == other.q_ && factor_sizes_ == other.factor_sizes_ &&
           region_key_ == other.region_key_ && fs_scale_ == other.fs_scale_;
}

GraphCloud GraphCloud::merge(const std::vector<const GraphCloud*>& clouds) {
    if (clouds.empty()) throw Error("merge of zero clouds");
    GraphCloud out = *clouds.front();
    for (std::size_t k = 1; k < clouds.size(); ++k) {
        const GraphCloud& c = *clouds[k];
        if (!(out.q_ == c.q_ && out.factor_sizes_ == c.factor_sizes_))
            throw MetricMismatch("merging clouds with different layouts");
        out.source_.insert(out.source_.end(), c.source_.begin(), c.source_.end());
        out.target_.insert(out.target_.end(), c.target_.begin(), c.target_.end());
        out.size_ += c.size_;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hausdorff distance
// ---------------------------------------------------------------------------

namespace {

/// Spatial grid over the source coordinates of a cloud; the Euclidean
/// source distance lower-bounds the product metric, which makes ring
/// search exact.
class SourceGrid {
public:
    explicit SourceGrid(const GraphCloud& cloud) : cloud_(cloud), dims_(2 * cloud.source_dim()) {
        const std::size_t n = cloud.size();
        lo_.assign(dims_, std::numeric_limits<double>::infinity());
        hi_.assign(dims_, -std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < n; ++i) {
            const Complex* s = cloud.source_ptr(i);
            for (unsigned d = 0; d < dims_; ++d) {
                double v = coord(s, d);
                lo_[d] = std::min(lo_[d], v);
                hi_[d] = std::max(hi_[d], v);
            }
        }
        side_ = std::max<std::size_t>(1, std::size_t(std::floor(std::pow(double(n), 1.0 / dims_))));
        width_min_ = std::numeric_limits<double>::infinity();
        width_.assign(dims_, 1.0);
        for (unsigned d = 0; d < dims_; ++d) {
            double span = std::max(hi_[d] - lo_[d], 1e-12);
            width_[d] = span / double(side_) * (1.0 + 1e-12);
            width_min_ = std::min(width_min_, width_[d]);
        }
        std::size_t cells = 1;
        for (unsigned d = 0; d < dims_; ++d) cells *= side_;
        buckets_.assign(cells, {});
        for (std::size_t i = 0; i < n; ++i) buckets_[cell_of(cloud.source_ptr(i))].push_back(i);
    }

    /// min_j d(a_i, b_j), never scanning cells whose source lower bound
    /// already exceeds the best value found (or `abandon`).
    double min_distance(const GraphCloud& a, std::size_t i, double abandon) const {
        const Complex* s = a.source_ptr(i);
        std::vector<long> home(dims_);
        for (unsigned d = 0; d < dims_; ++d) home[d] = index_of(coord(s, d), d);
        double best = std::numeric_limits<double>::infinity();
        const long max_ring = long(side_);
        for (long r = 0; r <= max_ring; ++r) {
            if (r >= 2 && double(r - 1) * width_min_ >= best) break;
            if (best <= abandon) break;
            visit_ring(home, r, [&](std::size_t flat) {
                for (std::size_t j : buckets_[flat]) {
                    double d = a.distance(i, cloud_, j);
                    if (d < best) best = d;
                }
            });
        }
        return best;
    }

private:
    static double coord(const Complex* s, unsigned d) {
        return d % 2 == 0 ? s[d / 2].real() : s[d / 2].imag();
    }
    long index_of(double v, unsigned d) const {
        long idx = long(std::floor((v - lo_[d]) / width_[d]));
        return std::clamp(idx, long(0), long(side_) - 1);
    }
    std::size_t cell_of(const Complex* s) const {
        std::size_t flat = 0;
        for (unsigned d = 0; d < dims_; ++d) flat = flat * side_ + std::size_t(index_of(coord(s, d), d));
        return flat;
    }

    template <typename Fn>
    void visit_ring(const std::vector<long>& home, long r, Fn&& fn) const {
        // cells at Chebyshev distance exactly r from home
        std::vector<long> off(dims_, -r);
        while (true) {
            bool on_ring = false;
            bool in_bounds = true;
            for (unsigned d = 0; d < dims_ && in_bounds; ++d) {
                long c = home[d] + off[d];
                if (c < 0 || c >= long(side_)) in_bounds = false;
                if (std::labs(off[d]) == r) on_ring = true;
            }
            if (in_bounds && (on_ring || r == 0)) {
                std::size_t flat = 0;
                for (unsigned d = 0; d < dims_; ++d)
                    flat = flat * side_ + std::size_t(home[d] + off[d]);
                fn(flat);
            }
            // advance the odometer, skipping interior cells cheaply
            unsigned d = 0;
            for (; d < dims_; ++d) {
                ++off[d];
                // the first coordinate may jump across the interior when no
                // other coordinate pins the ring
                if (off[d] > r) {
                    off[d] = -r;
                    continue;
                }
                break;
            }
            if (d == dims_) return;
        }
    }

    const GraphCloud& cloud_;
    unsigned dims_;
    std::size_t side_ = 1;
    std::vector<double> lo_, hi_, width_;
    double width_min_ = 1.0;
    std::vector<std::vector<std::size_t>> buckets_;
};

double directed_brute(const GraphCloud& a, const GraphCloud& b, unsigned workers) {
    const std::size_t n = a.size();
    const std::size_t block = 256;
    const std::size_t n_blocks = (n + block - 1) / block;
    std::vector<double> maxima(n_blocks, 0.0);
    std::atomic<double> shared_max{0.0};
    util::parallel_blocks(n_blocks, workers, [&](std::size_t bi) {
        double local = 0.0;
        const std::size_t end = std::min(n, (bi + 1) * block);
        for (std::size_t i = bi * block; i < end; ++i) {
            double cmax = std::max(local, shared_max.load(std::memory_order_relaxed));
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < b.size(); ++j) {
                best = std::min(best, a.distance(i, b, j));
                if (best <= cmax) break;  // cannot raise the maximum
            }
            if (best > local) local = best;
        }
        maxima[bi] = local;
        double cur = shared_max.load(std::memory_order_relaxed);
        while (local > cur && !shared_max.compare_exchange_weak(cur, local)) {
        }
    });
    double out = 0.0;
    for (double m : maxima) out = std::max(out, m);
    return out;
}

double directed_grid(const GraphCloud& a, const GraphCloud& b, const SourceGrid& grid,
                     unsigned workers) {
    const std::size_t n = a.size();
    const std::size_t block = 256;
    const std::size_t n_blocks = (n + block - 1) / block;
    std::vector<double> maxima(n_blocks, 0.0);
    std::atomic<double> shared_max{0.0};
    util::parallel_blocks(n_blocks, workers, [&](std::size_t bi) {
        double local = 0.0;
        const std::size_t end = std::min(n, (bi + 1) * block);
        for (std::size_t i = bi * block; i < end; ++i) {
            double cmax = std::max(local, shared_max.load(std::memory_order_relaxed));
            double best = grid.min_distance(a, i, cmax);
            if (best > local && best != std::numeric_limits<double>::infinity()) local = best;
        }
        maxima[bi] = local;
        double cur = shared_max.load(std::memory_order_relaxed);
        while (local > cur && !shared_max.compare_exchange_weak(cur, local)) {
        }
    });
    double out = 0.0;
    for (double m : maxima) out = std::max(out, m);
    return out;
}

}  // namespace

double hausdorff(const GraphCloud& a, const GraphCloud& b, HausdorffAlgo algo, unsigned workers) {
    if (!a.layout_matches(b))
        throw MetricMismatch("clouds live in different regions or metric products");
    if (a.size() == 0 || b.size() == 0) throw Error("hausdorff of an empty cloud");
    if (algo == HausdorffAlgo::BruteForce)
        return std::max(directed_brute(a, b, workers), directed_brute(b, a, workers));
    SourceGrid grid_b(b);
    SourceGrid grid_a(a);
    return std::max(directed_grid(a, b, grid_b, workers), directed_grid(b, a, grid_a, workers));
}

std::vector<double> min_distances(const GraphCloud& a, const GraphCloud& b, unsigned workers) {
    const std::size_t n = a.size();
    std::vector<double> out(n, std::numeric_limits<double>::infinity());
    const std::size_t block = 256;
    const std::size_t n_blocks = (n + block - 1) / block;
    SourceGrid grid(b);
    util::parallel_blocks(n_blocks, workers, [&](std::size_t bi) {
        const std::size_t end = std::min(n, (bi + 1) * block);
        for (std::size_t i = bi * block; i < end; ++i)
            out[i] = grid.min_distance(a, i, -1.0);  // no abandon: exact minima
    });
    return out;
}

}  // namespace mero::geom
