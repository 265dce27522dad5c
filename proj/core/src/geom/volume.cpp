#include "mero/geom/volume.hpp"

#include <cmath>

#include "mero/errors.hpp"
#include "mero/geom/sampler.hpp"
#include "mero/util/parallel.hpp"

namespace mero::geom {

PullbackDensity pullback_density(const RationalMap& f, unsigned chart,
                                 const std::vector<Complex>& affine) {
    const unsigned q = unsigned(affine.size());
    const std::vector<Complex> hom = maps::lift_chart(chart, affine);
    const std::size_t m1 = f.components().size();

    // variable indices of the chart's affine coordinates
    std::vector<unsigned> vars;
    for (unsigned v = 0; v <= q; ++v)
        if (v != chart) vars.push_back(v);

    std::vector<Complex> value(m1);
    double norm2 = 0.0;
    for (std::size_t j = 0; j < m1; ++j) {
        value[j] = f.components()[j].eval_float(hom);
        norm2 += std::norm(value[j]);
    }
    PullbackDensity out;
    if (norm2 == 0.0) {
        out.singular = true;
        return out;
    }

    // t_{a br b} = (<d_a F, d_b F> |F|^2 - <d_a F, F> <F, d_b F>) / |F|^4
    std::vector<Complex> da(m1), db(m1);
    for (std::size_t j = 0; j < m1; ++j) da[j] = f.partial(j, vars[0]).eval_float(hom);
    Complex h1{0, 0};
    double g11 = 0.0;
    for (std::size_t j = 0; j < m1; ++j) {
        g11 += std::norm(da[j]);
        h1 += da[j] * std::conj(value[j]);
    }
    const double inv2 = 1.0 / (norm2 * norm2);
    out.t11 = (g11 * norm2 - std::norm(h1)) * inv2;
    if (q == 2) {
        for (std::size_t j = 0; j < m1; ++j) db[j] = f.partial(j, vars[1]).eval_float(hom);
        Complex h2{0, 0}, g12{0, 0};
        double g22 = 0.0;
        for (std::size_t j = 0; j < m1; ++j) {
            g22 += std::norm(db[j]);
            h2 += db[j] * std::conj(value[j]);
            g12 += da[j] * std::conj(db[j]);
        }
        out.t22 = (g22 * norm2 - std::norm(h2)) * inv2;
        const Complex t12 = (g12 * norm2 - h1 * std::conj(h2)) * inv2;
        out.mixed_norm = std::norm(t12);
    }
    out.t11 = std::max(out.t11, 0.0);
    out.t22 = std::max(out.t22, 0.0);
    return out;
}

VolumeEstimate volume(const RationalMap& f, const CompactRegion& region, std::uint64_t samples,
                      const VolumeOptions& opts) {
    const unsigned q = region.dim();
    if (q != 1 && q != 2)
        throw UnsupportedDimension("graph volume implemented for one and two dimensional charts");
    if (f.source_dim() != q) throw DimensionMismatch("map and region dimensions differ");

    // the estimator integrates over the bounding polydisc (extended by the
    // region indicator), so rejection never disturbs the block structure
    std::vector<Complex> bc;
    std::vector<double> br;
    region.bounding(bc, br);
    double bound_volume = 1.0;
    for (double r : br) bound_volume *= M_PI * r * r;

    const unsigned n_terms = q + 1;
    const double w1 = opts.source_weight;
    const double w2 = opts.target_weight;

    RegionSampler sampler(region, opts.seed);
    const std::uint64_t block = 4096;
    const std::uint64_t n_blocks = (samples + block - 1) / block;

    struct BlockSums {
        std::vector<double> sum, sum2;
        double total = 0.0, total2 = 0.0, capped = 0.0;
    };
    std::vector<BlockSums> partial(n_blocks);

    util::parallel_blocks(std::size_t(n_blocks), opts.workers, [&](std::size_t bi) {
        BlockSums sums;
        sums.sum.assign(n_terms, 0.0);
        sums.sum2.assign(n_terms, 0.0);
        const std::uint64_t begin = std::uint64_t(bi) * block;
        const std::uint64_t end = std::min<std::uint64_t>(samples, begin + block);
        for (std::uint64_t i = begin; i < end; ++i) {
            std::vector<Complex> z = sampler.propose(i);
            // the region indicator extends the integrand by zero
            if (!region.contains(z)) continue;
            PullbackDensity d = pullback_density(f, region.chart(), z);
            double terms[3] = {0.0, 0.0, 0.0};
            if (q == 1) {
                terms[0] = w1;
                terms[1] = d.singular ? opts.density_ceiling : w2 * d.t11;
            } else {
                terms[0] = w1 * w1;
                terms[1] = d.singular ? 0.0 : w1 * w2 * d.trace(q);
                terms[2] = d.singular ? opts.density_ceiling : w2 * w2 * std::max(d.det(), 0.0);
            }
            double total = 0.0;
            for (unsigned t = 0; t < n_terms; ++t) total += terms[t];
            if (total > opts.density_ceiling) {
                const double scale = opts.density_ceiling / total;
                sums.capped += total - opts.density_ceiling;
                for (unsigned t = 0; t < n_terms; ++t) terms[t] *= scale;
                total = opts.density_ceiling;
            }
            for (unsigned t = 0; t < n_terms; ++t) {
                sums.sum[t] += terms[t];
                sums.sum2[t] += terms[t] * terms[t];
            }
            sums.total += total;
            sums.total2 += total * total;
        }
        partial[bi] = std::move(sums);
    });

    // merge in fixed block order: bit-identical results for any worker count
    std::vector<double> sum(n_terms, 0.0), sum2(n_terms, 0.0);
    double total = 0.0, total2 = 0.0, capped = 0.0;
    for (const auto& sums : partial) {
        if (sums.sum.empty()) continue;
        for (unsigned t = 0; t < n_terms; ++t) {
            sum[t] += sums.sum[t];
            sum2[t] += sums.sum2[t];
        }
        total += sums.total;
        total2 += sums.total2;
        capped += sums.capped;
    }

    const double n = double(samples);
    auto mc = [&](double s, double s2, double& value, double& err) {
        const double mean = s / n;
        const double var = std::max(0.0, s2 / n - mean * mean);
        value = bound_volume * mean;
        err = bound_volume * std::sqrt(var / n);
    };

    VolumeEstimate est;
    est.samples = samples;
    static const char* kNames1[] = {"base", "pullback"};
    static const char* kNames2[] = {"base", "mixed", "pullback"};
    for (unsigned t = 0; t < n_terms; ++t) {
        VolumeTerm term;
        term.name = q == 1 ? kNames1[t] : kNames2[t];
        mc(sum[t], sum2[t], term.value, term.stderr_value);
        est.breakdown.push_back(term);
    }
    // the accumulated integrand is the (1/q!)-normalized density;
    // the raw integral of w^q is q! times larger
    mc(total, total2, est.value, est.stderr_value);
    const double qfact = q == 1 ? 1.0 : 2.0;
    est.raw_value = est.value * qfact;
    est.capped_mass = bound_volume * capped / n;
    est.region_volume = region.base_volume();
    return est;
}

std::vector<std::pair<Complex, double>> marginal_mass(const RationalMap& f,
                                                      const std::vector<Complex>& z1_grid,
                                                      std::uint64_t fiber_samples,
                                                      double fiber_radius, std::uint64_t seed,
                                                      unsigned workers) {
    if (f.source_dim() != 2)
        throw UnsupportedDimension("marginal fiber mass needs a two-dimensional source");
    std::vector<std::pair<Complex, double>> out(z1_grid.size());
    CompactRegion disc = CompactRegion::polydisc({Complex{0, 0}}, {fiber_radius});
    RegionSampler sampler(disc, seed);
    const double disc_area = M_PI * fiber_radius * fiber_radius;
    util::parallel_blocks(z1_grid.size(), workers, [&](std::size_t gi) {
        const Complex z1 = z1_grid[gi];
        double acc = 0.0;
        for (std::uint64_t i = 0; i < fiber_samples; ++i) {
            std::vector<Complex> z2 = sampler.propose(i);
            PullbackDensity d = pullback_density(f, 0, {z1, z2[0]});
            if (!d.singular) acc += d.t22;
        }
        out[gi] = {z1, disc_area * acc / double(fiber_samples)};
    });
    return out;
}

}  // namespace mero::geom
