#include "mero/geom/sampler.hpp"

#include <cmath>

#include "mero/errors.hpp"
#include "mero/util/hash.hpp"

namespace mero::geom {

namespace {
constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};
}

double radical_inverse(std::uint64_t index, unsigned base) {
    double inv_base = 1.0 / double(base);
    double scale = inv_base;
    double value = 0.0;
    while (index) {
        value += double(index % base) * scale;
        index /= base;
        scale *= inv_base;
    }
    return value;
}

RegionSampler::RegionSampler(CompactRegion region, std::uint64_t seed)
    : region_(std::move(region)), seed_(seed) {
    region_.bounding(bound_center_, bound_radii_);
    const unsigned dims = 2 * region_.dim();
    if (dims > 8) throw UnsupportedDimension("sampler supports up to four complex dimensions");
    rotation_.resize(dims);
    for (unsigned d = 0; d < dims; ++d)
        rotation_[d] = util::to_unit(util::hash_mix(seed_, 0xC0FFEEull + d));
}

std::vector<Complex> RegionSampler::propose(std::uint64_t index) const {
    const unsigned q = region_.dim();
    std::vector<Complex> z(q);
    for (unsigned i = 0; i < q; ++i) {
        double u = radical_inverse(index + 1, kPrimes[2 * i]) + rotation_[2 * i];
        double v = radical_inverse(index + 1, kPrimes[2 * i + 1]) + rotation_[2 * i + 1];
        u -= std::floor(u);
        v -= std::floor(v);
        const double r = bound_radii_[i] * std::sqrt(u);
        z[i] = bound_center_[i] + std::polar(r, 2.0 * M_PI * v);
    }
    return z;
}

std::vector<Complex> RegionSampler::collect(std::size_t count, std::uint64_t first_proposal) const {
    const unsigned q = region_.dim();
    std::vector<Complex> out;
    out.reserve(count * q);
    std::uint64_t index = first_proposal;
    std::uint64_t misses = 0;
    std::size_t found = 0;
    while (found < count) {
        std::vector<Complex> z = propose(index++);
        if (region_.contains(z)) {
            out.insert(out.end(), z.begin(), z.end());
            ++found;
            misses = 0;
        } else if (++misses > 100000) {
            throw RegionEmpty("no accepted sample in 100000 proposals; region is (nearly) empty");
        }
    }
    return out;
}

}  // namespace mero::geom
