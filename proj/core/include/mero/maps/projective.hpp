#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "mero/exact/rational.hpp"

namespace mero::maps {

using Complex = std::complex<double>;

/// Point of CP^m in float homogeneous coordinates, canonicalized so the
/// largest-modulus coordinate equals 1.  An optional exact representative
/// (first nonzero coordinate scaled to 1) travels along when available.
class ProjectivePoint {
public:
    ProjectivePoint() = default;
    explicit ProjectivePoint(std::vector<Complex> coords);
    ProjectivePoint(std::vector<Complex> coords, std::vector<exact::GaussianRational> exact);

    static ProjectivePoint from_exact(const std::vector<exact::GaussianRational>& coords);

    const std::vector<Complex>& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size() - 1; }  // m for CP^m
    bool has_exact() const { return exact_.has_value(); }
    const std::vector<exact::GaussianRational>& exact() const { return *exact_; }

    /// Affine coordinates in the chart where z_chart = 1, or nullopt when
    /// the point is (numerically) on that chart's hyperplane at infinity.
    std::optional<std::vector<Complex>> chart_coords(unsigned chart, double tol = 1e-12) const;

private:
    std::vector<Complex> coords_;
    std::optional<std::vector<exact::GaussianRational>> exact_;
};

/// Chordal Fubini-Study distance: |p ^ q| / (|p| |q|), the sine of the
/// angle between the two complex lines.  Symmetric, in [0,1], zero exactly
/// on projectively equal points, and invariant under coordinate rescaling.
double fs_distance(const ProjectivePoint& p, const ProjectivePoint& q);

/// Same metric on raw unit-normalized coordinate spans (cloud fast path).
double fs_distance_unit(const Complex* p, const Complex* q, std::size_t ncoords);

/// Scale a coordinate vector to unit l2 norm; returns false on zero input.
bool normalize_unit(std::vector<Complex>& coords);

}  // namespace mero::maps
