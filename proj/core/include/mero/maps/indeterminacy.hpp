#pragma once

#include <vector>

#include "mero/maps/rational_map.hpp"

namespace mero::maps {

/// Finite common zero set of the map components; finite on surfaces since
/// the tuple is gcd-free.
struct IndetSet {
    std::vector<ProjectivePoint> points;
    double residual_tolerance = 0.0;  // 0 marks the exact path
};

enum class IndetPath {
    Auto,     ///< exact when every component is a monomial or binomial
    Exact,    ///< throws if the exact path cannot certify the result
    Numeric,  ///< resultants + companion-matrix roots + residual filter
};

struct IndetOptions {
    IndetPath path = IndetPath::Auto;
    double residual_tol = 1e-8;  // accept candidates below this residual
    double dedup_tol = 1e-6;     // chordal distance for projective dedup
};

/// Indeterminacy locus of a map with a surface source (n = 2), as the
/// common projective zeros of the components.  Throws NotASurfaceSource
/// for other sources and RootFindingFailed when the zero set is not finite
/// (non-reduced input) or resists both paths.
IndetSet indeterminacy_locus(const RationalMap& f, const IndetOptions& opts = {});

}  // namespace mero::maps
