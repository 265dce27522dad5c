#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mero/geom/cloud.hpp"
#include "mero/maps/family.hpp"

namespace mero::conv {

using geom::Complex;

enum class Notion { Strong, Weak, Gamma, Stabilized, Def1Series, Def2Spherical };
enum class Verdict { Converges, Undecided, Diverges };

const char* to_string(Notion n);
const char* to_string(Verdict v);
/// CLI exit codes: converges 0, undecided 1, diverges 2.
int exit_code(Verdict v);

struct TracePoint {
    long n = 0;
    double value = 0.0;
};

/// Vertical-versus-graph split of a limit cloud, plus the volume
/// diagnostics that are reported but never asserted.
struct Decomposition {
    std::vector<std::vector<Complex>> vertical_sources;  // chart coordinates
    double fiber_diam_tol = 0.1;
    std::vector<TracePoint> volume_trace;            // vol of late iterate graphs
    std::optional<double> graph_part_volume;         // vol of the limit map's graph
    std::optional<double> excess_volume;             // numeric analogue of the vertical mass
    std::optional<double> vertical_lower_bound_rhs;  // nu * number of vertical points
};

/// Verdict record shared by all convergence testers.
struct ConvergenceReport {
    std::string scenario;
    Notion notion = Notion::Strong;
    Verdict verdict = Verdict::Undecided;
    std::vector<TracePoint> distance_trace;
    std::vector<std::vector<Complex>> exceptional_points;  // chart coordinates
    std::vector<double> exceptional_radii;                 // excision radii that passed
    std::optional<Decomposition> decomposition;
    std::vector<std::string> flags;
    std::string details;
};

/// Sequence under test: one family per target factor (a tuple models maps
/// into a product of projective spaces), with optional factorwise limits.
struct FamilySpec {
    std::vector<maps::MapFamily> factors;
    std::optional<std::vector<maps::RationalMap>> limit;

    std::vector<maps::RationalMap> instantiate(long n) const {
        std::vector<maps::RationalMap> out;
        out.reserve(factors.size());
        for (const auto& f : factors) out.push_back(f.instantiate(n));
        return out;
    }
};

struct ConvOptions {
    std::size_t samples = 10000;
    std::uint64_t seed = 12345;
    double tol = 2e-2;        ///< product-metric Hausdorff tolerance
    double tail_slack = 0.2;  ///< allowed non-monotonicity in the tail
    unsigned tail_window = 5;
    unsigned max_clusters = 3;  ///< limit-point count accepted as compact
    double indet_clearance = 1e-4;
    unsigned max_exceptional = 16;
    std::vector<double> radius_schedule = {0.2, 0.1, 0.05};
    double fiber_diam_tol = 0.1;
    std::optional<double> nu;  ///< user-supplied constant for the vertical bound
    double fs_scale = 1.0;
    double stabilize_tol = 1e-6;
    unsigned workers = 0;
};

}  // namespace mero::conv
