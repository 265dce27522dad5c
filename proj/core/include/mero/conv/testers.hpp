#pragma once

#include "mero/conv/report.hpp"
#include "mero/geom/region.hpp"

namespace mero::conv {

using geom::CompactRegion;

/// Strong (graph-Hausdorff) convergence on the compact region.  With a limit
/// in the spec, the trace is the distance of each cloud to the limit cloud
/// and the verdict needs a decreasing tail ending below the tolerance;
/// without a limit, the tail clouds must pack into few recurring clusters
/// of small diameter (the relative-compactness reading, which accepts
/// periodic sequences like the Cremona iterates).
ConvergenceReport s_converge(const FamilySpec& fam, const CompactRegion& region,
                             const std::vector<long>& schedule, const ConvOptions& opts = {});

/// Weak convergence: strong convergence off a finite exceptional set.
/// Failing source samples are clustered into candidate points, and the
/// strong test is repeated on the region minus shrinking balls around them.
ConvergenceReport w_converge(const FamilySpec& fam, const CompactRegion& region,
                             const std::vector<long>& schedule, const ConvOptions& opts = {});

/// Hausdorff convergence of the raw graphs without any exclusions, plus the
/// vertical/graph decomposition of the limit cloud and volume diagnostics.
ConvergenceReport gamma_converge(const FamilySpec& fam, const CompactRegion& region,
                                 const std::vector<long>& schedule, const ConvOptions& opts = {});

/// Indeterminacy-stabilization proxy: the verdict is converges only when
/// I(f_n) inside the region is eventually constant (chordal tolerance) AND
/// the strong test passes.  Flagged as a proxy in every report.
ConvergenceReport stabilization_test(const FamilySpec& fam, const CompactRegion& region,
                                     const std::vector<long>& schedule,
                                     const ConvOptions& opts = {});

/// Rouche-principle checks on an s-convergent family: (a) a holomorphic
/// limit forces the f_n to be holomorphic on a shrunken region for large n;
/// (b) holomorphic f_n force the limit to be holomorphic there.  Throws
/// RoucheViolation when the guaranteed property fails numerically.
ConvergenceReport rouche_check(const FamilySpec& fam, const CompactRegion& region,
                               const std::vector<long>& schedule, const ConvOptions& opts = {});

/// Homogeneous-lift criterion: sup-normalized component tuples must
/// converge uniformly; equivalent to weak convergence on the scripted
/// scenarios (the equivalence is asserted by the test suites, not here).
ConvergenceReport lift_convergence_check(const FamilySpec& fam, const CompactRegion& region,
                                         const std::vector<long>& schedule,
                                         const ConvOptions& opts = {});

/// Hartogs propagation: s-convergence on the figure H^2(r) must propagate
/// to the full bidisc off shrinking balls around the limit's indeterminacy
/// points.  Throws PropagationViolation when an exceptional point appears
/// away from I(limit).
ConvergenceReport hartogs_propagation(const FamilySpec& fam, double r,
                                      const std::vector<long>& schedule,
                                      const ConvOptions& opts = {});

}  // namespace mero::conv
