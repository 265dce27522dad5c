#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mero/exact/homopoly.hpp"
#include "mero/maps/projective.hpp"

namespace mero::maps {

/// Where a map is defined.  Affine sources are stored through their
/// projective lift: affine coordinates (w_1,...,w_n) sit in the chart
/// z_0 = 1, so the components are homogeneous in n+1 variables either way
/// and composition, graphs and indeterminacy share one code path.
enum class SourceKind { Affine, Projective };

struct IterateInfo;

/// Meromorphic (rational) map to CP^m in gcd-free normal form: m+1
/// homogeneous components of one common degree whose gcd is 1.
class RationalMap {
public:
    /// Divides the tuple by its gcd.  Throws AllZero / DegreeMismatch.
    static RationalMap normalized(SourceKind kind, unsigned source_dim,
                                  std::vector<exact::HomoPoly> components);

    static RationalMap identity(unsigned dim);  // CP^dim -> CP^dim
    static RationalMap cremona();               // [z1 z2 : z0 z2 : z0 z1]

    SourceKind source_kind() const { return source_kind_; }
    unsigned source_dim() const { return source_dim_; }
    unsigned target_dim() const { return unsigned(components_.size()) - 1; }
    unsigned degree() const { return components_.front().degree(); }
    const std::vector<exact::HomoPoly>& components() const { return components_; }
    /// Partial derivative of component j with respect to variable v.
    const exact::HomoPoly& partial(unsigned j, unsigned v) const {
        return partials_[j * (source_dim_ + 1) + v];
    }

    std::size_t bit_size() const;

    /// Projective equality of the component tuples (common scalar factored
    /// out through a canonical scaling).
    friend bool operator==(const RationalMap& a, const RationalMap& b);

    bool is_identity() const;

    /// Raw component values at homogeneous float coordinates.
    std::vector<Complex> eval_raw(const std::vector<Complex>& hom) const;
    /// Canonical target point; throws when all components vanish (the
    /// argument is an indeterminacy point at float precision).
    ProjectivePoint eval(const std::vector<Complex>& hom) const;
    /// Evaluate at affine chart coordinates (chart of the projective
    /// source, or the canonical z0=1 lift for affine sources).
    ProjectivePoint eval_chart(unsigned chart, const std::vector<Complex>& affine) const;
    std::vector<Complex> eval_chart_raw(unsigned chart, const std::vector<Complex>& affine) const;

    std::vector<exact::GaussianRational> eval_exact(
        const std::vector<exact::GaussianRational>& hom) const;

    std::string describe() const;

private:
    RationalMap() = default;
    SourceKind source_kind_ = SourceKind::Projective;
    unsigned source_dim_ = 0;
    std::vector<exact::HomoPoly> components_;
    std::vector<exact::HomoPoly> partials_;  // (m+1) x (n+1), row-major
};

/// Insert 1 at `chart` to lift affine coordinates to homogeneous ones.
std::vector<Complex> lift_chart(unsigned chart, const std::vector<Complex>& affine);

struct ComposeInfo {
    RationalMap map;
    unsigned cancelled_degree = 0;  // degree of the gcd divided out
};

/// g after f.  Requires f's target and g's source to be the same CP^k.
ComposeInfo compose_info(const RationalMap& g, const RationalMap& f);
RationalMap compose(const RationalMap& g, const RationalMap& f);

struct IterateInfo {
    RationalMap map;                     // f^k in normal form
    std::vector<unsigned> degree_trace;  // deg(f^1), ..., deg(f^k)
};

/// k-fold reduced composition of a projective self-map.  The exact
/// coefficients may grow; the total bit size is capped by `bit_budget`
/// (CoefficientOverflowBudgetExceeded on violation).
IterateInfo iterate(const RationalMap& f, unsigned k, std::size_t bit_budget = 1'000'000);

/// The projective line through two exact points of CP^2, as a degree-1 map
/// CP^1 -> CP^2.
RationalMap line_through(const std::vector<exact::GaussianRational>& a,
                         const std::vector<exact::GaussianRational>& b);

/// Restriction of f to a parametrized line, reduced; the result has empty
/// indeterminacy on its CP^1 domain.  Throws LineInsideIndeterminacy when
/// the pulled-back components vanish identically.
RationalMap restrict_to_line(const RationalMap& f, const RationalMap& line);

/// Cluster-set sample of f at `a`: values along `directions` rays at
/// distance `radius` from `a` in the given chart.  Off the indeterminacy
/// locus this collapses to the single value f(a).
std::vector<ProjectivePoint> point_image(const RationalMap& f, const ProjectivePoint& a,
                                         unsigned directions, double radius,
                                         unsigned chart = 0);

}  // namespace mero::maps
