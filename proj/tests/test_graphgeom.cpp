#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mero/errors.hpp"
#include "mero/geom/cloud.hpp"
#include "mero/geom/region.hpp"
#include "mero/geom/volume.hpp"
#include "mero/maps/family.hpp"

using namespace mero;
using namespace mero::exact;
using namespace mero::geom;
using namespace mero::maps;

namespace {

HomoPoly z(unsigned i) { return HomoPoly::variable(3, i); }
HomoPoly w(unsigned i) { return HomoPoly::variable(2, i); }
GaussianRational gr(long n, long d = 1) { return GaussianRational(n, d); }

ProjectivePoint pp(std::vector<Complex> v) { return ProjectivePoint(std::move(v)); }

std::mt19937 rng(17);
ProjectivePoint random_point(unsigned m) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    while (true) {
        std::vector<Complex> v(m + 1);
        double n = 0;
        for (auto& c : v) {
            c = {u(rng), u(rng)};
            n += std::norm(c);
        }
        if (n > 1e-3) return ProjectivePoint(std::move(v));
    }
}

}  // namespace

TEST_CASE("fs_distance examples") {
    CHECK(fs_distance(pp({{1, 0}, {0, 0}}), pp({{0, 0}, {1, 0}})) == doctest::Approx(1.0));
    auto p = pp({{0.3, 0.1}, {-2, 0.7}});
    CHECK(fs_distance(p, p) == 0.0);
    // d([1:1],[1:0]) = |1*0 - 1*1| / (sqrt(2)*1) = 1/sqrt(2)
    CHECK(fs_distance(pp({{1, 0}, {1, 0}}), pp({{1, 0}, {0, 0}})) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("fs_distance metric axioms on random triples") {
    for (int trial = 0; trial < 10000; ++trial) {
        auto a = random_point(2), b = random_point(2), c = random_point(2);
        double ab = fs_distance(a, b), ba = fs_distance(b, a);
        CHECK(ab == ba);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(fs_distance(a, a) <= 1e-12);
        CHECK(ab <= fs_distance(a, c) + fs_distance(c, b) + 1e-9);
    }
}

TEST_CASE("fs_distance is scale invariant") {
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_point(2);
        auto b = random_point(2);
        std::vector<Complex> scaled = a.coords();
        Complex lambda{-0.73, 1.9};
        for (auto& c : scaled) c *= lambda;
        CHECK(std::abs(fs_distance(pp(std::move(scaled)), b) - fs_distance(a, b)) < 1e-12);
    }
}

TEST_CASE("region membership and volume") {
    auto bidisc = CompactRegion::polydisc({{0, 0}, {0, 0}}, {1.0, 1.0});
    CHECK(bidisc.contains({{0.5, 0.5}, {0, 0}}));
    CHECK(!bidisc.contains({{1.2, 0}, {0, 0}}));
    CHECK(bidisc.base_volume() == doctest::Approx(M_PI * M_PI));

    auto h = CompactRegion::hartogs(2, 0.25);
    CHECK(h.contains({{0.1, 0}, {0.5, 0}}));    // slab
    CHECK(h.contains({{0.9, 0}, {0.8, 0.4}}));  // collar: |z2| ~ 0.894 > 0.75
    CHECK(!h.contains({{0.5, 0}, {0.2, 0}}));   // inside neither part
    // inclusion-exclusion by hand: pi^2 (r^2 + s - r^2 s), s = 1-(1-r)^2
    const double r = 0.25, s = 1 - 0.75 * 0.75;
    CHECK(h.base_volume() == doctest::Approx(M_PI * M_PI * (r * r + s - r * r * s)));

    auto excluded = bidisc.with_exclusions({{{Complex{0, 0}, Complex{0, 0}}, 0.25}});
    CHECK(!excluded.contains({{0.1, 0}, {0.1, 0}}));
    CHECK(excluded.contains({{0.5, 0}, {0.5, 0}}));
}

TEST_CASE("sample_graph basics") {
    auto disc = CompactRegion::polydisc({{0, 0}}, {1.0});
    // constant map on the disc: every target equals [1 : 2]
    auto constant = RationalMap::normalized(
        SourceKind::Affine, 1, {w(0), w(0).scaled(gr(2))});
    CloudOptions opts;
    opts.samples = 500;
    auto cloud = GraphCloud::sample(constant, disc, opts);
    REQUIRE(cloud.size() == 500);
    auto t0 = cloud.target_point(0);
    for (std::size_t i = 1; i < cloud.size(); ++i)
        CHECK(fs_distance(t0, cloud.target_point(i)) < 1e-12);

    // determinism: same seed, same cloud
    auto cloud2 = GraphCloud::sample(constant, disc, opts);
    CHECK(hausdorff(cloud, cloud2) == 0.0);

    // identity graph sits on the diagonal: compare with an analytic grid
    auto ident = RationalMap::normalized(SourceKind::Affine, 1, {w(0), w(1)});
    auto id_cloud = GraphCloud::sample(ident, disc, opts);
    double worst = 0.0;
    for (std::size_t i = 0; i < id_cloud.size(); ++i) {
        auto src = id_cloud.source_point(i);
        auto tgt = id_cloud.target_point(i);
        worst = std::max(worst, fs_distance(tgt, pp({{1, 0}, src[0]})));
    }
    CHECK(worst < 1e-10);  // graph residual invariant
}

TEST_CASE("sample_graph keeps clear of indeterminacy points") {
    // z1/z2 on the closed bidisc: indeterminacy at the affine origin
    auto f = RationalMap::normalized(SourceKind::Affine, 2, {z(1), z(2)});
    auto bidisc = CompactRegion::polydisc({{0, 0}, {0, 0}}, {1.0, 1.0});
    CloudOptions opts;
    opts.samples = 2000;
    opts.indet_clearance = 1e-2;  // large enough that rejection must happen
    auto cloud = GraphCloud::sample(f, bidisc, opts);
    REQUIRE(cloud.size() == 2000);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        auto s = cloud.source_point(i);
        CHECK(std::sqrt(std::norm(s[0]) + std::norm(s[1])) >= opts.indet_clearance);
    }
}

TEST_CASE("hausdorff examples and axioms") {
    auto disc = CompactRegion::polydisc({{0, 0}}, {1.0});
    auto ident = RationalMap::normalized(SourceKind::Affine, 1, {w(0), w(1)});
    CloudOptions opts;
    opts.samples = 400;
    auto a = GraphCloud::sample(ident, disc, opts);
    CHECK(hausdorff(a, a) == 0.0);

    // singleton clouds collapse to the plain product distance
    CloudOptions one;
    one.samples = 1;
    auto c1 = GraphCloud::sample(ident, disc, one);
    auto doubler = RationalMap::normalized(SourceKind::Affine, 1, {w(0), w(1).scaled(gr(2))});
    auto c2 = GraphCloud::sample(doubler, disc, one);
    CHECK(hausdorff(c1, c2) == doctest::Approx(c1.distance(0, c2, 0)));

    // mismatched regions are rejected
    auto other = CompactRegion::polydisc({{0, 0}}, {0.5});
    auto b = GraphCloud::sample(ident, other, opts);
    CHECK_THROWS_AS(hausdorff(a, b), MetricMismatch);
}

TEST_CASE("grid accelerated hausdorff equals brute force") {
    auto bidisc = CompactRegion::polydisc({{0, 0}, {0, 0}}, {1.0, 1.0});
    auto f = RationalMap::normalized(SourceKind::Affine, 2,
                                     {z(0) * z(0), z(1) * z(1) - z(0) * z(2)});
    auto g = RationalMap::normalized(SourceKind::Affine, 2,
                                     {z(0) * z(0), z(1) * z(2) - z(0) * z(0)});
    CloudOptions oa;
    oa.samples = 700;
    CloudOptions ob;
    ob.samples = 900;
    ob.seed = 999;
    auto a = GraphCloud::sample(f, bidisc, oa);
    auto b = GraphCloud::sample(g, bidisc, ob);
    double grid = hausdorff(a, b, HausdorffAlgo::Grid);
    double brute = hausdorff(a, b, HausdorffAlgo::BruteForce);
    CHECK(grid == brute);
}

TEST_CASE("hausdorff of 1/(z - 1/n) against 1/z shrinks like the analytic bound") {
    auto disc = CompactRegion::polydisc({{0, 0}}, {1.0});
    auto limit = RationalMap::normalized(SourceKind::Affine, 1, {w(0), w(1)});  // [1 : z]
    // f_n lift: [z0 : z1 - z0/n]
    auto fam = MapFamily::coefficients(
        SourceKind::Affine, 1,
        {parse_family_poly("(1)*z0^1*z1^0"),
         parse_family_poly("(1)*z0^0*z1^1 + (-1/n)*z0^1*z1^0")});
    CloudOptions opts;
    opts.samples = 10000;
    auto limit_cloud = GraphCloud::sample(limit, disc, opts);
    double prev = 1e9;
    for (long n : {25L, 50L, 100L}) {
        auto cloud = GraphCloud::sample(fam.instantiate(n), disc, opts);
        double d = hausdorff(cloud, limit_cloud);
        // matched sources bound the distance by sup_z chordal(f_n(z), f(z)) <= 1/n
        CHECK(d <= 1.0 / double(n) + 1e-9);
        CHECK(d < prev);
        prev = d;
        if (n == 100) CHECK(d < 0.05);
    }
}

TEST_CASE("hausdorff triangle inequality on random clouds") {
    auto disc = CompactRegion::polydisc({{0, 0}}, {1.0});
    std::vector<GraphCloud> clouds;
    for (int k = 0; k < 3; ++k) {
        auto f = RationalMap::normalized(
            SourceKind::Affine, 1,
            {w(0), w(1).scaled(gr(k + 1)) + w(0).scaled(gr(k - 1, 2))});
        CloudOptions opts;
        opts.samples = 300;
        opts.seed = 100 + k;
        clouds.push_back(GraphCloud::sample(f, disc, opts));
    }
    double ab = hausdorff(clouds[0], clouds[1]);
    double ac = hausdorff(clouds[0], clouds[2]);
    double cb = hausdorff(clouds[2], clouds[1]);
    CHECK(ab <= ac + cb + 1e-9);
}

TEST_CASE("volume: constant map over the bidisc is the base area pi^2") {
    auto bidisc = CompactRegion::polydisc({{0, 0}, {0, 0}}, {1.0, 1.0});
    auto constant = RationalMap::normalized(SourceKind::Affine, 2,
                                            {z(0), z(0).scaled(gr(3)), z(0).scaled(gr(7))});
    auto est = volume(constant, bidisc, 20000);
    CHECK(std::abs(est.value - M_PI * M_PI) <= std::max(3.0 * est.stderr_value, 1e-9));
    CHECK(est.raw_value == doctest::Approx(2.0 * est.value));
    // breakdown adds up and every term is non-negative
    double sum = 0.0;
    for (const auto& t : est.breakdown) {
        CHECK(t.value >= 0.0);
        sum += t.value;
    }
    CHECK(std::abs(sum - est.value) < 1e-9);
}

TEST_CASE("volume: identity disc to CP^1 pulls back area pi/2") {
    auto disc = CompactRegion::polydisc({{0, 0}}, {1.0});
    auto ident = RationalMap::normalized(SourceKind::Affine, 1, {w(0), w(1)});
    VolumeOptions vo;
    vo.source_weight = 0.0;  // isolate the pullback term
    auto est = volume(ident, disc, 100000, vo);
    CHECK(std::abs(est.value - M_PI / 2.0) <= 3.0 * est.stderr_value);
    CHECK(est.stderr_value < 0.01);

    // Monte-Carlo convergence sanity: doubling N halves stderr within x1.5
    auto est2 = volume(ident, disc, 200000, vo);
    CHECK(est2.stderr_value <= est.stderr_value / std::sqrt(2.0) * 1.5);
}

TEST_CASE("volume: doubling-map iterates stay bounded") {
    auto bidisc = CompactRegion::polydisc({{0, 0}, {0, 0}}, {0.9, 0.9});
    auto fam = MapFamily::coefficients(
        SourceKind::Projective, 2,
        {parse_family_poly("(1)*z0^1*z1^0*z2^0"), parse_family_poly("(2^n)*z0^0*z1^1*z2^0"),
         parse_family_poly("(2^n)*z0^0*z1^0*z2^1")});
    double lo = 1e300, hi = 0.0;
    for (long n = 1; n <= 20; ++n) {
        auto est = volume(fam.instantiate(n), bidisc, 20000);
        lo = std::min(lo, est.value);
        hi = std::max(hi, est.value);
    }
    CHECK(hi / lo < 2.0);
    CHECK(hi < 1e3);
}

TEST_CASE("volume monotonicity under region inclusion") {
    auto small = CompactRegion::polydisc({{0, 0}, {0, 0}}, {0.6, 0.6});
    auto big = CompactRegion::polydisc({{0, 0}, {0, 0}}, {1.0, 1.0});
    auto f = RationalMap::normalized(SourceKind::Affine, 2, {z(0), z(1), z(2)});
    auto e1 = volume(f, small, 20000);
    auto e2 = volume(f, big, 20000);
    CHECK(e1.value <= e2.value + 3.0 * (e1.stderr_value + e2.stderr_value));
}

TEST_CASE("marginal fiber mass") {
    std::vector<Complex> grid;
    for (double x = -0.8; x <= 0.8; x += 0.4) grid.push_back({x, 0.0});

    // constant map: the pullback vanishes
    auto constant = RationalMap::normalized(SourceKind::Affine, 2,
                                            {z(0), z(0).scaled(gr(5))});
    for (const auto& [z1, mu] : marginal_mass(constant, grid, 2000)) CHECK(mu == 0.0);

    // f(z1,z2) = z2 into CP^1: mu(z1) = pi/2 for every z1 (same oracle as
    // the disc pullback: integral of (1+|z|^2)^-2 over the unit disc)
    auto proj2 = RationalMap::normalized(SourceKind::Affine, 2, {z(0), z(2)});
    for (const auto& [z1, mu] : marginal_mass(proj2, grid, 60000))
        CHECK(mu == doctest::Approx(M_PI / 2.0).epsilon(0.02));

    // f(z1,z2) = z1: no z2 dependence, t22 = 0
    auto proj1 = RationalMap::normalized(SourceKind::Affine, 2, {z(0), z(1)});
    for (const auto& [z1, mu] : marginal_mass(proj1, grid, 2000)) CHECK(mu == 0.0);
}
