#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mero/errors.hpp"
#include "mero/exact/poly_text.hpp"
#include "mero/maps/family.hpp"
#include "mero/maps/indeterminacy.hpp"
#include "mero/maps/rational_map.hpp"

using namespace mero;
using namespace mero::exact;
using namespace mero::maps;

namespace {

HomoPoly z(unsigned i) { return HomoPoly::variable(3, i); }

GaussianRational gr(long num, long den = 1) { return GaussianRational(num, den); }

RationalMap doubling_map() {
    // [z0 : 2 z1 : 2 z2]
    return RationalMap::normalized(SourceKind::Projective, 2,
                                   {z(0), z(1).scaled(gr(2)), z(2).scaled(gr(2))});
}

bool contains_point(const IndetSet& s, std::vector<Complex> hom, double tol = 1e-6) {
    ProjectivePoint p(std::move(hom));
    for (const auto& q : s.points)
        if (fs_distance(p, q) < tol) return true;
    return false;
}

}  // namespace

TEST_CASE("normal form divides out the component gcd") {
    // [z0 z2 : z1 z2] -> [z0 : z1]
    auto f = RationalMap::normalized(SourceKind::Projective, 2, {z(0) * z(2), z(1) * z(2)});
    CHECK(f.degree() == 1);
    CHECK(f.components()[0] == z(0));
    CHECK(f.components()[1] == z(1));

    // an already reduced map is unchanged
    auto g = RationalMap::normalized(SourceKind::Projective, 2, {z(0), z(1)});
    CHECK(f == g);

    // Cremona times z0 z1 z2 reduces back to Cremona
    HomoPoly common = z(0) * z(1) * z(2);
    auto cremona = RationalMap::cremona();
    auto inflated = RationalMap::normalized(
        SourceKind::Projective, 2,
        {z(1) * z(2) * common, z(0) * z(2) * common, z(0) * z(1) * common});
    CHECK(inflated == cremona);
    CHECK(inflated.degree() == 2);

    CHECK_THROWS_AS(
        RationalMap::normalized(SourceKind::Projective, 2, {HomoPoly(3, 2), HomoPoly(3, 2)}),
        AllZero);
    CHECK_THROWS_AS(RationalMap::normalized(SourceKind::Projective, 2, {z(0), z(0) * z(1)}),
                    DegreeMismatch);
}

TEST_CASE("Cremona composed with itself is the identity") {
    auto cremona = RationalMap::cremona();
    auto info = compose_info(cremona, cremona);
    CHECK(info.map.is_identity());
    CHECK(info.cancelled_degree == 3);  // z0 z1 z2 divided out
    CHECK(info.map.degree() == 1);

    auto f = doubling_map();
    CHECK(compose(f, RationalMap::identity(2)) == f);
    CHECK(compose(RationalMap::identity(2), f) == f);
}

TEST_CASE("doubling map has the closed-form iterates") {
    auto f = doubling_map();
    RationalMap power = f;
    for (unsigned k = 2; k <= 20; ++k) {
        power = compose(f, power);
        GaussianRational two_k = gr(2).pow(k);
        auto expect = RationalMap::normalized(
            SourceKind::Projective, 2, {z(0), z(1).scaled(two_k), z(2).scaled(two_k)});
        CHECK(power == expect);
        CHECK(power.degree() == 1);
    }
}

TEST_CASE("degree drop law: deg(g.f) + cancelled = deg(g) deg(f)") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto rand_linear = [&] {
        HomoPoly p(3, 1);
        while (p.is_zero())
            p = z(0).scaled(gr(coeff(rng))) + z(1).scaled(gr(coeff(rng))) +
                z(2).scaled(gr(coeff(rng)));
        return p;
    };
    for (int trial = 0; trial < 25; ++trial) {
        auto f = RationalMap::normalized(SourceKind::Projective, 2,
                                         {rand_linear() * rand_linear(),
                                          rand_linear() * rand_linear(),
                                          rand_linear() * rand_linear()});
        auto g = RationalMap::normalized(SourceKind::Projective, 2,
                                         {rand_linear(), rand_linear(), rand_linear()});
        auto info = compose_info(g, f);
        CHECK(info.map.degree() + info.cancelled_degree == g.degree() * f.degree());
        CHECK(exact::gcd(info.map.components()).degree() == 0);  // normal form
    }
}

TEST_CASE("iterate") {
    auto cremona = RationalMap::cremona();
    auto info = iterate(cremona, 2);
    CHECK(info.map.is_identity());
    CHECK(info.degree_trace == std::vector<unsigned>{2, 1});

    auto f10 = iterate(doubling_map(), 10);
    GaussianRational c = gr(1024);
    auto expect = RationalMap::normalized(SourceKind::Projective, 2,
                                          {z(0), z(1).scaled(c), z(2).scaled(c)});
    CHECK(f10.map == expect);

    CHECK(iterate(cremona, 1).map == cremona);

    // a generic quadratic map blows past a tiny bit budget
    auto generic = RationalMap::normalized(
        SourceKind::Projective, 2,
        {z(0) * z(0) + z(1) * z(2), z(1) * z(1) + z(0) * z(2).scaled(gr(3)),
         z(2) * z(2) + z(0) * z(1).scaled(gr(5))});
    CHECK_THROWS_AS(iterate(generic, 12, 2000), CoefficientOverflowBudgetExceeded);
}

TEST_CASE("indeterminacy of Cremona: three coordinate points, both paths") {
    auto cremona = RationalMap::cremona();

    IndetOptions exact_opts;
    exact_opts.path = IndetPath::Exact;
    auto exact_set = indeterminacy_locus(cremona, exact_opts);
    REQUIRE(exact_set.points.size() == 3);
    CHECK(contains_point(exact_set, {{1, 0}, {0, 0}, {0, 0}}));
    CHECK(contains_point(exact_set, {{0, 0}, {1, 0}, {0, 0}}));
    CHECK(contains_point(exact_set, {{0, 0}, {0, 0}, {1, 0}}));
    for (const auto& p : exact_set.points) REQUIRE(p.has_exact());

    IndetOptions num_opts;
    num_opts.path = IndetPath::Numeric;
    auto num_set = indeterminacy_locus(cremona, num_opts);
    REQUIRE(num_set.points.size() == 3);
    for (const auto& p : num_set.points) {
        // residuals of all components below the acceptance tolerance
        for (const auto& comp : cremona.components())
            CHECK(std::abs(comp.eval_float(p.coords())) < 1e-8);
        bool matched = false;
        for (const auto& q : exact_set.points) matched = matched || fs_distance(p, q) < 1e-6;
        CHECK(matched);
    }
}

TEST_CASE("indeterminacy: identity and the [z1 : z2] projection") {
    CHECK(indeterminacy_locus(RationalMap::identity(2)).points.empty());

    auto proj = RationalMap::normalized(SourceKind::Projective, 2, {z(1), z(2)});
    auto s = indeterminacy_locus(proj);
    REQUIRE(s.points.size() == 1);
    CHECK(contains_point(s, {{1, 0}, {0, 0}, {0, 0}}));

    auto num = indeterminacy_locus(proj, {IndetPath::Numeric, 1e-8, 1e-6});
    REQUIRE(num.points.size() == 1);
    CHECK(contains_point(num, {{1, 0}, {0, 0}, {0, 0}}));

    CHECK_THROWS_AS(indeterminacy_locus(RationalMap::identity(1)), NotASurfaceSource);
}

TEST_CASE("indeterminacy exact path handles binomial components") {
    // components (z0^2 - z1^2, z2^2, z0 z1 - z1^2): the only common zero is [1:1:0]
    auto f = RationalMap::normalized(SourceKind::Projective, 2,
                                     {z(0) * z(0) - z(1) * z(1), z(2) * z(2),
                                      z(0) * z(1) - z(1) * z(1)});
    IndetOptions opts;
    opts.path = IndetPath::Exact;
    auto s = indeterminacy_locus(f, opts);
    REQUIRE(s.points.size() == 1);
    CHECK(contains_point(s, {{1, 0}, {1, 0}, {0, 0}}));

    auto num = indeterminacy_locus(f, {IndetPath::Numeric, 1e-8, 1e-6});
    REQUIRE(num.points.size() == 1);
    CHECK(contains_point(num, {{1, 0}, {1, 0}, {0, 0}}));
}

TEST_CASE("point_image spreads over CP^1 at an indeterminacy point") {
    // f = z2/z1 on affine C^2, i.e. [z2 : z1]; the origin maps onto all of CP^1
    auto f = RationalMap::normalized(SourceKind::Affine, 2, {z(2), z(1)});
    ProjectivePoint origin(std::vector<Complex>{{1, 0}, {0, 0}, {0, 0}});
    auto cloud = point_image(f, origin, 64, 1e-4);
    REQUIRE(cloud.size() == 64);
    double spread = 0.0;
    for (std::size_t i = 0; i < cloud.size(); ++i)
        for (std::size_t j = i + 1; j < cloud.size(); ++j)
            spread = std::max(spread, fs_distance(cloud[i], cloud[j]));
    CHECK(spread > 0.9);

    // off the locus: a singleton agreeing with direct evaluation
    ProjectivePoint a(std::vector<Complex>{{1, 0}, {0.5, 0}, {0.25, 0}});
    auto single = point_image(f, a, 64, 1e-4);
    REQUIRE(single.size() == 1);
    CHECK(fs_distance(single[0], f.eval_chart(0, {{0.5, 0}, {0.25, 0}})) < 1e-10);
}

TEST_CASE("point_image of Cremona at [1:0:0] fills the line z0 = 0") {
    auto cloud = point_image(RationalMap::cremona(),
                             ProjectivePoint(std::vector<Complex>{{1, 0}, {0, 0}, {0, 0}}), 64,
                             1e-8);
    REQUIRE(cloud.size() == 64);
    for (const auto& p : cloud) CHECK(std::abs(p.coords()[0]) < 1e-6);
}

TEST_CASE("restrict_to_line") {
    // f = [z1 : z0] restricted to the line z1 = c z0 is the constant [c : 1]
    auto f = RationalMap::normalized(SourceKind::Projective, 2, {z(1), z(0)});
    GaussianRational c(3, 7);
    auto line = line_through({gr(1), c, gr(0)}, {gr(0), gr(0), gr(1)});  // [s : c s : t]
    auto r = restrict_to_line(f, line);
    CHECK(r.degree() == 0);
    auto expect = RationalMap::normalized(SourceKind::Projective, 1,
                                          {HomoPoly::constant(2, c), HomoPoly::one(2)});
    CHECK(r == expect);

    // identity restricted to a line is the line itself (degree 1)
    auto id_line = restrict_to_line(RationalMap::identity(2), line);
    CHECK(id_line.degree() == 1);
    CHECK(id_line == line);

    // Cremona on {z2 = z0}: [z1 z0 : z0^2 : z0 z1] -> [z1 : z0 : z1]
    auto diag = line_through({gr(1), gr(0), gr(1)}, {gr(0), gr(1), gr(0)});  // [s : t : s]
    auto rc = restrict_to_line(RationalMap::cremona(), diag);
    auto s_var = HomoPoly::variable(2, 0), t_var = HomoPoly::variable(2, 1);
    auto expect_c = RationalMap::normalized(SourceKind::Projective, 1, {t_var, s_var, t_var});
    CHECK(rc == expect_c);
}

TEST_CASE("family instantiation") {
    // (z1 - 1/n)/z2 lifted to [z1 - (1/n) z0 : z2]
    auto fam = MapFamily::coefficients(
        SourceKind::Affine, 2,
        {parse_family_poly("(1)*z0^0*z1^1*z2^0 + (-1/n)*z0^1*z1^0*z2^0"),
         parse_family_poly("(1)*z0^0*z1^0*z2^1")});
    auto f2 = fam.instantiate(2);
    auto expect = RationalMap::normalized(SourceKind::Affine, 2,
                                          {z(1) - z(0).scaled(gr(1, 2)), z(2)});
    CHECK(f2 == expect);

    // [z0 : 2^n z1 : 2^n z2] at n = 3
    auto pow_fam = MapFamily::coefficients(
        SourceKind::Projective, 2,
        {parse_family_poly("(1)*z0^1*z1^0*z2^0"), parse_family_poly("(2^n)*z0^0*z1^1*z2^0"),
         parse_family_poly("(2^n)*z0^0*z1^0*z2^1")});
    auto f3 = pow_fam.instantiate(3);
    auto expect3 = RationalMap::normalized(SourceKind::Projective, 2,
                                           {z(0), z(1).scaled(gr(8)), z(2).scaled(gr(8))});
    CHECK(f3 == expect3);

    // a constant family ignores n
    auto const_fam = MapFamily::coefficients(
        SourceKind::Projective, 2,
        {parse_family_poly("(1)*z0^1*z1^0*z2^0"), parse_family_poly("(1)*z0^0*z1^1*z2^0"),
         parse_family_poly("(1)*z0^0*z1^0*z2^1")});
    CHECK(const_fam.instantiate(1) == const_fam.instantiate(77));

    // division by zero at a specific n
    auto bad = MapFamily::coefficients(
        SourceKind::Projective, 1,
        {parse_family_poly("(1/(n-5))*z0^1*z1^0"), parse_family_poly("(1)*z0^0*z1^1")});
    CHECK_NOTHROW(bad.instantiate(4));
    CHECK_THROWS_AS(bad.instantiate(5), ExpressionDomainError);

    // iterate families: Cremona at even n is the identity
    auto it_fam = MapFamily::iterates(RationalMap::cremona());
    CHECK(it_fam.instantiate(2).is_identity());
    CHECK(it_fam.instantiate(3) == RationalMap::cremona());
}

TEST_CASE("expression grammar evaluates exactly") {
    CHECK(Expr::parse("1/2 + 1/3").eval(1) == BigRational(5, 6));
    CHECK(Expr::parse("2^n").eval(10) == BigRational(1024));
    CHECK(Expr::parse("-1/n").eval(4) == BigRational(-1, 4));
    CHECK(Expr::parse("(n+1)*(n-1)").eval(7) == BigRational(48));
    CHECK(Expr::parse("n^2 - 1").eval(5) == BigRational(24));
    CHECK(Expr::parse("2^-2").eval(1) == BigRational(1, 4));
    CHECK_THROWS_AS(Expr::parse("1/(n-3)").eval(3), ExpressionDomainError);
    CHECK_THROWS_AS(Expr::parse("1 +"), Error);
}
