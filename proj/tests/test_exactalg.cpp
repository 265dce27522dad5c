#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "mero/errors.hpp"
#include "mero/exact/homopoly.hpp"
#include "mero/exact/poly_text.hpp"
#include "mero/exact/roots.hpp"
#include "mero/exact/unipoly.hpp"

using namespace mero;
using namespace mero::exact;

namespace {

HomoPoly var(unsigned n, unsigned i) { return HomoPoly::variable(n, i); }

// Structured random polynomials: products of low-degree sparse factors with
// small Gaussian-rational coefficients.
struct PolyGen {
    std::mt19937 rng;
    explicit PolyGen(unsigned seed) : rng(seed) {}

    GaussianRational coeff() {
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 4);
        std::uniform_int_distribution<int> imag(0, 2);
        BigRational re(num(rng), den(rng));
        BigRational im = imag(rng) == 0 ? BigRational(num(rng), den(rng)) : BigRational(0);
        return {re, im};
    }

    HomoPoly factor(unsigned nvars, unsigned degree) {
        std::uniform_int_distribution<unsigned> pick(0, nvars - 1);
        HomoPoly p(nvars, degree);
        int terms = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int t = 0; t < terms; ++t) {
            Monomial m(nvars, 0);
            for (unsigned d = 0; d < degree; ++d) m[pick(rng)] += 1;
            GaussianRational c = coeff();
            if (c.is_zero()) c = GaussianRational(1);
            p = p + HomoPoly::monomial(nvars, std::move(m), c);
        }
        if (p.is_zero()) p = HomoPoly::monomial(nvars, Monomial(nvars, 0), GaussianRational(1))
                                 .shifted([&] {
                                     Monomial m(nvars, 0);
                                     m[0] = degree;
                                     return m;
                                 }());
        return p;
    }

    HomoPoly product(unsigned nvars, int factors, unsigned factor_degree) {
        HomoPoly p = HomoPoly::one(nvars);
        for (int i = 0; i < factors; ++i) p = p * factor(nvars, factor_degree);
        return p;
    }
};

}  // namespace

TEST_CASE("addition examples") {
    const unsigned n = 3;
    HomoPoly z0z1 = var(n, 0) * var(n, 1);
    CHECK(z0z1 + z0z1 == z0z1.scaled(GaussianRational(2)));

    HomoPoly zero(n, 2);
    CHECK(z0z1 + zero == z0z1);

    // (z0^2 - z1^2) + (z1^2 - z2^2) = z0^2 - z2^2, expanded by hand
    HomoPoly a = var(n, 0) * var(n, 0) - var(n, 1) * var(n, 1);
    HomoPoly b = var(n, 1) * var(n, 1) - var(n, 2) * var(n, 2);
    HomoPoly expect = var(n, 0) * var(n, 0) - var(n, 2) * var(n, 2);
    CHECK(a + b == expect);

    CHECK_THROWS_AS(a + HomoPoly(n, 3), DegreeMismatch);
    CHECK_THROWS_AS(a + HomoPoly(2, 2), VariableCountMismatch);
}

TEST_CASE("multiplication examples") {
    const unsigned n = 3;
    HomoPoly z0 = var(n, 0), z1 = var(n, 1);
    CHECK(z0 * z1 == HomoPoly::monomial(n, {1, 1, 0}, GaussianRational(1)));
    HomoPoly p = z0 * z0 + z1 * z1;
    CHECK(p * HomoPoly::one(n) == p);
    // (z0+z1)(z0-z1) = z0^2 - z1^2 by hand expansion
    CHECK((z0 + z1) * (z0 - z1) == z0 * z0 - z1 * z1);
}

TEST_CASE("exact evaluation and homogeneity") {
    const unsigned n = 2;
    HomoPoly z0z1 = var(n, 0) * var(n, 1);
    CHECK(z0z1.eval_exact({GaussianRational(2), GaussianRational(3)}) == GaussianRational(6));

    // at (2i, 3) the value is 6i
    GaussianRational two_i(BigRational(0), BigRational(2));
    GaussianRational val = z0z1.eval_exact({two_i, GaussianRational(3)});
    CHECK(val == GaussianRational(BigRational(0), BigRational(6)));

    PolyGen gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        HomoPoly p = gen.product(3, 2, 2);
        std::vector<GaussianRational> x{gen.coeff(), gen.coeff(), gen.coeff()};
        GaussianRational lambda = gen.coeff();
        if (lambda.is_zero()) lambda = GaussianRational(2);
        std::vector<GaussianRational> lx;
        for (const auto& xi : x) lx.push_back(xi * lambda);
        CHECK(p.eval_exact(lx) == lambda.pow(p.degree()) * p.eval_exact(x));
    }
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
    PolyGen gen(11);
    for (int trial = 0; trial < 40; ++trial) {
        HomoPoly a = gen.factor(3, 2), b = gen.factor(3, 2), c = gen.factor(3, 2);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("gcd examples") {
    const unsigned n = 3;
    HomoPoly z0 = var(n, 0), z1 = var(n, 1), z2 = var(n, 2);

    CHECK(gcd(z0 * z1, z0 * z2) == z0);

    // inputs built with the known common factor z0*z1*z2
    HomoPoly common = z0 * z1 * z2;
    HomoPoly g = gcd(common * z0, common * z1);
    CHECK(g == common);
    CHECK(HomoPoly::divide_exact(common * z0, g).has_value());
    CHECK(HomoPoly::divide_exact(common * z1, g).has_value());

    // gcd(z0^2 - z1^2, z0 - z1) = z0 - z1 up to a unit; monic normalization
    // makes it exactly z0 - z1 since the lex-leading coefficient is 1
    CHECK(gcd(z0 * z0 - z1 * z1, z0 - z1) == z0 - z1);

    CHECK_THROWS_AS(gcd(HomoPoly(n, 2), HomoPoly(n, 2)), BothZero);
}

TEST_CASE("gcd divides both inputs exactly on structured random inputs") {
    PolyGen gen(23);
    int nontrivial = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        unsigned nv = (trial % 2) ? 2 : 3;
        HomoPoly common = gen.factor(nv, 1 + trial % 2);
        HomoPoly p = common * gen.factor(nv, 1);
        HomoPoly q = common * gen.factor(nv, 2);
        HomoPoly g = gcd(p, q);
        auto qp = HomoPoly::divide_exact(p, g);
        auto qq = HomoPoly::divide_exact(q, g);
        REQUIRE(qp.has_value());
        REQUIRE(qq.has_value());
        CHECK(*qp * g == p);
        CHECK(*qq * g == q);
        // the planted factor must divide the gcd
        CHECK(HomoPoly::divide_exact(g, gcd(common, g)).has_value());
        if (g.degree() > 0) ++nontrivial;
    }
    CHECK(nontrivial > 500);  // the planted common factors are usually found
}

TEST_CASE("float evaluation") {
    const unsigned n = 2;
    HomoPoly z0z1 = var(n, 0) * var(n, 1);
    CHECK(z0z1.eval_float({{1.0, 0.0}, {2.0, 0.0}}) == std::complex<double>(2.0, 0.0));
    CHECK(HomoPoly(n, 4).eval_float({{0.3, 0.1}, {2.0, -1.0}}) == std::complex<double>(0.0, 0.0));

    PolyGen gen(31);
    for (int trial = 0; trial < 100; ++trial) {
        HomoPoly p = gen.product(3, 2, 2);  // degree 4 <= 8, small coefficients
        std::vector<GaussianRational> x{gen.coeff(), gen.coeff(), gen.coeff()};
        std::vector<std::complex<double>> xf;
        for (const auto& xi : x) xf.push_back(xi.to_complex());
        std::complex<double> approx = p.eval_float(xf);
        std::complex<double> exact_val = p.eval_exact(x).to_complex();
        double scale = std::max(1.0, std::abs(exact_val));
        CHECK(std::abs(approx - exact_val) <= 1e-10 * scale);
    }
}

TEST_CASE("text format round-trips bit-exactly") {
    PolyGen gen(41);
    for (int trial = 0; trial < 200; ++trial) {
        HomoPoly p = gen.product(3, 2, 1);
        std::string text = print_poly(p);
        HomoPoly back = parse_poly(text);
        CHECK(back == p);
        CHECK(print_poly(back) == text);
    }
    // zero polynomial keeps its declared shape through the round trip
    HomoPoly zero(3, 2);
    HomoPoly back = parse_poly(print_poly(zero));
    CHECK(back.is_zero());
    CHECK(back.degree() == 2);
    CHECK(back.nvars() == 3);

    CHECK(print_poly(parse_poly("((1/1)+(0/1)i)*z0^1*z1^0 + ((-1/2)+(0/1)i)*z0^0*z1^1")) ==
          "((1/1)+(0/1)i)*z0^1*z1^0 + ((-1/2)+(0/1)i)*z0^0*z1^1");
    CHECK_THROWS_AS(parse_poly("((1/1)+(0/1)i)*z1^1"), Error);
}

TEST_CASE("univariate polynomials and resultants") {
    UniPoly p({GaussianRational(-1), GaussianRational(0), GaussianRational(1)});  // z^2 - 1
    UniPoly d = UniPoly::linear_root(GaussianRational(1));                        // z - 1
    auto q = UniPoly::divide_exact(p, d);
    REQUIRE(q.has_value());
    CHECK(*q == UniPoly({GaussianRational(1), GaussianRational(1)}));

    CHECK(gcd(p, d) == d.monic());

    // resultant_y(x - y, x + y): Sylvester matrix [[-1, x], [1, x]], det -2x
    BiPoly a{UniPoly::x(), UniPoly::constant(GaussianRational(-1))};  // x - y
    BiPoly b{UniPoly::x(), UniPoly::constant(GaussianRational(1))};   // x + y
    UniPoly res = resultant_y(a, b);
    CHECK(res == UniPoly({GaussianRational(0), GaussianRational(-2)}));

    // common factor forces a vanishing resultant
    BiPoly c{UniPoly::x(), UniPoly::constant(GaussianRational(-1))};
    CHECK(resultant_y(a, c).is_zero());
}

TEST_CASE("taylor expansion and exact roots") {
    // p = (z - 1/2)^2 (z + i)
    GaussianRational half(1, 2);
    GaussianRational i = GaussianRational::i();
    UniPoly p = UniPoly::linear_root(half) * UniPoly::linear_root(half) *
                UniPoly::linear_root(-i);
    auto roots = exact_rational_roots(p);
    REQUIRE(roots.remainder.degree() == 0);
    bool saw_half = false, saw_minus_i = false;
    for (const auto& [z, m] : roots.roots) {
        if (z == half) {
            saw_half = true;
            CHECK(m == 2);
        }
        if (z == -i) {
            saw_minus_i = true;
            CHECK(m == 1);
        }
    }
    CHECK(saw_half);
    CHECK(saw_minus_i);

    auto taylor = p.taylor_at(half, 2);
    CHECK(taylor[0].is_zero());  // p(1/2) = 0
    CHECK(taylor[1].is_zero());  // double root

    auto cube_roots = kth_roots_exact(GaussianRational(-1), 4);  // z^4 = -1: none rational
    CHECK(cube_roots.empty());
    auto sq = kth_roots_exact(GaussianRational(-1), 2);  // z^2 = -1: +-i
    CHECK(sq.size() == 2);
}
