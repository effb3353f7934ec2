#include <doctest.h>

#include "cremona/birmap.hpp"
#include "cremona/degree_growth.hpp"

#include <cmath>
#include <random>

using namespace cremona;

TEST_CASE("sigma is a degree-2 involution") {
    BirMap s = sigma_involution();
    CHECK(s.degree() == 2);
    CHECK(compose(s, s).is_identity());
}

TEST_CASE("canonical form: scaling and global sign are normalized away") {
    CHECK(BirMap::parse("[2*y*z : 2*x*z : 2*x*y]") == sigma_involution());
    CHECK(BirMap::parse("[-y*z : -x*z : -x*y]") == sigma_involution());
    CHECK(BirMap::parse("[1/3*y*z : 1/3*x*z : 1/3*x*y]") == sigma_involution());
    BirMap s = sigma_involution();
    CHECK(BirMap::parse(s.str()) == s);
}

TEST_CASE("compose of (x, xy) with itself represents (x, x^2 y)") {
    BirMap f = BirMap::parse("[x*z : x*y : z^2]");
    BirMap f2 = compose(f, f);
    CHECK(f2.degree() == 3);
    CHECK(f2 == BirMap::parse("[x*z^2 : x^2*y : z^3]"));
}

TEST_CASE("compose of linear maps is the matrix product") {
    std::vector<std::vector<Rational>> a = {{1, 2, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<std::vector<Rational>> b = {{1, 0, 3}, {0, 1, 0}, {0, 0, 1}};
    std::vector<std::vector<Rational>> ab = {{1, 2, 3}, {0, 1, 0}, {0, 0, 1}};
    CHECK(compose(linear_map(a), linear_map(b)) == linear_map(ab));

    std::vector<std::vector<Rational>> ainv = {{1, -2, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(compose(linear_map(a), linear_map(ainv)).is_identity());
}

TEST_CASE("non-monomial joint factors are removed: conjugated involution") {
    std::vector<std::vector<Rational>> a = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    std::vector<std::vector<Rational>> ainv = {
        {Rational(1, 2), Rational(-1, 2), Rational(1, 2)},
        {Rational(1, 2), Rational(1, 2), Rational(-1, 2)},
        {Rational(-1, 2), Rational(1, 2), Rational(1, 2)}};
    BirMap conj = compose(compose(linear_map(a), sigma_involution()), linear_map(ainv));
    CHECK(conj.degree() == 2);
    CHECK(compose(conj, conj).is_identity());
}

TEST_CASE("degenerate composition is reported, not normalized") {
    BirMap point({HomoPoly::constant(3, 1), HomoPoly::constant(3, 1), HomoPoly::constant(3, 1)});
    BirMap f = BirMap::parse("[x - y : y - z : x - z]");
    CHECK_THROWS_AS(compose(f, point), DegenerateComposition);
}

TEST_CASE("iterate_degrees examples") {
    BirMap jon = jonquieres_map({Rational(0), Rational(1)});  // Q(x) = x
    CHECK(jon == BirMap::parse("[x*z : x*y : z^2]"));
    auto seq = iterate_degrees(jon, 12, Integer(100000));
    REQUIRE(seq.degrees.size() == 12);
    for (int n = 1; n <= 12; ++n) CHECK(seq.degrees[n - 1] == n + 1);
    CHECK(!seq.truncated);

    auto henon = iterate_degrees(henon_map(), 6, Integer(100000));
    REQUIRE(henon.degrees.size() == 6);
    for (int n = 1; n <= 6; ++n) CHECK(henon.degrees[n - 1] == Integer(1) << n);

    auto id_seq = iterate_degrees(BirMap::identity(2), 5, Integer(10));
    for (const auto& d : id_seq.degrees) CHECK(d == 1);
}

TEST_CASE("iterate_degrees truncates at the degree cap with a flag") {
    auto seq = iterate_degrees(henon_map(), 10, Integer(16));
    CHECK(seq.truncated);
    REQUIRE(seq.degrees.size() == 4);  // 2, 4, 8, 16
    CHECK(seq.degrees.back() == 16);
}

TEST_CASE("iterations are independent of association order") {
    for (const auto& text : {"[y*z : x*z : x*y]", "[x*z : x*y : z^2]", "[y*z : y^2 - x*z : z^2]"}) {
        BirMap f = BirMap::parse(text);
        BirMap f2 = compose(f, f);
        BirMap f3 = compose(f, f2);
        BirMap f4a = compose(f2, f2);
        BirMap f4b = compose(f, f3);
        CHECK(f4a == f4b);
    }
}

TEST_CASE("submultiplicativity of degrees") {
    std::mt19937_64 rng(23);
    std::vector<BirMap> pool = {sigma_involution(), henon_map(),
                                BirMap::parse("[x*z : x*y : z^2]"),
                                BirMap::parse("[x^2 : y*z : x*z]"),
                                linear_map({{1, 2, 0}, {0, 1, 0}, {0, 0, 1}})};
    for (int t = 0; t < 40; ++t) {
        const BirMap& f = pool[rng() % pool.size()];
        const BirMap& g = pool[rng() % pool.size()];
        BirMap fg = compose(f, g);
        CHECK(fg.degree() <= f.degree() * g.degree());
    }
}

TEST_CASE("monomial_map examples") {
    CHECK(monomial_map({{1, 0}, {0, 1}}).is_identity());
    BirMap shear = monomial_map({{1, 0}, {1, 1}});
    CHECK(shear.degree() == 2);
    CHECK(shear == BirMap::parse("[x*z : x*y : z^2]"));
    BirMap swap = monomial_map({{0, 1}, {1, 0}});
    CHECK(swap.degree() == 1);
    CHECK(swap == BirMap::parse("[y : x : z]"));
    CHECK_THROWS_AS(monomial_map({{2, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("monomial maps compose like their matrices") {
    auto mul = [](const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b) {
        std::vector<std::vector<long>> c(2, std::vector<long>(2, 0));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    std::vector<std::vector<long>> m = {{2, 1}, {1, 1}}, n = {{1, 0}, {1, 1}};
    CHECK(compose(monomial_map(m), monomial_map(n)) == monomial_map(mul(m, n)));
    // negative exponents exercise the clearing multiplier
    std::vector<std::vector<long>> inv = {{1, -1}, {-1, 2}};
    CHECK(compose(monomial_map(m), monomial_map(inv)).is_identity());
}

TEST_CASE("builtin families") {
    BuiltinParams p;
    p.diag = {2, 1, 1};
    CHECK(builtin_family("diagonal", p) == BirMap::parse("[2*x : y : z]"));
    p.q_num = {Rational(0), Rational(1)};
    p.q_den = {Rational(1)};
    CHECK(builtin_family("jonquieres", p) == BirMap::parse("[x*z : x*y : z^2]"));
    CHECK(builtin_family("sigma", p) == sigma_involution());
    CHECK_THROWS_AS(builtin_family("nope", p), std::invalid_argument);
    p.matrix = {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}};
    CHECK_THROWS_AS(builtin_family("linear", p), std::invalid_argument);
}

TEST_CASE("jonquieres with a rational Q") {
    // Q = 1/x gives (x, y/x)
    BirMap f = jonquieres_map({Rational(1)}, {Rational(0), Rational(1)});
    CHECK(f == BirMap::parse("[x^2 : y*z : x*z]"));
    // and it inverts (x, xy)
    BirMap g = jonquieres_map({Rational(0), Rational(1)});
    CHECK(compose(f, g).is_identity());
    CHECK(compose(g, f).is_identity());
}

TEST_CASE("classify_growth on the spec sequences") {
    auto mk = [](std::vector<long> v) {
        DegreeSequence s;
        for (long x : v) s.degrees.push_back(x);
        return s;
    };
    auto bounded = classify_growth(mk({1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(bounded.growth == GrowthClass::Bounded);
    CHECK(bounded.consequence == DistortionConsequence::NoVerdict);

    auto lin = classify_growth(mk({2, 3, 4, 5, 6, 7, 8, 9}));
    CHECK(lin.growth == GrowthClass::Linear);
    CHECK(lin.slope == doctest::Approx(1.0));
    CHECK(lin.consequence == DistortionConsequence::Undistorted);

    auto expo = classify_growth(mk({2, 4, 8, 16, 32, 64, 128, 256}));
    CHECK(expo.growth == GrowthClass::Exponential);
    CHECK(expo.ratio == doctest::Approx(2.0));
    CHECK(expo.consequence == DistortionConsequence::Undistorted);

    auto quad = classify_growth(mk({1, 4, 9, 16, 25, 36, 49, 64, 81, 100}));
    CHECK(quad.growth == GrowthClass::Quadratic);
    CHECK(quad.consequence == DistortionConsequence::Undistorted);

    auto incon = classify_growth(mk({1, 2, 3}));
    CHECK(incon.growth == GrowthClass::Inconclusive);

    // alternating involution degrees are bounded
    auto invol = classify_growth(mk({2, 1, 2, 1, 2, 1, 2, 1}));
    CHECK(invol.growth == GrowthClass::Bounded);

    // linear maps: degree constant 1
    auto seq = iterate_degrees(linear_map({{1, 2, 0}, {0, 1, 0}, {0, 0, 1}}), 8, Integer(10));
    CHECK(classify_growth(seq).growth == GrowthClass::Bounded);
}

TEST_CASE("dynamical degree estimates") {
    auto mk = [](std::vector<long> v) {
        DegreeSequence s;
        for (long x : v) s.degrees.push_back(x);
        return s;
    };
    auto e1 = dynamical_degree_estimate(mk({2, 4, 8, 16}));
    CHECK(e1.estimate == doctest::Approx(2.0));
    CHECK(e1.spread < 1e-9);

    auto e2 = dynamical_degree_estimate(mk({2, 3, 4, 5, 6, 7, 8, 9, 10, 11}));
    CHECK(e2.estimate <= 1.3);

    CHECK_THROWS_AS(dynamical_degree_estimate(mk({2, 4})), std::invalid_argument);

    // monomial map of [[2,1],[1,1]]: estimate near the spectral radius
    auto seq = iterate_degrees(monomial_map({{2, 1}, {1, 1}}), 12, Integer(1) << 40);
    REQUIRE(!seq.truncated);
    double rho = (3.0 + std::sqrt(5.0)) / 2.0;
    auto e3 = dynamical_degree_estimate(seq);
    CHECK(std::abs(e3.estimate - rho) / rho < 0.05);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(BirMap::parse("x*z : x*y"), std::invalid_argument);
    CHECK_THROWS_AS(BirMap::parse("[x : y : w]"), std::invalid_argument);
    CHECK_THROWS_AS(BirMap::parse("[x : y : z^2]"), std::invalid_argument);  // unequal degrees
    CHECK_THROWS_AS(BirMap::parse("[0 : 0 : 0]"), DegenerateComposition);
}
