#include <doctest.h>

#include "cremona/polynomial.hpp"

#include <random>

using namespace cremona;

namespace {

HomoPoly var(int nv, int i) { return HomoPoly::variable(nv, i); }

HomoPoly random_homo(std::mt19937_64& rng, int nv, int deg, int max_terms, long coeff_range) {
    HomoPoly p(nv, deg);
    int terms = 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_terms));
    for (int t = 0; t < terms; ++t) {
        Exponents e(nv, 0);
        int left = deg;
        for (int i = 0; i + 1 < nv; ++i) {
            e[i] = static_cast<int>(rng() % static_cast<unsigned long>(left + 1));
            left -= e[i];
        }
        e[nv - 1] = left;
        long c = static_cast<long>(rng() % static_cast<unsigned long>(2 * coeff_range + 1)) - coeff_range;
        p.add_term(e, Rational(c));
    }
    return p;
}

HomoPoly random_nonzero(std::mt19937_64& rng, int nv, int deg, int max_terms, long coeff_range) {
    for (;;) {
        HomoPoly p = random_homo(rng, nv, deg, max_terms, coeff_range);
        if (!p.is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("grlex term order puts the lex-largest monomial first") {
    HomoPoly p = parse_poly("y^2 + x^2 + x*y", 2);
    auto it = p.terms().begin();
    CHECK(it->first == Exponents{2, 0});
    ++it;
    CHECK(it->first == Exponents{1, 1});
    ++it;
    CHECK(it->first == Exponents{0, 2});
}

TEST_CASE("poly_arith examples") {
    const int nv = 2;
    HomoPoly x = var(nv, 0), y = var(nv, 1);

    // mul(x, y) = x*y, degree 2
    HomoPoly xy = poly_arith(x, y, PolyOp::Mul);
    CHECK(xy.degree() == 2);
    CHECK(xy == HomoPoly::monomial(nv, {1, 1}, 1));

    // mul(x+y, x-y) = x^2 - y^2
    HomoPoly prod = poly_arith(x + y, x - y, PolyOp::Mul);
    CHECK(prod == parse_poly("x^2 - y^2", nv));

    // add(x^2, -x^2) = zero of degree 2
    HomoPoly x2 = poly_arith(x, x, PolyOp::Mul);
    HomoPoly z = poly_arith(x2, -x2, PolyOp::Add);
    CHECK(z.is_zero());
    CHECK(z.degree() == 2);
}

TEST_CASE("poly_arith errors") {
    CHECK_THROWS_AS(poly_arith(var(2, 0), var(3, 0), PolyOp::Add), std::invalid_argument);
    CHECK_THROWS_AS(poly_arith(parse_poly("x^2", 2), parse_poly("x", 2), PolyOp::Add),
                    std::invalid_argument);
}

TEST_CASE("normalize_primitive examples") {
    const int nv = 2;
    auto [s1, f1] = var(nv, 0).normalize_primitive();
    CHECK(s1 == 1);
    CHECK(f1 == var(nv, 0));

    auto [s2, f2] = parse_poly("2*x + 4*y", nv).normalize_primitive();
    CHECK(s2 == 2);
    CHECK(f2 == parse_poly("x + 2*y", nv));

    // the leading (grlex-first) coefficient of the primitive part is positive
    auto [s3, f3] = parse_poly("1/2*x^2 - 3/2*y^2", nv).normalize_primitive();
    CHECK(s3 == Rational(1, 2));
    CHECK(f3 == parse_poly("x^2 - 3*y^2", nv));

    auto [s4, f4] = parse_poly("-1/2*x^2 + 3/2*y^2", nv).normalize_primitive();
    CHECK(s4 == Rational(-1, 2));
    CHECK(f4 == parse_poly("x^2 - 3*y^2", nv));

    CHECK_THROWS_AS(HomoPoly(2, 3).normalize_primitive(), std::domain_error);
}

TEST_CASE("normalize_primitive is idempotent and multiplicative up to sign") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        int nv = 2 + static_cast<int>(rng() % 2);
        HomoPoly f = random_nonzero(rng, nv, 1 + rng() % 3, 4, 8);
        HomoPoly g = random_nonzero(rng, nv, 1 + rng() % 3, 4, 8);

        auto pf = f.normalize_primitive();
        auto again = pf.polynomial.normalize_primitive();
        CHECK(again.scale == 1);
        CHECK(again.polynomial == pf.polynomial);

        // Gauss: primitive * primitive is primitive (up to the sign rule)
        auto pg = g.normalize_primitive();
        auto pfg = (f * g).normalize_primitive();
        HomoPoly prod = pf.polynomial * pg.polynomial;
        bool eq_plus = pfg.polynomial == prod;
        bool eq_minus = pfg.polynomial == -prod;
        CHECK((eq_plus || eq_minus));
    }
}

TEST_CASE("gcd examples") {
    const int nv = 3;
    HomoPoly x = var(nv, 0), y = var(nv, 1), z = var(nv, 2);
    CHECK(gcd_homogeneous(x * z, x * y) == x);
    CHECK(gcd_homogeneous(parse_poly("x^2 - y^2", nv), parse_poly("x - y", nv)) ==
          parse_poly("x - y", nv));
    CHECK(gcd_homogeneous(x, y) == HomoPoly::constant(nv, 1));
    CHECK_THROWS_AS(gcd_homogeneous(HomoPoly(3, 1), x), std::domain_error);
}

TEST_CASE("gcd of products is divisible by the common factor") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int nv = 2 + static_cast<int>(rng() % 2);
        HomoPoly f = random_nonzero(rng, nv, 1 + rng() % 2, 3, 5);
        HomoPoly g = random_nonzero(rng, nv, 1 + rng() % 2, 3, 5);
        HomoPoly h = random_nonzero(rng, nv, 1 + rng() % 2, 3, 5);
        HomoPoly d = gcd_homogeneous(f * h, g * h);
        HomoPoly hp = h.normalize_primitive().polynomial;
        auto q = d.divide_exact(hp);
        REQUIRE(q.has_value());
        // d / primitive(h) must in turn divide both products
        CHECK((f * h).divide_exact(d).has_value());
        CHECK((g * h).divide_exact(d).has_value());
    }
}

TEST_CASE("delta_degree_sum examples and submultiplicativity") {
    HomoPoly p1 = parse_poly("x0*x1", 2);
    CHECK(p1.delta_degree_sum() == 2);
    CHECK(parse_poly("x^2", 2).delta_degree_sum() == 2);
    CHECK(parse_poly("x0^2*x1 + x1^3", 2).delta_degree_sum() == 5);
    CHECK_THROWS_AS(HomoPoly(2, 1).delta_degree_sum(), std::domain_error);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        HomoPoly f = random_nonzero(rng, 3, 1 + rng() % 3, 4, 6);
        HomoPoly g = random_nonzero(rng, 3, 1 + rng() % 3, 4, 6);
        HomoPoly fg = f * g;
        if (fg.is_zero()) continue;
        CHECK(fg.delta_degree_sum() <= f.delta_degree_sum() + g.delta_degree_sum());
    }
}

TEST_CASE("text syntax round-trips exactly") {
    HomoPoly p = parse_poly("3*x^2*y - 1/2*z^3", 3);
    CHECK(p.str() == "3*x^2*y - 1/2*z^3");
    CHECK(parse_poly(p.str(), 3) == p);

    // x0..xm spelling is accepted for small var counts too
    CHECK(parse_poly("x0^2*x1", 3) == parse_poly("x^2*y", 3));

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        int nv = 2 + static_cast<int>(rng() % 4);  // includes a 5-variable case
        HomoPoly f = random_nonzero(rng, nv, 1 + rng() % 4, 6, 20);
        CAPTURE(f.str());
        CHECK(parse_poly(f.str(), nv) == f);
    }

    CHECK(HomoPoly(3, 2).str() == "0");
    CHECK(parse_poly("0", 3).is_zero());
    CHECK_THROWS_AS(parse_poly("x + ", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("w", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x + y^2", 3), std::invalid_argument);  // inhomogeneous
}

TEST_CASE("divide_exact") {
    const int nv = 3;
    HomoPoly f = parse_poly("x^2 - y^2", nv);
    HomoPoly g = parse_poly("x - y", nv);
    auto q = f.divide_exact(g);
    REQUIRE(q.has_value());
    CHECK(*q == parse_poly("x + y", nv));
    CHECK(!f.divide_exact(parse_poly("z", nv)).has_value());
}

TEST_CASE("joint coprimality certificate agrees with exact gcd") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        HomoPoly f = random_nonzero(rng, 3, 1 + rng() % 2, 3, 5);
        HomoPoly g = random_nonzero(rng, 3, 1 + rng() % 2, 3, 5);
        bool cert = certify_jointly_coprime({f, g});
        HomoPoly d = gcd_homogeneous(f, g);
        if (cert) CHECK(d.degree() == 0);
        // with a shared factor the certificate must never fire
        HomoPoly h = random_nonzero(rng, 3, 1, 3, 5);
        if (h.degree() > 0) CHECK(!certify_jointly_coprime({f * h, g * h}));
    }
}

TEST_CASE("compose substitutes homogeneous values") {
    const int nv = 2;
    HomoPoly f = parse_poly("x^2 + y^2", nv);
    std::vector<HomoPoly> vals = {parse_poly("x + y", nv), parse_poly("x - y", nv)};
    CHECK(f.compose(vals) == parse_poly("2*x^2 + 2*y^2", nv));
}
