#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "planesep/poly.hpp"
#include "planesep/poly_parse.hpp"
#include "planesep/realalg.hpp"

using namespace planesep;

static const std::vector<std::string> XY{"x", "y"};

static Poly P(const std::string& s) { return parse_poly(XY, s); }

/// Equality up to a nonzero rational factor.
static bool associates(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return normalize_monic(a) == normalize_monic(b);
}

TEST_CASE("ring operations") {
    CHECK(P("(x+y)*(x-y)") == P("x^2-y^2"));
    CHECK(P("x^2+y^2-1").eval({Rat(0), Rat(0)}) == Rat(-1));
    CHECK(derivative(P("y^2-x^3"), "y") == P("2*y"));
    CHECK(derivative(P("y^2-x^3"), "x") == P("-3*x^2"));

    // homogenize(y - x^2, w) = y*w - x^2
    Poly h = homogenize(P("y-x^2"), "w");
    Poly expect = parse_poly({"x", "y", "w"}, "y*w-x^2");
    CHECK(h == expect);
    CHECK(dehomogenize(h, "w") == P("y-x^2"));

    CHECK(exact_divide(P("x^2-y^2"), P("x-y")) == P("x+y"));
    CHECK_THROWS_AS(exact_divide(P("x^2+y"), P("x-y")), nondivisible_error);

    CHECK(substitute(P("y-x^2"), "y", P("x^2")) == Poly(XY));
    CHECK_THROWS_AS(parse_poly({"x"}, "x") + P("x"), arity_error);
}

TEST_CASE("parser") {
    CHECK(P("1/2*x + 1/2*x") == P("x"));
    CHECK(P("-(x-1)^2") == P("-x^2+2*x-1"));
    CHECK_THROWS_AS(P("x+"), input_error);
    CHECK_THROWS_AS(P("z"), input_error);
    CHECK(poly_str(P("x^2 - 2*x*y + 1/3")) == "x^2 - 2*x*y + 1/3");
}

TEST_CASE("gcd") {
    CHECK(associates(pgcd(P("x^2-1"), P("x-1")), P("x-1")));
    CHECK(pgcd(P("x"), P("y")) == P("1"));
    // gcd(x^2*y - y, x*y - y) = y*(x-1) up to normalization
    CHECK(associates(pgcd(P("x^2*y-y"), P("x*y-y")), P("y*x-y")));
    CHECK(associates(pgcd(P("x^2+2*x+1"), P("0")), P("x^2+2*x+1")));

    // gcd divides both exactly, over a small product family
    std::vector<Poly> fs = {P("x-y"), P("x+y"), P("y-x^2"), P("x^2+y^2-1"), P("2*x+3")};
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = 0; j < fs.size(); ++j) {
            Poly a = fs[i] * fs[j] * fs[(i + j) % fs.size()];
            Poly b = fs[j] * fs[(i + 2) % fs.size()];
            Poly g = pgcd(a, b);
            CHECK_NOTHROW(exact_divide(a, g));
            CHECK_NOTHROW(exact_divide(b, g));
        }
}

TEST_CASE("squarefree part") {
    CHECK(associates(squarefree_part(P("(y-x^2)^2*x")), P("x*(y-x^2)")));
    CHECK(associates(squarefree_part(P("x^3")), P("x")));
    CHECK(associates(squarefree_part(P("x^2+1")), P("x^2+1")));
    CHECK_THROWS_AS(squarefree_part(Poly(XY)), degenerate_input_error);

    // (sqfree p)^2 can divide p only when p had a repeated factor
    Poly p = P("(x+y)*(y-x^2)");
    Poly s = squarefree_part(p);
    CHECK_THROWS_AS(exact_divide(p, s * s), nondivisible_error);
    Poly q = P("(x+y)^2*(y-x^2)^2");
    Poly sq = squarefree_part(q);
    CHECK_NOTHROW(exact_divide(q, sq * sq));
    // and the squarefree part always divides p
    for (const auto& f : {p, q, P("x^3*y^2"), P("(2*x+1)^3")}) CHECK_NOTHROW(exact_divide(f, squarefree_part(f)));
}

TEST_CASE("resultant") {
    CHECK(associates(resultant(P("y^2-x"), P("y"), "y"), P("x")));
    CHECK(associates(resultant(P("x^2+y^2-1"), P("y"), "y"), P("x^2-1")));
    CHECK(resultant(P("x^2+y^2-1"), P("x^2+y^2-1"), "y").is_zero());
    CHECK_THROWS_AS(resultant(P("x"), P("x-1"), "y"), arity_error);
    // resultant vanishes exactly at common-root abscissae: circle and line y=x
    Poly r = resultant(P("x^2+y^2-1"), P("y-x"), "y");
    CHECK(associates(r, P("2*x^2-1")));
}

TEST_CASE("univariate root isolation") {
    auto roots = uisolate_roots(to_upoly(parse_poly({"x"}, "x^2-2"), 0));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[0].root.compare(Rat(-1)) < 0);
    CHECK(roots[1].root.compare(Rat(1)) > 0);
    CHECK(roots[1].root.compare(Rat(2)) < 0);

    auto r2 = uisolate_roots(to_upoly(parse_poly({"x"}, "x^3-2*x^2"), 0));
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].root.compare(Rat(0)) == 0);
    CHECK(r2[0].multiplicity == 2);
    CHECK(r2[1].root.compare(Rat(2)) == 0);
    CHECK(r2[1].multiplicity == 1);

    CHECK(uisolate_roots(to_upoly(parse_poly({"x"}, "x^2+1"), 0)).empty());
    CHECK_THROWS_AS(uisolate_roots(UPoly()), degenerate_input_error);

    // multiplicity sum = degree - #complex for factored fixtures
    auto r3 = uisolate_roots(to_upoly(parse_poly({"x"}, "(x^2-2)^2*(x-1)^3*(x^2+4)"), 0));
    int total = 0;
    for (auto& rm : r3) total += rm.multiplicity;
    CHECK(total == 7);

    // sign of p differs at interval endpoints for odd-multiplicity roots
    UPoly p = to_upoly(parse_poly({"x"}, "(x^2-3)*(x-1)"), 0);
    for (auto& rm : uisolate_roots(p)) {
        if (rm.multiplicity % 2 == 1 && !rm.root.is_exact())
            CHECK(sign(p.eval(rm.root.lo())) * sign(p.eval(rm.root.hi())) < 0);
    }
}

TEST_CASE("real algebraic numbers") {
    UPoly q = to_upoly(parse_poly({"x"}, "x^2-2"), 0);
    auto roots = uisolate_squarefree(q);
    REQUIRE(roots.size() == 2);
    RealAlg sqrt2 = roots[1];
    // sign of x-1 at sqrt(2) is +1
    CHECK(sqrt2.sign_of(UPoly({Rat(-1), Rat(1)})) == 1);
    CHECK(sqrt2.sign_of(q) == 0);
    CHECK(!sqrt2.to_rational().has_value());
    CHECK(sqrt2.compare(roots[0]) > 0);
    CHECK(sqrt2.compare(sqrt2) == 0);

    // rational root detection: roots are -sqrt2 < sqrt2 < 3/2
    UPoly h = to_upoly(parse_poly({"x"}, "(2*x-3)*(x^2-2)"), 0);
    auto hr = uisolate_roots(h);
    REQUIRE(hr.size() == 3);
    CHECK(!hr[1].root.to_rational().has_value());
    auto top = hr[2].root.to_rational();
    REQUIRE(top.has_value());
    CHECK(*top == Rat(3, 2));

    // equality of the same root reached through different polynomials
    UPoly a = to_upoly(parse_poly({"x"}, "x^2-2"), 0);
    UPoly b = to_upoly(parse_poly({"x"}, "x^4-4"), 0);
    auto ra = uisolate_squarefree(a);
    auto rb = uisolate_squarefree(usquarefree_part(b));
    CHECK(ra[1].compare(rb[1]) == 0);
    CHECK(ra[0].compare(rb[1]) < 0);
}

TEST_CASE("sign agreement with floating evaluation") {
    // randomized agreement: exact sign matches double evaluation when the
    // latter is comfortably away from zero
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        Poly p(XY);
        for (int t = 0; t < 5; ++t) {
            std::vector<int> e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
            p.add_term(std::move(e), Rat(coef(rng)));
        }
        Rat px(coef(rng), 7), py(coef(rng), 5);
        Rat v = p.eval({px, py});
        double fv = p.eval({px, py}).convert_to<double>();
        if (std::abs(fv) > 1e-6) CHECK(sign(v) == (fv > 0 ? 1 : -1));
    }
}
