#include "origami/poly.hpp"
#include "origami/ratfunc.hpp"
#include "origami/scalar_io.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace origami::alg;

namespace {

Rational rand_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    return Rational(num(rng), den(rng));
}

QuadElt rand_quad(std::mt19937& rng, long long D) {
    return QuadElt(rand_rational(rng), rand_rational(rng), D);
}

} // namespace

TEST_CASE("rational parse and print") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational(" 6/4 ") == Rational(3, 2));
    CHECK(rational_str(Rational(-3, 2)) == "-3/2");
    CHECK(rational_str(Rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("quadratic element basics") {
    QuadElt x(Rational(1, 2), Rational(3), 5); // 1/2 + 3 sqrt(5)
    CHECK(x.a() == Rational(1, 2));
    CHECK(x.b() == Rational(3));
    CHECK(x.disc() == 5);
    CHECK(!x.is_rational());
    CHECK(x.conj() == QuadElt(Rational(1, 2), Rational(-3), 5));
    CHECK(x.norm() == Rational(1, 4) - Rational(45));
    CHECK(x * x.inv() == QuadElt(1));

    // b == 0 collapses to the rational subfield regardless of the declared disc
    CHECK(QuadElt(Rational(2), Rational(0), 5) == QuadElt(2));
    CHECK(QuadElt(Rational(2), Rational(0), 5).disc() == 0);

    // sqrt(5) * sqrt(5) = 5 leaves the field
    QuadElt r5(Rational(0), Rational(1), 5);
    CHECK(r5 * r5 == QuadElt(5));

    CHECK_THROWS_AS(QuadElt(Rational(1), Rational(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(QuadElt(Rational(1), Rational(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(QuadElt(Rational(1), Rational(1), 12), std::invalid_argument);
    CHECK_THROWS_AS(QuadElt(0).inv(), std::domain_error);

    // elements of different fields do not mix
    QuadElt i(Rational(0), Rational(1), -1);
    CHECK_THROWS_AS((void)(r5 + i), std::invalid_argument);
    CHECK_THROWS_AS((void)(r5 * i), std::invalid_argument);
}

TEST_CASE("quadratic field axioms, randomized") {
    std::mt19937 rng(20260816);
    for (long long D : {-1LL, -3LL, 3LL, 5LL}) {
        for (int it = 0; it < 1000; ++it) {
            QuadElt x = rand_quad(rng, D), y = rand_quad(rng, D), z = rand_quad(rng, D);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + QuadElt(0) == x);
            CHECK(x * QuadElt(1) == x);
            CHECK(x - x == QuadElt(0));
            if (!x.is_zero()) {
                CHECK(x * x.inv() == QuadElt(1));
                CHECK((x / x) == QuadElt(1));
            }
            CHECK((x * x.conj()) == QuadElt(x.norm()));
        }
    }
}

TEST_CASE("quad_pow handles negative exponents") {
    QuadElt x(Rational(2), Rational(1), 3);
    CHECK(quad_pow(x, 0) == QuadElt(1));
    CHECK(quad_pow(x, 3) == x * x * x);
    CHECK(quad_pow(x, -2) * quad_pow(x, 2) == QuadElt(1));
    CHECK(quad_pow(x, -1) == x.inv());
}

TEST_CASE("squarefree split") {
    CHECK(squarefree(1));
    CHECK(squarefree(-1));
    CHECK(squarefree(30));
    CHECK(!squarefree(4));
    CHECK(!squarefree(-12));
    CHECK(squarefree_split(Int(72)) == std::pair<Int, Int>(6, 2));
    CHECK(squarefree_split(Int(-12)) == std::pair<Int, Int>(2, -3));
    CHECK(squarefree_split(Int(49)) == std::pair<Int, Int>(7, 1));
    CHECK(squarefree_split(Int(5)) == std::pair<Int, Int>(1, 5));
}

TEST_CASE("quadratic scalar parse and print round trip") {
    for (const char* s : {"1/2+3/2*sqrt(5)", "-1/2-1/2*sqrt(-3)", "sqrt(-1)", "-sqrt(5)",
                          "2*sqrt(3)", "7", "-3/4", "0"}) {
        QuadElt x = parse_quad(s);
        CHECK(quad_str(x) == s);
        CHECK(parse_quad(quad_str(x)) == x);
    }
    CHECK(parse_quad(" 1 + sqrt( 5 ) ") == QuadElt(Rational(1), Rational(1), 5));
    CHECK_THROWS_AS(parse_quad("sqrt(4)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quad("1+"), std::invalid_argument);
}

TEST_CASE("univariate polynomial division") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> deg(0, 6);
    auto rand_poly = [&]() {
        std::vector<QI> c(deg(rng) + 1);
        for (auto& x : c) x = QuadElt(rand_rational(rng), rand_rational(rng), -1);
        return PolyQI(std::move(c));
    };
    for (int it = 0; it < 200; ++it) {
        PolyQI a = rand_poly(), b = rand_poly();
        if (b.is_zero()) continue;
        PolyQI q, r;
        PolyQI::divmod(a, b, q, r);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());
    }
    PolyQI x = PolyQI::x();
    CHECK(poly_gcd(x * x - PolyQI(1), x - PolyQI(1)) == x - PolyQI(1));
    CHECK_THROWS_AS((void)(x / PolyQI()), std::domain_error);
}

TEST_CASE("rational functions stay reduced") {
    FuncQI x = FuncQI::x();
    FuncQI f = (x * x - FuncQI(1)) / (x - FuncQI(1));
    CHECK(f == x + FuncQI(1));
    CHECK(f.den().degree() == 0);

    std::mt19937 rng(11);
    auto rand_func = [&]() {
        std::vector<QI> n(3), d(2);
        for (auto& c : n) c = QuadElt(rand_rational(rng));
        for (auto& c : d) c = QuadElt(rand_rational(rng));
        PolyQI den{std::vector<QI>{QI(1), QI(0), QI(1)}}; // x^2 + 1, never zero over Q(i)(x)? keep nonzero
        return FuncQI(PolyQI(std::move(n)), den + PolyQI(std::move(d)));
    };
    for (int it = 0; it < 200; ++it) {
        FuncQI f1 = rand_func(), g = rand_func();
        CHECK((f1 + g) - g == f1);
        if (!g.is_zero()) CHECK((f1 * g) / g == f1);
        // reduced invariant: gcd of stored num and den is 1, den monic
        if (!f1.is_zero()) {
            CHECK(poly_gcd(f1.num(), f1.den()).degree() == 0);
            CHECK(f1.den().lead() == QI(1));
        }
    }
    CHECK_THROWS_AS((void)FuncQI(0).inv(), std::domain_error);
    CHECK_THROWS_AS((void)(x / FuncQI(0)), std::domain_error);
}

TEST_CASE("multivariate polynomial arithmetic") {
    using P = PolyMV<Rational>;
    P l = P::var(2, 0), m = P::var(2, 1);
    P s = l + m;
    CHECK(s * s == l * l + Rational(2) * (l * m) + m * m);
    CHECK((l - m) * (l + m) == l * l - m * m);
    CHECK(s.degree_in(0) == 1);
    CHECK((l * l * m).degree_in(0) == 2);
    CHECK((l * l * m).min_exponent_in(1) == 1);
    CHECK(P::zero(2).degree_in(0) == -1);
    CHECK((s * s).coeff_of(0, 1) == Rational(2) * m);

    // exact substitution, negative exponents included
    P laurent(2);
    laurent.add_term({-1, 1}, Rational(1)); // mu / lambda
    QuadElt at = laurent.eval<QuadElt>({QuadElt(2), QuadElt(3)});
    CHECK(at == QuadElt(Rational(3, 2)));
    CHECK_THROWS_AS(laurent.eval<Rational>({Rational(2), Rational(3)}), std::domain_error);

    CHECK_THROWS_AS((void)(l + P::var(3, 0)), std::invalid_argument);
}

TEST_CASE("locus normal form") {
    using P = PolyMV<Rational>;
    P l = P::var(2, 0), m = P::var(2, 1);
    P v = l * m - l + m;
    CHECK(normalize_locus(v) == v);

    std::mt19937 rng(99);
    for (int it = 0; it < 200; ++it) {
        Rational c = rand_rational(rng);
        if (c == 0) continue;
        CHECK(normalize_locus(c * v) == v);
        // multiplying by a monomial (a unit on the torus) does not change the class
        std::uniform_int_distribution<int> ex(-3, 3);
        P mono(2);
        mono.add_term({ex(rng), ex(rng)}, c);
        P w = normalize_locus(mono * v);
        CHECK(w == v);
        CHECK(w.min_exponent_in(0) == 0);
        CHECK(w.min_exponent_in(1) == 0);
        // sign convention: lex-greatest monomial has positive coefficient
        CHECK(w.terms().rbegin()->second > 0);
    }
    CHECK_THROWS_AS(normalize_locus(P::zero(2)), std::invalid_argument);
}

TEST_CASE("exact quadratic roots") {
    using P = PolyMV<Rational>;
    P x = P::var(1, 0);
    auto c = [](long long n, long long d = 1) { return P::constant(1, Rational(n, d)); };

    auto roots = solve_quadratic(x * x + Rational(3) * x - c(10)); // (x-2)(x+5)
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == QuadElt(2));
    CHECK(roots[1] == QuadElt(-5));

    roots = solve_quadratic(x * x - c(5));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == QuadElt(Rational(0), Rational(1), 5));
    CHECK(roots[1] == QuadElt(Rational(0), Rational(-1), 5));

    roots = solve_quadratic(x * x + x + c(1)); // disc -3
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == QuadElt(Rational(-1, 2), Rational(1, 2), -3));
    CHECK(roots[1] == QuadElt(Rational(-1, 2), Rational(-1, 2), -3));

    roots = solve_quadratic(x * x - Rational(6) * x + c(9)); // (x-3)^2
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == QuadElt(3));

    roots = solve_quadratic(Rational(3) * x + c(2));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == QuadElt(Rational(-2, 3)));

    CHECK_THROWS_AS(solve_quadratic(c(1)), std::invalid_argument);
    CHECK_THROWS_AS(solve_quadratic(x * x * x), std::invalid_argument);
    CHECK_THROWS_AS(solve_quadratic(P::zero(1)), std::invalid_argument);

    // every reported root really is a root
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int it = 0; it < 200; ++it) {
        int a = coef(rng), b = coef(rng), cc = coef(rng);
        if (a == 0 && b == 0) continue;
        P p = Rational(a) * (x * x) + Rational(b) * x + c(cc);
        if (p.is_zero() || p.degree_in(0) == 0) continue;
        for (const auto& r : solve_quadratic(p)) {
            QuadElt val = p.eval<QuadElt>({r});
            CHECK(val.is_zero());
        }
    }
}

TEST_CASE("polynomial printing") {
    using P = PolyMV<Rational>;
    P l = P::var(2, 0), m = P::var(2, 1);
    CHECK(poly_str(l * m - l + m, {"l", "m"}) == "l*m - l + m");
    CHECK(poly_str(P::zero(2), {"l", "m"}) == "0");
    CHECK(poly_str(Rational(-1) * l * l + P::constant(2, Rational(1, 2)), {"l", "m"}) ==
          "-l^2 + 1/2");
}
