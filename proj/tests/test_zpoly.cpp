#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "splitscan/zpoly.hpp"

using namespace splitscan;
using namespace splitscan::zpoly;

namespace {

IntPoly P(const std::string& s) { return parse_poly(s); }

IntPoly random_poly(std::mt19937& rng, int max_deg, int coeff_bound) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<int> dc(-coeff_bound, coeff_bound);
    int d = dd(rng);
    std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = dc(rng);
    while (c.back() == 0) c.back() = dc(rng);
    return IntPoly(std::move(c));
}

IntPoly random_primitive(std::mt19937& rng, int max_deg, int coeff_bound) {
    while (true) {
        IntPoly p = random_poly(rng, max_deg, coeff_bound);
        if (!p.is_zero() && content(p) == 1) return p;
    }
}

}  // namespace

TEST_CASE("ring operations") {
    CHECK(P("X+1") * P("X-1") == P("X^2-1"));
    CHECK(P("X^3-2").derivative() == P("3*X^2"));
    CHECK(P("X^2+1").eval(3) == 10);
    CHECK(P("X^2+1") + P("X-1") == P("X^2+X"));
    CHECK(P("X^2+1") - P("X^2") == P("1"));
    CHECK(IntPoly{}.derivative().is_zero());
    CHECK(P("5").derivative().is_zero());
    // multiply: commutative, associative on a spot check
    IntPoly a = P("2*X^2-3"), b = P("X^3+X"), c = P("7*X-1");
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("content and primitive part") {
    CHECK(content(P("6*X^2+4*X+2")) == 2);
    CHECK(content(P("X^3-2")) == 1);
    CHECK(content(P("-4*X+6")) == 2);
    CHECK_THROWS_AS(content(IntPoly{}), std::domain_error);

    CHECK(primitive_part(P("6*X^2+4*X+2")) == P("3*X^2+2*X+1"));
    CHECK(primitive_part(P("-2*X+4")) == P("X-2"));
    CHECK(primitive_part(P("X^2-2")) == P("X^2-2"));
}

TEST_CASE("gcd over Q") {
    CHECK(gcd_q(P("X^2-1"), P("X^2-3*X+2")) == P("X-1"));
    CHECK(gcd_q(P("X^2+1"), P("X^2-2")) == P("1"));
    CHECK(gcd_q(P("X^3-X"), P("X^2")) == P("X"));
    CHECK(gcd_q(IntPoly{}, P("2*X+2")) == P("X+1"));
    CHECK_THROWS_AS(gcd_q(IntPoly{}, IntPoly{}), std::domain_error);
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(P("X^2")) == P("X"));
    CHECK(squarefree_part(P("X^3-3*X+2")) == P("X^2+X-2"));
    CHECK(squarefree_part(P("X^2-2")) == P("X^2-2"));
}

TEST_CASE("resultant") {
    CHECK(resultant(P("X^2-2"), P("X^2-3")) == 1);
    CHECK(resultant(P("X-1"), P("X-1")) == 0);
    CHECK(resultant(P("X^2+1"), P("X")) == 1);
    // Res(f, g) for linear f, g is the 2x2 Sylvester determinant
    CHECK(resultant(P("3*X-1"), P("2*X+5")) == 17);
}

TEST_CASE("resultant vanishes exactly when the gcd is nonconstant") {
    std::mt19937 rng(42);
    int shared = 0, tested = 0;
    while (tested < 500) {
        IntPoly a = random_poly(rng, 5, 10);
        IntPoly b = random_poly(rng, 5, 10);
        if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant()) continue;
        if (tested % 5 == 0) {
            // engineer a common root
            IntPoly common = P("X-3");
            a *= common;
            b *= common;
        }
        ++tested;
        bool res_zero = resultant(a, b) == 0;
        bool gcd_nonconst = !gcd_q(a, b).is_constant();
        CHECK(res_zero == gcd_nonconst);
        if (gcd_nonconst) ++shared;
    }
    CHECK(shared >= 100);  // the engineered cases all count
}

TEST_CASE("extended Euclid over Q") {
    auto check_identity = [](const IntPoly& a, const IntPoly& b) {
        ExtendedGcd e = xeuclid_q(a, b);
        RatPoly lhs = RatPoly(a) * e.a_cof + RatPoly(b) * e.b_cof;
        CHECK(lhs == RatPoly(e.g));
    };
    ExtendedGcd e = xeuclid_q(P("X"), P("X+2"));
    CHECK(e.g == P("1"));
    CHECK(e.a_cof == RatPoly(std::vector<mpq_class>{mpq_class(-1, 2)}));
    CHECK(e.b_cof == RatPoly(std::vector<mpq_class>{mpq_class(1, 2)}));

    ExtendedGcd e2 = xeuclid_q(P("X-1"), P("X+1"));
    CHECK(e2.a_cof == RatPoly(std::vector<mpq_class>{mpq_class(-1, 2)}));
    CHECK(e2.b_cof == RatPoly(std::vector<mpq_class>{mpq_class(1, 2)}));

    ExtendedGcd e3 = xeuclid_q(P("X^2"), P("X"));
    CHECK(e3.g == P("X"));
    check_identity(P("X^2"), P("X"));
    check_identity(P("X^3-2"), P("X^2+X+1"));
    check_identity(P("6*X^2+4"), P("9*X^3-3*X"));
}

TEST_CASE("Bezout bound worked examples") {
    CHECK(bezout_bound(P("X"), P("X+2")) == 2);
    CHECK(bezout_bound(P("X"), P("X+1")) == 1);
    CHECK(bezout_bound(P("X^2+1"), P("X^2-1")) == 2);
    CHECK_THROWS_AS(bezout_bound(P("X^2-1"), P("X-1")), std::domain_error);
}

TEST_CASE("Bezout bound divides gcd of values at every integer") {
    std::mt19937 rng(7);
    std::vector<std::pair<IntPoly, IntPoly>> pairs = {
        {P("X"), P("X+2")}, {P("X"), P("X+1")}, {P("X^2+1"), P("X^2-1")}};
    while (pairs.size() < 20) {
        IntPoly r = random_poly(rng, 4, 8), s = random_poly(rng, 4, 8);
        if (r.is_zero() || s.is_zero()) continue;
        if (!gcd_q(r, s).is_constant()) continue;
        pairs.emplace_back(r, s);
    }
    for (const auto& [r, s] : pairs) {
        mpz_class lambda = bezout_bound(r, s);
        for (long t = -1000; t <= 1000; ++t) {
            mpz_class g;
            mpz_class rv = r.eval(t), sv = s.eval(t);
            mpz_gcd(g.get_mpz_t(), rv.get_mpz_t(), sv.get_mpz_t());
            if (g == 0) continue;  // both vanish only at a common root, excluded
            REQUIRE(mpz_divisible_p(lambda.get_mpz_t(), g.get_mpz_t()));
        }
    }
}

TEST_CASE("scale_roots") {
    CHECK(scale_roots(P("X^2-2"), 2) == P("X^2-8"));
    CHECK(scale_roots(P("X-1"), 5) == P("X-5"));
    CHECK(scale_roots(P("2*X^2+X+1"), 3) == P("2*X^2+3*X+9"));
    CHECK_THROWS_AS(scale_roots(P("X"), 0), std::domain_error);

    // composition: scaling by theta1 then theta2 = scaling by theta1*theta2
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        IntPoly g = random_poly(rng, 5, 20);
        if (g.is_zero()) continue;
        for (long t1 : {2L, -3L, 5L})
            for (long t2 : {3L, -2L}) {
                CHECK(scale_roots(scale_roots(g, t1), t2) == scale_roots(g, mpz_class(t1) * t2));
            }
    }
}

TEST_CASE("compose_scaled") {
    CHECK(compose_scaled(P("X^2+1"), 2) == P("X^2+4"));
    CHECK(compose_scaled(P("X-3"), 1) == P("X-3"));
    CHECK(compose_scaled(P("2*X^3"), 3) == P("2*X^3"));
    // distinct from scale_roots: content is kept
    CHECK(compose_scaled(P("X^2-2"), 2) == P("X^2-8"));
    CHECK(compose_scaled(P("X^2+X+1"), 2) == P("X^2+2*X+4"));
}

TEST_CASE("linear-substitution resultant worked examples") {
    CHECK(resultant_linear_sub(P("X^2-2"), P("X^2-3"), 1) == P("X^4-10*X^2+1"));
    CHECK(resultant_linear_sub(P("X-1"), P("X-2"), 1) == P("X-3"));
    CHECK(resultant_linear_sub(P("X^2+1"), P("X-1"), 2) == P("X^2-4*X+5"));
}

TEST_CASE("linear-substitution resultant: degree law and Sylvester cross-check") {
    std::mt19937 rng(23);
    for (int i = 0; i < 40; ++i) {
        IntPoly m = random_poly(rng, 3, 6);
        IntPoly g = random_poly(rng, 3, 6);
        if (m.is_zero() || g.is_zero() || m.is_constant() || g.is_constant()) continue;
        for (long c : {0L, 1L, 2L, -1L}) {
            IntPoly via_interp = resultant_linear_sub(m, g, c);
            IntPoly via_sylvester = resultant_linear_sub_sylvester(m, g, c);
            CHECK(via_interp == via_sylvester);
            if (!via_interp.is_zero() && !via_interp.is_constant())
                CHECK(via_interp.degree() == m.degree() * g.degree());
        }
    }
}

TEST_CASE("Gauss's lemma: product of primitives is primitive") {
    std::mt19937 rng(1009);
    for (int i = 0; i < 1000; ++i) {
        IntPoly a = random_primitive(rng, 8, 50);
        IntPoly b = random_primitive(rng, 8, 50);
        REQUIRE(content(a * b) == 1);
    }
}

TEST_CASE("any integer polynomial is content times its primitive part") {
    std::mt19937 rng(77);
    for (int i = 0; i < 200; ++i) {
        IntPoly s = random_poly(rng, 8, 50);
        if (s.is_zero()) continue;
        IntPoly t = primitive_part(s);
        mpz_class l = content(s);
        if (s.lc() < 0) l = -l;
        CHECK(l * t == s);
    }
}

TEST_CASE("clearing denominators commutes with powers up to sign") {
    std::mt19937 rng(31);
    for (int i = 0; i < 100; ++i) {
        // random rational polynomial
        std::uniform_int_distribution<int> dd(0, 4), dc(-20, 20), dn(1, 9);
        int d = dd(rng);
        std::vector<mpq_class> c(static_cast<std::size_t>(d) + 1);
        for (auto& v : c) v = mpq_class(dc(rng), dn(rng));
        RatPoly f(std::move(c));
        if (f.is_zero()) continue;
        IntPoly g = f.clear_denominators();
        for (int s = 1; s <= 3; ++s) {
            RatPoly fs = f;
            for (int k = 1; k < s; ++k) fs = fs * f;
            IntPoly lhs = g;
            for (int k = 1; k < s; ++k) lhs = lhs * g;
            CHECK(primitive_part(lhs) == fs.clear_denominators());
        }
    }
}

TEST_CASE("discriminant spot values") {
    // quadratic aX^2+bX+c has discriminant b^2-4ac
    CHECK(discriminant(P("X^2+1")) == -4);
    CHECK(discriminant(P("X^2-2")) == 8);
    // cubic X^3+pX+q: -4p^3-27q^2
    CHECK(discriminant(P("X^3-X-1")) == -23);
    CHECK(discriminant(P("X^3-2")) == -108);
}

TEST_CASE("exact division") {
    CHECK(divexact(P("X^2-1"), P("X-1")) == P("X+1"));
    CHECK_THROWS_AS(divexact(P("X^2+1"), P("X-1")), std::domain_error);
    CHECK(divides_q(P("X-1"), P("X^2-1")));
    CHECK(!divides_q(P("X-1"), P("X^2+1")));
    // divides over Q, not Z: 2X-2 divides X^2-1 rationally
    CHECK(divides_q(P("2*X-2"), P("X^2-1")));
}
