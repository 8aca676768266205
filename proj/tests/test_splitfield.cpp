#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "splitscan/splitfield.hpp"
#include "splitscan/zfactor.hpp"
#include "splitscan/zpoly.hpp"

using namespace splitscan;
using namespace splitscan::splitfield;

namespace {

IntPoly P(const std::string& s) { return parse_poly(s); }

bool disk_near(const CDisk& d, double re, double im, double tol = 1e-25) {
    return abs(d.re - re) < tol && abs(d.im - im) < tol && d.rad < tol;
}

std::vector<mpz_class> to_mpz(const std::vector<long>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("root isolation worked examples") {
    auto i_roots = isolate_roots(P("X^2+1"), 128);
    REQUIRE(i_roots.size() == 2);
    CHECK(disk_near(i_roots[0].first.disk, 0.0, -1.0));
    CHECK(disk_near(i_roots[1].first.disk, 0.0, 1.0));
    CHECK(i_roots[0].second == 1);
    CHECK(i_roots[1].second == 1);

    // X^2 - 2 against an independently computed reference value
    auto s_roots = isolate_roots(P("X^2-2"), 128);
    REQUIRE(s_roots.size() == 2);
    mpf_class ref(0, 256);
    mpf_sqrt_ui(ref.get_mpf_t(), 2);
    CHECK(abs(s_roots[1].first.disk.re - ref) < 1e-30);
    CHECK(abs(s_roots[0].first.disk.re + ref) < 1e-30);
    CHECK(s_roots[0].first.disk.rad < 1e-19);  // radius <= 2^-64 at 128 bits

    // (X-1)^2 (X+2): multiplicities from squarefree decomposition
    auto m_roots = isolate_roots(P("X^3-3*X+2"), 128);
    REQUIRE(m_roots.size() == 2);
    CHECK(disk_near(m_roots[0].first.disk, -2.0, 0.0));
    CHECK(m_roots[0].second == 1);
    CHECK(disk_near(m_roots[1].first.disk, 1.0, 0.0));
    CHECK(m_roots[1].second == 2);
    int total = 0;
    for (const auto& [r, m] : m_roots) total += m;
    CHECK(total == 3);

    CHECK_THROWS(isolate_roots(P("7"), 128));
}

TEST_CASE("isolated disks are pairwise disjoint and indexed canonically") {
    for (const char* s : {"X^4-10*X^2+1", "X^6-1", "X^4+4", "X^5-X+1"}) {
        auto roots = isolate_roots(P(s), 128);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(roots[i].first.index == static_cast<int>(i));
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                CHECK(disk_distance_lower(roots[i].first.disk, roots[j].first.disk) > 0);
        }
    }
}

TEST_CASE("weight selection worked examples") {
    auto sums2 = isolate_squarefree(P("X^2-2"), 128);
    auto roots3 = isolate_squarefree(P("X^2-3"), 128);
    CHECK(choose_weight(sums2, roots3) == 1);

    // same factor twice: c = 1 collides (sqrt2 + (-sqrt2) = -sqrt2 + sqrt2)
    CHECK(choose_weight(sums2, sums2) == 2);

    std::vector<CDisk> one_sum = {sums2[0]};
    std::vector<CDisk> one_root = {roots3[0]};
    CHECK(choose_weight(one_sum, one_root) == 1);

    // determinism
    CHECK(choose_weight(sums2, roots3) == choose_weight(sums2, roots3));
}

TEST_CASE("minimal polynomial of a weighted sum") {
    auto r2 = isolate_squarefree(P("X^2-2"), 128);
    auto r3 = isolate_squarefree(P("X^2-3"), 128);
    CHECK(min_poly_of_sum(P("X^2-2"), P("X^2-3"), 1, r2[1], r3[1]) == P("X^4-10*X^2+1"));

    CDisk one = disk_from_int(1, 128), two = disk_from_int(2, 128);
    CHECK(min_poly_of_sum(P("X-1"), P("X-2"), 1, one, two) == P("X-3"));

    // i + 2*(-i) = -i has minimal polynomial X^2+1 again
    auto ri = isolate_squarefree(P("X^2+1"), 128);
    const CDisk& plus_i = ri[1].im > 0 ? ri[1] : ri[0];
    const CDisk& minus_i = ri[1].im > 0 ? ri[0] : ri[1];
    CHECK(min_poly_of_sum(P("X^2+1"), P("X^2+1"), 2, plus_i, minus_i) == P("X^2+1"));
}

TEST_CASE("primitive element degrees") {
    CHECK(primitive_element(P("X^2-3*X+2")).degree() == 1);
    CHECK(primitive_element(P("X^2+1")).degree() == 2);
    CHECK(primitive_element(P("X^4-10*X^2+1")).degree() == 4);
    CHECK(primitive_element(P("X^3-2")).degree() == 6);
}

TEST_CASE("primitive element invariants") {
    for (const char* s : {"X^2+1", "X^3-2", "X^4+4", "X^2-3*X+2", "2*X^2+3*X+1"}) {
        IntPoly phi = P(s);
        PrimitiveElement pe = primitive_element(phi);
        CHECK(zfactor::is_irreducible_q(pe.min_poly));
        CHECK(disk_may_contain_zero(disk_eval(pe.min_poly, pe.beta)));
        // degree divides d! and is at least the largest factor degree
        int d = zpoly::squarefree_part(phi).degree();
        mpz_class dfact;
        mpz_fac_ui(dfact.get_mpz_t(), static_cast<unsigned long>(d));
        CHECK(mpz_divisible_ui_p(dfact.get_mpz_t(), static_cast<unsigned long>(pe.degree())));
        int max_factor_deg = 0;
        for (const auto& f : pe.root_factors) max_factor_deg = std::max(max_factor_deg, f.degree());
        CHECK(pe.degree() >= max_factor_deg);
        CHECK(pe.weights.size() == pe.root_factors.size());
        // the weighted sum of tracked roots recomputes beta
        CHECK(pe.min_poly.lc() > 0);
        CHECK(zpoly::content(pe.min_poly) == 1);
    }
}

TEST_CASE("weighted conjugate product") {
    CHECK(weighted_conjugate_product({P("X^2-2"), P("X^2-3")}, {1, 1}) == P("X^4-10*X^2+1"));
    CHECK(weighted_conjugate_product({P("X-5")}, {2}) == P("X-10"));
    CHECK(weighted_conjugate_product({P("X^2-2")}, {1}) == P("X^2-2"));
    CHECK_THROWS(weighted_conjugate_product({}, {}));

    // degree law: product of factor degrees
    IntPoly w = weighted_conjugate_product({P("X^3-2"), P("X^3-2"), P("X^2+1")}, {1, 2, 1});
    CHECK(w.degree() == 18);
}

TEST_CASE("minimal polynomial divides the weighted conjugate product") {
    for (const char* s : {"X^2+1", "X^2-2", "X^3-2", "X^4+4", "X^2-3*X+2"}) {
        PrimitiveElement pe = primitive_element(P(s));
        IntPoly prod = weighted_conjugate_product(pe.root_factors, to_mpz(pe.weights));
        CHECK(zpoly::divides_q(pe.min_poly, prod));
    }
}

TEST_CASE("family") {
    auto quad = family(P("X^2-2"), 2);
    REQUIRE(quad.size() == 2);
    CHECK(quad[0].min_poly != quad[1].min_poly);
    CHECK(quad[0].degree() == 2);
    CHECK(quad[1].degree() == 2);

    auto lin = family(P("(X-1)*(X-2)"), 3);
    REQUIRE(lin.size() == 3);
    for (const auto& pe : lin) CHECK(pe.degree() == 1);
    CHECK(lin[0].min_poly != lin[1].min_poly);
    CHECK(lin[1].min_poly != lin[2].min_poly);
    CHECK(lin[0].min_poly != lin[2].min_poly);

    auto sextic = family(P("X^3-2"), 2);
    REQUIRE(sextic.size() == 2);
    CHECK(sextic[0].min_poly != sextic[1].min_poly);
    CHECK(sextic[0].degree() == 6);
    CHECK(sextic[1].degree() == 6);
}
