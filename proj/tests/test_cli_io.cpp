#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "splitscan/criterion.hpp"
#include "splitscan/report_io.hpp"
#include "splitscan/splitfield.hpp"
#include "splitscan/zfactor.hpp"

using namespace splitscan;

namespace {

IntPoly P(const std::string& s) { return parse_poly(s); }

}  // namespace

TEST_CASE("parser accepts human form") {
    CHECK(P("X^3 - 2") == IntPoly{-2, 0, 0, 1});
    CHECK(P("x^2+x+1") == IntPoly{1, 1, 1});
    CHECK(P("(X-1)*(X-2)") == IntPoly{2, -3, 1});
    CHECK(P("(X-1)(X-2)") == IntPoly{2, -3, 1});  // adjacency multiplies
    CHECK(P("2X^2 + 3X + 1") == IntPoly{1, 3, 2});
    CHECK(P("-X") == IntPoly{0, -1});
    CHECK(P("0").is_zero());
    CHECK(P("  7 ") == IntPoly{7});
    CHECK(P("X^2 - (X - 1)") == IntPoly{1, -1, 1});
    CHECK(P("(X+1)^3") == IntPoly{1, 3, 3, 1});
}

TEST_CASE("parser accepts coefficient-list form") {
    CHECK(P("[-2, 0, 0, 1]") == P("X^3-2"));
    CHECK(P("[1]") == IntPoly{1});
    CHECK(P("[0]").is_zero());
    CHECK(P("[2, -3, 1]") == P("X^2-3*X+2"));
}

TEST_CASE("parse errors carry a position diagnostic") {
    for (const char* bad : {"X^", "X +", "(X-1", "X^-2", "3..5", "[1, 2", "X$Y", ""}) {
        CHECK_THROWS_AS(parse_poly(bad), std::invalid_argument);
    }
    try {
        parse_poly("X^2 $ 3");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("printed polynomials re-parse to equal values") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dd(0, 9), dc(-99, 99);
    for (int i = 0; i < 500; ++i) {
        std::vector<mpz_class> c(static_cast<std::size_t>(dd(rng)) + 1);
        for (auto& v : c) v = dc(rng);
        IntPoly p(std::move(c));
        CHECK(parse_poly(to_string(p)) == p);
        CHECK(parse_poly(to_coeff_string(p)) == p);
    }
    CHECK(to_string(P("X^3-2")) == "X^3 - 2");
    CHECK(to_coeff_string(P("X^3-2")) == "[-2, 0, 0, 1]");
    CHECK(to_string(IntPoly{}) == "0");
}

TEST_CASE("csv serialization") {
    CHECK(std::string(io::csv_header()) == "p,phi_splits,p_has_root,p_splits");
    criterion::PrimeRecord rec{101, true, true, false};
    CHECK(io::csv_line(rec) == "101,1,1,0");
    criterion::PrimeRecord rec2{7, false, false, false};
    CHECK(io::csv_line(rec2) == "7,0,0,0");
}

TEST_CASE("json output is deterministic") {
    criterion::ScanReport rep = criterion::scan(P("X^2+1"), P("X^2+1"), 1000);
    CHECK(io::report_json(rep) == io::report_json(rep));
    CHECK(io::report_json(rep).find("\"violations\": []") != std::string::npos);

    splitfield::PrimitiveElement pe = splitfield::primitive_element(P("X^3-2"));
    std::string j = io::primitive_element_json(pe);
    CHECK(j == io::primitive_element_json(splitfield::primitive_element(P("X^3-2"))));
    CHECK(j.find("\"degree\": 6") != std::string::npos);

    auto w = criterion::schur_search(P("X^2+1"), 3);
    CHECK(io::schur_json(w) == io::schur_json(w));
}

TEST_CASE("factorization rendering") {
    zfactor::Factorization f = zfactor::factor_q(P("-6*X^3+18*X^2-18*X+6"));
    CHECK(io::factorization_string(f) == "-6 * (X - 1)^3");
    zfactor::Factorization g = zfactor::factor_q(P("X^2-1"));
    CHECK(io::factorization_string(g) == "(X - 1) * (X + 1)");
    // every printed factor re-parses
    for (const auto& [p, m] : g.factors) CHECK(parse_poly(to_string(p)) == p);
}
