#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "splitscan/criterion.hpp"
#include "splitscan/fpoly.hpp"
#include "splitscan/primes.hpp"
#include "splitscan/splitfield.hpp"

using namespace splitscan;
using namespace splitscan::criterion;

namespace {

IntPoly P(const std::string& s) { return parse_poly(s); }

std::set<std::uint64_t> split_set(const ScanReport& rep) {
    std::set<std::uint64_t> s;
    for (const auto& r : rep.records)
        if (r.phi_splits) s.insert(r.p);
    return s;
}

}  // namespace

TEST_CASE("excluded-prime bound worked examples") {
    CHECK(bad_prime_bound(P("X^2+1"), P("X^2+1")) == 2);  // disc -4, lc 1
    CHECK(bad_prime_bound(P("X^2-2"), P("X^2-2")) == 2);  // disc 8
    CHECK(bad_prime_bound(P("2*X^2+3*X+1"), P("X-1")) >= 2);  // lc 2 excluded
    CHECK(bad_prime_bound(P("X^3-2"), P("X^6+108")) == 3);  // disc -108 = -2^2 3^3
}

TEST_CASE("scan worked examples") {
    ScanReport rep = scan(P("X^2+1"), P("X^2+1"), 100);
    CHECK(rep.violations.empty());
    CHECK(split_set(rep) == std::set<std::uint64_t>{5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97});

    ScanReport lin = scan(P("(X-1)*(X-2)"), P("X-2"), 1000);
    CHECK(lin.violations.empty());
    CHECK(lin.n_split() == lin.n_primes());

    CHECK_THROWS(scan(P("X^2+1"), P("X^2+1"), 2));  // p_max below the bound
}

TEST_CASE("X^3-2 split primes are 1 mod 3 with 2 a cubic residue") {
    ScanReport rep = scan(P("X^3-2"), P("X^6+108"), 10000);
    CHECK(rep.violations.empty());
    // independent brute-force check against phi itself
    for (const auto& r : rep.records) {
        int roots = 0;
        for (std::uint64_t x = 0; x < r.p; ++x) {
            unsigned __int128 v = static_cast<unsigned __int128>(x) * x % r.p * x % r.p;
            if (v % r.p == 2 % r.p) ++roots;
        }
        bool brute_splits = roots == 3;
        REQUIRE(r.phi_splits == brute_splits);
        if (r.phi_splits) REQUIRE(r.p % 3 == 1);
    }
}

TEST_CASE("monotone consistency: splitting implies a root") {
    for (const char* s : {"X^2+1", "X^3-2", "X^4+4"}) {
        ScanReport rep = scan(P(s), P(s), 2000);
        for (const auto& r : rep.records) {
            if (r.p_splits) CHECK(r.p_has_root);
        }
    }
}

TEST_CASE("threaded scan equals sequential scan") {
    ScanOptions seq, par;
    par.threads = 4;
    par.segment_size = 1024;
    ScanReport a = scan(P("X^3-2"), P("X^6+108"), 50000, seq);
    ScanReport b = scan(P("X^3-2"), P("X^6+108"), 50000, par);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].p == b.records[i].p);
        CHECK(a.records[i].phi_splits == b.records[i].phi_splits);
    }
}

TEST_CASE("sink receives every record in ascending order") {
    ScanOptions opts;
    std::vector<std::uint64_t> seen;
    opts.sink = [&](const PrimeRecord& r) { seen.push_back(r.p); };
    ScanReport rep = scan(P("X^2+1"), P("X^2+1"), 5000, opts);
    REQUIRE(seen.size() == rep.records.size());
    for (std::size_t i = 0; i < seen.size(); ++i) {
        CHECK(seen[i] == rep.records[i].p);
        if (i) CHECK(seen[i] > seen[i - 1]);
    }
}

TEST_CASE("report merge is consistent and associative") {
    ScanReport whole = scan(P("X^2-2"), P("X^2-2"), 3000);
    // partition the records three ways and merge back
    ScanReport a = whole, b = whole, c = whole;
    a.records.assign(whole.records.begin(), whole.records.begin() + 40);
    b.records.assign(whole.records.begin() + 40, whole.records.begin() + 200);
    c.records.assign(whole.records.begin() + 200, whole.records.end());
    ScanReport left = merge_reports(merge_reports(a, b), c);
    ScanReport right = merge_reports(a, merge_reports(b, c));
    REQUIRE(left.records.size() == whole.records.size());
    REQUIRE(right.records.size() == whole.records.size());
    for (std::size_t i = 0; i < whole.records.size(); ++i) {
        CHECK(left.records[i].p == whole.records[i].p);
        CHECK(right.records[i].p == whole.records[i].p);
    }
    CHECK(left.violations.size() == whole.violations.size());
    CHECK_THROWS(merge_reports(whole, scan(P("X^2+1"), P("X^2+1"), 100)));
}

TEST_CASE("schur search worked examples") {
    auto w1 = schur_search(P("X^2+1"), 4);
    REQUIRE(w1.size() == 4);
    std::set<mpz_class> qs;
    for (const auto& w : w1) {
        qs.insert(w.q);
        CHECK(w.value == w.m * w.m + 1);
        CHECK(mpz_divisible_p(w.value.get_mpz_t(), w.q.get_mpz_t()));
    }
    CHECK(qs == std::set<mpz_class>{2, 5, 13, 17});

    auto w2 = schur_search(P("X"), 3);
    REQUIRE(w2.size() == 3);
    CHECK(w2[0].q == 2);
    CHECK(w2[1].q == 3);
    CHECK(w2[2].q == 5);

    auto w3 = schur_search(P("X^2-2"), 3);
    std::set<mpz_class> q3;
    for (const auto& w : w3) q3.insert(w.q);
    CHECK(q3 == std::set<mpz_class>{2, 7, 23});

    CHECK_THROWS(schur_search(P("5"), 3));
}

TEST_CASE("cross check") {
    ScanReport rep = scan(P("X^2+1"), P("X^2+1"), 1000);
    auto witnesses = schur_search(P("X^2+1"), 6);
    CHECK(cross_check(witnesses, rep));

    // witness at or below the bound is ignored, not a failure
    std::vector<SchurWitness> small = {{2, 1, 2}};
    CHECK(cross_check(small, rep));

    // corrupted report: flip a split prime to non-split
    ScanReport bad = rep;
    for (auto& r : bad.records)
        if (r.p == 5) r.phi_splits = false;
    CHECK(!cross_check(witnesses, bad));

    // invalid witness (wrong value) raises
    std::vector<SchurWitness> forged = {{5, 2, 7}};
    CHECK_THROWS(cross_check(forged, rep));
}

TEST_CASE("density statistics") {
    ScanReport rep = scan(P("X^2+1"), P("X^2+1"), 100000);
    DensityStats st = density_stats(rep);
    CHECK(st.expected == doctest::Approx(0.5));
    CHECK(st.split_fraction == doctest::Approx(0.5).epsilon(0.05));
    CHECK(st.sample_size == rep.n_primes());

    ScanReport lin = scan(P("(X-1)*(X-2)"), P("X-2"), 1000);
    CHECK(density_stats(lin).split_fraction == doctest::Approx(1.0));
}
