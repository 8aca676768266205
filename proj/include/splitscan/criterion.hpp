#ifndef SPLITSCAN_CRITERION_HPP
#define SPLITSCAN_CRITERION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "splitscan/int_poly.hpp"

namespace splitscan::criterion {

struct PrimeRecord {
    std::uint64_t p;
    bool phi_splits;
    bool p_has_root;
    bool p_splits;
};

enum class ViolationKind {
    phi_vs_root,   // phi splits <=> P has a root failed
    root_vs_split  // P has a root <=> P splits failed
};

struct Violation {
    std::uint64_t p;
    ViolationKind kind;
};

struct ScanReport {
    IntPoly phi;
    IntPoly p_poly;
    mpz_class bad_bound;  // B: primes <= B are excluded from the iff-assertions
    std::uint64_t p_max = 0;
    std::vector<PrimeRecord> records;
    std::vector<Violation> violations;

    std::size_t n_primes() const { return records.size(); }
    std::size_t n_split() const;
};

/// Every prime > B divides neither leading coefficient nor any
/// discriminant prime factor up to 10^6 (the ramification filter).
mpz_class bad_prime_bound(const IntPoly& phi, const IntPoly& p_poly);

struct ScanOptions {
    unsigned threads = 1;
    std::uint64_t segment_size = 1u << 20;
    /// Called with each record in ascending prime order as segments
    /// complete (incremental persistence hook).
    std::function<void(const PrimeRecord&)> sink;
};

/// For every prime p in (B, p_max]: evaluates phi-splits, P-has-root and
/// P-splits, collecting all violations of the two equivalences.
ScanReport scan(const IntPoly& phi, const IntPoly& p_poly, std::uint64_t p_max,
                const ScanOptions& opts = {});

/// Associative record merge over disjoint ranges (enables partitioned or
/// resumed scans).
ScanReport merge_reports(const ScanReport& a, const ScanReport& b);

struct SchurWitness {
    mpz_class q;      // prime divisor of p_poly
    mpz_class m;      // witness argument
    mpz_class value;  // p_poly(m), nonzero, divisible by q
};

/// Distinct prime divisors of P, found by evaluating P at 0, 1, -1, 2,
/// -2, ... and factoring. Returns up to `count` witnesses (fewer only
/// when m_max is exhausted).
std::vector<SchurWitness> schur_search(const IntPoly& p_poly, int count, std::uint64_t m_max = 100000);

/// True iff every witness prime q with B < q <= p_max is a split prime
/// of phi in the report. Witnesses are revalidated against the report's
/// polynomial; invalid ones raise an error.
bool cross_check(const std::vector<SchurWitness>& witnesses, const ScanReport& report);

struct DensityStats {
    double split_fraction;
    double expected;  // 1/deg(P): a rough yardstick, not a guaranteed rate
    std::size_t sample_size;
};

DensityStats density_stats(const ScanReport& report);

}  // namespace splitscan::criterion

#endif
