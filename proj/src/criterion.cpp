#include "splitscan/criterion.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "splitscan/fpoly.hpp"
#include "splitscan/primes.hpp"
#include "splitscan/zpoly.hpp"

namespace splitscan::criterion {

namespace {

constexpr std::uint32_t kDiscPrimeSieve = 1000000;

mpz_class largest_small_prime_factor(const mpz_class& value) {
    mpz_class v = abs(value);
    mpz_class best{0};
    if (v <= 1) return best;
    for (std::uint32_t p : primes::primes_up_to(kDiscPrimeSieve)) {
        if (mpz_divisible_ui_p(v.get_mpz_t(), p)) best = p;
    }
    return best;
}

void scan_one(const IntPoly& phi, const IntPoly& p_poly, std::uint64_t p, std::vector<PrimeRecord>& out) {
    fpoly::ModPoly phi_p = fpoly::reduce(phi, p);
    fpoly::ModPoly pp_p = fpoly::reduce(p_poly, p);
    PrimeRecord rec;
    rec.p = p;
    rec.phi_splits = fpoly::splits_completely(phi_p);
    rec.p_has_root = fpoly::has_root(pp_p);
    rec.p_splits = fpoly::splits_completely(pp_p);
    out.push_back(rec);
}

void derive_violations(ScanReport& rep) {
    rep.violations.clear();
    for (const auto& r : rep.records) {
        if (r.phi_splits != r.p_has_root) rep.violations.push_back({r.p, ViolationKind::phi_vs_root});
        if (r.p_has_root != r.p_splits) rep.violations.push_back({r.p, ViolationKind::root_vs_split});
    }
}

}  // namespace

std::size_t ScanReport::n_split() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const PrimeRecord& r) { return r.phi_splits; }));
}

mpz_class bad_prime_bound(const IntPoly& phi, const IntPoly& p_poly) {
    if (phi.is_zero() || phi.is_constant() || p_poly.is_zero())
        throw std::domain_error("bad_prime_bound requires nonconstant phi and nonzero P");
    mpz_class b = abs(phi.lc());
    mpz_class lp = abs(p_poly.lc());
    if (lp > b) b = lp;
    IntPoly sf = zpoly::squarefree_part(phi);
    if (!sf.is_constant() && sf.degree() >= 1) {
        if (sf.degree() >= 2) {
            mpz_class d = largest_small_prime_factor(zpoly::discriminant(sf));
            if (d > b) b = d;
        }
    }
    if (!p_poly.is_constant() && p_poly.degree() >= 2) {
        mpz_class d = largest_small_prime_factor(zpoly::discriminant(p_poly));
        if (d > b) b = d;
    }
    if (b < 2) b = 2;
    return b;
}

ScanReport scan(const IntPoly& phi, const IntPoly& p_poly, std::uint64_t p_max, const ScanOptions& opts) {
    if (phi.is_zero() || phi.is_constant() || p_poly.is_zero() || p_poly.is_constant())
        throw std::domain_error("scan requires nonconstant phi and P");
    ScanReport rep;
    rep.phi = phi;
    rep.p_poly = p_poly;
    rep.bad_bound = bad_prime_bound(phi, p_poly);
    rep.p_max = p_max;
    if (mpz_cmp_ui(rep.bad_bound.get_mpz_t(), p_max) >= 0)
        throw std::invalid_argument("p_max must exceed the excluded-prime bound B = " + rep.bad_bound.get_str());
    std::uint64_t lo = mpz_get_ui(rep.bad_bound.get_mpz_t());

    std::uint64_t seg = std::max<std::uint64_t>(opts.segment_size, 1024);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;  // (lo, hi]
    for (std::uint64_t start = lo; start < p_max;) {
        std::uint64_t end = std::min<std::uint64_t>(p_max, start + seg);
        ranges.emplace_back(start, end);
        start = end;
    }

    unsigned threads = std::max(1u, opts.threads);
    std::vector<std::vector<PrimeRecord>> results(ranges.size());
    if (threads == 1 || ranges.size() == 1) {
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            primes::for_primes_in(ranges[i].first, ranges[i].second, seg,
                                  [&](std::uint64_t p) { scan_one(phi, p_poly, p, results[i]); });
            if (opts.sink)
                for (const auto& r : results[i]) opts.sink(r);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= ranges.size()) break;
                primes::for_primes_in(ranges[i].first, ranges[i].second, seg,
                                      [&](std::uint64_t p) { scan_one(phi, p_poly, p, results[i]); });
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (opts.sink)
            for (const auto& segrec : results)
                for (const auto& r : segrec) opts.sink(r);
    }
    for (auto& segrec : results)
        rep.records.insert(rep.records.end(), segrec.begin(), segrec.end());
    derive_violations(rep);
    return rep;
}

ScanReport merge_reports(const ScanReport& a, const ScanReport& b) {
    if (a.phi != b.phi || a.p_poly != b.p_poly)
        throw std::invalid_argument("merge_reports: reports cover different polynomials");
    ScanReport out;
    out.phi = a.phi;
    out.p_poly = a.p_poly;
    out.bad_bound = a.bad_bound < b.bad_bound ? a.bad_bound : b.bad_bound;
    out.p_max = std::max(a.p_max, b.p_max);
    out.records = a.records;
    out.records.insert(out.records.end(), b.records.begin(), b.records.end());
    std::sort(out.records.begin(), out.records.end(),
              [](const PrimeRecord& x, const PrimeRecord& y) { return x.p < y.p; });
    out.records.erase(std::unique(out.records.begin(), out.records.end(),
                                  [](const PrimeRecord& x, const PrimeRecord& y) { return x.p == y.p; }),
                      out.records.end());
    derive_violations(out);
    return out;
}

std::vector<SchurWitness> schur_search(const IntPoly& p_poly, int count, std::uint64_t m_max) {
    if (p_poly.is_zero() || p_poly.is_constant())
        throw std::domain_error("schur_search requires a nonconstant polynomial");
    if (count < 1) throw std::invalid_argument("count must be positive");
    static const std::vector<std::uint32_t> kSmallPrimes = primes::primes_up_to(1000000);
    std::vector<SchurWitness> out;
    std::vector<mpz_class> seen;
    auto record = [&](const mpz_class& q, const mpz_class& m, const mpz_class& value) {
        for (const auto& s : seen)
            if (s == q) return;
        seen.push_back(q);
        out.push_back({q, m, value});
    };
    auto consider = [&](const mpz_class& m) {
        mpz_class value = p_poly.eval(m);
        if (value == 0) return;
        mpz_class v = abs(value);
        for (std::uint32_t p : kSmallPrimes) {
            if (static_cast<int>(out.size()) >= count) return;
            if (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
                record(mpz_class(p), m, value);
                while (mpz_divisible_ui_p(v.get_mpz_t(), p)) mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
            }
            if (v == 1) break;
        }
        if (v > 1 && static_cast<int>(out.size()) < count && mpz_probab_prime_p(v.get_mpz_t(), 40) > 0)
            record(v, m, value);
    };
    consider(0);
    for (std::uint64_t m = 1; m <= m_max && static_cast<int>(out.size()) < count; ++m) {
        consider(mpz_class(static_cast<unsigned long>(m)));
        if (static_cast<int>(out.size()) >= count) break;
        consider(-mpz_class(static_cast<unsigned long>(m)));
    }
    return out;
}

bool cross_check(const std::vector<SchurWitness>& witnesses, const ScanReport& report) {
    for (const auto& w : witnesses) {
        mpz_class value = report.p_poly.eval(w.m);
        if (value != w.value || value == 0 || !mpz_divisible_p(value.get_mpz_t(), w.q.get_mpz_t()) ||
            mpz_probab_prime_p(w.q.get_mpz_t(), 40) == 0)
            throw std::invalid_argument("cross_check: witness does not validate against the report's polynomial");
    }
    for (const auto& w : witnesses) {
        if (w.q <= report.bad_bound) continue;
        if (mpz_cmp_ui(w.q.get_mpz_t(), report.p_max) > 0) continue;
        std::uint64_t q = mpz_get_ui(w.q.get_mpz_t());
        auto it = std::lower_bound(report.records.begin(), report.records.end(), q,
                                   [](const PrimeRecord& r, std::uint64_t v) { return r.p < v; });
        if (it == report.records.end() || it->p != q || !it->phi_splits) return false;
    }
    return true;
}

DensityStats density_stats(const ScanReport& report) {
    if (report.records.empty()) throw std::domain_error("density_stats on an empty report");
    DensityStats s;
    s.sample_size = report.n_primes();
    s.split_fraction = static_cast<double>(report.n_split()) / static_cast<double>(s.sample_size);
    s.expected = 1.0 / report.p_poly.degree();
    return s;
}

}  // namespace splitscan::criterion
