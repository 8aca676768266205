#include "splitscan/zfactor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "splitscan/fpoly.hpp"
#include "splitscan/primes.hpp"
#include "splitscan/zpoly.hpp"

namespace splitscan::zfactor {

using fpoly::ModPoly;

namespace {

// ---------- squarefree decomposition (Yun) ----------

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly g = zpoly::gcd_q(f, f.derivative());
    if (g.is_constant()) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly w = zpoly::divexact(f, g);
    IntPoly y = zpoly::divexact(f.derivative(), g);
    IntPoly z = y - w.derivative();
    int i = 1;
    while (!w.is_constant()) {
        IntPoly h = z.is_zero() ? w : zpoly::gcd_q(w, z);
        if (!h.is_constant()) out.emplace_back(h, i);
        w = zpoly::divexact(w, h);
        if (w.is_constant()) break;
        y = zpoly::divexact(z, h);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

// ---------- factorization mod p ----------

std::pair<ModPoly, ModPoly> divmod_mod(const ModPoly& a, const ModPoly& b) {
    std::uint64_t p = a.modulus();
    ModPoly r = a;
    std::vector<std::uint64_t> q(a.coeffs().size() >= b.coeffs().size()
                                     ? a.coeffs().size() - b.coeffs().size() + 1
                                     : 0,
                                 0);
    // b is monic in every call site
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::uint64_t c = r.lc();
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        q[shift] = c;
        std::vector<std::uint64_t> t(shift + b.coeffs().size(), 0);
        for (std::size_t i = 0; i < b.coeffs().size(); ++i)
            t[shift + i] = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(c) * b.coeff(i)) % p);
        r = fpoly::sub(r, ModPoly(p, std::move(t)));
    }
    return {ModPoly(p, std::move(q)), r};
}

/// Extended Euclid over F_p: s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> xgcd_mod(const ModPoly& a, const ModPoly& b) {
    std::uint64_t p = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0(p, {1}), s1(p, {});
    ModPoly t0(p, {}), t1(p, {1});
    while (!r1.is_zero()) {
        auto [q, r] = divmod_mod(r0, fpoly::make_monic(r1));
        // divmod_mod expects monic divisor; fold the lc back in
        std::uint64_t l = r1.lc();
        std::uint64_t linv = 1;
        {
            // l^(p-2) mod p
            std::uint64_t e = p - 2, base = l, acc = 1;
            while (e) {
                if (e & 1) acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * base) % p);
                base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % p);
                e >>= 1;
            }
            linv = acc;
        }
        std::vector<std::uint64_t> qc(q.coeffs());
        for (auto& v : qc) v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * linv) % p);
        ModPoly qq(p, std::move(qc));
        ModPoly s2 = fpoly::sub(s0, fpoly::mul(qq, s1));
        ModPoly t2 = fpoly::sub(t0, fpoly::mul(qq, t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_constant() == false) throw std::logic_error("xgcd_mod: inputs not coprime");
    std::uint64_t l = r0.lc();
    std::uint64_t e = p - 2, base = l, acc = 1;
    while (e) {
        if (e & 1) acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * base) % p);
        base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % p);
        e >>= 1;
    }
    std::vector<std::uint64_t> sc(s0.coeffs()), tc(t0.coeffs());
    for (auto& v : sc) v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * acc) % p);
    for (auto& v : tc) v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * acc) % p);
    return {ModPoly(p, std::move(sc)), ModPoly(p, std::move(tc))};
}

ModPoly powmod_mpz(const ModPoly& g, const mpz_class& e, const ModPoly& f) {
    std::uint64_t p = f.modulus();
    ModPoly base = fpoly::rem(g, f);
    ModPoly acc(p, {1});
    mpz_class ex = e;
    std::size_t bits = mpz_sizeinbase(ex.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(ex.get_mpz_t(), i)) acc = fpoly::rem(fpoly::mul(acc, base), f);
        base = fpoly::rem(fpoly::mul(base, base), f);
    }
    return acc;
}

void equal_degree_split(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    std::uint64_t p = f.modulus();
    if (f.degree() == d) {
        out.push_back(fpoly::make_monic(f));
        return;
    }
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    mpz_class e = (pd - 1) / 2;
    while (true) {
        std::vector<std::uint64_t> rc(static_cast<std::size_t>(2 * d), 0);
        for (auto& v : rc) v = rng() % p;
        ModPoly r(p, std::move(rc));
        if (r.is_constant()) continue;
        ModPoly w = powmod_mpz(r, e, f);
        ModPoly g = fpoly::gcd(fpoly::sub(w, ModPoly(p, {1})), f);
        if (!g.is_constant() && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divmod_mod(f, g).first, d, rng, out);
            return;
        }
    }
}

/// Monic squarefree f over F_p (p odd) into monic irreducible factors.
std::vector<ModPoly> factor_mod_p(const ModPoly& f, std::mt19937_64& rng) {
    std::uint64_t p = f.modulus();
    std::vector<ModPoly> out;
    ModPoly rest = f;
    ModPoly h = ModPoly(p, {0, 1});  // X^(p^d) mod rest, advanced per degree
    for (int d = 1; !rest.is_constant() && 2 * d <= rest.degree(); ++d) {
        h = fpoly::powmod(h, p, rest);
        ModPoly g = fpoly::gcd(fpoly::sub(h, ModPoly(p, {0, 1})), rest);
        if (!g.is_constant()) {
            equal_degree_split(g, d, rng, out);
            rest = divmod_mod(rest, g).first;
            h = fpoly::rem(h, rest);
        }
    }
    if (!rest.is_constant()) out.push_back(fpoly::make_monic(rest));
    std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
        for (std::size_t i = a.coeffs().size(); i-- > 0;)
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
        return false;
    });
    return out;
}

// ---------- arithmetic mod m (m = p^k, mpz) ----------

using ZmVec = std::vector<mpz_class>;

ZmVec zm_trim(ZmVec v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

ZmVec zm_reduce(const IntPoly& a, const mpz_class& m) {
    ZmVec r;
    r.reserve(a.coeffs().size());
    for (const auto& v : a.coeffs()) {
        mpz_class t;
        mpz_fdiv_r(t.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        r.push_back(t);
    }
    return zm_trim(std::move(r));
}

ZmVec zm_mod(const ZmVec& a, const mpz_class& m) {
    ZmVec r;
    r.reserve(a.size());
    for (const auto& v : a) {
        mpz_class t;
        mpz_fdiv_r(t.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        r.push_back(t);
    }
    return zm_trim(std::move(r));
}

ZmVec zm_add(const ZmVec& a, const ZmVec& b, const mpz_class& m) {
    ZmVec r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zm_mod(r, m);
}

ZmVec zm_sub(const ZmVec& a, const ZmVec& b, const mpz_class& m) {
    ZmVec r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zm_mod(r, m);
}

ZmVec zm_mul(const ZmVec& a, const ZmVec& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZmVec r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return zm_mod(r, m);
}

/// Division by a monic divisor, all mod m.
std::pair<ZmVec, ZmVec> zm_divmod_monic(const ZmVec& a, const ZmVec& d, const mpz_class& m) {
    ZmVec r = a;
    ZmVec q(a.size() >= d.size() ? a.size() - d.size() + 1 : 0, mpz_class(0));
    while (r.size() >= d.size() && !r.empty()) {
        mpz_class c = r.back();
        std::size_t shift = r.size() - d.size();
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) {
            r[shift + i] -= c * d[i];
            mpz_fdiv_r(r[shift + i].get_mpz_t(), r[shift + i].get_mpz_t(), m.get_mpz_t());
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return {zm_trim(std::move(q)), std::move(r)};
}

ZmVec zm_from_modpoly(const ModPoly& a) {
    ZmVec r;
    r.reserve(a.coeffs().size());
    for (auto v : a.coeffs()) r.emplace_back(mpz_class(static_cast<unsigned long>(v)));
    return r;
}

/// Coefficients lifted to the symmetric range (-m/2, m/2].
IntPoly zm_symmetric(const ZmVec& a, const mpz_class& m) {
    ZmVec r = a;
    mpz_class half = m / 2;
    for (auto& v : r)
        if (v > half) v -= m;
    return IntPoly(std::move(r));
}

// ---------- Hensel lifting ----------

struct HenselPair {
    ZmVec g, h, s, t;
};

/// One quadratic step: from a factorization valid mod m to one valid mod
/// m^2 (f, g, h monic; s*g + t*h = 1 mod m).
HenselPair hensel_step(const ZmVec& f, const HenselPair& in, const mpz_class& m) {
    mpz_class m2 = m * m;
    ZmVec g = zm_mod(in.g, m2), h = zm_mod(in.h, m2), s = zm_mod(in.s, m2), t = zm_mod(in.t, m2);
    ZmVec e = zm_sub(zm_mod(f, m2), zm_mul(g, h, m2), m2);
    auto [q, r] = zm_divmod_monic(zm_mul(s, e, m2), h, m2);
    ZmVec g1 = zm_add(g, zm_add(zm_mul(t, e, m2), zm_mul(q, g, m2), m2), m2);
    ZmVec h1 = zm_add(h, r, m2);
    ZmVec b = zm_sub(zm_add(zm_mul(s, g1, m2), zm_mul(t, h1, m2), m2), ZmVec{mpz_class(1)}, m2);
    auto [c, d] = zm_divmod_monic(zm_mul(s, b, m2), h1, m2);
    ZmVec s1 = zm_sub(s, d, m2);
    ZmVec t1 = zm_sub(t, zm_add(zm_mul(t, b, m2), zm_mul(c, g1, m2), m2), m2);
    return {std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
}

/// Lifts the modular factor list of monic f (known mod `target` = p^K,
/// K a power of two) so their product is f mod target.
void lift_tree(const ZmVec& f, const std::vector<ModPoly>& facs, std::size_t lo, std::size_t hi,
               std::uint64_t p, const mpz_class& target, std::vector<ZmVec>& out) {
    if (hi - lo == 1) {
        out.push_back(zm_mod(f, target));
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    ModPoly g0 = facs[lo];
    for (std::size_t i = lo + 1; i < mid; ++i) g0 = fpoly::mul(g0, facs[i]);
    ModPoly h0 = facs[mid];
    for (std::size_t i = mid + 1; i < hi; ++i) h0 = fpoly::mul(h0, facs[i]);
    auto [s0, t0] = xgcd_mod(g0, h0);
    HenselPair cur{zm_from_modpoly(g0), zm_from_modpoly(h0), zm_from_modpoly(s0), zm_from_modpoly(t0)};
    mpz_class m(static_cast<unsigned long>(p));
    while (m < target) {
        cur = hensel_step(f, cur, m);
        m = m * m;
    }
    ZmVec g = zm_mod(cur.g, target), h = zm_mod(cur.h, target);
    lift_tree(g, facs, lo, mid, p, target, out);
    lift_tree(h, facs, mid, hi, p, target, out);
}

// ---------- Zassenhaus recombination ----------

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Monic squarefree integer polynomial into monic irreducible factors.
std::vector<IntPoly> factor_monic_squarefree(const IntPoly& g, const FactorConfig& cfg) {
    std::vector<IntPoly> out;
    if (g.degree() == 1) {
        out.push_back(g);
        return out;
    }
    // smallest odd prime with squarefree image (lc = 1 never vanishes)
    std::uint64_t p = 3;
    while (true) {
        ModPoly gp = fpoly::reduce(g, p);
        if (gp.degree() == g.degree() && fpoly::gcd(gp, fpoly::derivative(gp)).is_constant()) break;
        p = primes::next_prime(p);
    }
    // deterministic seeding from (seed, p, g)
    std::uint64_t hs = cfg.seed ^ 0x6a09e667f3bcc909ull;
    hs = (hs ^ p) * 0x100000001b3ull;
    for (const auto& v : g.coeffs()) hs = (hs ^ mpz_fdiv_ui(v.get_mpz_t(), 0xffffffffffffffc5ull)) * 0x100000001b3ull;
    std::mt19937_64 rng(hs);

    std::vector<ModPoly> mod_factors = factor_mod_p(fpoly::make_monic(fpoly::reduce(g, p)), rng);
    if (mod_factors.size() == 1) {
        out.push_back(g);
        return out;
    }
    // Mignotte-style coefficient bound for monic factors of g
    int n = g.degree();
    mpz_class norm2{0};
    for (const auto& v : g.coeffs()) norm2 += v * v;
    mpz_class norm = sqrt(norm2) + 1;
    mpz_class bound = (mpz_class(1) << (n + 1)) * norm;
    mpz_class target{static_cast<unsigned long>(p)};
    unsigned long k = 1;
    while (target <= 2 * bound) {
        target = target * target;  // exponents stay powers of two for the lifting ladder
        k *= 2;
    }
    std::vector<ZmVec> lifted;
    lift_tree(zm_reduce(g, target), mod_factors, 0, mod_factors.size(), p, target, lifted);

    // subset recombination
    std::vector<std::size_t> alive(lifted.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    IntPoly rest = g;
    std::size_t s = 1;
    while (2 * s <= alive.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        do {
            ZmVec prod{mpz_class(1)};
            for (std::size_t i : idx) prod = zm_mul(prod, lifted[alive[i]], target);
            IntPoly cand = zm_symmetric(prod, target);
            if (cand.degree() == rest.degree()) continue;  // the complement will be caught instead
            bool ok = false;
            try {
                IntPoly quo = zpoly::divexact(rest, cand);
                rest = quo;
                ok = true;
            } catch (const std::domain_error&) {
            }
            if (ok) {
                out.push_back(cand);
                std::vector<std::size_t> next_alive;
                for (std::size_t i = 0; i < alive.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) next_alive.push_back(alive[i]);
                alive = std::move(next_alive);
                found = true;
                break;
            }
        } while (next_combination(idx, alive.size()));
        if (!found) ++s;
    }
    if (!rest.is_constant()) out.push_back(rest);
    return out;
}

/// Squarefree primitive g of any leading coefficient, via the monic
/// transform lc^(d-1) * g(X/lc).
std::vector<IntPoly> factor_squarefree(const IntPoly& g, const FactorConfig& cfg) {
    if (g.degree() > cfg.degree_cap)
        throw std::domain_error("factorization degree cap exceeded (" + std::to_string(g.degree()) + " > " +
                                std::to_string(cfg.degree_cap) + ")");
    if (g.lc() == 1) return factor_monic_squarefree(g, cfg);
    const mpz_class& l = g.lc();
    int d = g.degree();
    std::vector<mpz_class> mc(g.coeffs());
    mpz_class f{1};
    for (int i = d - 1; i >= 0; --i) {
        f *= l;
        mc[static_cast<std::size_t>(i)] *= f;
    }
    // mc is l^d * g(X/l), divide by l once to make it monic
    IntPoly monic = zpoly::divexact(IntPoly(std::move(mc)), IntPoly::constant(l));
    std::vector<IntPoly> monic_factors = factor_monic_squarefree(monic, cfg);
    std::vector<IntPoly> out;
    out.reserve(monic_factors.size());
    for (const auto& h : monic_factors) {
        // map back: roots were scaled by l, undo it
        std::vector<mpz_class> hc(h.coeffs());
        mpz_class pw{1};
        for (std::size_t i = 1; i < hc.size(); ++i) {
            pw *= l;
            hc[i] *= pw;
        }
        out.push_back(zpoly::primitive_part(IntPoly(std::move(hc))));
    }
    return out;
}

}  // namespace

IntPoly Factorization::expand() const {
    IntPoly acc = IntPoly::constant(unit);
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) acc *= f;
    return acc;
}

Factorization factor_q(const IntPoly& a, const FactorConfig& cfg) {
    if (a.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    Factorization out;
    if (a.is_constant()) {
        out.unit = a.lc();
        return out;
    }
    mpz_class c = zpoly::content(a);
    out.unit = a.lc() < 0 ? -c : c;
    IntPoly pp = zpoly::primitive_part(a);
    for (const auto& [sq, mult] : squarefree_decomposition(pp)) {
        for (const auto& f : factor_squarefree(sq, cfg)) out.factors.emplace_back(f, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        int s = IntPoly::compare(x.first, y.first);
        if (s != 0) return s < 0;
        return x.second < y.second;
    });
    return out;
}

bool is_irreducible_q(const IntPoly& a, const FactorConfig& cfg) {
    if (a.is_zero() || a.is_constant()) throw std::domain_error("irreducibility requires a nonconstant polynomial");
    Factorization f = factor_q(a, cfg);
    return f.factors.size() == 1 && f.factors[0].second == 1 && (f.unit == 1 || f.unit == -1);
}

}  // namespace splitscan::zfactor
