#include "splitscan/fpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "splitscan/primes.hpp"

namespace splitscan::fpoly {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kModulusCap = 1ull << 62;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod_u(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod_u(a, p - 2, p); }

std::vector<u64> trim(std::vector<u64> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

}  // namespace

ModPoly::ModPoly(u64 p, std::vector<u64> coeffs) : p_(p) {
    if (p >= kModulusCap || !primes::is_prime_u64(p)) throw std::domain_error("modulus must be a prime < 2^62");
    for (auto& v : coeffs) v %= p;
    c_ = trim(std::move(coeffs));
}

ModPoly::ModPoly(u64 p, std::vector<u64> coeffs, unchecked_tag) : p_(p), c_(trim(std::move(coeffs))) {}

ModPoly unchecked(u64 p, std::vector<u64> c) { return ModPoly(p, std::move(c), ModPoly::unchecked_tag{}); }

int ModPoly::degree() const {
    if (c_.empty()) throw std::domain_error("degree of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

u64 ModPoly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

u64 ModPoly::eval(u64 x) const {
    u64 acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = addmod(mulmod(acc, x, p_), c_[i], p_);
    return acc;
}

ModPoly reduce(const IntPoly& a, u64 p) {
    if (p >= kModulusCap || !primes::is_prime_u64(p)) throw std::domain_error("modulus must be a prime < 2^62");
    std::vector<u64> c;
    c.reserve(a.coeffs().size());
    for (const auto& v : a.coeffs()) c.push_back(mpz_fdiv_ui(v.get_mpz_t(), p));
    return unchecked(p, std::move(c));
}

ModPoly add(const ModPoly& a, const ModPoly& b) {
    u64 p = a.modulus();
    std::vector<u64> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = addmod(a.coeff(i), b.coeff(i), p);
    return unchecked(p, std::move(r));
}

ModPoly sub(const ModPoly& a, const ModPoly& b) {
    u64 p = a.modulus();
    std::vector<u64> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = submod(a.coeff(i), b.coeff(i), p);
    return unchecked(p, std::move(r));
}

ModPoly mul(const ModPoly& a, const ModPoly& b) {
    u64 p = a.modulus();
    if (a.is_zero() || b.is_zero()) return unchecked(p, {});
    std::vector<u64> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a.coeff(i), b.coeff(j), p), p);
    }
    return unchecked(p, std::move(r));
}

ModPoly rem(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    u64 p = a.modulus();
    std::vector<u64> r(a.coeffs());
    int db = b.degree();
    u64 inv = invmod(b.lc(), p);
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        u64 q = mulmod(r.back(), inv, p);
        std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
        for (int i = 0; i <= db; ++i)
            r[shift + static_cast<std::size_t>(i)] =
                submod(r[shift + static_cast<std::size_t>(i)], mulmod(q, b.coeff(static_cast<std::size_t>(i)), p), p);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return unchecked(p, std::move(r));
}

ModPoly make_monic(const ModPoly& a) {
    if (a.is_zero()) return a;
    u64 p = a.modulus();
    u64 inv = invmod(a.lc(), p);
    std::vector<u64> r(a.coeffs());
    for (auto& v : r) v = mulmod(v, inv, p);
    return unchecked(p, std::move(r));
}

ModPoly derivative(const ModPoly& a) {
    u64 p = a.modulus();
    if (a.coeffs().size() <= 1) return unchecked(p, {});
    std::vector<u64> r(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) r[i - 1] = mulmod(a.coeff(i), i % p, p);
    return unchecked(p, std::move(r));
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = rem(x, y);
        x = y;
        y = r;
    }
    return make_monic(x);
}

ModPoly powmod_x(const ModPoly& f, u64 e) {
    if (f.is_zero() || f.is_constant()) throw std::domain_error("powmod_x requires deg f >= 1");
    u64 p = f.modulus();
    ModPoly base = rem(unchecked(p, {0, 1}), f);
    ModPoly acc = unchecked(p, {1});
    while (e) {
        if (e & 1) acc = rem(mul(acc, base), f);
        base = rem(mul(base, base), f);
        e >>= 1;
    }
    return acc;
}

ModPoly powmod(const ModPoly& g, u64 e, const ModPoly& f) {
    u64 p = f.modulus();
    ModPoly base = rem(g, f);
    ModPoly acc = unchecked(p, {1});
    while (e) {
        if (e & 1) acc = rem(mul(acc, base), f);
        base = rem(mul(base, base), f);
        e >>= 1;
    }
    return acc;
}

namespace {

/// Exact p-th root of a polynomial whose exponents are all multiples of
/// p (residue coefficients are their own p-th roots in F_p).
ModPoly pth_root(const ModPoly& f) {
    u64 p = f.modulus();
    std::vector<u64> r;
    for (std::size_t i = 0; i < f.coeffs().size(); i += static_cast<std::size_t>(p)) r.push_back(f.coeff(i));
    return unchecked(p, std::move(r));
}

ModPoly divexact_mod(const ModPoly& a, const ModPoly& b) {
    // a = q*b exactly; compute q by long division
    u64 p = a.modulus();
    std::vector<u64> r(a.coeffs());
    int db = b.degree();
    u64 inv = invmod(b.lc(), p);
    std::vector<u64> q(r.size() >= b.coeffs().size() ? r.size() - b.coeffs().size() + 1 : 0, 0);
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        u64 c = mulmod(r.back(), inv, p);
        std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
        q[shift] = c;
        for (int i = 0; i <= db; ++i)
            r[shift + static_cast<std::size_t>(i)] =
                submod(r[shift + static_cast<std::size_t>(i)], mulmod(c, b.coeff(static_cast<std::size_t>(i)), p), p);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    if (!r.empty()) throw std::domain_error("inexact division over F_p");
    return unchecked(p, std::move(q));
}

}  // namespace

ModPoly squarefree_part(const ModPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    u64 p = f.modulus();
    ModPoly m = make_monic(f);
    if (m.is_constant()) return unchecked(p, {1});
    ModPoly d = derivative(m);
    if (d.is_zero()) return squarefree_part(pth_root(m));
    ModPoly g = gcd(m, d);
    if (g.is_constant()) return m;
    ModPoly w = divexact_mod(m, g);  // each factor with exponent not divisible by p, once
    // strip w's factors out of g; whatever survives is a perfect p-th power
    ModPoly u = g;
    while (true) {
        ModPoly h = gcd(u, w);
        if (h.is_constant()) break;
        u = divexact_mod(u, h);
    }
    if (u.is_constant()) return w;
    return mul(w, squarefree_part(pth_root(u)));
}

ModPoly linear_radical(const ModPoly& f) {
    if (f.is_zero()) throw std::domain_error("linear radical of zero polynomial");
    u64 p = f.modulus();
    if (f.is_constant()) return unchecked(p, {1});
    ModPoly xp = powmod_x(f, p);
    ModPoly xpx = sub(xp, rem(unchecked(p, {0, 1}), f));
    if (xpx.is_zero()) return make_monic(f);  // f divides X^p - X
    return gcd(xpx, f);
}

int count_distinct_roots(const ModPoly& f) {
    if (f.is_zero()) throw std::domain_error("count_distinct_roots of zero polynomial");
    ModPoly r = linear_radical(f);
    return r.is_constant() ? 0 : r.degree();
}

bool has_root(const ModPoly& f) { return count_distinct_roots(f) >= 1; }

bool splits_completely(const ModPoly& f) {
    if (f.is_zero() || f.is_constant()) throw std::domain_error("splits_completely requires deg f >= 1");
    ModPoly s = squarefree_part(f);
    if (s.degree() == 0) return true;  // can't happen for nonconstant f, kept for safety
    ModPoly xp = powmod_x(s, s.modulus());
    ModPoly xpx = sub(xp, rem(unchecked(s.modulus(), {0, 1}), s));
    return xpx.is_zero();
}

namespace {

void split_radical(const ModPoly& rad, std::mt19937_64& rng, std::vector<u64>& out) {
    u64 p = rad.modulus();
    if (rad.is_constant()) return;
    if (rad.degree() == 1) {
        // monic X + c0 -> root -c0
        u64 c0 = rad.coeff(0);
        out.push_back(c0 == 0 ? 0 : p - c0);
        return;
    }
    // roots of X itself
    if (rad.coeff(0) == 0) {
        out.push_back(0);
        split_radical(divexact_mod(rad, unchecked(p, {0, 1})), rng, out);
        return;
    }
    while (true) {
        u64 a = rng() % p;
        ModPoly shifted = unchecked(p, {a, 1});  // X + a
        ModPoly w = powmod(shifted, (p - 1) / 2, rad);
        ModPoly g = gcd(sub(w, unchecked(p, {1})), rad);
        if (!g.is_constant() && g.degree() < rad.degree()) {
            split_radical(g, rng, out);
            split_radical(divexact_mod(rad, g), rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<RootMult> roots_with_multiplicity(const ModPoly& f, u64 seed) {
    if (f.is_zero()) throw std::domain_error("roots_with_multiplicity of zero polynomial");
    u64 p = f.modulus();
    std::vector<u64> roots;
    if (p < 4096) {
        for (u64 r = 0; r < p; ++r)
            if (f.eval(r) == 0) roots.push_back(r);
    } else {
        ModPoly rad = linear_radical(f);
        // deterministic seeding from (seed, p, f)
        u64 h = seed ^ 0x9e3779b97f4a7c15ull;
        h = (h ^ p) * 0x100000001b3ull;
        for (u64 c : f.coeffs()) h = (h ^ c) * 0x100000001b3ull;
        std::mt19937_64 rng(h);
        split_radical(rad, rng, roots);
        std::sort(roots.begin(), roots.end());
    }
    std::vector<RootMult> out;
    for (u64 r : roots) {
        ModPoly lin = unchecked(p, {r == 0 ? 0 : p - r, 1});  // X - r
        ModPoly cur = f;
        int m = 0;
        while (!cur.is_constant() && rem(cur, lin).is_zero()) {
            cur = divexact_mod(cur, lin);
            ++m;
        }
        out.push_back({r, m});
    }
    return out;
}

}  // namespace splitscan::fpoly
