#include "splitscan/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitscan::zpoly {

namespace {

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
IntPoly prem(const IntPoly& a, const IntPoly& b) {
    int da = a.is_zero() ? -1 : a.degree();
    int db = b.degree();
    if (da < db) return a;
    std::vector<mpz_class> r(a.coeffs());
    const auto& bc = b.coeffs();
    int steps = da - db + 1;
    for (int k = 0; k < steps; ++k) {
        int dr = static_cast<int>(r.size()) - 1;
        if (dr < db) {
            // degree dropped early; keep multiplying so the lc power matches
            for (auto& v : r) v *= b.lc();
            continue;
        }
        mpz_class top = r.back();
        for (auto& v : r) v *= b.lc();
        std::size_t shift = static_cast<std::size_t>(dr - db);
        for (int i = 0; i <= db; ++i) r[shift + i] -= top * bc[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return IntPoly(std::move(r));
}

IntPoly divexact_scalar(const IntPoly& a, const mpz_class& d) {
    std::vector<mpz_class> r(a.coeffs());
    for (auto& v : r) {
        if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
            throw std::domain_error("inexact scalar division in polynomial remainder sequence");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    }
    return IntPoly(std::move(r));
}

mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

mpz_class content(const IntPoly& a) {
    if (a.is_zero()) throw std::domain_error("content undefined for zero polynomial");
    mpz_class g{0};
    for (const auto& v : a.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

IntPoly primitive_part(const IntPoly& a) {
    mpz_class c = content(a);
    if (a.lc() < 0) c = -c;
    return divexact_scalar(a, c);
}

IntPoly gcd_q(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    IntPoly big = primitive_part(a);
    IntPoly small = primitive_part(b);
    if (big.degree() < small.degree()) std::swap(big, small);
    if (small.degree() == 0) return IntPoly{1};
    mpz_class g{1}, h{1};
    while (true) {
        int delta = big.degree() - small.degree();
        IntPoly r = prem(big, small);
        if (r.is_zero()) return primitive_part(small);
        big = small;
        small = divexact_scalar(r, g * pow_z(h, static_cast<unsigned long>(delta)));
        if (small.degree() == 0) return IntPoly{1};
        g = big.lc();
        if (delta == 1)
            h = g;
        else if (delta > 1) {
            mpz_class num = pow_z(g, static_cast<unsigned long>(delta));
            mpz_class den = pow_z(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
}

IntPoly squarefree_part(const IntPoly& a) {
    if (a.is_zero() || a.is_constant()) throw std::domain_error("squarefree part requires a nonconstant polynomial");
    IntPoly p = primitive_part(a);
    IntPoly g = gcd_q(p, p.derivative());
    if (g.is_constant()) return p;
    return primitive_part(divexact(p, g));
}

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant of zero polynomial");
    if (a.is_constant() && b.is_constant()) return 1;
    if (a.is_constant()) return pow_z(a.lc(), static_cast<unsigned long>(b.degree()));
    if (b.is_constant()) return pow_z(b.lc(), static_cast<unsigned long>(a.degree()));

    IntPoly big = a, small = b;
    int s = 1;
    if (big.degree() < small.degree()) {
        std::swap(big, small);
        if ((big.degree() & 1) && (small.degree() & 1)) s = -s;
    }
    mpz_class ca = content(big), cb = content(small);
    big = divexact_scalar(big, ca);
    small = divexact_scalar(small, cb);
    mpz_class t = pow_z(ca, static_cast<unsigned long>(small.degree())) *
                  pow_z(cb, static_cast<unsigned long>(big.degree()));
    mpz_class g{1}, h{1};
    while (small.degree() > 0) {
        int delta = big.degree() - small.degree();
        if ((big.degree() & 1) && (small.degree() & 1)) s = -s;
        IntPoly r = prem(big, small);
        if (r.is_zero()) return 0;
        big = small;
        small = divexact_scalar(r, g * pow_z(h, static_cast<unsigned long>(delta)));
        g = big.lc();
        if (delta == 1)
            h = g;
        else if (delta > 1) {
            mpz_class num = pow_z(g, static_cast<unsigned long>(delta));
            mpz_class den = pow_z(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    // small is a nonzero constant now
    mpz_class num = pow_z(small.lc(), static_cast<unsigned long>(big.degree()));
    mpz_class den = pow_z(h, static_cast<unsigned long>(big.degree() - 1));
    mpz_class res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * res;
}

mpz_class discriminant(const IntPoly& a) {
    if (a.is_zero() || a.is_constant()) throw std::domain_error("discriminant requires a nonconstant polynomial");
    if (a.degree() == 1) return 1;
    mpz_class r = resultant(a, a.derivative());
    mpz_class d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), a.lc().get_mpz_t());
    int n = a.degree();
    if ((n * (n - 1) / 2) % 2 != 0) d = -d;
    return d;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return IntPoly{};
    auto [q, r] = RatPoly(a).divmod(RatPoly(b));
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    std::vector<mpz_class> qi;
    qi.reserve(q.coeffs().size());
    for (const auto& v : q.coeffs()) {
        if (v.get_den() != 1) throw std::domain_error("quotient not integral");
        qi.push_back(v.get_num());
    }
    return IntPoly(std::move(qi));
}

bool divides_q(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    auto [q, r] = RatPoly(a).divmod(RatPoly(b));
    (void)q;
    return r.is_zero();
}

ExtendedGcd xeuclid_q(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("xeuclid_q requires nonzero inputs");
    RatPoly r0(a), r1(b);
    RatPoly s0(std::vector<mpq_class>{mpq_class(1)}), s1;
    RatPoly t0, t1(std::vector<mpq_class>{mpq_class(1)});
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    // r0 = a*s0 + b*t0
    ExtendedGcd out;
    if (r0.is_constant()) {
        mpq_class inv = 1 / r0.lc();
        out.a_cof = s0 * inv;
        out.b_cof = t0 * inv;
        out.g = IntPoly{1};
    } else {
        IntPoly g = r0.clear_denominators();  // primitive, positive lc
        // scale so a*A + b*B reproduces g exactly
        mpq_class scale = mpq_class(g.lc()) / r0.lc();
        out.a_cof = s0 * scale;
        out.b_cof = t0 * scale;
        out.g = g;
    }
    return out;
}

mpz_class bezout_bound(const IntPoly& r, const IntPoly& s) {
    if (r.is_zero() || s.is_zero()) throw std::domain_error("bezout_bound requires nonzero inputs");
    ExtendedGcd e = xeuclid_q(r, s);
    if (!e.g.is_constant()) throw std::domain_error("polynomials share a root; no finite bound exists");
    mpz_class la = e.a_cof.denominator_lcm();
    mpz_class lb = e.b_cof.denominator_lcm();
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    return l;
}

IntPoly scale_roots(const IntPoly& g, const mpz_class& theta) {
    if (g.is_zero()) throw std::domain_error("scale_roots of zero polynomial");
    if (theta == 0) throw std::domain_error("scale_roots with theta = 0");
    return primitive_part(compose_scaled(g, theta));
}

IntPoly compose_scaled(const IntPoly& phi, const mpz_class& n) {
    if (phi.is_zero()) throw std::domain_error("compose_scaled of zero polynomial");
    int d = phi.is_constant() ? 0 : phi.degree();
    std::vector<mpz_class> r(phi.coeffs());
    mpz_class f{1};
    for (int i = d - 1; i >= 0; --i) {
        f *= n;
        r[static_cast<std::size_t>(i)] *= f;
    }
    return IntPoly(std::move(r));
}

namespace {

/// M(x0 - c*y) as a polynomial in y, by Horner over Z[y].
IntPoly substitute_linear(const IntPoly& m, const mpz_class& x0, const mpz_class& c) {
    IntPoly lin(std::vector<mpz_class>{x0, -c});
    IntPoly acc = IntPoly::constant(m.lc());
    for (int i = m.degree() - 1; i >= 0; --i) acc = acc * lin + IntPoly::constant(m.coeff(static_cast<std::size_t>(i)));
    return acc;
}

/// Res(g, my) with my regarded as a degree-`formal` polynomial whose top
/// coefficients may vanish (the padded-Sylvester convention): the value
/// picks up lc(g)^(formal - deg my) when the degree drops (c = 0 cases).
mpz_class resultant_padded(const IntPoly& g, const IntPoly& my, int formal) {
    if (my.is_zero()) return 0;
    int actual = my.is_constant() ? 0 : my.degree();
    mpz_class correction = 1;
    if (actual < formal) mpz_pow_ui(correction.get_mpz_t(), g.lc().get_mpz_t(), static_cast<unsigned long>(formal - actual));
    return correction * resultant(g, my);
}

}  // namespace

IntPoly resultant_linear_sub(const IntPoly& m, const IntPoly& g, const mpz_class& c) {
    if (m.is_zero() || m.is_constant() || g.is_zero() || g.is_constant())
        throw std::domain_error("resultant_linear_sub requires nonconstant inputs");
    int n = m.degree() * g.degree();
    // sample at x = -n/2 .. n/2 (n+1 integer nodes), then interpolate
    std::vector<mpz_class> nodes;
    std::vector<mpz_class> values;
    nodes.reserve(n + 1);
    values.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        mpz_class x0 = k - n / 2;
        IntPoly my = substitute_linear(m, x0, c);
        values.push_back(resultant_padded(g, my, m.degree()));
        nodes.push_back(x0);
    }
    // Lagrange interpolation, exact over Q. master = prod (X - x_i)
    IntPoly master{1};
    for (const auto& x0 : nodes) master *= IntPoly(std::vector<mpz_class>{-x0, mpz_class(1)});
    std::vector<mpq_class> acc(static_cast<std::size_t>(n) + 1, mpq_class(0));
    for (int i = 0; i <= n; ++i) {
        if (values[static_cast<std::size_t>(i)] == 0) continue;
        // basis_i = master / (X - x_i), by synthetic division
        std::vector<mpz_class> basis(static_cast<std::size_t>(n) + 1);
        mpz_class carry{0};
        for (int j = n + 2; j-- > 1;) {
            carry = master.coeff(static_cast<std::size_t>(j)) + carry * nodes[static_cast<std::size_t>(i)];
            basis[static_cast<std::size_t>(j - 1)] = carry;
        }
        mpz_class denom{1};
        for (int j = 0; j <= n; ++j)
            if (j != i) denom *= nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
        mpq_class w = mpq_class(values[static_cast<std::size_t>(i)]) / mpq_class(denom);
        for (int j = 0; j <= n; ++j) acc[static_cast<std::size_t>(j)] += w * basis[static_cast<std::size_t>(j)];
    }
    std::vector<mpz_class> out;
    out.reserve(acc.size());
    for (auto& v : acc) {
        v.canonicalize();
        if (v.get_den() != 1) throw std::logic_error("resultant interpolation produced a non-integer coefficient");
        out.push_back(v.get_num());
    }
    return IntPoly(std::move(out));
}

IntPoly resultant_linear_sub_sylvester(const IntPoly& m, const IntPoly& g, const mpz_class& c) {
    if (m.is_zero() || m.is_constant() || g.is_zero() || g.is_constant())
        throw std::domain_error("resultant_linear_sub requires nonconstant inputs");
    int dm = m.degree(), dg = g.degree();
    // coefficients of M(x - c*y) in y: coeff_j(x) = (-c)^j * sum_{i>=j} m_i C(i,j) x^(i-j)
    std::vector<IntPoly> my(static_cast<std::size_t>(dm) + 1);
    for (int j = 0; j <= dm; ++j) {
        std::vector<mpz_class> col(static_cast<std::size_t>(dm - j) + 1, mpz_class(0));
        for (int i = j; i <= dm; ++i) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
            col[static_cast<std::size_t>(i - j)] = m.coeff(static_cast<std::size_t>(i)) * binom;
        }
        IntPoly p(std::move(col));
        mpz_class cj = pow_z(-c, static_cast<unsigned long>(j));
        my[static_cast<std::size_t>(j)] = cj * p;
    }
    // Sylvester matrix of (g, M(x-cy)) in y: det = Res_y(g, M(x-cy))
    int n = dm + dg;
    std::vector<std::vector<IntPoly>> mat(static_cast<std::size_t>(n),
                                          std::vector<IntPoly>(static_cast<std::size_t>(n)));
    for (int r = 0; r < dm; ++r)
        for (int k = 0; k <= dg; ++k)
            mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                IntPoly::constant(g.coeff(static_cast<std::size_t>(dg - k)));
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= dm; ++k)
            mat[static_cast<std::size_t>(dm + r)][static_cast<std::size_t>(r + k)] =
                my[static_cast<std::size_t>(dm - k)];
    // Bareiss fraction-free elimination over Z[x]
    int sign = 1;
    IntPoly prev{1};
    for (int k = 0; k < n - 1; ++k) {
        if (mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return IntPoly{};  // singular: resultant identically zero
            std::swap(mat[static_cast<std::size_t>(k)], mat[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                IntPoly num = mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] *
                                  mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                              mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                                  mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    num.is_zero() ? IntPoly{} : divexact(num, prev);
            }
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = IntPoly{};
        }
        prev = mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    IntPoly det = mat[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign < 0 ? -det : det;
}

}  // namespace splitscan::zpoly
