#include "splitscan/splitfield.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "splitscan/zpoly.hpp"

namespace splitscan::splitfield {

namespace {

// ---------- arbitrary-precision complex points ----------

struct MPC {
    mpf_class re, im;
    explicit MPC(unsigned prec) : re(0, prec), im(0, prec) {}
};

MPC mpc_sub(const MPC& a, const MPC& b, unsigned prec) {
    MPC r(prec);
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
}

MPC mpc_mul(const MPC& a, const MPC& b, unsigned prec) {
    MPC r(prec);
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

MPC mpc_div(const MPC& a, const MPC& b, unsigned prec) {
    MPC r(prec);
    mpf_class d(0, prec);
    d = b.re * b.re + b.im * b.im;
    r.re = (a.re * b.re + a.im * b.im) / d;
    r.im = (a.im * b.re - a.re * b.im) / d;
    return r;
}

bool mpc_is_zero(const MPC& a) { return a.re == 0 && a.im == 0; }

mpf_class mpc_mag(const MPC& a, unsigned prec) {
    mpf_class m(0, prec);
    m = abs(a.re) + abs(a.im);
    return m;
}

MPC horner(const IntPoly& f, const MPC& z, unsigned prec) {
    MPC acc(prec);
    if (f.is_zero()) return acc;
    acc.re = mpf_class(f.lc(), prec);
    for (int i = f.degree() - 1; i >= 0; --i) {
        acc = mpc_mul(acc, z, prec);
        acc.re += mpf_class(f.coeff(static_cast<std::size_t>(i)), prec);
    }
    return acc;
}

/// Cauchy-style inclusion radius for the initial circle: 1 + max|c_i/c_d|.
mpf_class root_bound(const IntPoly& f, unsigned prec) {
    mpf_class b(1, prec);
    mpf_class lead(abs(f.lc()), prec);
    for (int i = 0; i < f.degree(); ++i) {
        mpf_class q(0, prec);
        q = mpf_class(abs(f.coeff(static_cast<std::size_t>(i))), prec) / lead;
        if (q > b - 1) b = 1 + q;
    }
    return b;
}

std::vector<MPC> initial_points(const IntPoly& s, unsigned prec) {
    int n = s.degree();
    mpf_class r = root_bound(s, prec);
    std::vector<MPC> z;
    z.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double angle = 2.0 * M_PI * k / n + 0.42;
        MPC p(prec);
        p.re = r * mpf_class(std::cos(angle), prec);
        p.im = r * mpf_class(std::sin(angle), prec);
        z.push_back(p);
    }
    return z;
}

/// Ehrlich-Aberth simultaneous iteration at the given precision.
void aberth(const IntPoly& s, std::vector<MPC>& z, unsigned prec) {
    int n = s.degree();
    IntPoly ds = s.derivative();
    mpf_class eps(1, prec);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec > 10 ? prec - 4 : 4);
    unsigned max_iter = 60 + prec / 2;
    for (unsigned iter = 0; iter < max_iter; ++iter) {
        mpf_class max_corr(0, prec), scale(1, prec);
        for (int i = 0; i < n; ++i) {
            MPC p = horner(s, z[static_cast<std::size_t>(i)], prec);
            if (mpc_is_zero(p)) continue;
            MPC dp = horner(ds, z[static_cast<std::size_t>(i)], prec);
            if (mpc_is_zero(dp)) {
                // nudge off a critical point
                z[static_cast<std::size_t>(i)].re += mpf_class(1e-3, prec);
                continue;
            }
            MPC w = mpc_div(p, dp, prec);
            MPC sum(prec);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                MPC diff = mpc_sub(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)], prec);
                if (mpc_is_zero(diff)) {
                    diff.re = mpf_class(1e-6, prec);
                }
                MPC one(prec);
                one.re = 1;
                sum = [&] {
                    MPC inv = mpc_div(one, diff, prec);
                    MPC r(prec);
                    r.re = sum.re + inv.re;
                    r.im = sum.im + inv.im;
                    return r;
                }();
            }
            MPC denom(prec);
            MPC ws = mpc_mul(w, sum, prec);
            denom.re = 1 - ws.re;
            denom.im = -ws.im;
            MPC corr = mpc_is_zero(denom) ? w : mpc_div(w, denom, prec);
            z[static_cast<std::size_t>(i)].re -= corr.re;
            z[static_cast<std::size_t>(i)].im -= corr.im;
            mpf_class c = mpc_mag(corr, prec);
            if (c > max_corr) max_corr = c;
            mpf_class m = mpc_mag(z[static_cast<std::size_t>(i)], prec);
            if (m > scale) scale = m;
        }
        if (max_corr < eps * scale) break;
    }
}

/// Certified disks from converged approximations: radius n*|s/s'| per
/// point (each such disk contains a root; pairwise disjoint disks then
/// contain exactly one each). Returns empty when certification fails.
std::vector<CDisk> certify(const IntPoly& s, const std::vector<MPC>& z, unsigned prec,
                           unsigned target_bits) {
    int n = s.degree();
    IntPoly ds = s.derivative();
    std::vector<CDisk> disks;
    mpf_class max_rad(1, prec);
    mpf_div_2exp(max_rad.get_mpf_t(), max_rad.get_mpf_t(), target_bits / 2);
    for (const MPC& p : z) {
        CDisk point(prec);
        point.re = p.re;
        point.im = p.im;
        CDisk num = disk_eval(s, point);
        CDisk den = disk_eval(ds, point);
        mpf_class den_low(0, prec);
        den_low = disk_mag_lower(den) - den.rad;
        if (den_low <= 0) return {};
        mpf_class num_high(0, prec);
        num_high = disk_mag_upper(num) + num.rad;
        CDisk d(prec);
        d.re = p.re;
        d.im = p.im;
        d.rad = 2 * n * num_high / den_low;
        if (d.rad > max_rad) return {};
        disks.push_back(d);
    }
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j)
            if (disk_distance_lower(disks[i], disks[j]) <= 0) return {};
    return disks;
}

/// Canonical (re, im) order: compare re where the intervals separate,
/// fall back to im (conjugate pairs share re exactly).
bool canonical_less(const CDisk& a, const CDisk& b) {
    mpf_class alo = a.re - a.rad, ahi = a.re + a.rad;
    mpf_class blo = b.re - b.rad, bhi = b.re + b.rad;
    if (ahi < blo) return true;
    if (bhi < alo) return false;
    return a.im < b.im;
}

}  // namespace

std::vector<CDisk> isolate_squarefree(const IntPoly& s, unsigned precision_bits, unsigned precision_cap) {
    if (s.is_zero() || s.is_constant()) throw std::domain_error("root isolation requires a nonconstant polynomial");
    if (s.degree() == 1) {
        // exact rational root -b/a as a point disk at any precision
        unsigned prec = std::max(precision_bits, 64u);
        CDisk d(prec);
        d.re = mpf_class(-s.coeff(0), prec) / mpf_class(s.lc(), prec);
        mpf_class eps(1, prec);
        mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec - 8);
        d.rad = (abs(d.re) + 1) * eps;
        return {d};
    }
    std::vector<MPC> pts;
    for (unsigned prec = std::max(precision_bits, 64u);; prec *= 2) {
        if (prec > precision_cap)
            throw std::runtime_error("root isolation failed to certify below precision cap " +
                                     std::to_string(precision_cap) + " bits for " + to_string(s));
        if (pts.empty()) {
            pts = initial_points(s, prec);
        } else {
            // re-express the previous approximations at the new precision
            for (auto& p : pts) {
                mpf_class re(p.re, prec), im(p.im, prec);
                p.re = re;
                p.im = im;
            }
        }
        aberth(s, pts, prec);
        std::vector<CDisk> disks = certify(s, pts, prec, precision_bits);
        if (!disks.empty()) {
            std::sort(disks.begin(), disks.end(), canonical_less);
            return disks;
        }
    }
}

std::vector<std::pair<RootApprox, int>> isolate_roots(const IntPoly& phi, unsigned precision_bits) {
    if (phi.is_zero() || phi.is_constant())
        throw std::domain_error("root isolation requires a nonconstant polynomial");
    zfactor::Factorization fac = zfactor::factor_q(phi);
    for (unsigned prec = std::max(precision_bits, 64u); prec <= 8192 * 4; prec *= 2) {
        std::vector<std::pair<RootApprox, int>> out;
        for (std::size_t fi = 0; fi < fac.factors.size(); ++fi) {
            for (const CDisk& d : isolate_squarefree(fac.factors[fi].first, prec)) {
                RootApprox ra;
                ra.disk = d;
                ra.source_factor = static_cast<int>(fi);
                out.emplace_back(ra, fac.factors[fi].second);
            }
        }
        bool disjoint = true;
        for (std::size_t i = 0; i < out.size() && disjoint; ++i)
            for (std::size_t j = i + 1; j < out.size() && disjoint; ++j)
                if (disk_distance_lower(out[i].first.disk, out[j].first.disk) <= 0) disjoint = false;
        if (!disjoint) continue;
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return canonical_less(a.first.disk, b.first.disk); });
        for (std::size_t i = 0; i < out.size(); ++i) out[i].first.index = static_cast<int>(i);
        return out;
    }
    throw std::runtime_error("cross-factor disk disjointness not reached within precision cap");
}

std::optional<int> choose_weight(const std::vector<CDisk>& existing_sums, const std::vector<CDisk>& new_roots,
                                 int start) {
    if (existing_sums.empty() || new_roots.empty())
        throw std::domain_error("choose_weight requires nonempty disk sets");
    unsigned prec = std::max(existing_sums.front().prec(), new_roots.front().prec());
    // collision threshold: radii shrink ~2^-prec/2, so true collisions end
    // up below this while genuine gaps stay above it
    mpf_class collide_eps(1, prec);
    mpf_div_2exp(collide_eps.get_mpf_t(), collide_eps.get_mpf_t(), prec / 4);
    mpf_class scale(1, prec);
    for (const auto& d : existing_sums) {
        mpf_class m = disk_mag_upper(d);
        if (m > scale) scale = m;
    }
    for (const auto& d : new_roots) {
        mpf_class m = disk_mag_upper(d);
        if (m > scale) scale = m;
    }
    for (int c = std::max(start, 1); c < start + 4096; ++c) {
        std::vector<CDisk> values;
        values.reserve(existing_sums.size() * new_roots.size());
        for (const auto& mu : existing_sums)
            for (const auto& nu : new_roots) values.push_back(disk_add(mu, disk_scale(nu, c)));
        bool collision = false, uncertain = false;
        for (std::size_t i = 0; i < values.size() && !collision; ++i) {
            for (std::size_t j = i + 1; j < values.size(); ++j) {
                if (disk_distance_lower(values[i], values[j]) > 0) continue;
                if (disk_distance_upper(values[i], values[j]) < collide_eps * scale * c) {
                    collision = true;  // exact coincidence: this c is bad
                    break;
                }
                uncertain = true;
            }
        }
        if (collision) continue;
        if (uncertain) return std::nullopt;
        return c;
    }
    throw std::runtime_error("no certifiable weight found in search window");
}

IntPoly min_poly_of_sum(const IntPoly& m, const IntPoly& g, int c, const CDisk& theta, const CDisk& alpha,
                        const SplitFieldConfig& cfg, const DiskRefiner& refine) {
    if (m.is_zero() || m.is_constant() || g.is_zero() || g.is_constant())
        throw std::domain_error("min_poly_of_sum requires nonconstant polynomials");
    IntPoly res = zpoly::resultant_linear_sub(m, g, c);
    zfactor::Factorization fac = zfactor::factor_q(res, cfg.factor);
    if (fac.factors.size() == 1 && fac.factors[0].second == 1) return fac.factors[0].first;

    CDisk th = theta, al = alpha;
    for (unsigned prec = std::max(th.prec(), al.prec());; prec *= 2) {
        CDisk beta = disk_add(th, disk_scale(al, c));
        int hit = -1;
        bool ambiguous = false;
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
            CDisk v = disk_eval(fac.factors[i].first, beta);
            if (disk_may_contain_zero(v)) {
                if (hit >= 0) {
                    ambiguous = true;
                    break;
                }
                hit = static_cast<int>(i);
            }
        }
        if (!ambiguous && hit >= 0) return fac.factors[static_cast<std::size_t>(hit)].first;
        if (prec * 2 > cfg.precision_cap || !refine)
            throw std::runtime_error("could not identify the vanishing factor within the precision cap");
        auto [nt, na] = refine(prec * 2);
        th = nt;
        al = na;
    }
}

namespace {

struct TrackedRoot {
    int factor_idx;
    CDisk disk;
    long weight = 0;
};

/// Re-isolates every factor's roots at `prec` and updates the tracked
/// disks in place, matching new disks to old ones by nearest center.
void refine_roots(const std::vector<IntPoly>& factors, std::vector<TrackedRoot>& roots, unsigned prec,
                  unsigned cap) {
    std::vector<std::vector<CDisk>> per_factor;
    per_factor.reserve(factors.size());
    for (const auto& f : factors) per_factor.push_back(isolate_squarefree(f, prec, cap));
    for (auto& r : roots) {
        const auto& cands = per_factor[static_cast<std::size_t>(r.factor_idx)];
        std::size_t best = 0;
        mpf_class best_d = disk_distance_upper(r.disk, cands[0]);
        for (std::size_t i = 1; i < cands.size(); ++i) {
            mpf_class d = disk_distance_upper(r.disk, cands[i]);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        r.disk = cands[best];
    }
}

CDisk beta_disk(const std::vector<TrackedRoot>& roots, unsigned prec) {
    CDisk acc(prec);
    for (const auto& r : roots)
        if (r.weight != 0) acc = disk_add(acc, disk_scale(r.disk, mpz_class(r.weight)));
    return acc;
}

PrimitiveElement primitive_element_offset(const IntPoly& phi, const SplitFieldConfig& cfg, long offset) {
    if (phi.is_zero() || phi.is_constant())
        throw std::domain_error("primitive_element requires a nonconstant polynomial");
    IntPoly sf = zpoly::squarefree_part(phi);
    zfactor::Factorization fac = zfactor::factor_q(sf, cfg.factor);
    std::vector<IntPoly> factors;
    for (const auto& [f, mult] : fac.factors) factors.push_back(f);

    unsigned prec = std::max(cfg.precision_bits, 64u);
    std::vector<TrackedRoot> roots;
    for (std::size_t fi = 0; fi < factors.size(); ++fi)
        for (const CDisk& d : isolate_squarefree(factors[fi], prec, cfg.precision_cap))
            roots.push_back({static_cast<int>(fi), d, 0});
    std::sort(roots.begin(), roots.end(),
              [](const TrackedRoot& a, const TrackedRoot& b) { return canonical_less(a.disk, b.disk); });

    PrimitiveElement pe;
    pe.phi = phi;

    // initial beta: the canonically first root of the first factor
    std::size_t first = 0;
    while (roots[first].factor_idx != 0) ++first;
    long w0 = 1 + offset;
    roots[first].weight = w0;
    IntPoly m = w0 == 1 ? factors[0] : zpoly::scale_roots(factors[0], mpz_class(w0));
    pe.trace.push_back({factors[0], w0, m.degree()});

    for (std::size_t ri = 0; ri < roots.size(); ++ri) {
        if (ri == first) continue;
        const IntPoly& g = factors[static_cast<std::size_t>(roots[ri].factor_idx)];
        int c = 0;
        while (true) {
            std::vector<CDisk> sums = isolate_squarefree(m, prec, cfg.precision_cap);
            std::vector<CDisk> news = isolate_squarefree(g, prec, cfg.precision_cap);
            std::optional<int> pick = choose_weight(sums, news, static_cast<int>(1 + offset));
            if (pick) {
                c = *pick;
                break;
            }
            if (prec * 2 > cfg.precision_cap)
                throw std::runtime_error("weight selection failed to certify below the precision cap");
            prec *= 2;
            refine_roots(factors, roots, prec, cfg.precision_cap);
        }
        auto refiner = [&](unsigned want) -> std::pair<CDisk, CDisk> {
            prec = want;
            refine_roots(factors, roots, prec, cfg.precision_cap);
            return {beta_disk(roots, prec), roots[ri].disk};
        };
        IntPoly cand = min_poly_of_sum(m, g, c, beta_disk(roots, prec), roots[ri].disk, cfg, refiner);
        if (cand.degree() > m.degree()) {
            m = cand;
            roots[ri].weight = c;
        }
        pe.trace.push_back({g, roots[ri].weight, m.degree()});
    }

    pe.min_poly = m;
    pe.beta = beta_disk(roots, prec);
    for (const auto& r : roots) {
        pe.weights.push_back(r.weight);
        pe.root_factors.push_back(factors[static_cast<std::size_t>(r.factor_idx)]);
    }
    return pe;
}

}  // namespace

PrimitiveElement primitive_element(const IntPoly& phi, const SplitFieldConfig& cfg) {
    return primitive_element_offset(phi, cfg, 0);
}

IntPoly weighted_conjugate_product(const std::vector<IntPoly>& factors, const std::vector<mpz_class>& weights) {
    if (factors.empty()) throw std::domain_error("weighted_conjugate_product requires at least one factor");
    if (factors.size() != weights.size())
        throw std::domain_error("weighted_conjugate_product: one weight per factor");
    for (const auto& f : factors)
        if (f.is_zero() || f.is_constant())
            throw std::domain_error("weighted_conjugate_product factors must be nonconstant");
    IntPoly acc = IntPoly::x();
    for (std::size_t i = 0; i < factors.size(); ++i)
        acc = zpoly::primitive_part(zpoly::resultant_linear_sub(acc, factors[i], weights[i]));
    return acc;
}

std::vector<PrimitiveElement> family(const IntPoly& phi, int k, const SplitFieldConfig& cfg) {
    if (k < 1) throw std::domain_error("family requires k >= 1");
    std::vector<PrimitiveElement> out;
    int expected_degree = -1;
    for (long offset = 0; static_cast<int>(out.size()) < k; ++offset) {
        if (offset > 8L * k + 64)
            throw std::runtime_error("family: could not reach " + std::to_string(k) + " distinct minimal polynomials");
        PrimitiveElement pe = primitive_element_offset(phi, cfg, offset);
        if (expected_degree < 0) expected_degree = pe.degree();
        if (pe.degree() != expected_degree)
            throw std::logic_error("family member degree mismatch against the splitting-field degree");
        bool dup = false;
        for (const auto& prev : out)
            if (prev.min_poly == pe.min_poly) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(pe));
    }
    return out;
}

}  // namespace splitscan::splitfield
