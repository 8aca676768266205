#include "splitscan/cdisk.hpp"

namespace splitscan::splitfield {

namespace {

mpf_class rounding_eps(unsigned prec) {
    mpf_class e(1, prec);
    mpf_div_2exp(e.get_mpf_t(), e.get_mpf_t(), prec > 24 ? prec - 24 : 1);
    return e;
}

void widen(CDisk& d) {
    unsigned prec = d.prec();
    mpf_class mag(0, prec);
    mag = abs(d.re) + abs(d.im) + d.rad;
    d.rad += mag * rounding_eps(prec);
}

}  // namespace

CDisk disk_from_int(const mpz_class& v, unsigned prec) {
    CDisk d(prec);
    d.re = mpf_class(v, prec);
    // exact only while v fits the mantissa
    if (mpz_sizeinbase(v.get_mpz_t(), 2) >= prec) widen(d);
    return d;
}

CDisk disk_add(const CDisk& a, const CDisk& b) {
    unsigned prec = std::max(a.prec(), b.prec());
    CDisk d(prec);
    d.re = a.re + b.re;
    d.im = a.im + b.im;
    d.rad = a.rad + b.rad;
    widen(d);
    return d;
}

CDisk disk_sub(const CDisk& a, const CDisk& b) {
    unsigned prec = std::max(a.prec(), b.prec());
    CDisk d(prec);
    d.re = a.re - b.re;
    d.im = a.im - b.im;
    d.rad = a.rad + b.rad;
    widen(d);
    return d;
}

CDisk disk_mul(const CDisk& a, const CDisk& b) {
    unsigned prec = std::max(a.prec(), b.prec());
    CDisk d(prec);
    d.re = a.re * b.re - a.im * b.im;
    d.im = a.re * b.im + a.im * b.re;
    mpf_class ma(0, prec), mb(0, prec);
    ma = abs(a.re) + abs(a.im);
    mb = abs(b.re) + abs(b.im);
    d.rad = ma * b.rad + mb * a.rad + a.rad * b.rad;
    widen(d);
    return d;
}

CDisk disk_scale(const CDisk& a, const mpz_class& s) {
    unsigned prec = a.prec();
    CDisk d(prec);
    mpf_class sf(s, prec);
    d.re = a.re * sf;
    d.im = a.im * sf;
    d.rad = a.rad * abs(sf);
    widen(d);
    return d;
}

CDisk disk_eval(const IntPoly& f, const CDisk& z) {
    unsigned prec = z.prec();
    if (f.is_zero()) return CDisk(prec);
    CDisk acc = disk_from_int(f.lc(), prec);
    for (int i = f.degree() - 1; i >= 0; --i)
        acc = disk_add(disk_mul(acc, z), disk_from_int(f.coeff(static_cast<std::size_t>(i)), prec));
    return acc;
}

mpf_class disk_mag_upper(const CDisk& d) {
    mpf_class m(0, d.prec());
    m = abs(d.re) + abs(d.im);
    return m;
}

mpf_class disk_mag_lower(const CDisk& d) {
    mpf_class a(0, d.prec()), b(0, d.prec());
    a = abs(d.re);
    b = abs(d.im);
    return a > b ? a : b;
}

bool disk_may_contain_zero(const CDisk& d) { return disk_mag_lower(d) <= d.rad; }

bool disk_certainly_nonzero(const CDisk& d) { return disk_mag_lower(d) > d.rad; }

mpf_class disk_distance_lower(const CDisk& a, const CDisk& b) {
    CDisk diff = disk_sub(a, b);
    mpf_class r(0, diff.prec());
    r = disk_mag_lower(diff) - diff.rad;
    return r;
}

mpf_class disk_distance_upper(const CDisk& a, const CDisk& b) {
    CDisk diff = disk_sub(a, b);
    mpf_class r(0, diff.prec());
    r = disk_mag_upper(diff) + diff.rad;
    return r;
}

}  // namespace splitscan::splitfield
