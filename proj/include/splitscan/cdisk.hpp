#ifndef SPLITSCAN_CDISK_HPP
#define SPLITSCAN_CDISK_HPP

#include <gmpxx.h>

#include "splitscan/int_poly.hpp"

namespace splitscan::splitfield {

/// Complex disk: center (re, im) plus an error radius, all mpf values at
/// an explicit working precision. Every operation widens the radius by a
/// generous rounding allowance, so a disk always contains the exact value
/// it tracks.
struct CDisk {
    mpf_class re, im, rad;

    explicit CDisk(unsigned prec = 128) : re(0, prec), im(0, prec), rad(0, prec) {}
    unsigned prec() const { return static_cast<unsigned>(re.get_prec()); }
};

CDisk disk_from_int(const mpz_class& v, unsigned prec);
CDisk disk_add(const CDisk& a, const CDisk& b);
CDisk disk_sub(const CDisk& a, const CDisk& b);
CDisk disk_mul(const CDisk& a, const CDisk& b);
CDisk disk_scale(const CDisk& a, const mpz_class& s);

/// Evaluation of an exact integer polynomial on a disk (Horner).
CDisk disk_eval(const IntPoly& f, const CDisk& z);

/// Upper bound on |center| (|re| + |im|).
mpf_class disk_mag_upper(const CDisk& d);
/// Lower bound on |center| (max(|re|, |im|)).
mpf_class disk_mag_lower(const CDisk& d);

/// True iff 0 may lie in the disk (cannot certify the value nonzero).
bool disk_may_contain_zero(const CDisk& d);
/// True iff the value is certifiably nonzero.
bool disk_certainly_nonzero(const CDisk& d);

/// Certified lower bound on the distance between the two disks' values;
/// negative means the disks may overlap.
mpf_class disk_distance_lower(const CDisk& a, const CDisk& b);
/// Upper bound on that distance.
mpf_class disk_distance_upper(const CDisk& a, const CDisk& b);

}  // namespace splitscan::splitfield

#endif
