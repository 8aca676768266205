#ifndef SPLITSCAN_ZPOLY_HPP
#define SPLITSCAN_ZPOLY_HPP

#include "splitscan/int_poly.hpp"

namespace splitscan::zpoly {

/// gcd of all coefficients, always positive. Rejects the zero polynomial.
mpz_class content(const IntPoly& a);

/// a / content(a), sign-normalized to a positive leading coefficient.
IntPoly primitive_part(const IntPoly& a);

/// Primitive integer representative of the monic gcd over Q, positive
/// leading coefficient. Computed by the subresultant (fraction-free)
/// remainder sequence. gcd_q(0, b) = primitive_part(b); both zero is an
/// error.
IntPoly gcd_q(const IntPoly& a, const IntPoly& b);

/// primitive_part(a / gcd(a, a')): same complex roots, all simple.
IntPoly squarefree_part(const IntPoly& a);

/// Exact resultant of two nonzero polynomials (subresultant PRS).
mpz_class resultant(const IntPoly& a, const IntPoly& b);

/// (-1)^(d(d-1)/2) * Res(a, a') / lc(a): the discriminant with its
/// standard sign (so the square test on cubics is meaningful).
mpz_class discriminant(const IntPoly& a);

/// Exact division over Z. Returns q with a = q*b, or throws
/// std::domain_error if b does not divide a exactly.
IntPoly divexact(const IntPoly& a, const IntPoly& b);

/// True iff b divides a over Q (equivalently primitive_part(b) divides
/// primitive_part(a) over Z).
bool divides_q(const IntPoly& b, const IntPoly& a);

struct ExtendedGcd {
    RatPoly a_cof;  // A with a*A + b*B = g
    RatPoly b_cof;  // B
    IntPoly g;      // gcd_q(a, b); when constant, normalized so a*A + b*B = 1
};

/// Extended Euclid over Q.
ExtendedGcd xeuclid_q(const IntPoly& a, const IntPoly& b);

/// For R, S with no common complex root: the positive integer lambda with
/// R*A1 + S*B1 = lambda for integer polynomials A1, B1 (the lcm of the
/// cofactor denominators from xeuclid_q). Then gcd(R(t), S(t)) | lambda
/// for every integer t.
mpz_class bezout_bound(const IntPoly& r, const IntPoly& s);

/// primitive_part(theta^deg(g) * g(X/theta)): roots of g scaled by theta.
IntPoly scale_roots(const IntPoly& g, const mpz_class& theta);

/// Exactly N^d * phi(X/N), d = deg phi, no primitive part taken.
IntPoly compose_scaled(const IntPoly& phi, const mpz_class& n);

/// Res_y(M(x - c*y), g(y)): the polynomial in x whose roots are
/// {mu + c*nu : M(mu) = 0, g(nu) = 0} with multiplicity, scaled by
/// lc(g)^deg(M) when g is not monic. Degree deg(M)*deg(g).
/// Computed by evaluation at integer points and exact interpolation.
IntPoly resultant_linear_sub(const IntPoly& m, const IntPoly& g, const mpz_class& c);

/// Same resultant via fraction-free elimination of the Sylvester matrix
/// over Z[x]. Slower; kept as an independent route for cross-checks.
IntPoly resultant_linear_sub_sylvester(const IntPoly& m, const IntPoly& g, const mpz_class& c);

}  // namespace splitscan::zpoly

#endif
