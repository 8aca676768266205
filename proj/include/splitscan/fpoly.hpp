#ifndef SPLITSCAN_FPOLY_HPP
#define SPLITSCAN_FPOLY_HPP

#include <cstdint>
#include <vector>

#include "splitscan/int_poly.hpp"

namespace splitscan::fpoly {

/// Polynomial over F_p for a prime p < 2^62. Residues stored ascending,
/// leading stored coefficient nonzero. Immutable after construction.
class ModPoly {
  public:
    /// Throws std::domain_error if p is not prime or out of range.
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const;
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t lc() const;
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    std::uint64_t eval(std::uint64_t x) const;

  private:
    friend ModPoly unchecked(std::uint64_t p, std::vector<std::uint64_t> c);
    struct unchecked_tag {};
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs, unchecked_tag);
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

/// Coefficientwise reduction of an integer polynomial mod p. The degree
/// may drop when p divides the leading coefficient.
ModPoly reduce(const IntPoly& a, std::uint64_t p);

ModPoly add(const ModPoly& a, const ModPoly& b);
ModPoly sub(const ModPoly& a, const ModPoly& b);
ModPoly mul(const ModPoly& a, const ModPoly& b);
ModPoly rem(const ModPoly& a, const ModPoly& b);
ModPoly make_monic(const ModPoly& a);
ModPoly derivative(const ModPoly& a);
ModPoly gcd(const ModPoly& a, const ModPoly& b);  // monic (or zero)

/// X^e reduced mod f, square-and-multiply. f must be nonconstant.
ModPoly powmod_x(const ModPoly& f, std::uint64_t e);

/// (g^e) mod f.
ModPoly powmod(const ModPoly& g, std::uint64_t e, const ModPoly& f);

/// Product of the distinct irreducible factors of f, monic. Handles
/// p-th-power inputs.
ModPoly squarefree_part(const ModPoly& f);

/// gcd(X^p - X, f): monic product of (X - r) over the distinct roots r
/// of f in F_p.
ModPoly linear_radical(const ModPoly& f);

/// Number of distinct roots of f in F_p (degree of the linear radical).
int count_distinct_roots(const ModPoly& f);

bool has_root(const ModPoly& f);

/// True iff f factors over F_p entirely into linear factors, counted
/// with multiplicity.
bool splits_completely(const ModPoly& f);

struct RootMult {
    std::uint64_t root;
    int multiplicity;
};

/// All roots of f in F_p with exact multiplicities, ascending by root.
/// Exhaustive search for p < 4096; equal-degree splitting with shifts
/// drawn from a generator seeded by (seed, p, f) otherwise.
std::vector<RootMult> roots_with_multiplicity(const ModPoly& f, std::uint64_t seed = 0);

}  // namespace splitscan::fpoly

#endif
