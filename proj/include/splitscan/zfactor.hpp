#ifndef SPLITSCAN_ZFACTOR_HPP
#define SPLITSCAN_ZFACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "splitscan/int_poly.hpp"

namespace splitscan::zfactor {

struct FactorConfig {
    int degree_cap = 64;     // refuse squarefree parts above this degree
    std::uint64_t seed = 0;  // drives equal-degree splitting, reproducible
};

/// Complete factorization over Q: input = unit * prod factor^multiplicity,
/// every factor primitive, irreducible, positive leading coefficient,
/// sorted by degree then coefficient order.
struct Factorization {
    mpz_class unit;
    std::vector<std::pair<IntPoly, int>> factors;

    IntPoly expand() const;
};

/// Squarefree decomposition first, then per squarefree part: factor mod a
/// small prime, Hensel-lift past the Mignotte bound, recombine subsets.
Factorization factor_q(const IntPoly& a, const FactorConfig& cfg = {});

bool is_irreducible_q(const IntPoly& a, const FactorConfig& cfg = {});

}  // namespace splitscan::zfactor

#endif
