#ifndef SPLITSCAN_SPLITFIELD_HPP
#define SPLITSCAN_SPLITFIELD_HPP

#include <functional>
#include <optional>
#include <vector>

#include "splitscan/cdisk.hpp"
#include "splitscan/int_poly.hpp"
#include "splitscan/zfactor.hpp"

namespace splitscan::splitfield {

struct SplitFieldConfig {
    unsigned precision_bits = 128;
    unsigned precision_cap = 8192;
    zfactor::FactorConfig factor{};
};

/// Certified approximation of one complex root: the disk contains exactly
/// one true root of the polynomial it was isolated from.
struct RootApprox {
    CDisk disk;
    int index = -1;          // position in canonical root order
    int source_factor = -1;  // index of the irreducible factor it belongs to
};

/// Pairwise-disjoint certified disks for the distinct complex roots of a
/// squarefree polynomial, in canonical (re, im) order. Doubles the working
/// precision until certification succeeds; throws past precision_cap.
std::vector<CDisk> isolate_squarefree(const IntPoly& s, unsigned precision_bits,
                                      unsigned precision_cap = 8192);

/// Distinct roots of phi with multiplicities (from squarefree
/// decomposition); the multiplicities sum to deg phi.
std::vector<std::pair<RootApprox, int>> isolate_roots(const IntPoly& phi, unsigned precision_bits);

/// Smallest certifiable c >= start such that all values mu + c*nu over
/// (mu, nu) in existing_sums x new_roots are pairwise separated. Returns
/// nullopt when the current disks are too coarse to decide (refine and
/// retry).
std::optional<int> choose_weight(const std::vector<CDisk>& existing_sums,
                                 const std::vector<CDisk>& new_roots, int start = 1);

/// The unique irreducible factor of resultant_linear_sub(m, g, c) that
/// vanishes at theta + c*alpha. `refine`, when provided, must return the
/// (theta, alpha) disks recomputed at the requested precision.
using DiskRefiner = std::function<std::pair<CDisk, CDisk>(unsigned prec)>;
IntPoly min_poly_of_sum(const IntPoly& m, const IntPoly& g, int c, const CDisk& theta,
                        const CDisk& alpha, const SplitFieldConfig& cfg = {},
                        const DiskRefiner& refine = nullptr);

struct AdjunctionRecord {
    IntPoly factor;
    long weight = 0;
    int degree_after = 0;
};

struct PrimitiveElement {
    IntPoly phi;                  // the input polynomial
    IntPoly min_poly;             // irreducible, primitive, positive lc
    std::vector<long> weights;    // per distinct root of phi, canonical order
    CDisk beta;                   // certified approximation of the sum
    std::vector<IntPoly> root_factors;  // irreducible factor of each root, same order
    std::vector<AdjunctionRecord> trace;

    int degree() const { return min_poly.degree(); }
};

/// Primitive element of the splitting field of phi: beta = sum of
/// weighted roots, with its minimal polynomial. deg(min_poly) equals the
/// splitting field degree over Q.
PrimitiveElement primitive_element(const IntPoly& phi, const SplitFieldConfig& cfg = {});

/// prod over all root tuples (nu_1..nu_n), nu_k a root of factors[k], of
/// (X - sum_k weights[k]*nu_k), one factor entry per tracked root.
/// Computed exactly by folding the linear-substitution resultant;
/// primitive part, positive leading coefficient. Degree = prod deg.
IntPoly weighted_conjugate_product(const std::vector<IntPoly>& factors,
                                   const std::vector<mpz_class>& weights);

/// k primitive elements with pairwise distinct minimal polynomials, all
/// of the splitting-field degree, generated by offsetting the weight
/// search per run and discarding duplicates.
std::vector<PrimitiveElement> family(const IntPoly& phi, int k, const SplitFieldConfig& cfg = {});

}  // namespace splitscan::splitfield

#endif
