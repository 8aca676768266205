#ifndef SPLITSCAN_PRIMES_HPP
#define SPLITSCAN_PRIMES_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace splitscan::primes {

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// All primes <= n (simple sieve; n kept modest by callers).
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// Calls fn(p) for every prime p in (lo, hi], ascending, using a
/// segmented sieve of Eratosthenes.
void for_primes_in(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size,
                   const std::function<void(std::uint64_t)>& fn);

}  // namespace splitscan::primes

#endif
