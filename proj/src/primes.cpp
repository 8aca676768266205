#include "splitscan/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace splitscan::primes {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool witness(u64 a, u64 n, u64 d, int s) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this base set is deterministic for all n < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (witness(a, n, d, s)) return false;
    return true;
}

u64 next_prime(u64 n) {
    u64 c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

void for_primes_in(u64 lo, u64 hi, u64 segment_size, const std::function<void(u64)>& fn) {
    if (hi <= lo) return;
    if (segment_size == 0) throw std::invalid_argument("segment_size must be positive");
    std::uint32_t root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(hi))) + 2;
    std::vector<std::uint32_t> base = primes_up_to(root);
    std::vector<bool> seg;
    for (u64 start = lo + 1; start <= hi;) {
        u64 end = std::min(hi, start + segment_size - 1);
        std::size_t len = static_cast<std::size_t>(end - start + 1);
        seg.assign(len, false);
        for (std::uint32_t p : base) {
            u64 pp = p;
            if (pp * pp > end) break;
            u64 first = ((start + pp - 1) / pp) * pp;
            if (first < pp * pp) first = pp * pp;
            for (u64 j = first; j <= end; j += pp) seg[static_cast<std::size_t>(j - start)] = true;
        }
        for (std::size_t i = 0; i < len; ++i) {
            u64 v = start + i;
            if (v >= 2 && !seg[i]) fn(v);
        }
        start = end + 1;
    }
}

}  // namespace splitscan::primes
