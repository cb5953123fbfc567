// prime_table.cpp
// Segmented sieve of Eratosthenes over odd numbers.

#include "kappa/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "kappa/precision.hpp"

namespace kappa {

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Odd primes up to limit by a plain byte sieve (used for base primes only).
std::vector<std::uint64_t> small_odd_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 3) return primes;
    std::vector<char> composite(limit + 1, 0);
    for (std::uint64_t i = 3; i * i <= limit; i += 2)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j] = 1;
    for (std::uint64_t i = 3; i <= limit; i += 2)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

}  // namespace

PrimeTable PrimeTable::sieve(std::uint64_t limit, unsigned threads,
                             std::uint64_t hard_cap) {
    if (limit < 2)
        throw std::invalid_argument("sieve: limit must be >= 2");
    if (limit > hard_cap)
        throw std::invalid_argument("sieve: limit exceeds hard cap");

    std::uint64_t nbits = limit >= 3 ? ((limit - 3) >> 1) + 1 : 0;
    std::uint64_t nwords = (nbits + 63) >> 6;
    std::vector<std::uint64_t> words(nwords, ~0ULL);
    if (nbits & 63) words.back() = ~0ULL >> (64 - (nbits & 63));

    auto base = small_odd_primes(isqrt_u64(limit));

    std::uint64_t nsegments = nbits == 0 ? 0 : (nbits + kSegmentBits - 1) / kSegmentBits;

    auto sieve_segment = [&](std::uint64_t seg) {
        std::uint64_t bit_lo = seg * kSegmentBits;
        std::uint64_t bit_hi = std::min(nbits, bit_lo + kSegmentBits);  // exclusive
        std::uint64_t lo = 3 + 2 * bit_lo;        // first odd number in segment
        std::uint64_t hi = 3 + 2 * (bit_hi - 1);  // last odd number in segment
        for (std::uint64_t p : base) {
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            if ((start & 1) == 0) start += p;  // first odd multiple >= lo
            for (std::uint64_t m = start; m <= hi; m += 2 * p) {
                std::uint64_t i = (m - 3) >> 1;
                words[i >> 6] &= ~(1ULL << (i & 63));
            }
        }
    };

    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || nsegments <= 1) {
        for (std::uint64_t s = 0; s < nsegments; ++s) sieve_segment(s);
    } else {
        unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(threads, nsegments));
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) {
            pool.emplace_back([&, t] {
                // Strided segment ownership; segments never share words,
                // except possibly at the boundary word. Give each thread
                // a contiguous block instead so word ranges are disjoint.
                std::uint64_t per = (nsegments + n - 1) / n;
                std::uint64_t s0 = t * per, s1 = std::min(nsegments, s0 + per);
                for (std::uint64_t s = s0; s < s1; ++s) sieve_segment(s);
            });
        }
        for (auto& th : pool) th.join();
    }

    return PrimeTable(limit, std::move(words));
}

std::uint64_t PrimeTable::pi(double x) const {
    if (x < 2.0) return 0;
    std::uint64_t top = inclusive_floor(x);
    if (top > limit_)
        throw std::out_of_range("pi: x exceeds table limit");
    std::uint64_t count = 1;  // p = 2
    if (top < 3) return count;
    std::uint64_t nbits = ((top - 3) >> 1) + 1;
    std::uint64_t full = nbits >> 6;
    for (std::uint64_t w = 0; w < full; ++w)
        count += static_cast<std::uint64_t>(std::popcount(words_[w]));
    if (nbits & 63)
        count += static_cast<std::uint64_t>(
            std::popcount(words_[full] & (~0ULL >> (64 - (nbits & 63)))));
    return count;
}

std::vector<PrimeTable::PrimePower> PrimeTable::prime_power_events(
    std::uint64_t x) const {
    std::vector<PrimePower> events;
    if (x < 4) return events;
    std::uint64_t root = isqrt_u64(x);
    for_each_prime(root, [&](std::uint64_t p) {
        std::uint64_t pk = p * p;
        unsigned k = 2;
        while (true) {
            events.push_back({pk, p, k});
            if (pk > x / p) break;
            pk *= p;
            ++k;
        }
    });
    std::sort(events.begin(), events.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.value < b.value; });
    return events;
}

}  // namespace kappa
