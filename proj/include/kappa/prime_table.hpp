// prime_table.hpp
// Immutable sieved prime set up to a limit. One bit per odd number; 2 is
// special-cased. Construction is a segmented sieve (segments sized to fit
// cache) and may run multi-threaded; the resulting table is identical
// regardless of schedule and is safe to share across threads.

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kappa {

class PrimeTable {
public:
    // Default hard cap on the sieve bound; larger requests are input errors.
    static constexpr std::uint64_t kDefaultHardCap = 1'000'000'000ULL;
    // Segment size in bits (odd numbers per segment), tuned to L2 cache.
    static constexpr std::uint64_t kSegmentBits = 1ULL << 20;

    // Builds the table of all primes <= limit. threads = 0 picks the
    // hardware concurrency. Throws std::invalid_argument outside
    // [2, hard_cap].
    static PrimeTable sieve(std::uint64_t limit, unsigned threads = 0,
                            std::uint64_t hard_cap = kDefaultHardCap);

    std::uint64_t limit() const { return limit_; }

    bool is_prime(std::uint64_t n) const {
        if (n < 2) return false;
        if (n == 2) return true;
        if ((n & 1) == 0) return false;
        std::uint64_t i = (n - 3) >> 1;
        return (words_[i >> 6] >> (i & 63)) & 1ULL;
    }

    // #{p <= x}. x may exceed limit only by throwing (range error).
    std::uint64_t pi(double x) const;

    // Calls f(p) for every prime p <= x in increasing order.
    // Throws std::out_of_range when x exceeds the sieved limit.
    template <class F>
    void for_each_prime(std::uint64_t x, F&& f) const {
        if (x > limit_)
            throw std::out_of_range("PrimeTable: x exceeds table limit");
        if (x >= 2) f(std::uint64_t{2});
        std::uint64_t top = x;
        if (top < 3) return;
        std::uint64_t nbits = ((top - 3) >> 1) + 1;
        std::uint64_t nwords = (nbits + 63) >> 6;
        for (std::uint64_t w = 0; w < nwords; ++w) {
            std::uint64_t word = words_[w];
            if (w == nwords - 1 && (nbits & 63))
                word &= (~0ULL >> (64 - (nbits & 63)));
            while (word) {
                unsigned b = static_cast<unsigned>(std::countr_zero(word));
                word &= word - 1;
                f(3 + 2 * ((w << 6) + b));
            }
        }
    }

    // Calls f(p, k, p^k) for every prime power p^k <= x (k >= 1), ordered
    // by increasing numeric value p^k. Used by the sums over Lambda(n).
    template <class F>
    void for_each_prime_power(std::uint64_t x, F&& f) const {
        auto events = prime_power_events(x);
        std::size_t next = 0;
        for_each_prime(x, [&](std::uint64_t p) {
            while (next < events.size() && events[next].value < p) {
                f(events[next].p, events[next].k, events[next].value);
                ++next;
            }
            f(p, 1u, p);
        });
        for (; next < events.size(); ++next)
            f(events[next].p, events[next].k, events[next].value);
    }

    struct PrimePower {
        std::uint64_t value;
        std::uint64_t p;
        unsigned k;
    };

    // All p^k <= x with k >= 2, sorted by value.
    std::vector<PrimePower> prime_power_events(std::uint64_t x) const;

private:
    PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> words)
        : limit_(limit), words_(std::move(words)) {}

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> words_;  // bit i <-> odd number 2i + 3
};

}  // namespace kappa
