#ifndef ZETALAB_PRIMES_HPP
#define ZETALAB_PRIMES_HPP

// Segmented sieve of Eratosthenes over odd numbers only.

#include <zetalab/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace zetalab {

inline constexpr std::size_t default_prime_memory_cap = std::size_t(256) << 20; // 256 MiB

namespace detail {

inline constexpr std::uint64_t sieve_segment = std::uint64_t(1) << 18; // odd numbers per segment

inline std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

// Odd primes <= n by a plain sieve; used as base primes for the segments.
inline std::vector<std::uint64_t> small_odd_primes(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    if (n < 3)
        return out;
    std::vector<bool> composite((n - 1) / 2, false); // index i <-> 2i + 3
    for (std::uint64_t i = 0; i < composite.size(); ++i) {
        if (composite[i])
            continue;
        const std::uint64_t p = 2 * i + 3;
        out.push_back(p);
        for (std::uint64_t m = p * p; m <= n; m += 2 * p)
            composite[(m - 3) / 2] = true;
    }
    return out;
}

} // namespace detail

// All primes in [lo, hi], ascending.
inline std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    if (hi < 2 || lo > hi)
        return out;
    if (lo <= 2)
        out.push_back(2);
    const std::vector<std::uint64_t> base = detail::small_odd_primes(detail::isqrt(hi));

    std::uint64_t first = std::max<std::uint64_t>(lo, 3) | 1; // first odd candidate
    std::vector<bool> composite;
    for (std::uint64_t seg = first; seg <= hi; seg += 2 * detail::sieve_segment) {
        const std::uint64_t seg_hi = std::min(hi, seg + 2 * (detail::sieve_segment - 1));
        const std::uint64_t count = (seg_hi - seg) / 2 + 1;
        composite.assign(count, false);
        for (std::uint64_t p : base) {
            if (p * p > seg_hi)
                break;
            std::uint64_t m = std::max(p * p, (seg + p - 1) / p * p);
            if (m % 2 == 0)
                m += p;
            for (; m <= seg_hi; m += 2 * p)
                composite[(m - seg) / 2] = true;
        }
        for (std::uint64_t i = 0; i < count; ++i)
            if (!composite[i])
                out.push_back(seg + 2 * i);
    }
    return out;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) { return primes_in_range(0, n); }

// Incremental prime generator. Single owner; not safe for concurrent mutation.
class PrimeStream {
public:
    explicit PrimeStream(std::size_t memory_cap_bytes = default_prime_memory_cap) : cap_(memory_cap_bytes) {}

    std::uint64_t next()
    {
        if (emitted_ == primes_.size())
            grow();
        return primes_[emitted_++];
    }

    std::uint64_t sieve_bound() const { return bound_; }
    std::uint64_t emitted() const { return emitted_; }

private:
    void grow()
    {
        do {
            const std::uint64_t new_bound = std::max<std::uint64_t>(1024, 2 * bound_);
            // Stored primes (8 bytes each, about n / ln n of them) plus the
            // segment and base-prime scratch space.
            const double estimate = 8.0 * 1.3 * static_cast<double>(new_bound) / std::log(static_cast<double>(new_bound)) +
                                    static_cast<double>(detail::sieve_segment) + 8.0 * std::sqrt(static_cast<double>(new_bound));
            if (estimate > static_cast<double>(cap_))
                throw ResourceError("prime sieve growth to " + std::to_string(new_bound) + " exceeds the memory cap");
            std::vector<std::uint64_t> more = primes_in_range(bound_ + 1, new_bound);
            primes_.insert(primes_.end(), more.begin(), more.end());
            bound_ = new_bound;
        } while (emitted_ == primes_.size());
    }

    std::size_t cap_;
    std::uint64_t bound_ = 0;
    std::uint64_t emitted_ = 0;
    std::vector<std::uint64_t> primes_;
};

inline std::uint64_t next_prime(PrimeStream& stream) { return stream.next(); }

} // namespace zetalab

#endif
