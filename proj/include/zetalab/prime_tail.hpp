#ifndef ZETALAB_PRIME_TAIL_HPP
#define ZETALAB_PRIME_TAIL_HPP

// t(s) = sum over primes of 1/(p^s - 1), summed over primes directly and in
// the closed form built from zeta(s) by stacking prime powers over the odd
// integers. The closed form also counts odd m > 1 that are not prime powers
// (15, 21, 33, ...), so it sits above the prime sum by  sum m^{-s}  over them.

#include <zetalab/primes.hpp>
#include <zetalab/real.hpp>
#include <zetalab/series.hpp>
#include <zetalab/zeta_core.hpp>

namespace zetalab {

inline constexpr std::uint64_t default_prime_cap = std::uint64_t(1) << 24;
inline constexpr std::uint64_t initial_prime_cutoff = 100'000;

struct TailSum {
    Real s;
    SeriesResult direct;
    Real closed;
    Real gap; // closed - direct.value
};

namespace detail {

// Bound on  sum_{p > P} 1/(p^s - 1)  by  sum_{n > P} n^{-s} / (1 - P^{-s}).
inline Real prime_tail_bound(const Real& s, std::uint64_t P)
{
    const Real pr(static_cast<long>(P), s.digits());
    const Real ps = pow(pr, -s);
    return pr * ps / (s - 1) / (1 - ps);
}

inline Real prime_tail_term(std::uint64_t p, const Real& s)
{
    const Real ps = 1 / inverse_power(static_cast<long>(p), s);
    return 1 / (ps - 1);
}

} // namespace detail

// Sum over p <= P, with P grown from 10^5 by doubling until the tail bound is
// <= tol or P reaches prime_cap (then converged = false).
inline SeriesResult t_direct(const Real& s, const Real& tol, std::uint64_t prime_cap = default_prime_cap)
{
    if (!(s > 1))
        throw DomainError("t_direct: the prime sum diverges for s <= 1");
    if (!(tol > 0))
        throw DomainError("t_direct: tolerance must be positive");
    const int d = std::max(s.digits(), tol.digits());
    const int w = d + 8;
    const Real sw = s.with_digits(w);

    Real sum(0L, w);
    long count = 0;
    std::uint64_t lo = 0;
    std::uint64_t P = std::min(initial_prime_cutoff, std::max<std::uint64_t>(prime_cap, 2));
    for (;;) {
        for (std::uint64_t p : primes_in_range(lo, P)) {
            sum += detail::prime_tail_term(p, sw);
            ++count;
        }
        const Real bound = detail::prime_tail_bound(sw, P);
        const bool done = bound <= tol;
        if (done || P >= prime_cap)
            return {Cplx(sum.with_digits(d)), count, bound.with_digits(d), done};
        lo = P + 1;
        P = std::min(2 * P, prime_cap);
    }
}

// zeta(s)(1 - 2^{-s}) - 1 + 1/(2^s - 1), zeta(s) from the Dirichlet series.
inline Real t_closed(const Real& s)
{
    if (!(s > 1))
        throw DomainError("t_closed: requires s > 1");
    const int d = s.digits();
    const int w = d + 8;
    const Real sw = s.with_digits(w);
    const Real z = zeta_dirichlet(sw, ten_to_minus(w - 2, w)).value.re;
    const Real two_s = pow(Real(2L, w), sw);
    Real r = z * (1 - 1 / two_s) - 1 + 1 / (two_s - 1);
    return r.with_digits(d);
}

inline TailSum tail_sum(const Real& s, const Real& tol, std::uint64_t prime_cap = default_prime_cap)
{
    TailSum t{s, t_direct(s, tol, prime_cap), t_closed(s), Real(0L, s.digits())};
    t.gap = t.closed - t.direct.value.re;
    return t;
}

} // namespace zetalab

#endif
