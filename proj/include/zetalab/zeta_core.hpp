#ifndef ZETALAB_ZETA_CORE_HPP
#define ZETALAB_ZETA_CORE_HPP

// Classical evaluators of zeta: the defining series, the alternating (eta)
// series, the Euler product, closed forms at even and negative integers,
// the Bernoulli-free recurrence for zeta(2k), and an Euler–Maclaurin oracle
// for complex arguments that shares no code path with the eta evaluator.

#include <zetalab/bernoulli.hpp>
#include <zetalab/primes.hpp>
#include <zetalab/real.hpp>
#include <zetalab/series.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace zetalab {

inline constexpr double eta_degeneracy_threshold = 1e-20;

namespace detail {

inline int digits_for_tol(const Real& tol)
{
    const double t = tol.to_double();
    if (!(t > 0))
        return tol.digits();
    return static_cast<int>(std::ceil(-std::log10(t)));
}

// n^{-s} for real s; exact integer powers when s is an integer.
inline Real inverse_power(long n, const Real& s)
{
    if (s.is_integer() && s > 0 && s < 100000)
        return 1 / uipow(static_cast<unsigned long>(n), static_cast<unsigned long>(s.to_long()), s.digits());
    return pow(Real(n, s.digits()), -s);
}

} // namespace detail

// zeta(s) for real s > 1 from  sum n^{-s}. The tail beyond the summed block is
// folded in by Euler–Maclaurin (integral N^{1-s}/(s-1) plus boundary terms);
// converged once that tail's error bound is <= tol.
inline SeriesResult zeta_dirichlet(const Real& s, const Real& tol)
{
    if (!(s > 1))
        throw DomainError("zeta_dirichlet: the Dirichlet series diverges for s <= 1");
    const int d = std::max(s.digits(), tol.digits());
    const int w = d + 5;
    const Real sw = s.with_digits(w);
    auto term = [&](long n) { return Cplx(detail::inverse_power(n, sw)); };
    SeriesResult r = sum_series(term, tol.with_digits(w), 100'000, power_tail(Cplx(sw), Real(0L, w)));
    r.value = r.value.with_digits(d);
    r.trunc_estimate = r.trunc_estimate.with_digits(d);
    return r;
}

// Accelerated  eta(s) = sum (-1)^{n-1} n^{-s}  for complex s, aiming at
// `target_digits` correct digits. Order and precision grow with |Im s| to
// absorb the e^{pi |Im s| / 2} loss of the scheme off the real axis.
inline SeriesResult eta_accelerated(const Cplx& s, int target_digits)
{
    const double t = std::abs(s.im.to_double());
    const int extra = static_cast<int>(std::ceil(0.7 * t)) + 2;
    const int w = std::max(s.digits(), target_digits + extra) + 10;
    const Cplx sw = s.with_digits(w);
    const bool real_arg = sw.im.is_zero();
    auto coeff = [&](long n) -> Cplx {
        if (real_arg)
            return Cplx(detail::inverse_power(n, sw.re));
        return exp(-(sw * log(Real(n, w))));
    };
    return accelerate_alternating(coeff, acceleration_order(target_digits + extra), w);
}

// zeta(s) = eta(s) / (1 - 2^{1-s}) for real s > 0, s != 1.
inline SeriesResult zeta_eta_real(const Real& s, const Real& tol)
{
    if (!(s > 0))
        throw DomainError("zeta_eta_real: the alternating series needs s > 0");
    if (s == 1)
        throw PoleError("zeta_eta_real: simple pole at s = 1");
    const int d = std::max(s.digits(), tol.digits());
    const int target = std::max(detail::digits_for_tol(tol), 15) + 3;
    const Real sw = s.with_digits(d + 5);
    const Real pref = 1 - pow(Real(2L, d + 5), 1 - sw);
    if (abs(pref) < eta_degeneracy_threshold)
        throw PoleError("zeta_eta_real: 1 - 2^{1-s} vanishes to within the degeneracy threshold (s near 1)");
    SeriesResult eta = eta_accelerated(Cplx(sw), target);
    SeriesResult r;
    r.value = Cplx((eta.value.re / pref).with_digits(d));
    r.terms_used = eta.terms_used;
    r.trunc_estimate = (eta.trunc_estimate / abs(pref)).with_digits(d);
    r.converged = r.trunc_estimate <= tol;
    return r;
}

// prod_{p <= bound} p^s / (p^s - 1).
inline Real euler_product(const Real& s, std::uint64_t prime_bound)
{
    if (!(s > 1))
        throw DomainError("euler_product: the product diverges for s <= 1");
    if (prime_bound < 2)
        throw DomainError("euler_product: prime bound must be at least 2");
    const int d = s.digits();
    const int w = d + 8;
    const Real sw = s.with_digits(w);
    Real prod(1L, w);
    for (std::uint64_t p : primes_up_to(prime_bound)) {
        Real ps = 1 / detail::inverse_power(static_cast<long>(p), sw);
        prod *= ps / (ps - 1);
    }
    return prod.with_digits(d);
}

// zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!), exact rational coefficient.
inline Real zeta_even_closed(long two_n, int digits = default_digits)
{
    if (two_n < 2 || two_n % 2 != 0)
        throw DomainError("zeta_even_closed: argument must be an even integer >= 2, got " + std::to_string(two_n));
    const unsigned m = static_cast<unsigned>(two_n);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), m);
    Rat coef = bernoulli(m) / (2 * Rat(fact));
    if ((m / 2) % 2 == 0)
        coef = -coef;
    const int w = digits + 5;
    Real r = Real(coef, w) * pow(2 * pi(w), two_n);
    return r.with_digits(digits);
}

// zeta(-n) = -B_{n+1} / (n+1), with B_1 = +1/2 so that zeta(0) = -1/2.
inline Rat zeta_negative_int(long n)
{
    if (n < 0)
        throw DomainError("zeta_negative_int: n must be non-negative");
    const unsigned m = static_cast<unsigned>(n + 1);
    Rat r = -bernoulli(m, BernoulliConvention::b1_plus_half) / Rat(m);
    r.canonicalize();
    return r;
}

// All of zeta(2), zeta(4), ..., zeta(2k) from the Bernoulli-free recurrence
//   zeta(2k) = -(-1)^k pi^{2k} ( sum_{j=0}^{k-2} (-1/pi^2)^{j+1} zeta(2j+2) / (2k-2j-1)!
//                                + k / (2k+1)! ),
// seeded with zeta(2) = pi^2 / 6. Element i holds zeta(2i + 2).
inline std::vector<Real> zeta_even_recurrence_table(long k_max, int digits = default_digits)
{
    std::vector<Real> z;
    if (k_max < 1)
        return z;
    const int w = digits + 10 + static_cast<int>(k_max);
    const Real p = pi(w);
    const Real p2 = p * p;
    const Real neg_inv_p2 = -1 / p2;
    z.push_back(p2 / 6);
    for (long k = 2; k <= k_max; ++k) {
        Real acc = Real(k, w) / factorial(static_cast<unsigned long>(2 * k + 1), w);
        Real q = neg_inv_p2; // (-1/pi^2)^{j+1}
        for (long j = 0; j <= k - 2; ++j) {
            acc += q * z[static_cast<std::size_t>(j)] / factorial(static_cast<unsigned long>(2 * k - 2 * j - 1), w);
            q *= neg_inv_p2;
        }
        Real v = -acc * pow(p, 2 * k);
        if (k % 2 == 1)
            v = -v;
        z.push_back(std::move(v));
    }
    for (auto& v : z)
        v = v.with_digits(digits);
    return z;
}

inline Real zeta_even_recurrence(long two_k, int digits = default_digits)
{
    if (two_k < 2 || two_k % 2 != 0)
        throw DomainError("zeta_even_recurrence: argument must be an even integer >= 2, got " + std::to_string(two_k));
    return zeta_even_recurrence_table(two_k / 2, digits).back();
}

namespace detail {

// sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + sum_{k=1}^{m} B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
inline Cplx euler_maclaurin_zeta(const Cplx& s, long N, unsigned m, int w)
{
    Cplx sum(0L, w);
    for (long n = 1; n < N; ++n)
        sum += exp(-(s * log(Real(n, w))));
    const Real nr(N, w);
    const Cplx npow = exp(-(s * log(nr))); // N^{-s}
    sum += npow * nr / (s - Real(1L, w));
    sum += npow / 2;
    const std::vector<Real> c = even_bernoulli_over_factorial(m, w);
    Cplx rising = s;
    Cplx p = npow / nr;
    const Real n2 = nr * nr;
    for (unsigned k = 1; k <= m; ++k) {
        sum += c[k - 1] * rising * p;
        rising = rising * (s + Real(2L * k - 1, w)) * (s + Real(2L * k, w));
        p = p / n2;
    }
    return sum;
}

// Doubles N until two successive Euler–Maclaurin sums agree to tol. Valid
// for any s != 1; callers impose their own domain.
inline Cplx zeta_em_adaptive(const Cplx& s, const Real& tol, unsigned corrections = 12)
{
    const int d = std::max(s.digits(), tol.digits());
    const int w = d + 10;
    const Cplx sw = s.with_digits(w);
    long N = std::max(50L, static_cast<long>(std::ceil(10 * std::abs(s.im.to_double()))));
    Cplx prev = euler_maclaurin_zeta(sw, N, corrections, w);
    for (int iter = 0; iter < 12; ++iter) {
        N *= 2;
        Cplx cur = euler_maclaurin_zeta(sw, N, corrections, w);
        Real diff = abs(cur - prev);
        if (diff <= tol)
            return cur.with_digits(d);
        prev = std::move(cur);
    }
    throw AccuracyError("zeta oracle: successive Euler–Maclaurin sums disagree", 0.0);
}

} // namespace detail

// Independent complex zeta for Re(s) > 0, s != 1 (Euler–Maclaurin with
// N = max(50, ceil(10 |Im s|)) and 12 correction terms, N doubled until stable).
inline Cplx zeta_oracle(const Cplx& s, const Real& tol)
{
    if (!(s.re > 0))
        throw DomainError("zeta_oracle: requires Re(s) > 0");
    if (abs(s - Real(1L, s.digits())) <= 1e-30)
        throw PoleError("zeta_oracle: s is within 1e-30 of the pole at 1");
    return detail::zeta_em_adaptive(s, tol);
}

// The same oracle without the Re(s) > 0 restriction; audits use it for
// zeta(ib) on the imaginary axis.
inline Cplx zeta_oracle_extended(const Cplx& s, const Real& tol)
{
    if (abs(s - Real(1L, s.digits())) <= 1e-30)
        throw PoleError("zeta_oracle_extended: s is within 1e-30 of the pole at 1");
    if (s.re < -20)
        throw DomainError("zeta_oracle_extended: Euler–Maclaurin depth insufficient for Re(s) < -20");
    return detail::zeta_em_adaptive(s, tol);
}

} // namespace zetalab

#endif
