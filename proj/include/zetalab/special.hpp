#ifndef ZETALAB_SPECIAL_HPP
#define ZETALAB_SPECIAL_HPP

#include <zetalab/bernoulli.hpp>
#include <zetalab/real.hpp>
#include <zetalab/series.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace zetalab {

namespace detail {

// Stirling coefficients B_{2k} / (2k), cached per precision.
inline const std::vector<Real>& stirling_coefficients(int digits)
{
    static std::mutex mutex;
    static std::map<int, std::vector<Real>> cache;
    std::lock_guard lock(mutex);
    auto& v = cache[digits];
    if (v.empty())
        for (unsigned k = 1; k <= 200; ++k)
            v.emplace_back(bernoulli(2 * k) / Rat(2 * k), digits);
    return v;
}

// Shift target for the asymptotic series. At x the terms B_{2k}/(2k x^{2k})
// bottom out near e^{-2 pi x}, so x >= 0.6 w leaves room for w digits.
inline double digamma_shift_threshold(int digits) { return std::max(20.0, std::ceil(0.6 * digits)); }

} // namespace detail

// psi(x) = Gamma'(x)/Gamma(x) for x > 0: upward recurrence psi(x) = psi(x+1) - 1/x
// until x clears the threshold, then the asymptotic series
//   ln x - 1/(2x) - sum_k B_{2k} / (2k x^{2k})
// carried until its terms drop below the working precision.
inline Real digamma(const Real& x)
{
    if (!(x > 0))
        throw DomainError("digamma: argument must be positive (poles at non-positive integers)");
    const int d = x.digits();
    const int w = d + 5;
    Real z = x.with_digits(w);
    Real shift(0L, w);
    const double threshold = detail::digamma_shift_threshold(w);
    if (z.to_double() < threshold) {
        // one division for the whole shift: sum 1/(z+j) as a running fraction
        Real num(0L, w), den(1L, w);
        while (z.to_double() < threshold) {
            num = num * z + den;
            den *= z;
            z += 1;
        }
        shift = num / den;
    }
    const std::vector<Real>& c = detail::stirling_coefficients(w);
    const Real inv2 = 1 / (z * z);
    const Real eps = ten_to_minus(w, w);
    Real series(0L, w);
    Real p = inv2;
    for (const Real& ck : c) {
        Real t = ck * p;
        series += t;
        if (abs(t) < eps)
            break;
        p *= inv2;
    }
    Real r = log(z) - 1 / (2 * z) - series - shift;
    return r.with_digits(d);
}

// Hurwitz zeta  sum_{n>=0} (n + alpha)^{-s}  for real s > 1, alpha > 0:
// an initial block summed directly, the rest by Euler–Maclaurin.
inline Real hurwitz_zeta(const Real& s, const Real& alpha, const Real& tol)
{
    if (!(s > 1))
        throw DomainError("hurwitz_zeta: s must exceed 1");
    if (!(alpha > 0))
        throw DomainError("hurwitz_zeta: alpha must be positive");
    const int d = std::max({s.digits(), alpha.digits(), tol.digits()});
    const int w = d + 5;
    const Real sw = s.with_digits(w);
    const Real shift = alpha.with_digits(w) - 1;
    auto term = [&](long n) { return Cplx(pow(Real(n, w) + shift, -sw)); };
    SeriesResult r = sum_series(term, tol.with_digits(w), 100'000, power_tail(Cplx(sw), shift));
    if (!r.converged)
        throw AccuracyError("hurwitz_zeta: Euler–Maclaurin tail did not reach tolerance",
                            r.trunc_estimate.to_double());
    return r.value.re.with_digits(d);
}

} // namespace zetalab

#endif
