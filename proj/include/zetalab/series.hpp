#ifndef ZETALAB_SERIES_HPP
#define ZETALAB_SERIES_HPP

#include <zetalab/bernoulli.hpp>
#include <zetalab/real.hpp>

#include <array>
#include <cmath>
#include <functional>
#include <memory>

namespace zetalab {

struct SeriesResult {
    Cplx value;
    long terms_used = 0;
    Real trunc_estimate; // upper estimate of |true sum - value|
    bool converged = false;
};

// Remainder model for a series: `correction` is added to the partial sum,
// `bound` is the error left after the correction.
struct TailEstimate {
    Cplx correction;
    Real bound;
};

// Called with the number of terms summed so far.
using TailModel = std::function<TailEstimate(long)>;
using TermFn = std::function<Cplx(long)>;

inline constexpr long default_max_terms = 1'000'000;
inline constexpr long max_acceleration_order = 8192;

namespace detail {

// Tail after the last term assuming the term ratio never exceeds the
// largest ratio observed over the window.
inline Real geometric_tail(const std::array<Real, 3>& m)
{
    const int d = m[2].digits();
    if (m[0].is_zero() && m[1].is_zero() && m[2].is_zero())
        return Real(0L, d);
    Real r(0L, d);
    for (int i = 1; i < 3; ++i) {
        if (m[i - 1].is_zero()) {
            if (!m[i].is_zero())
                return infinity(d);
            continue;
        }
        r = max(r, m[i] / m[i - 1]);
    }
    if (!(r < 1))
        return infinity(d);
    return m[2] * r / (1 - r);
}

} // namespace detail

// Sums term(1) + term(2) + ...
//
// Without a tail model the sum stops once the last three terms are each below
// tol * max(1, |partial|) and the geometric tail estimate is <= tol. With a
// tail model it stops at the first n whose model bound is <= tol, and the
// model's correction is folded into the value.
inline SeriesResult sum_series(const TermFn& term, const Real& tol, long max_terms = default_max_terms,
                               const TailModel& tail = {})
{
    if (!(tol > 0))
        throw DomainError("sum_series: tolerance must be positive");
    if (max_terms < 1)
        throw ConfigError("sum_series: max_terms must be positive");

    const int d = tol.digits();
    Cplx sum(0L, d);
    Real estimate = infinity(d);
    std::array<Real, 3> mags{Real(0L, d), Real(0L, d), Real(0L, d)};

    for (long n = 1; n <= max_terms; ++n) {
        Cplx a = term(n);
        if (!isfinite(a))
            throw EvaluationError("sum_series: non-finite term", n);
        sum += a;

        if (tail) {
            TailEstimate t = tail(n);
            estimate = t.bound;
            if (t.bound <= tol)
                return {sum + t.correction, n, t.bound, true};
            continue;
        }

        mags[0] = std::move(mags[1]);
        mags[1] = std::move(mags[2]);
        mags[2] = abs(a);
        if (n < 3)
            continue;
        Real limit = tol * max(Real(1L, d), abs(sum));
        if (mags[0] < limit && mags[1] < limit && mags[2] < limit) {
            estimate = detail::geometric_tail(mags);
            if (estimate <= tol)
                return {sum, n, estimate, true};
        }
    }
    return {sum, max_terms, estimate, false};
}

// Euler–Maclaurin remainder for  sum_{n > N} (n + shift)^{-s}:
//   y^{1-s}/(s-1) - y^{-s}/2 + sum_k B_{2k}/(2k)! (s)_{2k-1} y^{-s-2k+1},  y = N + shift.
// Correction terms are added while they decrease; the bound is a multiple of
// the first omitted one.
inline TailModel power_tail(const Cplx& s, const Real& shift, unsigned max_corrections = 40)
{
    const int d = std::max(s.digits(), shift.digits());
    auto coef = std::make_shared<const std::vector<Real>>(even_bernoulli_over_factorial(max_corrections + 1, d));
    const Real tiny = ten_to_minus(d + 5, d);
    return [=](long n) -> TailEstimate {
        Real y = Real(n, d) + shift;
        if (!(y > 0))
            return {Cplx(0L, d), infinity(d)};
        Cplx ypow = exp(-(s * log(y))); // y^{-s}
        Cplx corr = ypow * y / (s - Real(1L, d)) - ypow / 2;
        Cplx rising = s;       // (s)_{2k-1}
        Cplx p = ypow / y;     // y^{-s-2k+1}
        const Real y2 = y * y;
        Real prev = infinity(d);
        Real bound = infinity(d);
        for (unsigned k = 1; k <= max_corrections + 1; ++k) {
            Cplx t = (*coef)[k - 1] * rising * p;
            Real mag = abs(t);
            const Real factor = 2 * abs(s + Real(2L * k + 1, d)) / max(s.re + Real(2L * k + 1, d), Real(1L, d));
            if (k == max_corrections + 1 || !(mag < prev)) {
                bound = factor * mag;
                break;
            }
            corr += t;
            if (mag < tiny * max(abs(corr), Real(1L, d))) {
                bound = factor * mag;
                break;
            }
            prev = mag;
            rising = rising * (s + Real(2L * k - 1, d)) * (s + Real(2L * k, d));
            p = p / y2;
        }
        return {corr, bound};
    };
}

inline long acceleration_order(int target_digits)
{
    return std::max(4L, static_cast<long>(std::ceil(1.31 * target_digits)));
}

// Cohen–Rodriguez Villegas–Zagier acceleration of  sum_{n>=1} (-1)^{n-1} coeff(n).
// The error bound 2|coeff(1)| / (3 + sqrt 8)^order holds for totally monotone
// coefficient sequences; complex coefficients converge more slowly.
inline SeriesResult accelerate_alternating(const TermFn& coeff, long order, int digits = 0)
{
    if (order < 4)
        throw ConfigError("accelerate_alternating: order must be at least 4");
    if (order > max_acceleration_order)
        throw ConfigError("accelerate_alternating: order " + std::to_string(order) +
                          " exceeds table capacity " + std::to_string(max_acceleration_order));

    Cplx first = coeff(1);
    if (!isfinite(first))
        throw EvaluationError("accelerate_alternating: non-finite coefficient", 1);
    const int dig = digits > 0 ? digits : first.digits();

    const Real base = 3 + sqrt(Real(8L, dig));
    Real dd = pow(base, order);
    dd = (dd + 1 / dd) / 2;
    Real b(-1L, dig);
    Real c = -dd;
    Cplx s(0L, dig);
    for (long k = 0; k < order; ++k) {
        Cplx a = k == 0 ? first : coeff(k + 1);
        if (!isfinite(a))
            throw EvaluationError("accelerate_alternating: non-finite coefficient", k + 1);
        c = b - c;
        s += c * a;
        b = b * (2 * (k + order) * (k - order)) / ((2 * k + 1) * (k + 1));
    }
    Real est = 2 * abs(first) / pow(base, order);
    return {s / dd, order, est, true};
}

} // namespace zetalab

#endif
