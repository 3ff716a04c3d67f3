#ifndef ZETALAB_ODD_ZETA_HPP
#define ZETALAB_ODD_ZETA_HPP

// Odd zeta values.
//
// f-ratio approximation: with T(m) = t(m)/zeta(m) the ratio T(2s)/T(2s+1) is
// called f and tends to 2. Using the closed-form t on both sides,
//   T(m) = (1 - 2^{-m}) - (1 - 1/(2^m - 1)) / zeta(m),
// so fixing f and solving for zeta(2s+1) gives
//   zeta(2s+1) = B / ((1 - 2^{-(2s+1)}) - A/f),
//   A = T(2s),  B = (2^{2s+1} - 2)/(2^{2s+1} - 1).
// Only zeta(2s) enters.
//
// Also here: the classical rapidly convergent series for zeta(3), zeta(5),
// zeta(7), and four recursive representations of zeta(2n+1) from the
// literature that need the lower odd values.

#include <zetalab/prime_tail.hpp>
#include <zetalab/special.hpp>
#include <zetalab/zeta_core.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace zetalab {

enum class FMode { closed, direct };

struct FRatioSample {
    long s = 0;
    Real f_closed;
    std::optional<Real> f_direct;       // only in direct mode
    std::optional<Real> f_direct_error; // propagated prime-sum truncation bound
    Real zeta_even;                     // zeta(2s)
    Real zeta_odd;                      // zeta(2s+1)

    const Real& f(FMode mode) const { return mode == FMode::direct ? *f_direct : f_closed; }
};

struct EvalRow {
    long argument = 0;
    Real formula_value;
    Real reference_value;
    Real abs_diff;
};

// Supplies zeta(two_k) at the requested digits.
using EvenZetaSource = std::function<Real(long two_k, int digits)>;

namespace detail {

inline Real t_over_zeta_closed(long m, const Real& zeta_m)
{
    const int w = zeta_m.digits();
    const Real p = uipow(2, static_cast<unsigned long>(m), w);
    return (1 - 1 / p) - (1 - 1 / (p - 1)) / zeta_m;
}

inline int working_digits(const Real& tol, int extra = 10)
{
    return std::max(tol.digits(), digits_for_tol(tol)) + extra;
}

} // namespace detail

// f = [t(2s)/zeta(2s)] / [t(2s+1)/zeta(2s+1)]. The closed value is always
// filled; the prime-sum value only in direct mode.
inline FRatioSample f_ratio(long s, FMode mode, const Real& tol, std::uint64_t prime_cap = default_prime_cap)
{
    if (s < 1)
        throw DomainError("f_ratio: s must be a positive integer");
    const int d = tol.digits();
    const int w = d + 10;
    FRatioSample out;
    out.s = s;
    out.zeta_even = zeta_even_closed(2 * s, w);
    out.zeta_odd = zeta_dirichlet(Real(2 * s + 1, w), ten_to_minus(w - 2, w)).value.re;
    out.f_closed = (detail::t_over_zeta_closed(2 * s, out.zeta_even) /
                    detail::t_over_zeta_closed(2 * s + 1, out.zeta_odd))
                       .with_digits(d);
    if (mode == FMode::direct) {
        SeriesResult te = t_direct(Real(2 * s, w), tol, prime_cap);
        SeriesResult to = t_direct(Real(2 * s + 1, w), tol, prime_cap);
        const Real num = te.value.re / out.zeta_even;
        const Real den = to.value.re / out.zeta_odd;
        const Real f = num / den;
        out.f_direct = f.with_digits(d);
        // first-order propagation of both truncation bounds
        out.f_direct_error =
            (abs(f) * (te.trunc_estimate / te.value.re + to.trunc_estimate / to.value.re)).with_digits(d);
    }
    out.zeta_even = out.zeta_even.with_digits(d);
    out.zeta_odd = out.zeta_odd.with_digits(d);
    return out;
}

// zeta(2s+1) from f and zeta(2s) alone; zeta(2s) comes from `even`.
inline Real zeta_odd_closed(long s, const Real& f, const EvenZetaSource& even)
{
    if (s < 1)
        throw DomainError("zeta_odd_closed: s must be a positive integer");
    if (!(f > 0))
        throw DomainError("zeta_odd_closed: f must be positive");
    const int d = f.digits();
    const int w = d + 10;
    const Real fw = f.with_digits(w);
    const Real A = detail::t_over_zeta_closed(2 * s, even(2 * s, w));
    const Real p = uipow(2, static_cast<unsigned long>(2 * s + 1), w);
    const Real B = (p - 2) / (p - 1);
    const Real den = (1 - 1 / p) - A / fw;
    if (abs(den) < Real(1e-30, w))
        throw DegenerateError("zeta_odd_closed: denominator vanishes for this f");
    return (B / den).with_digits(d);
}

inline Real zeta_odd_closed(long s, const Real& f)
{
    return zeta_odd_closed(s, f, [](long two_k, int digits) { return zeta_even_closed(two_k, digits); });
}

// Same formula, zeta(2k) from the recurrence in place of Bernoulli numbers.
inline Real zeta_odd_bernoulli_free(long k, const Real& f)
{
    return zeta_odd_closed(k, f, [](long two_k, int digits) { return zeta_even_recurrence(two_k, digits); });
}

// f * t(2s+1)/t(2s) * zeta(2s) with the prime sums themselves.
inline Real zeta_odd_prime(long s, const Real& f, const Real& tol, std::uint64_t prime_cap = default_prime_cap)
{
    if (s < 1)
        throw DomainError("zeta_odd_prime: s must be a positive integer");
    const int d = std::max(f.digits(), tol.digits());
    const int w = d + 8;
    SeriesResult te = t_direct(Real(2 * s, w), tol, prime_cap);
    SeriesResult to = t_direct(Real(2 * s + 1, w), tol, prime_cap);
    if (!te.converged || !to.converged)
        throw AccuracyError("zeta_odd_prime: prime sum did not reach tolerance below the prime cap",
                            max(te.trunc_estimate, to.trunc_estimate).to_double());
    const Real r = f.with_digits(w) * to.value.re / te.value.re * zeta_even_closed(2 * s, w);
    return r.with_digits(d);
}

namespace detail {

// sum_{n>=1} c * sign(n) / (n^p (e^{2 pi n} + shift)), optionally with sinh.
inline Real exp_power_sum(const std::function<Real(long)>& term, const Real& tol)
{
    SeriesResult r = sum_series([&](long n) { return Cplx(term(n)); }, tol, 10'000);
    if (!r.converged)
        throw AccuracyError("exponentially damped series did not converge", r.trunc_estimate.to_double());
    return r.value.re;
}

// 12 sum 1/(n^5 sinh(pi n)) - 39/20 sum 1/(n^5 (e^{2 pi n} - 1)) + c sum 1/(n^5 (e^{2 pi n} + 1))
inline Real zeta5_series(const Rat& last_coefficient, const Real& tol)
{
    const int w = working_digits(tol);
    const Real p = pi(w);
    const Real c1(Rat(39, 20), w);
    const Real c2(last_coefficient, w);
    auto term = [&](long n) {
        const Real n5 = uipow(static_cast<unsigned long>(n), 5, w);
        const Real e = exp(2 * p * n);
        return 12 / (n5 * sinh(p * n)) - c1 / (n5 * (e - 1)) + c2 / (n5 * (e + 1));
    };
    return exp_power_sum(term, tol.with_digits(w) / 100);
}

} // namespace detail

// Classical fast series: target 3 uses the zeta(2k)/4^k series (zeta(0) = -1/2),
// 5 the sinh / exponential series, 7 the pi^7 formula.
inline Real zeta_known_ref(int target, const Real& tol)
{
    if (!(tol > 0))
        throw DomainError("zeta_known_ref: tolerance must be positive");
    const int d = tol.digits();
    const int w = detail::working_digits(tol);
    const Real p = pi(w);
    Real r;
    switch (target) {
    case 3: {
        auto term = [&](long n) {
            const long k = n - 1;
            const Real z = k == 0 ? Real(zeta_negative_int(0), w) : zeta_even_closed(2 * k, w);
            return Cplx(z / (Real((2 * k + 1) * (2 * k + 2), w) * uipow(4, static_cast<unsigned long>(k), w)));
        };
        SeriesResult s = sum_series(term, tol.with_digits(w) / 100, 10'000);
        if (!s.converged)
            throw AccuracyError("zeta_known_ref(3): series did not converge", s.trunc_estimate.to_double());
        r = -4 * p * p / 7 * s.value.re;
        break;
    }
    case 5:
        r = detail::zeta5_series(Rat(1, 20), tol);
        break;
    case 7: {
        const Real s = detail::exp_power_sum(
            [&](long n) { return 1 / (uipow(static_cast<unsigned long>(n), 7, w) * expm1(2 * p * n)); },
            tol.with_digits(w) / 100);
        r = Real(Rat(19, 56700), w) * pow(p, 7L) - 2 * s;
        break;
    }
    default:
        throw DomainError("zeta_known_ref: target must be 3, 5 or 7");
    }
    return r.with_digits(d);
}

// The four recursive literature representations of zeta(2n+1).
//   gamma_ratio:  pi^{2m} Gamma-ratio series with log 2 and the lower odd values
//   log2_series:  log 2 + sum zeta(2k)/((k+n) 4^k)
//   log3_hurwitz: log 3 + 2 sum zeta(2k)/((k+n) 9^k), Hurwitz zeta at 1/3
//   log2_quarter: log 2 + 2 sum zeta(2k)/((k+n) 16^k), Hurwitz zeta at 1/4
enum class LiteratureFormula { gamma_ratio, log2_series, log3_hurwitz, log2_quarter };

// `as_printed` reproduces the typeset layout instead of the identity that
// actually holds:
//   gamma_ratio  - second sum reads (2^{2n-2m} - 1) - pi^{2n} zeta(..) where the
//                  product with (-pi^2)^n is meant
//   log2_series  - the lower-odd sum sits outside the prefactor
//   log3_hurwitz - as printed is correct
//   log2_quarter - the 16^k series is missing its factor 2
enum class FormulaLayout { corrected, as_printed };

// Lower odd arguments visited by the recursion, and interior series terms
// summed across all levels.
struct LiteratureTrace {
    std::vector<long> lower_args;
    long series_terms = 0;
};

namespace detail {

// Sum term(k0), term(k0+1), ... until three consecutive terms are below tol/100.
inline Real interior_sum(const std::string& name, long k0, const std::function<Real(long)>& term, const Real& tol,
                         long* count = nullptr)
{
    const int w = tol.digits();
    const Real small = tol / 100;
    Real sum(0L, w);
    int quiet = 0;
    for (long k = k0; k < k0 + 20'000; ++k) {
        Real t = term(k);
        if (!isfinite(t))
            throw EvaluationError("interior series " + name + ": non-finite term", k);
        sum += t;
        if (count)
            ++*count;
        quiet = abs(t) < small ? quiet + 1 : 0;
        if (quiet >= 3)
            return sum;
    }
    throw AccuracyError("interior series " + name + " did not converge within 20000 terms", 0.0);
}

class EvenCache {
public:
    explicit EvenCache(int w) : w_(w) {}
    // zeta(2k), k >= 0 (zeta(0) = -1/2)
    const Real& operator()(long k)
    {
        while (static_cast<long>(v_.size()) <= k) {
            const long j = static_cast<long>(v_.size());
            v_.push_back(j == 0 ? Real(zeta_negative_int(0), w_) : zeta_even_closed(2 * j, w_));
        }
        return v_[static_cast<std::size_t>(k)];
    }

private:
    int w_;
    std::vector<Real> v_;
};

inline Real literature_impl(long n, LiteratureFormula which, FormulaLayout layout, const Real& tol,
                            LiteratureTrace* trace);

inline Real lower_odd(long j, LiteratureFormula which, FormulaLayout layout, const Real& tol, LiteratureTrace* trace)
{
    if (trace)
        trace->lower_args.push_back(2 * j + 1);
    return literature_impl(j, which, layout, tol / 10, trace);
}

inline Real literature_impl(long n, LiteratureFormula which, FormulaLayout layout, const Real& tol,
                            LiteratureTrace* trace)
{
    if (n < 1)
        throw DomainError("zeta_odd_literature: n must be a positive integer");
    const int w = working_digits(tol, 15) + static_cast<int>(n);
    const Real tw = tol.with_digits(w);
    const Real p = pi(w);
    const Real two_pi = 2 * p;
    const bool printed = layout == FormulaLayout::as_printed;
    EvenCache zeta2k(w);
    auto fact = [&](long m) { return factorial(static_cast<unsigned long>(m), w); };
    auto sgn = [](long e) { return e % 2 == 0 ? 1L : -1L; };

    if (which == LiteratureFormula::gamma_ratio) {
        const long m = n;
        const long K = 2 * m + 1;
        const Real q = 1 - 1 / uipow(2, static_cast<unsigned long>(2 * m), w);
        const Real pre = sgn(m) * pow(p, 2 * m) / q;
        // sum_{k>=1} 1/prod_{i=0}^{K}(2k+i) by partial fractions over digamma
        Real closed(0L, w);
        for (long i = 0; i <= K; ++i) {
            const Real c = Real(sgn(i), w) / (fact(i) * fact(K - i));
            closed += c * digamma(1 + Real(i, w) / 2);
        }
        closed = -closed / 2;
        // remainder of (2 - 2^{1-2k}) zeta(2k) - 2 against the same kernel
        auto rem = [&](long k) {
            Real kernel(1L, w);
            for (long i = 0; i <= K; ++i)
                kernel *= Real(2 * k + i, w);
            const Real r = (2 - 2 / uipow(4, static_cast<unsigned long>(k), w)) * zeta2k(k) - 2;
            return r / kernel;
        };
        long* count = trace ? &trace->series_terms : nullptr;
        const Real main =
            2 * closed + interior_sum("gamma-ratio zeta(2k)", 1, rem, tw / max(abs(pre), Real(1L, w)), count);
        Real value = pre * (-ln2(w) / fact(2 * m + 1) + main);
        Real second(0L, w);
        for (long k = 1; k <= m - 1; ++k) {
            const Real z = lower_odd(m - k, which, layout, tw, trace);
            const Real a = 1 / uipow(4, static_cast<unsigned long>(m - k), w) - 1;
            if (printed)
                second += (a - pow(p, 2 * k) * z) / fact(2 * k + 1);
            else
                second += a * sgn(k) * pow(p, 2 * k) * z / fact(2 * k + 1);
        }
        return value + second / q;
    }

    // log-type representations
    long base = 2;
    Real lead = ln2(w);
    Real denom;
    Real series_factor(1L, w);
    long rbase = 2; // (rbase^{2j} - 1) in the lower-odd sum
    switch (which) {
    case LiteratureFormula::log2_series:
        base = 4;
        denom = uipow(2, static_cast<unsigned long>(2 * n + 1), w) - 1;
        break;
    case LiteratureFormula::log3_hurwitz:
        base = 9;
        lead = log(Real(3L, w));
        denom = uipow(3, static_cast<unsigned long>(2 * n + 1), w) - 1;
        series_factor = Real(2L, w);
        rbase = 3;
        break;
    case LiteratureFormula::log2_quarter:
        base = 16;
        denom = uipow(2, static_cast<unsigned long>(4 * n + 1), w) + uipow(2, static_cast<unsigned long>(2 * n), w) - 1;
        series_factor = Real(printed ? 1L : 2L, w);
        break;
    default:
        break;
    }
    const Real pre = sgn(n - 1) * pow(two_pi, 2 * n) / (fact(2 * n) * denom);
    const Real inner_tol = tw / max(abs(pre), Real(1L, w)) / 10;

    auto series_term = [&](long k) {
        return zeta2k(k) / (Real(k + n, w) * pow(Real(base, w), k));
    };
    long* count = trace ? &trace->series_terms : nullptr;
    const Real S = series_factor * interior_sum("zeta(2k) series", 0, series_term, inner_tol, count);

    Real R(0L, w);
    for (long j = 1; j <= n - 1; ++j) {
        const Real z = lower_odd(j, which, layout, tw, trace);
        R += sgn(j) / fact(2 * n - 2 * j) * (uipow(static_cast<unsigned long>(rbase), static_cast<unsigned long>(2 * j), w) - 1) /
             pow(two_pi, 2 * j) * z;
    }
    R *= fact(2 * n);

    Real H(0L, w);
    if (which != LiteratureFormula::log2_series) {
        const Real htol = inner_tol / 100;
        for (long j = 1; j <= n; ++j) {
            Real bracket;
            if (which == LiteratureFormula::log3_hurwitz)
                bracket = 2 * hurwitz_zeta(Real(2 * j, w), Real(1L, w) / 3, htol) -
                          (uipow(9, static_cast<unsigned long>(j), w) - 1) * zeta2k(j);
            else
                bracket = hurwitz_zeta(Real(2 * j, w), Real(1L, w) / 4, htol) -
                          uipow(2, static_cast<unsigned long>(2 * j - 1), w) *
                              (uipow(4, static_cast<unsigned long>(j), w) - 1) * zeta2k(j);
            H += sgn(j) / fact(2 * n - 2 * j + 1) * bracket / pow(two_pi, 2 * j - 1);
        }
        H *= fact(2 * n);
        if (which == LiteratureFormula::log3_hurwitz)
            H /= sqrt(Real(3L, w));
    }

    if (which == LiteratureFormula::log2_series && printed)
        return pre * (lead + S) + R;
    return pre * (lead + S + R - H);
}

} // namespace detail

// zeta(2n+1) by one of the literature representations. Lower odd values are
// obtained from the same representation at tol/10 per level; `trace`, when
// given, records every odd argument computed that way and counts interior
// series terms.
inline Real zeta_odd_literature(long n, LiteratureFormula which, const Real& tol,
                                FormulaLayout layout = FormulaLayout::corrected, LiteratureTrace* trace = nullptr)
{
    if (!(tol > 0))
        throw DomainError("zeta_odd_literature: tolerance must be positive");
    return detail::literature_impl(n, which, layout, tol, trace).with_digits(tol.digits());
}

// Rows for 3, 5, ..., max_arg: the f-ratio formula against the Dirichlet series.
inline std::vector<EvalRow> odd_error_table(long max_arg, const Real& f, const Real& tol)
{
    if (max_arg < 3 || max_arg % 2 == 0)
        throw DomainError("odd_error_table: max_arg must be an odd integer >= 3");
    const int d = std::max(f.digits(), tol.digits());
    std::vector<EvalRow> rows;
    for (long a = 3; a <= max_arg; a += 2) {
        EvalRow r;
        r.argument = a;
        r.formula_value = zeta_odd_closed((a - 1) / 2, f.with_digits(d));
        r.reference_value = zeta_dirichlet(Real(a, d), tol).value.re;
        r.abs_diff = abs(r.formula_value - r.reference_value);
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace zetalab

#endif
