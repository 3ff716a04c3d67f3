#ifndef ZETALAB_LINE_ONE_HPP
#define ZETALAB_LINE_ONE_HPP

// zeta(1 + ib) and the numeric audits around it.
//
// Three evaluators:
//   eta       eta(1+ib) / (1 - 2^{-ib}) with the accelerated alternating series
//   flat      the same prefactor over the accelerated unit-modulus series
//             sum (-1)^{n-1} n^{-ib}; this is Abel-regularized eta(ib), so the
//             result is (1 - 2^{1-ib}) zeta(ib) / (1 - 2^{-ib}), not zeta(1+ib)
//   integral  with D(x) = psi(x/2 + 1) - psi((x+1)/2) = 2 sum_{n>=0} (-1)^n/(x+1+n),
//               eta(1+ib) = sinh(pi b)/(2 pi i) * I(b),
//               I(b) = int_0^1 (D(x) - 2 ln 2) x^{-1-ib} dx + 2 ln 2/(-ib)
//                      + int_1^inf D(x) x^{-1-ib} dx,
//             i.e. the Mellin integral of D with its x -> 0 constant removed
//             analytically. The normalization constant is 1 (checked at b = 1).

#include <zetalab/quadrature.hpp>
#include <zetalab/special.hpp>
#include <zetalab/zeta_core.hpp>

#include <cmath>
#include <string>

namespace zetalab {

inline constexpr double line_one_degeneracy_threshold = 1e-12;
inline constexpr double line_one_pole_threshold = 1e-6;
// Multiplies the integral pipeline. Fitted against the oracle at b = 1, where
// the fit gives 1 to the quadrature tolerance; frozen here.
inline constexpr long line_one_integral_normalization = 1;

enum class LineOneMethod { eta, flat, integral };

inline const char* to_string(LineOneMethod m)
{
    switch (m) {
    case LineOneMethod::eta:
        return "eta";
    case LineOneMethod::flat:
        return "flat (Abel-regularized)";
    case LineOneMethod::integral:
        return "integral";
    }
    return "?";
}

struct LineOnePoint {
    Real b;
    Cplx value;
    LineOneMethod method = LineOneMethod::eta;
    long terms_used = 0;
    Real est_error;
};

enum class NormLemma { one, two_i, two_ii };

struct NormProbe {
    NormLemma lemma = NormLemma::one;
    long n = 0;
    long k = 0;
    Real grid_sup;
    Real bound;
};

struct EtaZero {
    long k = 0;
    Real b;        // 2 k pi / ln 2
    Real eta_abs;  // |eta(1 + i b)|
    Real zeta_abs; // |zeta(1 + i b)| from the Euler–Maclaurin oracle
};

namespace detail {

// 1 - 2^{-ib}
inline Cplx line_one_prefactor(const Real& b)
{
    const int w = b.digits();
    return Real(1L, w) - pow(Real(2L, w), Cplx(Real(0L, w), -b));
}

inline void check_line_one_arg(const Real& b, const char* who)
{
    if (abs(b) < line_one_pole_threshold)
        throw PoleError(std::string(who) + ": |b| below 1e-6 (simple pole at s = 1)");
}

inline Cplx check_prefactor(const Real& b, const char* who)
{
    Cplx pre = line_one_prefactor(b);
    if (abs(pre) < line_one_degeneracy_threshold)
        throw DegenerateError(std::string(who) + ": 1 - 2^{-ib} vanishes (b on the line 2 k pi / ln 2)");
    return pre;
}

inline int digits_needed(const Real& tol, const Real& b, const Cplx& pre)
{
    const double lp = -std::log10(std::max(abs(pre).to_double(), 1e-300));
    return std::max(b.digits(), digits_for_tol(tol) + 5 + static_cast<int>(std::ceil(std::max(0.0, lp))));
}

// D(x) = psi(x/2 + 1) - psi((x+1)/2); the two values agree to about
// log10(x) digits for large x, which are added back.
inline Real digamma_gap(const Real& x, int w)
{
    const double lx = x > 1 ? log(x).to_double() / std::log(10.0) : 0.0;
    const int wl = w + static_cast<int>(std::ceil(lx)) + 2;
    const Real xl = x.with_digits(wl);
    Real r = digamma(xl / 2 + 1) - digamma((xl + 1) / 2);
    return r.with_digits(w);
}

} // namespace detail

inline LineOnePoint zeta_line_one(const Real& b, const Real& tol)
{
    detail::check_line_one_arg(b, "zeta_line_one");
    if (!(tol > 0))
        throw DomainError("zeta_line_one: tolerance must be positive");
    const Cplx pre = detail::check_prefactor(b, "zeta_line_one");
    const int w = detail::digits_needed(tol, b, pre) + 5;
    const Real bw = b.with_digits(w);
    const int target = w - 5;
    SeriesResult eta = eta_accelerated(Cplx(Real(1L, w), bw), target);
    const Cplx prew = detail::line_one_prefactor(bw);
    LineOnePoint p;
    p.b = b;
    p.method = LineOneMethod::eta;
    p.value = (eta.value / prew).with_digits(std::max(b.digits(), tol.digits()));
    p.terms_used = eta.terms_used;
    p.est_error = (ten_to_minus(target, w) / abs(prew)).with_digits(tol.digits());
    return p;
}

// Ramps the acceleration order from `order` in steps of 8 until two successive
// orders agree to 1e-8.
inline LineOnePoint zeta_line_one_flat(const Real& b, long order = 20)
{
    detail::check_line_one_arg(b, "zeta_line_one_flat");
    const Cplx pre = detail::check_prefactor(b, "zeta_line_one_flat");
    const int w = std::max(b.digits(), 40);
    const Real bw = b.with_digits(w);
    auto coeff = [&](long n) { return exp(Cplx(Real(0L, w), -bw) * log(Real(n, w))); };
    const Real agree(1e-8, w);
    long ord = std::max(order, 4L);
    Cplx prev = accelerate_alternating(coeff, ord, w).value;
    for (;;) {
        const long next = ord + 8;
        if (next > max_acceleration_order)
            throw AccuracyError("zeta_line_one_flat: acceleration did not stabilize", 0.0);
        Cplx cur = accelerate_alternating(coeff, next, w).value;
        const Real diff = abs(cur - prev);
        ord = next;
        if (diff <= agree) {
            LineOnePoint p;
            p.b = b;
            p.method = LineOneMethod::flat;
            p.value = (cur / detail::line_one_prefactor(bw)).with_digits(b.digits());
            p.terms_used = ord;
            p.est_error = (diff / abs(pre)).with_digits(b.digits());
            return p;
        }
        prev = std::move(cur);
    }
}

inline LineOnePoint zeta_line_one_integral(const Real& b, const Real& tol)
{
    if (!(abs(b) >= Real(1e-3, b.digits())) || abs(b) > 50)
        throw DomainError("zeta_line_one_integral: |b| must lie in [1e-3, 50]");
    if (!(tol > 0))
        throw DomainError("zeta_line_one_integral: tolerance must be positive");
    const Cplx pre = detail::check_prefactor(b, "zeta_line_one_integral");
    const int d = std::max(b.digits(), tol.digits());
    // the integral is multiplied by sinh(pi b)/(2 pi |1 - 2^{-ib}|)
    const double scale = std::sinh(M_PI * std::abs(b.to_double())) / (2 * M_PI * abs(pre).to_double());
    const double qtol_d = tol.to_double() / std::max(scale, 1.0) / 4;
    const int w = std::max(d, static_cast<int>(std::ceil(-std::log10(qtol_d))) + 8);
    const Real qtol = Real(qtol_d, w);
    const Real bw = b.with_digits(w);
    const Cplx mib(Real(0L, w), -bw);
    const Real two_ln2 = 2 * ln2(w);
    const Real one(1L, w);

    auto lower = [&](const Real& x) {
        return (detail::digamma_gap(x, w) - two_ln2) * exp(mib * log(x)) / x;
    };
    auto upper = [&](const Real& x) { return detail::digamma_gap(x, w) * exp(mib * log(x)) / x; };
    Cplx I = integrate_lower(lower, one, one, qtol / 2) + two_ln2 / mib + integrate_upper(upper, one, qtol / 2);
    const Cplx eta = I * sinh(pi(w) * bw) / Cplx(Real(0L, w), 2 * pi(w)) * Real(line_one_integral_normalization, w);
    LineOnePoint p;
    p.b = b;
    p.method = LineOneMethod::integral;
    p.value = (eta / detail::line_one_prefactor(bw)).with_digits(d);
    p.terms_used = 0;
    p.est_error = (qtol * Real(scale, w)).with_digits(d);
    return p;
}

// Relative deviation of the damped Mellin integral int_0^inf x^{eps-1-ib}/(x+n) dx
// from pi n^{s-1}/sin(pi s), s = eps - ib.
inline Real mellin_check(const Real& b, long n, const Real& eps, int digits = 30)
{
    if (!(eps > 0) || eps > Real(0.1, eps.digits()) * (1 + Real(1e-12, eps.digits())))
        throw DomainError("mellin_check: eps must lie in (0, 0.1]");
    if (b.is_zero())
        throw DomainError("mellin_check: b must be nonzero");
    if (n < 1)
        throw DomainError("mellin_check: n must be at least 1");
    const int w = std::max({digits, b.digits(), eps.digits()});
    const Real bw = b.with_digits(w);
    const Real ew = eps.with_digits(w);
    const Cplx s(ew, -bw);
    const Cplx closed = pi(w) * exp((s - Real(1L, w)) * log(Real(n, w))) / sin(pi(w) * s);
    const Real tol = abs(closed) * Real(1e-13, w);
    const Cplx e = s - Real(1L, w);
    auto f = [&](const Real& x) { return exp(e * log(x)) / (x + n); };
    const Cplx I = integrate_semiaxis(f, ew, tol);
    return abs(I - closed) / abs(closed);
}

// |sum_{n>=1} (-1)^n/(x+n) + D(x)/2|
inline Real digamma_gap_check(const Real& x, const Real& tol)
{
    if (!(x > 0))
        throw DomainError("digamma_gap_check: x must be positive");
    const int w = std::max(x.digits(), detail::digits_for_tol(tol) + 10);
    const Real xw = x.with_digits(w);
    auto coeff = [&](long n) { return Cplx(1 / (xw + n)); };
    const Cplx alt = accelerate_alternating(coeff, acceleration_order(w), w).value; // sum (-1)^{n-1}/(x+n)
    const Real lhs = -alt.re;
    return abs(lhs + detail::digamma_gap(xw, w) / 2).with_digits(x.digits());
}

// |D(x) - 2 sum_{k=2}^{K} (-1)^k 2^{-k} zeta(k, (x+1)/2)|, the inner sums over n
// being the Hurwitz values. At x = 0 the n = 0 column is sum (-1)^k and the
// expansion does not converge.
inline Real hurwitz_expansion_check(const Real& x, long K, int digits = 40)
{
    if (x < 0)
        throw DomainError("hurwitz_expansion_check: x must be non-negative");
    if (K < 2)
        throw DomainError("hurwitz_expansion_check: K must be at least 2");
    const int w = std::max(digits, x.digits()) + 5;
    const Real xw = x.with_digits(w);
    const Real alpha = (xw + 1) / 2;
    const Real htol = ten_to_minus(w - 3, w);
    Real sum(0L, w);
    for (long k = 2; k <= K; ++k) {
        const Real h = hurwitz_zeta(Real(k, w), alpha, htol) / uipow(2, static_cast<unsigned long>(k), w);
        sum += k % 2 == 0 ? h : -h;
    }
    return abs(detail::digamma_gap(xw, w) - 2 * sum).with_digits(digits);
}

inline EtaZero eta_zero_scan(long k, const Real& tol)
{
    if (k == 0)
        throw DomainError("eta_zero_scan: k must be nonzero");
    const int w = std::max(tol.digits(), detail::digits_for_tol(tol) + 10);
    EtaZero z;
    z.k = k;
    z.b = 2 * k * pi(w) / ln2(w);
    const Cplx s(Real(1L, w), z.b);
    z.eta_abs = abs(eta_accelerated(s, detail::digits_for_tol(tol) + 5).value).with_digits(tol.digits());
    z.zeta_abs = abs(zeta_oracle(s, ten_to_minus(20, w))).with_digits(tol.digits());
    z.b = z.b.with_digits(tol.digits());
    return z;
}

// |i b zeta(1 + ib) - 1|
inline Real residue_probe(const Real& b)
{
    if (b.is_zero() || abs(b) > Real(0.1, b.digits()) * (1 + Real(1e-12, b.digits())))
        throw DomainError("residue_probe: requires 0 < |b| <= 0.1");
    const int w = b.digits();
    LineOnePoint p = zeta_line_one(b, ten_to_minus(25, w));
    const Cplx ib(Real(0L, w), b);
    return abs(ib * p.value - Real(1L, w));
}

// Grid supremum of |f_n| for
//   one     x^{-ib}/(x (x+n)) on [1, 1000]; bound 1/(n+1)
//   two_i   (-1/(2n+x+1))^k on [0, 1000]; bound (1/(2n))^k
//   two_ii  x^{-ib}/((2n+x+1)(2n+x+2)) on (0, 1000]; bound 1/((2n+1)(2n+2))
// The grid is clustered toward the left end, where all three peak.
inline NormProbe uniform_norm_probe(NormLemma lemma, long n, long k, const Real& b, long grid, int digits = 30)
{
    if (n < 1)
        throw DomainError("uniform_norm_probe: n must be at least 1");
    if (grid < 100)
        throw DomainError("uniform_norm_probe: grid must have at least 100 points");
    if (lemma == NormLemma::two_i && k < 2)
        throw DomainError("uniform_norm_probe: k must be at least 2");
    const int w = digits;
    const Real bw = b.with_digits(w);
    const Cplx mib(Real(0L, w), -bw);
    const Real lo = lemma == NormLemma::one ? Real(1L, w) : (lemma == NormLemma::two_ii ? ten_to_minus(12, w) : Real(0L, w));
    const Real hi(1000L, w);
    NormProbe p;
    p.lemma = lemma;
    p.n = n;
    p.k = lemma == NormLemma::two_i ? k : 0;
    p.grid_sup = Real(0L, w);
    for (long j = 0; j < grid; ++j) {
        const Real t = Real(j, w) / (grid - 1);
        const Real x = lo + (hi - lo) * t * t * t;
        Real v;
        switch (lemma) {
        case NormLemma::one:
            v = abs(exp(mib * log(x)) / (x * (x + n)));
            break;
        case NormLemma::two_i:
            v = pow(1 / (2 * n + x + 1), k);
            break;
        case NormLemma::two_ii:
            v = abs(exp(mib * log(x)) / ((2 * n + x + 1) * (2 * n + x + 2)));
            break;
        }
        p.grid_sup = max(p.grid_sup, v);
    }
    switch (lemma) {
    case NormLemma::one:
        p.bound = Real(1L, w) / (n + 1);
        break;
    case NormLemma::two_i:
        p.bound = pow(Real(1L, w) / (2 * n), k);
        break;
    case NormLemma::two_ii:
        p.bound = Real(1L, w) / ((2 * n + 1) * (2 * n + 2));
        break;
    }
    return p;
}

} // namespace zetalab

#endif
